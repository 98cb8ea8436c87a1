//! Sparse Laurent polynomials in one variable x over a commutative ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficient rings usable in [`LaurentPoly`].
pub trait Ring:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// Σ c_e x^e with only nonzero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i32, C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, C::one())
    }

    /// c·x^e.
    pub fn monomial(e: i32, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// From ascending coefficients c₀ + c₁x + ….
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(e, c)| (e as i32, c)))
    }

    fn add_term(&mut self, e: i32, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn coeff(&self, e: i32) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms by ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// Leading coefficient 1 at exponent `d`.
    pub fn is_monic_of_degree(&self, d: i32) -> bool {
        self.degree() == Some(d) && self.leading_coefficient().is_some_and(One::is_one)
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, a)| (e, a.clone() * c.clone())))
    }

    /// Value at `x`; `None` when negative powers would need division.
    pub fn eval(&self, x: &C) -> Option<C> {
        if self.valuation().is_some_and(|v| v < 0) {
            return None;
        }
        let mut acc = C::zero();
        for e in (0..=self.degree().unwrap_or(0)).rev() {
            acc = acc * x.clone() + self.coeff(e);
        }
        Some(acc)
    }

    /// Exact quotient by a divisor with leading coefficient 1; `None` if the
    /// divisor is not monic or leaves a remainder.
    pub fn div_monic(&self, divisor: &Self) -> Option<Self> {
        let (dd, dv) = (divisor.degree()?, divisor.valuation()?);
        if !divisor.leading_coefficient()?.is_one() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd - dd < rem.valuation()? - dv {
                return None;
            }
            let term = Self::monomial(rd - dd, rem.coeff(rd));
            rem = &rem - &(&term * divisor);
            quot += &term;
        }
        Some(quot)
    }

    /// Sum of the coefficients: the value at x = 1.
    pub fn at_one(&self) -> C {
        self.terms.values().cloned().fold(C::zero(), |a, b| a + b)
    }
}

impl<C: Ring + ToPrimitive + fmt::Display> LaurentPoly<C> {
    /// `{"coeffs": [[e, c], ...]}` by ascending exponent; coefficients that do
    /// not fit in i64 are written as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&e, c)| {
                let c = c.to_i64().map_or_else(|| serde_json::Value::String(c.to_string()), serde_json::Value::from);
                serde_json::json!([e, c])
            })
            .collect();
        serde_json::json!({ "coeffs": coeffs })
    }
}

impl<C: Ring> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Ring> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Ring> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Ring> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl<C: Ring> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Ring> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Ring> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self - &rhs
    }
}

impl<C: Ring> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&e, a) in &self.terms {
            for (&f, b) in &rhs.terms {
                out.add_term(e + f, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Ring> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Ring + Signed + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{e}")?,
                _ => write!(f, "{mag}x^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Ring + Signed + fmt::Display> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
