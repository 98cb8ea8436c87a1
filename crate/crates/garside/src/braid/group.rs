//! Braid group elements Δ^k·p with p positive and not divisible by Δ.

use std::fmt;
use std::sync::Arc;

use super::PositiveBraid;
use crate::coxeter::{CoxeterSystem, DiagramAutomorphism};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Braid {
    delta: i64,
    pos: PositiveBraid,
}

impl fmt::Debug for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}·{:?}", self.delta, self.pos)
    }
}

impl Braid {
    /// Δ^k·p, renormalized so that Δ does not divide the positive part.
    pub fn new(delta: i64, pos: PositiveBraid) -> Self {
        let w0 = pos.sys.w0().clone();
        let lead = pos.factors.iter().take_while(|f| **f == w0).count();
        let mut pos = pos;
        pos.factors.drain(..lead);
        Braid { delta: delta + lead as i64, pos }
    }

    pub fn from_positive(pos: &PositiveBraid) -> Self {
        Self::new(0, pos.clone())
    }

    pub fn identity(sys: &Arc<CoxeterSystem>) -> Self {
        Self::new(0, PositiveBraid::identity(sys))
    }

    pub fn delta_power(sys: &Arc<CoxeterSystem>, k: i64) -> Self {
        Self::new(k, PositiveBraid::identity(sys))
    }

    /// A word in generators and their inverses: `s` for σ_s, `-s` for σ_s⁻¹.
    pub fn of_signed_word(sys: &Arc<CoxeterSystem>, word: &[i64]) -> Result<Self> {
        let mut b = Self::identity(sys);
        for &x in word {
            let s = x.unsigned_abs() as usize;
            sys.check_index(s)?;
            let g = Self::from_positive(&PositiveBraid::generator(sys, s));
            b = b.mul(&if x > 0 { g } else { g.inverse() });
        }
        Ok(b)
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.pos.sys
    }

    /// Exponent k of Δ.
    pub fn delta_exponent(&self) -> i64 {
        self.delta
    }

    /// Positive part, not divisible by Δ.
    pub fn positive_part(&self) -> &PositiveBraid {
        &self.pos
    }

    pub fn inf(&self) -> i64 {
        self.delta
    }

    pub fn sup(&self) -> i64 {
        self.delta + self.pos.nu() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.pos.nu()
    }

    /// Exponent sum: the image under the length homomorphism B → ℤ.
    pub fn exponent_sum(&self) -> i64 {
        self.delta * self.pos.sys.n_positive_roots() as i64 + self.pos.length() as i64
    }

    /// τ^k(p) where τ is conjugation by Δ.
    fn twist(p: &PositiveBraid, k: i64) -> PositiveBraid {
        if k.rem_euclid(2) == 0 {
            p.clone()
        } else {
            p.apply_f(&p.sys.delta_twist())
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.system().label() != other.system().label() {
            return Err(Error::MixedSystems(self.system().label().to_string(), other.system().label().to_string()));
        }
        // Δ^a P Δ^b Q = Δ^{a+b} τ^b(P) Q
        let p = Self::twist(&self.pos, other.delta);
        Ok(Self::new(self.delta + other.delta, &p * &other.pos))
    }

    /// Panics on mixed systems.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("product of braids from different systems")
    }

    pub fn inverse(&self) -> Self {
        let sys = self.system();
        let w0 = sys.w0();
        let delta_inv = Self::delta_power(sys, -1);
        // p⁻¹ = (p⁻¹Δ)·Δ⁻¹ for each simple factor p
        let mut out = Self::identity(sys);
        for p in self.pos.factors.iter().rev() {
            let comp = PositiveBraid::lift(sys, &(&p.inverse() * w0));
            out = out.mul(&Self::from_positive(&comp)).mul(&delta_inv);
        }
        out.mul(&Self::delta_power(sys, -self.delta))
    }

    pub fn apply_f(&self, f: &DiagramAutomorphism) -> Self {
        Braid { delta: self.delta, pos: self.pos.apply_f(f) }
    }

    /// y⁻¹·b·F(y).
    pub fn conjugate(&self, y: &Self, f: &DiagramAutomorphism) -> Self {
        y.inverse().mul(self).mul(&y.apply_f(f))
    }

    /// The positive braid, or `NotPositive` when k < 0.
    pub fn as_positive(&self) -> Result<PositiveBraid> {
        if self.delta < 0 {
            return Err(Error::NotPositive);
        }
        let d = PositiveBraid::delta(self.system()).pow(self.delta as usize);
        Ok(&d * &self.pos)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(self.system()), |acc, _| acc.mul(&base))
    }

    /// {"delta_power": k, "factors": [...]}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "delta_power": self.delta, "factors": self.pos.factor_words() })
    }
}
