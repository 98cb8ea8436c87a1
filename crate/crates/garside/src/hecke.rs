//! The generic one-parameter Iwahori–Hecke algebra in the T-basis, with
//! T_s² = (x − 1)T_s + x.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braid::PositiveBraid;
use crate::coxeter::{CoxeterSystem, DiagramAutomorphism, Element, GenSet};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Ring};

/// Σ p_w(x)·T_w with finitely many nonzero p_w.
#[derive(Clone)]
pub struct HeckeElement<C> {
    sys: Arc<CoxeterSystem>,
    coords: HashMap<Element, LaurentPoly<C>>,
}

impl<C: Ring> PartialEq for HeckeElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.sys.label() == other.sys.label() && self.coords == other.coords
    }
}

impl<C: Ring + num_traits::Signed + std::fmt::Display> std::fmt::Debug for HeckeElement<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> =
            self.terms().into_iter().map(|(w, p)| format!("({p})T{:?}", self.sys.word(&w))).collect();
        write!(f, "{}", if terms.is_empty() { "0".to_string() } else { terms.join(" + ") })
    }
}

impl<C: Ring> HeckeElement<C> {
    pub fn zero(sys: &Arc<CoxeterSystem>) -> Self {
        HeckeElement { sys: Arc::clone(sys), coords: HashMap::new() }
    }

    pub fn one(sys: &Arc<CoxeterSystem>) -> Self {
        Self::basis(sys, &sys.identity())
    }

    /// T_w.
    pub fn basis(sys: &Arc<CoxeterSystem>, w: &Element) -> Self {
        Self::zero(sys).plus_term(w, &LaurentPoly::one())
    }

    /// T_b for a positive braid: the product of T_f over its simple factors.
    pub fn of_braid(b: &PositiveBraid) -> Self {
        let sys = b.system();
        b.word().into_iter().fold(Self::one(sys), |acc, s| acc.mul_gen(s))
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    fn plus_term(mut self, w: &Element, p: &LaurentPoly<C>) -> Self {
        if p.is_zero() {
            return self;
        }
        let entry = self.coords.entry(w.clone()).or_insert_with(LaurentPoly::zero);
        *entry += p;
        if entry.is_zero() {
            self.coords.remove(w);
        }
        self
    }

    /// A|T_v.
    pub fn coeff(&self, v: &Element) -> LaurentPoly<C> {
        self.coords.get(v).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Nonzero coordinates ordered by (length, shortlex word).
    pub fn terms(&self) -> Vec<(Element, LaurentPoly<C>)> {
        let mut out: Vec<_> = self.coords.iter().map(|(w, p)| (w.clone(), p.clone())).collect();
        out.sort_by_cached_key(|(w, _)| self.sys.sort_key(w));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(other.coords.iter().fold(self.clone(), |acc, (w, p)| acc.plus_term(w, p)))
    }

    pub fn scale(&self, p: &LaurentPoly<C>) -> Self {
        let coords = self
            .coords
            .iter()
            .map(|(w, q)| (w.clone(), q * p))
            .filter(|(_, q)| !q.is_zero())
            .collect();
        HeckeElement { sys: Arc::clone(&self.sys), coords }
    }

    /// Right multiplication by T_s.
    pub fn mul_gen(&self, s: usize) -> Self {
        let x = LaurentPoly::<C>::x();
        let xm1 = &x - &LaurentPoly::one();
        let mut out = Self::zero(&self.sys);
        for (w, p) in &self.coords {
            let ws = self.sys.mul_gen_right(w, s);
            if w.has_right_descent(s) {
                out = out.plus_term(w, &(p * &xm1)).plus_term(&ws, &(p * &x));
            } else {
                out = out.plus_term(&ws, p);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut out = Self::zero(&self.sys);
        for (u, p) in &other.coords {
            let prod = self.sys.word(u).into_iter().fold(self.clone(), |acc, s| acc.mul_gen(s));
            out = out.add(&prod.scale(p))?;
        }
        Ok(out)
    }

    /// T_w ↦ T_{F(w)}.
    pub fn apply_f(&self, f: &DiagramAutomorphism) -> Self {
        let coords = self.coords.iter().map(|(w, p)| (f.apply(w), p.clone())).collect();
        HeckeElement { sys: Arc::clone(&self.sys), coords }
    }

    /// The specialization x ↦ 1, an element of the group algebra.
    pub fn at_one(&self) -> HashMap<Element, C> {
        self.coords
            .iter()
            .map(|(w, p)| (w.clone(), p.at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.sys.label() != other.sys.label() {
            return Err(Error::MixedSystems(self.sys.label().to_string(), other.sys.label().to_string()));
        }
        Ok(())
    }
}

/// Integer-coefficient Laurent polynomials used throughout the algebra.
pub type HeckePoly = LaurentPoly<BigInt>;
/// Elements of the generic Hecke algebra over ℤ[x, x⁻¹].
pub type HeckeElt = HeckeElement<BigInt>;

/// T_v·T_t|T_{F(v)}: the number of F^m-points of the piece indexed by v,
/// as a polynomial in x = q^m.
pub fn point_count_poly(v: &Element, t: &PositiveBraid, f: &DiagramAutomorphism) -> HeckePoly {
    let sys = t.system();
    let tv = t.word().into_iter().fold(HeckeElt::basis(sys, v), |acc, s| acc.mul_gen(s));
    tv.coeff(&f.apply(v))
}

/// Σ_v T_v·T_t|T_{F(v)}, the trace of x ↦ T_t·F(x).
pub fn lefschetz_trace_poly(t: &PositiveBraid, f: &DiagramAutomorphism) -> Result<HeckePoly> {
    let sys = t.system();
    let mut total = HeckePoly::zero();
    for v in sys.enumerate_elements()? {
        total += &point_count_poly(v, t, f);
    }
    Ok(total)
}

/// #{v ∈ W^F : every generator in the support of t left-divides v}.
pub fn fixed_divisible_count(t: &PositiveBraid, f: &DiagramAutomorphism) -> Result<usize> {
    let sys = t.system();
    let supp = t.support();
    Ok(sys
        .enumerate_elements()?
        .iter()
        .filter(|v| &f.apply(v) == *v && supp.is_subset(v.left_descents()))
        .count())
}

/// Whether the support of t meets every F-orbit on S.
///
/// Cross-checked against the trace being monic of degree l(t); a
/// disagreement is reported as `CriterionMismatch`.
pub fn variety_irreducible(t: &PositiveBraid, f: &DiagramAutomorphism) -> Result<bool> {
    let supp = t.support();
    let by_support = f.orbits().iter().all(|o| !o.intersection(supp).is_empty());
    let trace = lefschetz_trace_poly(t, f)?;
    let by_trace = trace.is_monic_of_degree(t.length() as i32);
    if by_support != by_trace {
        return Err(Error::CriterionMismatch(format!(
            "support criterion {by_support}, trace {trace} for braid {:?}",
            t.word()
        )));
    }
    Ok(by_support)
}

/// E_{W_I}(w) = {w₀^I·v : v ∈ W_I, T_v·T_w|T_v ≠ 0}, sorted by (length, word).
///
/// T_w is the image of the braid, so non-simple braids are allowed. The braid
/// must lie in B_I⁺.
pub fn e_set(w: &PositiveBraid, set: GenSet) -> Result<Vec<Element>> {
    let sys = w.system();
    if !w.support().is_subset(set) {
        return Err(Error::HypothesesNotMet(format!("support of {:?} is not inside {set:?}", w.word())));
    }
    let w0 = sys.longest_element(set);
    let id = sys.identity_automorphism();
    let mut out: Vec<Element> = sys
        .parabolic_elements(set)?
        .into_iter()
        .filter(|v| !point_count_poly(v, w, &id).is_zero())
        .map(|v| &w0 * &v)
        .collect();
    out.sort_by_cached_key(|v| sys.sort_key(v));
    Ok(out)
}

fn check_decomposition(sys: &CoxeterSystem, s: usize, w_prime: &Element, set: GenSet) -> Result<()> {
    sys.check_index(s)?;
    if set.contains(s) {
        return Err(Error::HypothesesNotMet(format!("s{s} lies in I")));
    }
    if !sys.in_parabolic(w_prime, set) {
        return Err(Error::HypothesesNotMet("w′ is not in W_I".into()));
    }
    Ok(())
}

/// E_W(s·w′) from E_{W_I}(w′) by the coset recipe: products v₁v₂ with
/// v₂ ∈ E_{W_I}(w′), v₁ minimal in v₁W_I and l(v₁v₂s) > l(v₁v₂).
pub fn e_set_via_cosets(sys: &Arc<CoxeterSystem>, s: usize, w_prime: &Element, set: GenSet) -> Result<Vec<Element>> {
    check_decomposition(sys, s, w_prime, set)?;
    let inner = e_set(&PositiveBraid::lift(sys, w_prime), set)?;
    let reduced: Vec<&Element> =
        sys.enumerate_elements()?.iter().filter(|v| v.right_descents().intersection(set).is_empty()).collect();
    let mut out = Vec::new();
    for v1 in &reduced {
        for v2 in &inner {
            let v = *v1 * v2;
            if !v.has_right_descent(s) {
                out.push(v);
            }
        }
    }
    out.sort_by_cached_key(|v| sys.sort_key(v));
    out.dedup();
    Ok(out)
}

/// E_W(s·w′) = E_{W_I}(w′) ∪ {s·v : v ∈ E_{W_I}(w′), s′v < v} when S = I ∪ {s},
/// s′ is the only element of I not commuting with s, m(s, s′) = 3, and s′ is
/// not in the support of s′v for any v ∈ E_{W_I}(w′) whose support contains s′.
pub fn e_set_via_induction(sys: &Arc<CoxeterSystem>, s: usize, w_prime: &Element, set: GenSet) -> Result<Vec<Element>> {
    check_decomposition(sys, s, w_prime, set)?;
    if set.union(GenSet::singleton(s)) != sys.generators() {
        return Err(Error::HypothesesNotMet("S ≠ I ∪ {s}".into()));
    }
    let neighbours: Vec<usize> = set.iter().filter(|&t| sys.coxeter_entry(s, t) != 2).collect();
    let &[sp] = neighbours.as_slice() else {
        return Err(Error::HypothesesNotMet(format!("s{s} has {} neighbours in I", neighbours.len())));
    };
    if sys.coxeter_entry(s, sp) != 3 {
        return Err(Error::HypothesesNotMet(format!("m(s{s}, s{sp}) ≠ 3")));
    }
    let inner = e_set(&PositiveBraid::lift(sys, w_prime), set)?;
    for v in &inner {
        if sys.support(v).contains(sp) && sys.support(&sys.mul_gen_left(sp, v)).contains(sp) {
            return Err(Error::HypothesesNotMet(format!("s{sp} stays in the support of s{sp}·{:?}", sys.word(v))));
        }
    }
    let mut out = inner.clone();
    out.extend(inner.iter().filter(|v| v.has_left_descent(sp)).map(|v| sys.mul_gen_left(s, v)));
    out.sort_by_cached_key(|v| sys.sort_key(v));
    out.dedup();
    Ok(out)
}

impl<C: Ring> HeckeElement<C> {
    /// The symmetrizing form A ↦ A|T_1.
    pub fn tau(&self) -> LaurentPoly<C> {
        self.coeff(&self.sys.identity())
    }
}

impl<C: Ring> std::ops::Mul for &HeckeElement<C> {
    type Output = HeckeElement<C>;

    /// Panics on mixed systems; use [`HeckeElement::mul`] for an error.
    fn mul(self, rhs: &HeckeElement<C>) -> HeckeElement<C> {
        HeckeElement::mul(self, rhs).expect("product of Hecke elements from different systems")
    }
}
