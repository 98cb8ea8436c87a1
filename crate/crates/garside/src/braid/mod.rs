//! Positive braids in left-greedy normal form.
//!
//! A [`PositiveBraid`] is stored as its sequence of simple factors: lifts of
//! nonidentity elements of W with `left_descents(b) ⊆ right_descents(a)` for
//! every adjacent pair `(a, b)`. Normal forms are maintained by sliding
//! generators across adjacent factors until every pair is left-weighted.

mod group;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::sync::Arc;

use crate::coxeter::{CoxeterSystem, DiagramAutomorphism, Element, GenSet};
use crate::error::{Error, Result};

pub use group::Braid;

/// Default cap on the number of braids produced by an enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 1_000_000;

#[derive(Clone)]
pub struct PositiveBraid {
    sys: Arc<CoxeterSystem>,
    factors: Vec<Element>,
}

impl PartialEq for PositiveBraid {
    fn eq(&self, other: &Self) -> bool {
        self.sys.label() == other.sys.label() && self.factors == other.factors
    }
}

impl Eq for PositiveBraid {}

impl Hash for PositiveBraid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.factors.hash(state);
    }
}

impl fmt::Debug for PositiveBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.sys.label(), self.factor_words())
    }
}

/// Makes `(a, b)` left-weighted in place; returns whether anything moved.
fn slide(sys: &CoxeterSystem, a: &mut Element, b: &mut Element) -> bool {
    let mut moved = false;
    while let Some(s) = b.left_descents().difference(a.right_descents()).first() {
        *a = sys.mul_gen_right(a, s);
        *b = sys.mul_gen_left(s, b);
        moved = true;
    }
    moved
}

/// Brings a sequence of simple elements to left-greedy normal form.
fn normalize(sys: &CoxeterSystem, factors: &mut Vec<Element>) {
    factors.retain(|f| !f.is_identity());
    loop {
        let mut changed = false;
        for i in (0..factors.len().saturating_sub(1)).rev() {
            let (left, right) = factors.split_at_mut(i + 1);
            if slide(sys, &mut left[i], &mut right[0]) {
                changed = true;
            }
        }
        let before = factors.len();
        factors.retain(|f| !f.is_identity());
        if !changed && before == factors.len() {
            return;
        }
    }
}

impl PositiveBraid {
    pub fn identity(sys: &Arc<CoxeterSystem>) -> Self {
        PositiveBraid { sys: Arc::clone(sys), factors: Vec::new() }
    }

    /// The canonical positive lift of `w`.
    pub fn lift(sys: &Arc<CoxeterSystem>, w: &Element) -> Self {
        assert_eq!(sys.label(), w.label(), "element from a different system");
        let factors = if w.is_identity() { Vec::new() } else { vec![w.clone()] };
        PositiveBraid { sys: Arc::clone(sys), factors }
    }

    pub fn generator(sys: &Arc<CoxeterSystem>, s: usize) -> Self {
        Self::lift(sys, sys.gen(s))
    }

    /// Normal form of an arbitrary sequence of simple elements.
    pub fn from_simples(sys: &Arc<CoxeterSystem>, simples: Vec<Element>) -> Self {
        let mut factors = simples;
        normalize(sys, &mut factors);
        PositiveBraid { sys: Arc::clone(sys), factors }
    }

    pub fn of_word(sys: &Arc<CoxeterSystem>, word: &[usize]) -> Result<Self> {
        let simples = word
            .iter()
            .map(|&s| sys.check_index(s).map(|_| sys.gen(s).clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_simples(sys, simples))
    }

    /// The Garside element Δ = lift(w₀).
    pub fn delta(sys: &Arc<CoxeterSystem>) -> Self {
        Self::lift(sys, sys.w0())
    }

    /// π = Δ².
    pub fn pi(sys: &Arc<CoxeterSystem>) -> Self {
        Self::delta(sys).pow(2)
    }

    /// Δ_I = lift(w₀^I).
    pub fn parabolic_delta(sys: &Arc<CoxeterSystem>, set: GenSet) -> Self {
        Self::lift(sys, &sys.longest_element(set))
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn factors(&self) -> &[Element] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Braid length: the length of any positive word for the braid.
    pub fn length(&self) -> usize {
        self.factors.iter().map(Element::length).sum()
    }

    /// ν(b): the number of normal-form factors, i.e. least k with b ≼ Δ^k.
    pub fn nu(&self) -> usize {
        self.factors.len()
    }

    /// Shortlex words of the factors.
    pub fn factor_words(&self) -> Vec<Vec<usize>> {
        self.factors.iter().map(|f| self.sys.word(f)).collect()
    }

    /// A positive word: the concatenated factor words.
    pub fn word(&self) -> Vec<usize> {
        self.factor_words().concat()
    }

    /// Image in W.
    pub fn beta_image(&self) -> Element {
        self.factors.iter().fold(self.sys.identity(), |acc, f| &acc * f)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sys.label() != other.sys.label() {
            return Err(Error::MixedSystems(self.sys.label().to_string(), other.sys.label().to_string()));
        }
        Ok(())
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        normalize(&self.sys, &mut factors);
        Ok(PositiveBraid { sys: Arc::clone(&self.sys), factors })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut simples = Vec::with_capacity(self.factors.len() * k);
        for _ in 0..k {
            simples.extend(self.factors.iter().cloned());
        }
        Self::from_simples(&self.sys, simples)
    }

    /// `self⁻¹·b` when `self ≼ b`.
    pub fn left_quotient(&self, b: &Self) -> Option<Self> {
        if self.sys.label() != b.sys.label() || self.length() > b.length() {
            return None;
        }
        let mut rest = b.factors.clone();
        for s in self.word() {
            let head = rest.first_mut()?;
            if !head.has_left_descent(s) {
                return None;
            }
            *head = self.sys.mul_gen_left(s, head);
            normalize(&self.sys, &mut rest);
        }
        Some(PositiveBraid { sys: Arc::clone(&self.sys), factors: rest })
    }

    /// `b·self⁻¹` when `self` right-divides `b`.
    pub fn right_quotient(&self, b: &Self) -> Option<Self> {
        self.reverse().left_quotient(&b.reverse()).map(|q| q.reverse())
    }

    /// `self ≼ b`: there is a positive `c` with `b = self·c`.
    pub fn left_divides(&self, b: &Self) -> bool {
        self.left_quotient(b).is_some()
    }

    /// There is a positive `c` with `b = c·self`.
    pub fn right_divides(&self, b: &Self) -> bool {
        self.right_quotient(b).is_some()
    }

    /// Greatest common left divisor.
    pub fn left_gcd(&self, other: &Self) -> Self {
        assert_eq!(self.sys.label(), other.sys.label());
        let sys = &self.sys;
        let mut gcd = Vec::new();
        let mut a = self.clone();
        let mut b = other.clone();
        while let (Some(ha), Some(hb)) = (a.factors.first(), b.factors.first()) {
            // meet of the two heads in the prefix order of simples
            let mut m = sys.identity();
            let (mut ra, mut rb) = (ha.clone(), hb.clone());
            while let Some(s) = ra.left_descents().intersection(rb.left_descents()).first() {
                m = sys.mul_gen_right(&m, s);
                ra = sys.mul_gen_left(s, &ra);
                rb = sys.mul_gen_left(s, &rb);
            }
            if m.is_identity() {
                break;
            }
            let ml = Self::lift(sys, &m);
            a = ml.left_quotient(&a).expect("meet divides a");
            b = ml.left_quotient(&b).expect("meet divides b");
            gcd.push(m);
        }
        Self::from_simples(sys, gcd)
    }

    /// All left divisors, sorted by (length, word).
    pub fn left_divisors(&self) -> Vec<Self> {
        let sys = &self.sys;
        let mut seen: HashMap<Self, Self> = HashMap::new();
        let id = Self::identity(sys);
        seen.insert(id.clone(), self.clone());
        let mut layer = vec![id];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for y in &layer {
                let q = seen[y].clone();
                let Some(head) = q.factors.first() else { continue };
                for s in head.left_descents().iter() {
                    let ys = y * &Self::generator(sys, s);
                    if seen.contains_key(&ys) {
                        continue;
                    }
                    let qs = Self::generator(sys, s).left_quotient(&q).expect("s divides the quotient");
                    seen.insert(ys.clone(), qs);
                    next.push(ys);
                }
            }
            layer = next;
        }
        let mut out: Vec<Self> = seen.into_keys().collect();
        out.sort_by_cached_key(|y| (y.length(), y.factor_words()));
        out
    }

    pub fn apply_f(&self, f: &DiagramAutomorphism) -> Self {
        let factors = self.factors.iter().map(|w| f.apply(w)).collect();
        PositiveBraid { sys: Arc::clone(&self.sys), factors }
    }

    /// Generators occurring in any positive word for the braid.
    pub fn support(&self) -> GenSet {
        self.factors.iter().fold(GenSet::EMPTY, |acc, f| acc.union(self.sys.support(f)))
    }

    /// The anti-automorphism extending s ↦ s.
    pub fn reverse(&self) -> Self {
        let simples = self.factors.iter().rev().map(Element::inverse).collect();
        Self::from_simples(&self.sys, simples)
    }

    /// b·F(b)·F²(b)···F^{d−1}(b).
    pub fn twisted_power(&self, f: &DiagramAutomorphism, d: usize) -> Self {
        let mut simples = Vec::new();
        let mut cur = self.clone();
        for _ in 0..d {
            simples.extend(cur.factors.iter().cloned());
            cur = cur.apply_f(f);
        }
        Self::from_simples(&self.sys, simples)
    }

    /// `(bF)^d = πF^d`.
    pub fn is_f_root_of_pi(&self, f: &DiagramAutomorphism, d: usize) -> bool {
        d >= 1 && self.twisted_power(f, d) == Self::pi(&self.sys)
    }

    /// Root of π whose twisted powers up to d/2 stay simple.
    pub fn is_good_root(&self, f: &DiagramAutomorphism, d: usize) -> Result<bool> {
        if !self.is_f_root_of_pi(f, d) {
            return Err(Error::NotARoot);
        }
        Ok((1..=d / 2).all(|i| self.twisted_power(f, i).nu() <= 1))
    }

    /// α_I(b) = gcd(b, Δ_I^{ν(b)}): the largest left divisor lying in B_I⁺.
    pub fn parabolic_head(&self, set: GenSet) -> Self {
        let cap = Self::parabolic_delta(&self.sys, set).pow(self.nu());
        self.left_gcd(&cap)
    }

    /// ω_I(b) = α_I(b)⁻¹·b.
    pub fn parabolic_tail(&self, set: GenSet) -> Self {
        self.parabolic_head(set).left_quotient(self).expect("head divides b")
    }
}

/// Panics on braids of different systems; use [`PositiveBraid::concat`] for an error.
impl Mul<&PositiveBraid> for &PositiveBraid {
    type Output = PositiveBraid;

    fn mul(self, rhs: &PositiveBraid) -> PositiveBraid {
        self.concat(rhs).expect("product of braids from different systems")
    }
}

/// All positive braids of braid length `len`, sorted by factor words.
pub fn enumerate_positive(sys: &Arc<CoxeterSystem>, len: usize, bound: usize) -> Result<Vec<PositiveBraid>> {
    enumerate_filtered(sys, len, bound, usize::MAX)
}

/// As [`enumerate_positive`], keeping only braids with at most `max_nu`
/// factors (a prefix-closed condition, so pruning is exact).
pub(crate) fn enumerate_filtered(
    sys: &Arc<CoxeterSystem>,
    len: usize,
    bound: usize,
    max_nu: usize,
) -> Result<Vec<PositiveBraid>> {
    let mut layer: Vec<PositiveBraid> = vec![PositiveBraid::identity(sys)];
    for _ in 0..len {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for b in &layer {
            for s in 1..=sys.rank() {
                let bs = b * &PositiveBraid::generator(sys, s);
                if bs.nu() > max_nu {
                    continue;
                }
                if seen.insert(bs.clone()) {
                    next.push(bs);
                    if next.len() > bound {
                        return Err(Error::EnumerationTooLarge(bound));
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_by_cached_key(PositiveBraid::factor_words);
    Ok(layer)
}
