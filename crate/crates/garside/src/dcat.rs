//! The conjugation category D⁺: objects are positive braids, and a left
//! divisor y of b gives an elementary morphism b → y⁻¹·b·F(y).

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::braid::{enumerate_filtered, PositiveBraid};
use crate::coxeter::{CoxeterSystem, DiagramAutomorphism};
use crate::error::{Error, Result};

/// y⁻¹·b·F(y) when y ≼ b, otherwise `None`.
pub fn elementary_step(b: &PositiveBraid, y: &PositiveBraid, f: &DiagramAutomorphism) -> Option<PositiveBraid> {
    let rest = y.left_quotient(b)?;
    Some(&rest * &y.apply_f(f))
}

/// Shortest sequence of elementary morphisms from `from` to `to`.
///
/// Breadth-first over all left divisors, visiting divisors in (length, word)
/// order, so the answer is deterministic.
pub fn hom_search(
    from: &PositiveBraid,
    to: &PositiveBraid,
    f: &DiagramAutomorphism,
    max_states: usize,
) -> Result<Vec<PositiveBraid>> {
    check_pair(from, to)?;
    if from.length() != to.length() {
        return Err(Error::NotFound);
    }
    let mut parent: HashMap<PositiveBraid, Option<(PositiveBraid, PositiveBraid)>> = HashMap::new();
    parent.insert(from.clone(), None);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(b) = queue.pop_front() {
        if &b == to {
            let mut path = Vec::new();
            let mut cur = b;
            while let Some((prev, y)) = parent[&cur].clone() {
                path.push(y);
                cur = prev;
            }
            path.reverse();
            return Ok(path);
        }
        for y in b.left_divisors().into_iter().skip(1) {
            let next = elementary_step(&b, &y, f).expect("y is a divisor");
            if parent.contains_key(&next) {
                continue;
            }
            if parent.len() >= max_states {
                return Err(Error::StateBudgetExceeded(max_states));
            }
            parent.insert(next.clone(), Some((b.clone(), y)));
            queue.push_back(next);
        }
    }
    Err(Error::NotFound)
}

/// All objects reachable from `b` by elementary morphisms, in BFS order.
pub fn component(b: &PositiveBraid, f: &DiagramAutomorphism, max_states: usize) -> Result<Vec<PositiveBraid>> {
    let mut seen = HashMap::from([(b.clone(), ())]);
    let mut order = vec![b.clone()];
    let mut i = 0;
    while i < order.len() {
        let cur = order[i].clone();
        i += 1;
        for y in cur.left_divisors().into_iter().skip(1) {
            let next = elementary_step(&cur, &y, f).expect("y is a divisor");
            if seen.insert(next.clone(), ()).is_none() {
                if order.len() >= max_states {
                    return Err(Error::StateBudgetExceeded(max_states));
                }
                order.push(next);
            }
        }
    }
    Ok(order)
}

/// Outcome of running a list of conjugators through [`elementary_step`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    /// The starting object followed by each intermediate object.
    pub objects: Vec<PositiveBraid>,
    /// Product of the conjugators in order.
    pub product: PositiveBraid,
    /// Whether the last object equals the first.
    pub closes: bool,
}

impl ChainReport {
    pub fn target(&self) -> &PositiveBraid {
        self.objects.last().expect("chain has a start")
    }
}

/// Applies each conjugator in turn; `ChainBroken(i)` if the i-th one does not
/// divide the current object, or (with `expect_cycle`) `ChainBroken(len)` if
/// the chain does not return to `b`.
pub fn chain_check(
    b: &PositiveBraid,
    conjugators: &[PositiveBraid],
    f: &DiagramAutomorphism,
    expect_cycle: bool,
) -> Result<ChainReport> {
    let mut objects = vec![b.clone()];
    let mut product = PositiveBraid::identity(b.system());
    for (i, y) in conjugators.iter().enumerate() {
        check_pair(b, y)?;
        let cur = objects.last().expect("nonempty");
        let next = elementary_step(cur, y, f).ok_or(Error::ChainBroken(i))?;
        objects.push(next);
        product = &product * y;
    }
    let closes = objects.last() == Some(b);
    if expect_cycle && !closes {
        return Err(Error::ChainBroken(conjugators.len()));
    }
    Ok(ChainReport { objects, product, closes })
}

/// All d-th F-roots of π, sorted by factor words.
///
/// A root has braid length 2N/d and divides π = Δ², so at most two factors;
/// the search prunes on that. With `restrict_to_lifts` only simple braids are
/// examined.
pub fn enumerate_f_roots(
    sys: &Arc<CoxeterSystem>,
    f: &DiagramAutomorphism,
    d: usize,
    restrict_to_lifts: bool,
    bound: usize,
) -> Result<Vec<PositiveBraid>> {
    let total = 2 * sys.n_positive_roots();
    if d == 0 || total % d != 0 {
        return Ok(Vec::new());
    }
    let len = total / d;
    let candidates = if restrict_to_lifts {
        let mut lifts: Vec<PositiveBraid> = sys
            .enumerate_elements()?
            .iter()
            .filter(|w| w.length() == len)
            .map(|w| PositiveBraid::lift(sys, w))
            .collect();
        lifts.sort_by_cached_key(PositiveBraid::factor_words);
        lifts
    } else {
        enumerate_filtered(sys, len, bound, 2)?
    };
    Ok(candidates.into_iter().filter(|b| b.is_f_root_of_pi(f, d)).collect())
}

fn check_pair(a: &PositiveBraid, b: &PositiveBraid) -> Result<()> {
    let (la, lb) = (a.system().label(), b.system().label());
    if la != lb {
        return Err(Error::MixedSystems(la.to_string(), lb.to_string()));
    }
    Ok(())
}
