//! Exhaustive enumeration of W: elements, conjugacy classes, degrees.

use std::collections::HashMap;

use super::{CoxeterSystem, Element, Family, GenSet};
use crate::error::{Error, Result};

pub(super) struct Enumeration {
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
}

/// A conjugacy class; `members` are sorted by (length, shortlex word) and the
/// representative is the first of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Element,
    pub members: Vec<Element>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.members.contains(w)
    }
}

impl CoxeterSystem {
    /// |W| from the classification, without enumerating.
    pub fn group_order(&self) -> u128 {
        let n = self.rank() as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.label.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::I2(m) => 2 * m as u128,
        }
    }

    fn enumeration(&self) -> Result<&Enumeration> {
        self.elements
            .get_or_init(|| {
                if self.group_order() > self.bound as u128 {
                    return Err(Error::GroupTooLarge(self.bound));
                }
                let mut seen: HashMap<Element, ()> = HashMap::new();
                seen.insert(self.identity(), ());
                let mut layer = vec![self.identity()];
                let mut all = vec![self.identity()];
                while !layer.is_empty() {
                    let mut next = Vec::new();
                    for w in &layer {
                        for s in 1..=self.rank() {
                            if w.has_right_descent(s) {
                                continue;
                            }
                            let ws = self.mul_gen_right(w, s);
                            if seen.insert(ws.clone(), ()).is_none() {
                                next.push(ws);
                            }
                        }
                    }
                    all.extend(next.iter().cloned());
                    layer = next;
                }
                all.sort_by_cached_key(|w| self.sort_key(w));
                let index = all.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
                Ok(Enumeration { elements: all, index })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// All of W sorted by (length, shortlex word).
    pub fn enumerate_elements(&self) -> Result<&[Element]> {
        Ok(&self.enumeration()?.elements)
    }

    /// Position of `w` in [`Self::enumerate_elements`].
    pub fn index_of(&self, w: &Element) -> Result<usize> {
        Ok(self.enumeration()?.index[w])
    }

    /// Elements of the parabolic subgroup W_I, in enumeration order.
    pub fn parabolic_elements(&self, set: GenSet) -> Result<Vec<Element>> {
        Ok(self.enumerate_elements()?.iter().filter(|w| self.in_parabolic(w, set)).cloned().collect())
    }

    /// Σ_w x^{l(w)} as a coefficient vector.
    pub fn poincare_polynomial(&self) -> Result<Vec<i64>> {
        let mut p = vec![0i64; self.n_positive_roots() + 1];
        for w in self.enumerate_elements()? {
            p[w.length()] += 1;
        }
        Ok(p)
    }

    /// Reflection degrees, ascending, read off the factorization of the
    /// Poincaré polynomial as Π (x^{d_i} − 1)/(x − 1).
    pub fn degrees(&self) -> Result<Vec<u32>> {
        let p = self.poincare_polynomial()?;
        let n = self.rank();
        // q = Π (1 − x^{d_i}) = (1 − x)^n · P
        let mut q = p;
        for _ in 0..n {
            let mut next = vec![0i64; q.len() + 1];
            for (i, &c) in q.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            q = next;
        }
        super::ring::trim(&mut q);
        let mut degrees = Vec::with_capacity(n);
        for _ in 0..n {
            let k = (1..q.len()).find(|&i| q[i] != 0).ok_or(Error::FactorizationFailed)?;
            // divide by (1 − x^k)
            let mut r = vec![0i64; q.len() - k];
            for j in 0..r.len() {
                r[j] = q[j] + if j >= k { r[j - k] } else { 0 };
            }
            let mut back = vec![0i64; r.len() + k];
            for (j, &c) in r.iter().enumerate() {
                back[j] += c;
                back[j + k] -= c;
            }
            super::ring::trim(&mut back);
            if back != q {
                return Err(Error::FactorizationFailed);
            }
            super::ring::trim(&mut r);
            q = r;
            degrees.push(k as u32);
        }
        if q != [1] {
            return Err(Error::FactorizationFailed);
        }
        Ok(degrees)
    }

    /// Conjugacy classes, sorted by representative.
    pub fn conjugacy_classes(&self) -> Result<&[ConjugacyClass]> {
        self.classes
            .get_or_init(|| {
                let en = self.enumeration()?;
                let mut class_of = vec![usize::MAX; en.elements.len()];
                let mut classes = Vec::new();
                for start in 0..en.elements.len() {
                    if class_of[start] != usize::MAX {
                        continue;
                    }
                    let id = classes.len();
                    class_of[start] = id;
                    let mut members = vec![start];
                    let mut stack = vec![start];
                    while let Some(i) = stack.pop() {
                        for s in 1..=self.rank() {
                            let c = &(self.gen(s) * &en.elements[i]) * self.gen(s);
                            let j = en.index[&c];
                            if class_of[j] == usize::MAX {
                                class_of[j] = id;
                                members.push(j);
                                stack.push(j);
                            }
                        }
                    }
                    members.sort_unstable();
                    let members: Vec<Element> = members.into_iter().map(|i| en.elements[i].clone()).collect();
                    classes.push(ConjugacyClass { representative: members[0].clone(), members });
                }
                Ok(classes)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// The class containing `w`.
    pub fn class_of(&self, w: &Element) -> Result<&ConjugacyClass> {
        Ok(self.conjugacy_classes()?.iter().find(|c| c.contains(w)).expect("classes partition W"))
    }

    /// No member lies in a proper parabolic subgroup.
    pub fn is_cuspidal_class(&self, class: &ConjugacyClass) -> bool {
        let full = self.generators();
        class.members.iter().all(|w| self.support(w) == full)
    }
}
