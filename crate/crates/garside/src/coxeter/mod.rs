//! Finite Coxeter systems of types A, B, D and I₂(m).
//!
//! An [`Element`] is the permutation it induces on the roots of the
//! geometric representation, so equality is exact and canonical.
//! Generators are numbered from 1.
//!
//! Numbering conventions:
//! * `A_n`: the path s1 - s2 - … - sn.
//! * `B_n`: s1 =4= s2 - s3 - … - sn (the double bond sits at s1).
//! * `D_n`: s1 and s2 are both joined to s3, then s3 - s4 - … - sn.
//!   For D4 the branch node is **s3** and triality is s2 → s1 → s4 → s2.
//! * `I2(m)`: s1 -m- s2.

mod classes;
mod ring;

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

pub use classes::ConjugacyClass;
pub use ring::{cyclotomic, IntPoly, RealCyclotomic};

/// Default cap on `|W|` for exhaustive enumeration.
pub const DEFAULT_GROUP_BOUND: usize = 100_000;

const MAX_RANK: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    I2(u32),
}

/// Type tag of a system, e.g. `A3` or `I2(6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = rest.parse().map_err(|_| bad())?;
            if !(3..=60).contains(&m) {
                return Err(bad());
            }
            return Ok(Label { family: Family::I2(m), rank: 2 });
        }
        let (head, digits) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let rank: usize = digits.parse().map_err(|_| bad())?;
        let (family, min) = match head {
            "A" => (Family::A, 1),
            "B" => (Family::B, 2),
            "D" => (Family::D, 4),
            _ => return Err(bad()),
        };
        if rank < min || rank > MAX_RANK {
            return Err(bad());
        }
        Ok(Label { family, rank })
    }
}

/// A subset of the generators, stored as a bit mask (bit `s-1` for `s`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> Self {
        GenSet(((1u64 << rank) - 1) as u32)
    }

    pub fn singleton(s: usize) -> Self {
        GenSet(1 << (s - 1))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, s: usize) -> bool {
        s >= 1 && self.0 & (1 << (s - 1)) != 0
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << (s - 1);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 & (1 << i) != 0).map(|i| i + 1)
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut g = GenSet::EMPTY;
        for s in iter {
            g.insert(s);
        }
        g
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A group element: the permutation it induces on the root set.
///
/// Roots `0..N` are positive, root `r + N` is the negative of root `r`,
/// and root `s - 1` is the simple root of generator `s`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    label: Label,
    perm: Box<[u16]>,
}

impl Element {
    pub fn label(&self) -> Label {
        self.label
    }

    fn n_pos(&self) -> usize {
        self.perm.len() / 2
    }

    /// Image of root `r`.
    pub fn root_image(&self, r: usize) -> usize {
        self.perm[r] as usize
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.n_pos();
        self.perm[..n].iter().filter(|&&r| r as usize >= n).count()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &r)| i == r as usize)
    }

    pub fn inverse(&self) -> Element {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &r) in self.perm.iter().enumerate() {
            inv[r as usize] = i as u16;
        }
        Element { label: self.label, perm: inv.into() }
    }

    /// `l(ws) < l(w)`.
    pub fn has_right_descent(&self, s: usize) -> bool {
        self.perm[s - 1] as usize >= self.n_pos()
    }

    /// `l(sw) < l(w)`.
    pub fn has_left_descent(&self, s: usize) -> bool {
        let n = self.n_pos();
        self.perm[n..].iter().any(|&r| r as usize == s - 1)
    }

    pub fn right_descents(&self) -> GenSet {
        (1..=self.label.rank).filter(|&s| self.has_right_descent(s)).collect()
    }

    pub fn left_descents(&self) -> GenSet {
        let n = self.n_pos();
        let rank = self.label.rank;
        let mut g = GenSet::EMPTY;
        for &r in &self.perm[n..] {
            if (r as usize) < rank {
                g.insert(r as usize + 1);
            }
        }
        g
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        if self.label != other.label {
            return Err(Error::MixedSystems(self.label.to_string(), other.label.to_string()));
        }
        Ok(self.compose(other))
    }

    fn compose(&self, other: &Element) -> Element {
        let perm: Box<[u16]> = other.perm.iter().map(|&r| self.perm[r as usize]).collect();
        Element { label: self.label, perm }
    }
}

/// Panics on elements of different systems; use [`Element::try_mul`] to get an error.
impl Mul<&Element> for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        assert_eq!(self.label, rhs.label, "product of elements from different systems");
        self.compose(rhs)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({}, len {}, {:?})", self.label, self.length(), &self.perm[..])
    }
}

/// A permutation of the generators preserving the Coxeter matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiagramAutomorphism {
    label: Label,
    perm: Vec<usize>,
    delta: usize,
    root_perm: Box<[u16]>,
}

impl DiagramAutomorphism {
    /// Images of generators `1..=n`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Order of the permutation.
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn is_identity(&self) -> bool {
        self.delta == 1
    }

    pub fn image(&self, s: usize) -> usize {
        self.perm[s - 1]
    }

    pub fn image_set(&self, set: GenSet) -> GenSet {
        set.iter().map(|s| self.image(s)).collect()
    }

    /// F(w) = F ∘ w ∘ F⁻¹ on roots.
    pub fn apply(&self, w: &Element) -> Element {
        assert_eq!(self.label, w.label, "automorphism from a different system");
        let mut out = vec![0u16; w.perm.len()];
        for (r, &img) in w.perm.iter().enumerate() {
            out[self.root_perm[r] as usize] = self.root_perm[img as usize];
        }
        Element { label: w.label, perm: out.into() }
    }

    /// F^k.
    pub fn power(&self, k: usize) -> DiagramAutomorphism {
        let n = self.perm.len();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut root_perm: Vec<u16> = (0..self.root_perm.len() as u16).collect();
        for _ in 0..(k % self.delta) {
            perm = perm.iter().map(|&s| self.perm[s - 1]).collect();
            root_perm = root_perm.iter().map(|&r| self.root_perm[r as usize]).collect();
        }
        let delta = order_of(&perm);
        DiagramAutomorphism { label: self.label, perm, delta, root_perm: root_perm.into() }
    }

    /// Orbits on the generators.
    pub fn orbits(&self) -> Vec<GenSet> {
        let mut seen = GenSet::EMPTY;
        let mut out = Vec::new();
        for s in 1..=self.perm.len() {
            if seen.contains(s) {
                continue;
            }
            let mut orbit = GenSet::EMPTY;
            let mut t = s;
            while !orbit.contains(t) {
                orbit.insert(t);
                t = self.image(t);
            }
            seen = seen.union(orbit);
            out.push(orbit);
        }
        out
    }
}

impl fmt::Debug for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{:?}", self.perm)
    }
}

fn order_of(perm: &[usize]) -> usize {
    let mut cur: Vec<usize> = perm.to_vec();
    let mut k = 1;
    while cur.iter().enumerate().any(|(i, &s)| s != i + 1) {
        cur = cur.iter().map(|&s| perm[s - 1]).collect();
        k += 1;
    }
    k
}

/// A finite Coxeter system with its root system precomputed.
pub struct CoxeterSystem {
    label: Label,
    coxeter: Vec<Vec<u32>>,
    ring: RealCyclotomic,
    cartan: Vec<Vec<Vec<i64>>>,
    /// Coordinates of the positive roots in the basis of simple roots.
    roots: Vec<Vec<Vec<i64>>>,
    root_index: HashMap<Vec<i64>, usize>,
    gens: Vec<Element>,
    identity: Element,
    w0: Element,
    bound: usize,
    elements: OnceLock<Result<classes::Enumeration>>,
    classes: OnceLock<Result<Vec<ConjugacyClass>>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem({})", self.label)
    }
}

/// Builds the system named by `spec` (`"A3"`, `"B2"`, `"D4"`, `"I2(6)"`).
pub fn make_system(spec: &str) -> Result<Arc<CoxeterSystem>> {
    make_system_with_bound(spec, DEFAULT_GROUP_BOUND)
}

/// As [`make_system`], with a custom cap on `|W|` for enumeration.
pub fn make_system_with_bound(spec: &str, bound: usize) -> Result<Arc<CoxeterSystem>> {
    let label: Label = spec.parse()?;
    Ok(Arc::new(CoxeterSystem::new(label, bound)))
}

fn coxeter_matrix(label: Label) -> Vec<Vec<u32>> {
    let n = label.rank;
    let mut m = vec![vec![2u32; n]; n];
    let mut join = |i: usize, j: usize, v: u32| {
        m[i][j] = v;
        m[j][i] = v;
    };
    match label.family {
        Family::A => (0..n - 1).for_each(|i| join(i, i + 1, 3)),
        Family::B => {
            join(0, 1, 4);
            (1..n - 1).for_each(|i| join(i, i + 1, 3));
        }
        Family::D => {
            join(0, 2, 3);
            join(1, 2, 3);
            (2..n - 1).for_each(|i| join(i, i + 1, 3));
        }
        Family::I2(k) => join(0, 1, k),
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

impl CoxeterSystem {
    fn new(label: Label, bound: usize) -> Self {
        let n = label.rank;
        let coxeter = coxeter_matrix(label);
        let base = match label.family {
            Family::A | Family::D => 3,
            Family::B => 4,
            Family::I2(m) => m,
        };
        let ring = RealCyclotomic::new(base);
        let cartan: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match coxeter[i][j] {
                        1 => ring.from_int(2),
                        2 => ring.zero(),
                        3 => ring.from_int(-1),
                        m => {
                            assert_eq!(base % m, 0);
                            ring.neg(&ring.two_cos((base / m) as usize))
                        }
                    })
                    .collect()
            })
            .collect();

        let reflect = |i: usize, v: &[Vec<i64>]| -> Vec<Vec<i64>> {
            let c = (0..n).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(&cartan[i][j], &v[j])));
            let mut out = v.to_vec();
            out[i] = ring.sub(&out[i], &c);
            out
        };
        let flat = |v: &[Vec<i64>]| -> Vec<i64> { v.iter().flatten().copied().collect() };

        let mut roots: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| (0..n).map(|j| ring.from_int(i64::from(i == j))).collect())
            .collect();
        let mut root_index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (flat(r), i)).collect();
        let mut next = 0;
        while next < roots.len() {
            for i in 0..n {
                if next == i {
                    continue;
                }
                let image = reflect(i, &roots[next]);
                let key = flat(&image);
                if !root_index.contains_key(&key) {
                    root_index.insert(key, roots.len());
                    roots.push(image);
                }
            }
            next += 1;
        }
        let npos = roots.len();
        for r in 0..npos {
            let neg: Vec<Vec<i64>> = roots[r].iter().map(|c| ring.neg(c)).collect();
            root_index.insert(flat(&neg), r + npos);
        }
        let coords = |r: usize| -> Vec<Vec<i64>> {
            if r < npos {
                roots[r].clone()
            } else {
                roots[r - npos].iter().map(|c| ring.neg(c)).collect()
            }
        };
        let gens: Vec<Element> = (0..n)
            .map(|i| {
                let perm: Box<[u16]> =
                    (0..2 * npos).map(|r| root_index[&flat(&reflect(i, &coords(r)))] as u16).collect();
                Element { label, perm }
            })
            .collect();
        let identity = Element { label, perm: (0..2 * npos as u16).collect() };

        let mut sys = CoxeterSystem {
            label,
            coxeter,
            ring,
            cartan,
            roots,
            root_index,
            gens,
            identity: identity.clone(),
            w0: identity,
            bound,
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        };
        sys.w0 = sys.longest_element(GenSet::full(n));
        sys
    }

    pub fn label(&self) -> Label {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    /// The set S of all generators.
    pub fn generators(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    /// N = |Φ⁺| = l(w₀).
    pub fn n_positive_roots(&self) -> usize {
        self.roots.len()
    }

    /// m(s, t), 1-based.
    pub fn coxeter_entry(&self, s: usize, t: usize) -> u32 {
        self.coxeter[s - 1][t - 1]
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    /// Cartan matrix of the geometric representation over [`RealCyclotomic`]:
    /// entry (i, j) is −2cos(π/m(i,j)) for i ≠ j.
    pub fn cartan(&self) -> &[Vec<Vec<i64>>] {
        &self.cartan
    }

    pub fn ring(&self) -> &RealCyclotomic {
        &self.ring
    }

    /// Coordinates of root `r` (positive or negative).
    pub fn root(&self, r: usize) -> Vec<Vec<i64>> {
        let n = self.roots.len();
        if r < n {
            self.roots[r].clone()
        } else {
            self.roots[r - n].iter().map(|c| self.ring.neg(c)).collect()
        }
    }

    pub fn enumeration_bound(&self) -> usize {
        self.bound
    }

    pub fn identity(&self) -> Element {
        self.identity.clone()
    }

    /// Generator `s` (1-based). Panics if out of range.
    pub fn gen(&self, s: usize) -> &Element {
        &self.gens[s - 1]
    }

    /// The longest element w₀.
    pub fn w0(&self) -> &Element {
        &self.w0
    }

    pub fn check_index(&self, s: usize) -> Result<()> {
        if s == 0 || s > self.rank() {
            Err(Error::IndexOutOfRange { index: s, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn check_same(&self, w: &Element) -> Result<()> {
        if w.label != self.label {
            Err(Error::MixedSystems(self.label.to_string(), w.label.to_string()))
        } else {
            Ok(())
        }
    }

    pub fn product(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_same(a)?;
        a.try_mul(b)
    }

    pub fn mul_gen_right(&self, w: &Element, s: usize) -> Element {
        w * self.gen(s)
    }

    pub fn mul_gen_left(&self, s: usize, w: &Element) -> Element {
        self.gen(s) * w
    }

    /// Evaluates a word of generator indices.
    pub fn element(&self, word: &[usize]) -> Result<Element> {
        let mut w = self.identity();
        for &s in word {
            self.check_index(s)?;
            w = self.mul_gen_right(&w, s);
        }
        Ok(w)
    }

    /// Shortlex-least reduced word.
    pub fn word(&self, w: &Element) -> Vec<usize> {
        let mut out = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while let Some(s) = cur.left_descents().first() {
            out.push(s);
            cur = self.mul_gen_left(s, &cur);
        }
        out
    }

    /// Evaluates `word` and returns the element with its shortlex normal form.
    pub fn normal_form(&self, word: &[usize]) -> Result<(Element, Vec<usize>)> {
        let w = self.element(word)?;
        let nf = self.word(&w);
        Ok((w, nf))
    }

    /// Sort key (length, shortlex word) used for deterministic output.
    pub fn sort_key(&self, w: &Element) -> (usize, Vec<usize>) {
        (w.length(), self.word(w))
    }

    /// Generators appearing in a reduced word of `w`.
    pub fn support(&self, w: &Element) -> GenSet {
        self.word(w).into_iter().collect()
    }

    pub fn in_parabolic(&self, w: &Element, set: GenSet) -> bool {
        self.support(w).is_subset(set)
    }

    /// The longest element w₀^I of W_I.
    pub fn longest_element(&self, set: GenSet) -> Element {
        let mut w = self.identity();
        while let Some(s) = set.difference(w.right_descents()).first() {
            w = self.mul_gen_right(&w, s);
        }
        w
    }

    /// `v = x·y` with `y ∈ W_I` and `x` the minimal element of `vW_I`.
    pub fn coset_split(&self, v: &Element, set: GenSet) -> (Element, Element) {
        let mut x = v.clone();
        while let Some(s) = set.intersection(x.right_descents()).first() {
            x = self.mul_gen_right(&x, s);
        }
        let y = &x.inverse() * v;
        (x, y)
    }

    /// Bruhat order, by peeling the last letter of a fixed reduced word of `w`
    /// (lifting property: a subword either uses that letter or it does not).
    pub fn bruhat_leq(&self, u: &Element, w: &Element) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            if u.is_identity() {
                return true;
            }
            if u.length() > w.length() {
                return false;
            }
            let s = w.right_descents().first().expect("nonidentity w has a descent");
            if u.has_right_descent(s) {
                u = self.mul_gen_right(&u, s);
            }
            w = self.mul_gen_right(&w, s);
        }
    }

    /// The permutation s ↦ w₀ s w₀ of the generators.
    pub fn delta_twist(&self) -> DiagramAutomorphism {
        let images: Vec<usize> = (1..=self.rank())
            .map(|s| {
                let t = &(&self.w0 * self.gen(s)) * &self.w0;
                (1..=self.rank()).find(|&u| self.gen(u) == &t).expect("w0 normalizes S")
            })
            .collect();
        self.automorphism(&images).expect("conjugation by w0 preserves m")
    }

    pub fn identity_automorphism(&self) -> DiagramAutomorphism {
        let images: Vec<usize> = (1..=self.rank()).collect();
        self.automorphism(&images).expect("identity is an automorphism")
    }

    /// The diagram automorphism with the given images of `1..=n`.
    pub fn automorphism(&self, images: &[usize]) -> Result<DiagramAutomorphism> {
        let n = self.rank();
        let bad = |why: &str| Error::InvalidAutomorphism(format!("{images:?}: {why}"));
        if images.len() != n {
            return Err(bad("wrong length"));
        }
        let mut seen = GenSet::EMPTY;
        for &s in images {
            if s == 0 || s > n || seen.contains(s) {
                return Err(bad("not a permutation"));
            }
            seen.insert(s);
        }
        for s in 1..=n {
            for t in 1..=n {
                if self.coxeter_entry(images[s - 1], images[t - 1]) != self.coxeter_entry(s, t) {
                    return Err(bad("does not preserve the Coxeter matrix"));
                }
            }
        }
        let npos = self.n_positive_roots();
        let root_perm: Box<[u16]> = (0..2 * npos)
            .map(|r| {
                let v = self.root(r);
                let mut img = vec![self.ring.zero(); n];
                for (j, c) in v.into_iter().enumerate() {
                    img[images[j] - 1] = c;
                }
                let key: Vec<i64> = img.into_iter().flatten().collect();
                self.root_index[&key] as u16
            })
            .collect();
        Ok(DiagramAutomorphism {
            label: self.label,
            perm: images.to_vec(),
            delta: order_of(images),
            root_perm,
        })
    }

    /// All Coxeter-matrix-preserving permutations of S, identity first,
    /// then lexicographic in the image list.
    pub fn diagram_automorphisms(&self) -> Vec<DiagramAutomorphism> {
        fn extend(sys: &CoxeterSystem, partial: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let n = sys.rank();
            let k = partial.len();
            if k == n {
                out.push(partial.clone());
                return;
            }
            for img in 1..=n {
                if partial.contains(&img) {
                    continue;
                }
                let ok = (0..k).all(|j| {
                    sys.coxeter_entry(partial[j], img) == sys.coxeter_entry(j + 1, k + 1)
                });
                if ok {
                    partial.push(img);
                    extend(sys, partial, out);
                    partial.pop();
                }
            }
        }
        let mut perms = Vec::new();
        extend(self, &mut Vec::new(), &mut perms);
        perms.into_iter().map(|p| self.automorphism(&p).expect("checked")).collect()
    }

    pub fn apply_f(&self, f: &DiagramAutomorphism, w: &Element) -> Element {
        f.apply(w)
    }

    /// Matrix of `wF` on the simple-root basis; column `j` is `w(F(α_j))`.
    pub fn matrix(&self, w: &Element, f: &DiagramAutomorphism) -> Vec<Vec<Vec<i64>>> {
        let n = self.rank();
        let cols: Vec<Vec<Vec<i64>>> =
            (1..=n).map(|j| self.root(w.root_image(f.image(j) - 1))).collect();
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Multiplicity of ζ = e^{2iπ/d} as an eigenvalue of `wF`.
    ///
    /// When the characteristic polynomial has integer coefficients this is
    /// the multiplicity of Φ_d. Otherwise (non-crystallographic I₂(m)) the
    /// real factor x² − 2cos(2π/d)x + 1 is divided out over ℤ[2cos(π/m)].
    pub fn regular_eigen_multiplicity(&self, w: &Element, f: &DiagramAutomorphism, d: u32) -> usize {
        assert!(d >= 1);
        let cp = ring::char_poly(&self.ring, &self.matrix(w, f));
        let ints: Option<Vec<i64>> = cp.iter().map(|c| RealCyclotomic::as_int(c)).collect();
        if let Some(mut p) = ints {
            let phi = cyclotomic(d);
            let mut k = 0;
            loop {
                let (q, r) = ring::poly_divrem_monic(&p, &phi);
                if !r.is_empty() {
                    return k;
                }
                p = q;
                k += 1;
            }
        }
        let ring = &self.ring;
        let factor: Vec<Vec<i64>> = match d {
            1 => vec![ring.from_int(-1), ring.from_int(1)],
            2 => vec![ring.from_int(1), ring.from_int(1)],
            _ => {
                let two_m = 2 * ring.m();
                if two_m % d != 0 {
                    return 0;
                }
                let c = ring.two_cos((two_m / d) as usize);
                vec![ring.from_int(1), ring.neg(&c), ring.from_int(1)]
            }
        };
        let mut p = cp;
        let mut k = 0;
        loop {
            let (q, r) = ring::ring_poly_divrem(ring, &p, &factor);
            if !r.is_empty() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    /// a(d): the maximal ζ-eigenspace dimension over the coset WF.
    ///
    /// For F = id this is #{i : d | d_i}. For twisted F it is computed as the
    /// maximum of [`Self::regular_eigen_multiplicity`] over W.
    pub fn regular_bound(&self, f: &DiagramAutomorphism, d: u32) -> Result<usize> {
        if f.is_identity() {
            return Ok(self.degrees()?.iter().filter(|&&di| di % d == 0).count());
        }
        Ok(self
            .enumerate_elements()?
            .iter()
            .map(|w| self.regular_eigen_multiplicity(w, f, d))
            .max()
            .unwrap_or(0))
    }

    pub fn is_d_regular(&self, w: &Element, f: &DiagramAutomorphism, d: u32) -> Result<bool> {
        let a = self.regular_bound(f, d)?;
        Ok(a > 0 && self.regular_eigen_multiplicity(w, f, d) == a)
    }

    /// The reflections: all conjugates of generators, sorted by length then word.
    pub fn reflections(&self) -> Vec<Element> {
        let mut seen: std::collections::HashSet<Element> = self.gens.iter().cloned().collect();
        let mut queue: Vec<Element> = self.gens.clone();
        while let Some(t) = queue.pop() {
            for s in 1..=self.rank() {
                let c = &(self.gen(s) * &t) * self.gen(s);
                if seen.insert(c.clone()) {
                    queue.push(c);
                }
            }
        }
        let mut out: Vec<Element> = seen.into_iter().collect();
        out.sort_by_cached_key(|t| self.sort_key(t));
        out
    }
}
