//! Conjugacy in the braid group via super summit sets.
//!
//! Conjugation is b^y = y⁻¹·b·y throughout, and only the untwisted case is
//! handled here.

use std::collections::HashMap;

use crate::braid::{Braid, PositiveBraid};
use crate::coxeter::Element;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Cycling,
    Decycling,
}

pub fn inf_sup(b: &Braid) -> (i64, i64) {
    (b.inf(), b.sup())
}

fn conj(b: &Braid, y: &Braid) -> Braid {
    y.inverse().mul(b).mul(y)
}

/// The y with cycle(b) = y⁻¹·b·y.
///
/// For b = Δ^k·x₁⋯x_r, cycling uses τ^k(x₁) and decycling uses x_r⁻¹.
pub fn cycling_conjugator(b: &Braid, dir: Direction) -> Braid {
    let sys = b.system();
    let factors = b.positive_part().factors();
    let (Some(first), Some(last)) = (factors.first(), factors.last()) else {
        return Braid::identity(sys);
    };
    match dir {
        Direction::Cycling => {
            let mut x = first.clone();
            if b.delta_exponent().rem_euclid(2) == 1 {
                x = sys.delta_twist().apply(&x);
            }
            Braid::from_positive(&PositiveBraid::lift(sys, &x))
        }
        Direction::Decycling => Braid::from_positive(&PositiveBraid::lift(sys, last)).inverse(),
    }
}

pub fn cycle(b: &Braid, dir: Direction) -> Braid {
    conj(b, &cycling_conjugator(b, dir))
}

/// A conjugate in the super summit set, with the conjugator y such that
/// y⁻¹·b·y is that conjugate.
pub fn summit(b: &Braid) -> (Braid, Braid) {
    let sys = b.system();
    let patience = sys.n_positive_roots().max(1);
    let mut cur = b.clone();
    let mut y = Braid::identity(sys);
    for dir in [Direction::Cycling, Direction::Decycling] {
        let mut stale = 0;
        while stale < patience && cur.canonical_length() > 0 {
            let c = cycling_conjugator(&cur, dir);
            let next = conj(&cur, &c);
            let improved = match dir {
                Direction::Cycling => next.inf() > cur.inf(),
                Direction::Decycling => next.sup() < cur.sup(),
            };
            stale = if improved { 0 } else { stale + 1 };
            y = y.mul(&c);
            cur = next;
        }
    }
    (cur, y)
}

/// The super summit set of a braid as a graph whose edges are minimal simple
/// conjugators. Vertex 0 is the summit representative reached from `base`.
#[derive(Debug, Clone)]
pub struct SummitGraph {
    pub base: Braid,
    /// y with y⁻¹·base·y = vertices[0].
    pub to_summit: Braid,
    pub vertices: Vec<Braid>,
    /// (source, minimal simple conjugator, target).
    pub edges: Vec<(usize, Element, usize)>,
    tree: Vec<Option<(usize, Element)>>,
}

impl SummitGraph {
    pub fn inf_sup(&self) -> (i64, i64) {
        inf_sup(&self.vertices[0])
    }

    pub fn index_of(&self, b: &Braid) -> Option<usize> {
        self.vertices.iter().position(|v| v == b)
    }

    /// p with p⁻¹·vertices[0]·p = vertices[i], along the BFS tree.
    pub fn tree_conjugator(&self, i: usize) -> Braid {
        let sys = self.base.system();
        let mut simples = Vec::new();
        let mut cur = i;
        while let Some((parent, s)) = &self.tree[cur] {
            simples.push(s.clone());
            cur = *parent;
        }
        simples
            .iter()
            .rev()
            .fold(Braid::identity(sys), |acc, s| acc.mul(&Braid::from_positive(&PositiveBraid::lift(sys, s))))
    }
}

pub fn super_summit_set(b: &Braid, budget: usize) -> Result<SummitGraph> {
    let sys = b.system();
    let (root, to_summit) = summit(b);
    let target = inf_sup(&root);
    let simples: Vec<(Element, Braid)> = sys
        .enumerate_elements()?
        .iter()
        .skip(1)
        .map(|s| (s.clone(), Braid::from_positive(&PositiveBraid::lift(sys, s))))
        .collect();
    let mut index: HashMap<Braid, usize> = HashMap::from([(root.clone(), 0)]);
    let mut vertices = vec![root];
    let mut tree = vec![None];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < vertices.len() {
        let v = vertices[i].clone();
        let valid: Vec<(&Element, Braid)> = simples
            .iter()
            .filter_map(|(s, sb)| {
                let u = conj(&v, sb);
                (inf_sup(&u) == target).then_some((s, u))
            })
            .collect();
        for (s, u) in &valid {
            let minimal = !valid.iter().any(|(t, _)| {
                t != s && sys.product(&t.inverse(), s).expect("same system").length() + t.length() == s.length()
            });
            if !minimal {
                continue;
            }
            let j = match index.get(u) {
                Some(&j) => j,
                None => {
                    if vertices.len() >= budget {
                        return Err(Error::BudgetExceeded(budget));
                    }
                    index.insert(u.clone(), vertices.len());
                    vertices.push(u.clone());
                    tree.push(Some((i, (*s).clone())));
                    vertices.len() - 1
                }
            };
            edges.push((i, (*s).clone(), j));
        }
        i += 1;
    }
    Ok(SummitGraph { base: b.clone(), to_summit, vertices, edges, tree })
}

/// A y with y⁻¹·a·y = b, or `NotConjugate`.
pub fn are_conjugate(a: &Braid, b: &Braid, budget: usize) -> Result<Braid> {
    let (la, lb) = (a.system().label(), b.system().label());
    if la != lb {
        return Err(Error::MixedSystems(la.to_string(), lb.to_string()));
    }
    if a.exponent_sum() != b.exponent_sum() {
        return Err(Error::NotConjugate);
    }
    let graph = super_summit_set(a, budget)?;
    let (b_summit, yb) = summit(b);
    let j = graph.index_of(&b_summit).ok_or(Error::NotConjugate)?;
    let y = graph.to_summit.mul(&graph.tree_conjugator(j)).mul(&yb.inverse());
    debug_assert_eq!(&conj(a, &y), b);
    Ok(y)
}

/// Generators of the centralizer of `b` read off the loops of its super
/// summit graph, deduplicated and sorted by (exponent sum, JSON form).
///
/// Each generator is checked to commute with `b`.
pub fn centralizer_generators(b: &Braid, budget: usize) -> Result<Vec<Braid>> {
    let sys = b.system();
    let graph = super_summit_set(b, budget)?;
    let tree: Vec<Braid> = (0..graph.vertices.len()).map(|i| graph.tree_conjugator(i)).collect();
    let back = graph.to_summit.inverse();
    let mut gens: Vec<Braid> = Vec::new();
    for (i, s, j) in &graph.edges {
        if graph.tree[*j].as_ref().is_some_and(|(p, t)| p == i && t == s) {
            continue;
        }
        let s = Braid::from_positive(&PositiveBraid::lift(sys, s));
        let loop_elt = tree[*i].mul(&s).mul(&tree[*j].inverse());
        let g = graph.to_summit.mul(&loop_elt).mul(&back);
        if g == Braid::identity(sys) || gens.contains(&g) {
            continue;
        }
        assert_eq!(&conj(b, &g), b, "loop element fails to centralize");
        gens.push(g);
    }
    gens.sort_by_cached_key(|g| (g.exponent_sum(), g.to_json().to_string()));
    Ok(gens)
}
