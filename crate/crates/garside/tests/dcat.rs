mod common;

use std::sync::Arc;

use common::seeded_runner;
use garside::braid::{Braid, PositiveBraid, DEFAULT_ENUMERATION_BOUND};
use garside::coxeter::{make_system, CoxeterSystem};
use garside::dcat::{chain_check, component, elementary_step, enumerate_f_roots, hom_search};
use garside::Error;
use proptest::prelude::*;

fn ob(sys: &Arc<CoxeterSystem>, word: &[usize]) -> PositiveBraid {
    PositiveBraid::of_word(sys, word).unwrap()
}

fn g(sys: &Arc<CoxeterSystem>, word: &[usize]) -> Braid {
    Braid::from_positive(&ob(sys, word))
}

/// Composite of a path as a single conjugator, checked in the group.
fn path_conjugates(from: &PositiveBraid, to: &PositiveBraid, path: &[PositiveBraid], f: &garside::coxeter::DiagramAutomorphism) -> bool {
    let sys = from.system();
    let y = path.iter().fold(Braid::identity(sys), |acc, p| acc.mul(&Braid::from_positive(p)));
    Braid::from_positive(from).conjugate(&y, f) == Braid::from_positive(to)
}

#[test]
fn elementary_step_examples() {
    let a2 = make_system("A2").unwrap();
    let id = a2.identity_automorphism();
    let c = ob(&a2, &[1, 2]);
    assert_eq!(elementary_step(&c, &ob(&a2, &[1]), &id), Some(ob(&a2, &[2, 1])));
    assert_eq!(elementary_step(&c, &c, &id), Some(c.clone()));
    assert_eq!(elementary_step(&c, &ob(&a2, &[2]), &id), None);
    let flip = a2.automorphism(&[2, 1]).unwrap();
    assert_eq!(elementary_step(&c, &c, &flip), Some(ob(&a2, &[2, 1])));
}

#[test]
fn hom_search_examples() {
    let a2 = make_system("A2").unwrap();
    let id = a2.identity_automorphism();
    let c = ob(&a2, &[1, 2]);
    let c2 = ob(&a2, &[2, 1]);
    assert_eq!(hom_search(&c, &c2, &id, 100).unwrap(), vec![ob(&a2, &[1])]);
    assert_eq!(hom_search(&c, &c, &id, 100).unwrap(), vec![]);
    assert_eq!(hom_search(&c, &ob(&a2, &[1, 1]), &id, 100), Err(Error::NotFound));
    assert_eq!(hom_search(&c, &ob(&a2, &[1]), &id, 100), Err(Error::NotFound));
    let a4 = make_system("A4").unwrap();
    let id4 = a4.identity_automorphism();
    let long = ob(&a4, &[1, 2, 3, 4, 1, 2]);
    let far = ob(&a4, &[4, 3, 2, 1, 4, 3]);
    assert_eq!(hom_search(&long, &far, &id4, 2), Err(Error::StateBudgetExceeded(2)));
}

#[test]
fn chain_examples() {
    let a3 = make_system("A3").unwrap();
    let id = a3.identity_automorphism();
    let w = ob(&a3, &[1, 2, 3]).pow(2);
    let report = chain_check(&w, &[ob(&a3, &[1]), ob(&a3, &[3])], &id, true).unwrap();
    assert!(report.closes);
    assert_eq!(report.product, ob(&a3, &[1, 3]));
    assert_eq!(report.objects.len(), 3);
    assert!(chain_check(&w, &[], &id, true).unwrap().closes);
    assert_eq!(chain_check(&w, &[ob(&a3, &[3])], &id, false), Err(Error::ChainBroken(0)));
    assert_eq!(chain_check(&w, &[ob(&a3, &[1])], &id, true), Err(Error::ChainBroken(1)));
    // the product of a closed chain centralizes w
    let gw = Braid::from_positive(&w);
    let y = Braid::from_positive(&report.product);
    assert_eq!(gw.conjugate(&y, &id), gw);
}

#[test]
fn root_enumeration_examples() {
    let a2 = make_system("A2").unwrap();
    let id = a2.identity_automorphism();
    let roots = enumerate_f_roots(&a2, &id, 3, false, DEFAULT_ENUMERATION_BOUND).unwrap();
    assert_eq!(roots, vec![ob(&a2, &[1, 2]), ob(&a2, &[2, 1])]);
    assert_eq!(enumerate_f_roots(&a2, &id, 3, true, 100).unwrap(), roots);
    assert_eq!(enumerate_f_roots(&a2, &id, 1, false, 100).unwrap(), vec![PositiveBraid::pi(&a2)]);
    assert_eq!(enumerate_f_roots(&a2, &id, 4, false, 100).unwrap(), vec![]);
    // square roots of π are the positive conjugates of Δ; only Δ itself is simple
    let squares = enumerate_f_roots(&a2, &id, 2, false, 100).unwrap();
    assert_eq!(squares.len(), 5);
    assert_eq!(enumerate_f_roots(&a2, &id, 2, true, 100).unwrap(), vec![PositiveBraid::delta(&a2)]);
    let comp = component(&PositiveBraid::delta(&a2), &id, 100).unwrap();
    assert!(squares.iter().all(|b| comp.contains(b)));
    let flip = a2.automorphism(&[2, 1]).unwrap();
    let twisted = enumerate_f_roots(&a2, &flip, 6, false, 100).unwrap();
    assert_eq!(twisted, vec![ob(&a2, &[1]), ob(&a2, &[2])]);
}

#[test]
fn enumerated_roots_have_regular_images() {
    for spec in ["A2", "A3", "B2", "B3", "I2(5)", "I2(6)", "D4"] {
        let sys = make_system(spec).unwrap();
        for f in sys.diagram_automorphisms() {
            for d in 1..=2 * sys.n_positive_roots() {
                if spec == "D4" && d < 3 {
                    continue;
                }
                let roots = enumerate_f_roots(&sys, &f, d, false, DEFAULT_ENUMERATION_BOUND).unwrap();
                for b in &roots {
                    assert!(sys.is_d_regular(&b.beta_image(), &f, d as u32).unwrap(), "{spec} d={d} {b:?}");
                    assert!(b.nu() <= 2);
                }
            }
        }
    }
}

#[test]
fn elementary_steps_preserve_roots() {
    for spec in ["A3", "B3"] {
        let sys = make_system(spec).unwrap();
        for f in sys.diagram_automorphisms() {
            for d in [2, 3, 4, 6] {
                for b in enumerate_f_roots(&sys, &f, d, false, DEFAULT_ENUMERATION_BOUND).unwrap() {
                    for y in b.left_divisors() {
                        let next = elementary_step(&b, &y, &f).unwrap();
                        assert_eq!(next.length(), b.length());
                        assert!(next.is_f_root_of_pi(&f, d));
                    }
                }
            }
        }
    }
}

#[test]
fn n_th_roots_in_a_n_are_connected() {
    for n in 2..=4 {
        let sys = make_system(&format!("A{n}")).unwrap();
        let id = sys.identity_automorphism();
        let roots = enumerate_f_roots(&sys, &id, n, false, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert!(!roots.is_empty());
        let comp = component(&roots[0], &id, 100_000).unwrap();
        for r in &roots {
            assert!(comp.contains(r), "A{n}: {r:?} unreachable");
        }
        // every object reachable from a root is a root
        assert!(comp.iter().all(|b| b.is_f_root_of_pi(&id, n)));
        assert_eq!(comp.len(), roots.len());
    }
}

#[test]
fn paths_compose() {
    let sys = make_system("A3").unwrap();
    let id = sys.identity_automorphism();
    let roots = enumerate_f_roots(&sys, &id, 4, false, DEFAULT_ENUMERATION_BOUND).unwrap();
    let mut runner = seeded_runner(60, 17);
    let n = roots.len();
    runner
        .run(&(0..n, 0..n, 0..n), |(i, j, k)| {
            let (a, b, c) = (&roots[i], &roots[j], &roots[k]);
            let ab = hom_search(a, b, &id, 10_000).unwrap();
            let bc = hom_search(b, c, &id, 10_000).unwrap();
            prop_assert!(path_conjugates(a, b, &ab, &id));
            let mut ac = ab.clone();
            ac.extend(bc);
            prop_assert!(path_conjugates(a, c, &ac, &id));
            // shortest path never longer than a concatenation
            prop_assert!(hom_search(a, c, &id, 10_000).unwrap().len() <= ac.len());
            Ok(())
        })
        .unwrap();
}

#[test]
fn d4_roots_and_connectivity() {
    let d4 = make_system("D4").unwrap();
    let id = d4.identity_automorphism();
    let roots = enumerate_f_roots(&d4, &id, 4, false, DEFAULT_ENUMERATION_BOUND).unwrap();
    assert_eq!(roots.len(), 12);
    assert!(roots.iter().all(|b| b.nu() == 1));
    assert_eq!(enumerate_f_roots(&d4, &id, 4, true, DEFAULT_ENUMERATION_BOUND).unwrap(), roots);
    let w = ob(&d4, &[2, 3, 1, 3, 4, 3]);
    assert!(roots.contains(&w));
    for a in &roots {
        for b in &roots {
            let path = hom_search(a, b, &id, 10_000).unwrap();
            assert!(path_conjugates(a, b, &path, &id));
        }
    }
}

#[test]
fn d4_centralizer_chains() {
    let d4 = make_system("D4").unwrap();
    let id = d4.identity_automorphism();
    let w = ob(&d4, &[2, 3, 1, 3, 4, 3]);
    let gw = Braid::from_positive(&w);
    let s = |i: usize| g(&d4, &[i]);
    let exp = |x: &Braid, y: &Braid| y.inverse().mul(x).mul(y);
    let b1 = exp(&g(&d4, &[1, 2]), &s(3));
    let b2 = g(&d4, &[1, 4]);
    let b3 = exp(&g(&d4, &[2, 4]), &g(&d4, &[3, 4]));
    assert_eq!(b1.mul(&b2).mul(&b3), gw);
    assert_eq!(b2.mul(&b3).mul(&b1), gw);
    assert_eq!(b3.mul(&b1).mul(&b2), gw);
    for b in [&b1, &b2, &b3] {
        assert_eq!(gw.conjugate(b, &id), gw);
    }
    let chains: [(&[&[usize]], Braid); 3] = [
        (&[&[1, 2, 3, 1], &[2, 4], &[1, 3]], gw.mul(&b1)),
        (&[&[1], &[4]], b2.clone()),
        (&[&[2, 3, 1], &[4], &[2, 3, 4], &[3]], gw.mul(&b3)),
    ];
    for (words, expected) in chains {
        let conj: Vec<PositiveBraid> = words.iter().map(|w| ob(&d4, w)).collect();
        let report = chain_check(&w, &conj, &id, true).unwrap();
        assert_eq!(Braid::from_positive(&report.product), expected);
    }
}
