//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the terminal.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use garside::braid::{enumerate_positive, Braid, PositiveBraid};
use garside::chars::{applicable_orders_type_a, char_table_a, char_table_b, default_q_samples, span_check_type_a};
use garside::conjugacy::centralizer_generators;
use garside::coxeter::{make_system, CoxeterSystem, Element, GenSet};
use garside::dcat::{chain_check, enumerate_f_roots, hom_search};
use garside::hecke::{e_set, e_set_via_induction, fixed_divisible_count, lefschetz_trace_poly, point_count_poly};
use garside::verify::{run_suite, Status, VerifyOptions};
use garside::{HeckeElt, HeckePoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::seeded_runner;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sys(spec: &str) -> Arc<CoxeterSystem> {
    make_system(spec).unwrap()
}

fn ob(sys: &Arc<CoxeterSystem>, word: &[usize]) -> PositiveBraid {
    PositiveBraid::of_word(sys, word).unwrap()
}

fn g(b: &PositiveBraid) -> Braid {
    Braid::from_positive(b)
}

fn xm1() -> HeckePoly {
    HeckePoly::from_coeffs([BigInt::from(-1), BigInt::one()])
}

fn d4_roots() -> std::result::Result<Vec<PositiveBraid>, String> {
    let d4 = sys("D4");
    enumerate_f_roots(&d4, &d4.identity_automorphism(), 4, false, 1_000_000).map_err(|e| e.to_string())
}

fn d4_root_enumeration() -> Outcome {
    let d4 = sys("D4");
    let id = d4.identity_automorphism();
    let roots = d4_roots()?;
    ensure(roots.len() == 12, || format!("{} roots", roots.len()))?;
    let pi = PositiveBraid::pi(&d4);
    for b in &roots {
        ensure(b.length() == 6 && b.nu() == 1, || format!("{:?} is not a single simple of length 6", b.word()))?;
        ensure(b.pow(4) == pi, || format!("{:?}⁴ ≠ π", b.word()))?;
        let m = d4.regular_eigen_multiplicity(&b.beta_image(), &id, 4);
        ensure(m == 2, || format!("{:?} has Φ4-multiplicity {m}", b.word()))?;
    }
    Ok("12 simple roots of length 6, each with Φ4-multiplicity 2".into())
}

fn d4_connectivity() -> Outcome {
    let d4 = sys("D4");
    let id = d4.identity_automorphism();
    let roots = d4_roots()?;
    let mut longest = 0;
    for a in &roots {
        for b in &roots {
            let path = hom_search(a, b, &id, 100_000).map_err(|e| format!("{:?} → {:?}: {e}", a.word(), b.word()))?;
            let y = path.iter().fold(Braid::identity(&d4), |acc, p| acc.mul(&g(p)));
            ensure(g(a).conjugate(&y, &id) == g(b), || format!("path {:?} → {:?} does not conjugate", a.word(), b.word()))?;
            longest = longest.max(path.len());
        }
    }
    Ok(format!("144 ordered pairs connected, longest path {longest}"))
}

fn d4_centralizer() -> Outcome {
    let d4 = sys("D4");
    let id = d4.identity_automorphism();
    let w = ob(&d4, &[2, 3, 1, 3, 4, 3]);
    let gw = g(&w);
    // x^y = y⁻¹xy
    let exp = |x: &[usize], y: &[usize]| g(&ob(&d4, y)).inverse().mul(&g(&ob(&d4, x))).mul(&g(&ob(&d4, y)));
    let b1 = exp(&[1, 2], &[3]);
    let b2 = g(&ob(&d4, &[1, 4]));
    let b3 = exp(&[2, 4], &[3, 4]);
    for (name, p) in [("b1b2b3", b1.mul(&b2).mul(&b3)), ("b2b3b1", b2.mul(&b3).mul(&b1)), ("b3b1b2", b3.mul(&b1).mul(&b2))] {
        ensure(p == gw, || format!("{name} ≠ w"))?;
    }
    for (name, b) in [("b1", &b1), ("b2", &b2), ("b3", &b3)] {
        ensure(b.mul(&gw) == gw.mul(b), || format!("{name} does not centralize w"))?;
    }
    let chains: [(&str, Vec<&[usize]>, Braid); 3] = [
        ("wb1", vec![&[1, 2, 3, 1], &[2, 4], &[1, 3]], gw.mul(&b1)),
        ("b2", vec![&[1], &[4]], b2.clone()),
        ("wb3", vec![&[2, 3, 1], &[4], &[2, 3, 4], &[3]], gw.mul(&b3)),
    ];
    for (name, conj, expected) in chains {
        let conj: Vec<PositiveBraid> = conj.iter().map(|c| ob(&d4, c)).collect();
        let report = chain_check(&w, &conj, &id, true).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.closes, || format!("{name} chain does not return to w"))?;
        ensure(g(&report.product) == expected, || format!("{name} chain product differs"))?;
    }
    Ok("three cyclic products equal w; wb1, b2, wb3 are End(w) chains".into())
}

fn d4_esets() -> Outcome {
    let d4 = sys("D4");
    let i: GenSet = [1usize, 3, 4].into_iter().collect();
    let s = d4.generators();
    let words = |v: Vec<Element>| v.iter().map(|e| d4.word(e)).collect::<Vec<_>>();
    let cases: [(&str, &[usize], GenSet, Vec<Vec<usize>>); 3] = [
        ("E_{W_I}(w')", &[3, 1, 3, 4, 3], i, vec![vec![], vec![1], vec![3], vec![4]]),
        ("E_W(w)", &[2, 3, 1, 3, 4, 3], s, vec![vec![], vec![1], vec![3], vec![4], vec![2, 3]]),
        (
            "E_W(w'')",
            &[2, 3, 1, 4, 3],
            s,
            vec![vec![], vec![1], vec![3], vec![4], vec![1, 4], vec![2, 3], vec![3, 1, 4], vec![2, 3, 1, 4]],
        ),
    ];
    for (name, word, set, expected) in cases {
        let got = words(e_set(&ob(&d4, word), set).map_err(|e| e.to_string())?);
        ensure(got == expected, || format!("{name} = {got:?}"))?;
        if word[0] == 2 {
            let wp = d4.element(&word[1..]).unwrap();
            let via = words(e_set_via_induction(&d4, 2, &wp, i).map_err(|e| e.to_string())?);
            ensure(via == expected, || format!("{name} by induction = {via:?}"))?;
        }
    }
    Ok("three sets reproduced exactly; induction agrees".into())
}

fn hecke_value() -> Outcome {
    for n in 2..=4 {
        let a = sys(&format!("A{n}"));
        let head: Vec<usize> = (1..=n).collect();
        let expected = (0..n).fold(HeckePoly::one(), |acc, _| &acc * &xm1());
        let got = (&HeckeElt::basis(&a, a.w0()) * &HeckeElt::of_braid(&ob(&a, &head))).coeff(a.w0());
        ensure(got == expected, || format!("A{n}: T_w0 T_c|T_w0 = {got}"))?;
        let mut word = head.clone();
        word.push(n);
        let lhs = HeckeElt::of_braid(&ob(&a, &word));
        let rhs = HeckeElt::basis(&a, &a.element(&head).unwrap())
            .scale(&xm1())
            .add(&HeckeElt::basis(&a, &a.element(&head[..n - 1]).unwrap()).scale(&HeckePoly::x()))
            .unwrap();
        ensure(lhs == rhs, || format!("A{n}: expansion of T_(σ1⋯σnσn) differs"))?;
    }
    Ok("(x−1)^n for n = 2, 3, 4 and the two-term expansion".into())
}

fn irreducibility() -> Outcome {
    let mut checked = 0;
    for spec in ["A3", "B2"] {
        let s = sys(spec);
        let autos = if spec == "A3" { s.diagram_automorphisms() } else { vec![s.identity_automorphism()] };
        ensure(spec != "A3" || autos.len() == 2, || "A3 should have id and the flip".into())?;
        for f in &autos {
            for len in 0..=4 {
                for t in enumerate_positive(&s, len, 100_000).map_err(|e| e.to_string())? {
                    let trace = lefschetz_trace_poly(&t, f).map_err(|e| e.to_string())?;
                    let by_support = f.orbits().iter().all(|o| !o.intersection(t.support()).is_empty());
                    let l = len as i32;
                    ensure(by_support == trace.is_monic_of_degree(l), || format!("{spec} {:?}: criterion mismatch", t.word()))?;
                    ensure(trace.degree() == Some(l), || format!("{spec} {:?}: degree", t.word()))?;
                    let count = fixed_divisible_count(&t, f).map_err(|e| e.to_string())?;
                    ensure(trace.coeff(l) == BigInt::from(count), || format!("{spec} {:?}: top coefficient", t.word()))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (braid, F) pairs"))
}

fn y_pieces() -> Outcome {
    for n in 2..=4 {
        let a = sys(&format!("A{n}"));
        let id = a.identity_automorphism();
        let mut word: Vec<usize> = (1..=n).collect();
        word.push(n);
        let w = ob(&a, &word);
        let w0i = a.longest_element(GenSet::full(n - 1));
        for v in a.enumerate_elements().unwrap() {
            let nonempty = !point_count_poly(v, &w, &id).is_zero();
            let longest = (v * &w0i).length() + w0i.length() == v.length();
            ensure(nonempty == longest, || format!("A{n} v = {:?}", a.word(v)))?;
        }
    }
    Ok("n = 2, 3, 4".into())
}

fn facts_suites() -> Outcome {
    let mut total = 0;
    for (suite, n, required) in [
        ("facts-A", 6, vec!["n=4 r=2 d=2", "n=6 r=3 d=2", "n=6 r=2 d=3"]),
        ("facts-B", 5, vec!["ts2ts2 n=2 r=2 d=2", "ts2ts2 n=4 r=2 d=4", "ts2ts2 n=3 r=3 d=2"]),
    ] {
        let report = run_suite(suite, &VerifyOptions { n: Some(n), ..Default::default() }).map_err(|e| e.to_string())?;
        for c in &report.claims {
            ensure(c.status == Status::Pass, || format!("{suite}: {} is {:?}: {}", c.id, c.status, c.witness))?;
        }
        for tag in required {
            ensure(report.claims.iter().any(|c| c.id.contains(tag)), || format!("{suite}: no claim for {tag}"))?;
        }
        total += report.claims.len();
    }
    Ok(format!("{total} claims"))
}

fn coxeter_roots() -> Outcome {
    for spec in ["A2", "B2", "I2(6)"] {
        let s = sys(spec);
        let id = s.identity_automorphism();
        let h = 2 * s.n_positive_roots() / s.rank();
        let roots = enumerate_f_roots(&s, &id, h, false, 1_000_000).map_err(|e| e.to_string())?;
        let lifts: BTreeSet<Vec<Vec<usize>>> =
            [vec![1, 2], vec![2, 1]].iter().map(|w| ob(&s, w).factor_words()).collect();
        let found: BTreeSet<Vec<Vec<usize>>> = roots.iter().map(PositiveBraid::factor_words).collect();
        ensure(found == lifts, || format!("{spec}: roots {found:?}"))?;
        for a in &roots {
            for b in &roots {
                hom_search(a, b, &id, 100_000).map_err(|e| format!("{spec}: {e}"))?;
            }
        }
        let c = g(&ob(&s, &[1, 2]));
        let gens = centralizer_generators(&c, 100_000).map_err(|e| e.to_string())?;
        ensure(!gens.is_empty(), || format!("{spec}: empty generating set"))?;
        for x in &gens {
            ensure((-24..=24).any(|m| &c.pow(m) == x), || format!("{spec}: generator {} is not a power of c", x.to_json()))?;
        }
    }
    Ok("A2, B2, I2(6)".into())
}

fn span() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for d in applicable_orders_type_a(n) {
            let r = span_check_type_a(n, d, &default_q_samples()).map_err(|e| e.to_string())?;
            ensure(r.intersection_dimension == 0, || format!("A{n} d={d}: intersection {}", r.intersection_dimension))?;
            ensure(r.certificate_positive, || format!("A{n} d={d}: certificate not positive"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, d) cases, intersection 0 with positive certificate"))
}

fn property_suites() -> Outcome {
    // Compact fixed-seed replay of the module invariants; the full property
    // suites live in the per-module test targets.
    let mut runner = seeded_runner(64, 11);
    for spec in ["A3", "B3", "D4"] {
        let s = sys(spec);
        let pi = PositiveBraid::pi(&s);
        let word = prop::collection::vec(1..=s.rank(), 0..6);
        runner
            .run(&(word.clone(), word.clone(), word), |(a, b, c)| {
                let (a, b, c) = (ob(&s, &a), ob(&s, &b), ob(&s, &c));
                prop_assert_eq!(&a * &b == &a * &c, b == c);
                prop_assert_eq!(&b * &a == &c * &a, b == c);
                prop_assert_eq!(&pi * &a, &a * &pi);
                Ok(())
            })
            .map_err(|e| format!("cancellativity {spec}: {e}"))?;
    }

    let a2 = sys("A2");
    let small: Vec<PositiveBraid> = (0..=3).flat_map(|l| enumerate_positive(&a2, l, 1000).unwrap()).collect();
    for y in &small {
        for z in &small {
            let yz = g(y).inverse().mul(&g(z));
            for x in &small {
                if g(x).mul(&yz).as_positive().is_ok() {
                    let x1 = y.left_gcd(z).left_quotient(y).unwrap();
                    ensure(x1.right_divides(x), || "xy-1z".into())?;
                }
            }
        }
    }

    let a3 = sys("A3");
    let all = a3.enumerate_elements().unwrap();
    for v in all.iter().filter(|w| w.length() <= 2) {
        for w in all.iter().filter(|w| w.length() <= 2) {
            let prod = &HeckeElt::basis(&a3, v) * &HeckeElt::basis(&a3, w);
            for (z, _) in prod.terms() {
                ensure(a3.bruhat_leq(&(v * w), &z), || "z>xy".into())?;
            }
        }
    }
    for r in a3.reflections() {
        for v in all {
            let nonzero = !(&HeckeElt::basis(&a3, v) * &HeckeElt::basis(&a3, &r)).coeff(v).is_zero();
            ensure(nonzero == ((v * &r).length() < v.length()), || "vsts".into())?;
        }
    }
    let id = a3.identity_automorphism();
    let disjoint = all.iter().flat_map(|w1| all.iter().map(move |w2| (w1, w2))).filter(|(w1, w2)| {
        !w1.is_identity() && !w2.is_identity() && a3.support(w1).intersection(a3.support(w2)).is_empty()
    });
    for (w1, w2) in disjoint {
        let (b1, b2) = (PositiveBraid::lift(&a3, w1), PositiveBraid::lift(&a3, w2));
        for v in all {
            let whole = !point_count_poly(v, &(&b1 * &b2), &id).is_zero();
            let parts = !point_count_poly(v, &b1, &id).is_zero() && !point_count_poly(v, &b2, &id).is_zero();
            ensure(whole == parts, || "disjoint-support factorization".into())?;
        }
    }
    let n = all.len();
    runner
        .run(&(prop::collection::vec(1..=3usize, 0..6), 0..n), |(tw, vi)| {
            let tb = ob(&a3, &tw);
            let v = &a3.enumerate_elements().unwrap()[vi];
            let lt = tb.length() as i32;
            for (z, p) in (&HeckeElt::of_braid(&tb) * &HeckeElt::basis(&a3, v)).terms() {
                prop_assert!(p.degree().unwrap() <= lt.min(lt + v.length() as i32 - z.length() as i32));
            }
            Ok(())
        })
        .map_err(|e| format!("degree bound: {e}"))?;

    for k in 1..=8 {
        ensure(char_table_a(k).unwrap().is_orthogonal(), || format!("S_{k} orthogonality"))?;
    }
    for k in 1..=6 {
        ensure(char_table_b(k).unwrap().is_orthogonal(), || format!("B_{k} orthogonality"))?;
    }
    Ok("cancellativity, xy-1z, z>xy, vsts, disjoint supports, degree bound, MN orthogonality".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 11] = [
        ("1 D4 roots", Duration::from_secs(60), d4_root_enumeration),
        ("2 D4 connectivity", Duration::from_secs(60), d4_connectivity),
        ("3 D4 centralizer data", Duration::from_secs(5), d4_centralizer),
        ("4 D4 E-sets", Duration::from_secs(30), d4_esets),
        ("5 Hecke value (x-1)^n", Duration::from_secs(60), hecke_value),
        ("6 irreducibility criterion", Duration::from_secs(120), irreducibility),
        ("7 Lemma Y^v_w non vide", Duration::from_secs(60), y_pieces),
        ("8 facts and factsBn suites", Duration::from_secs(120), facts_suites),
        ("9 roots of pi classification", Duration::from_secs(60), coxeter_roots),
        ("10 type A span check", Duration::from_secs(10), span),
        ("11 property suites", Duration::from_secs(600), property_suites),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            ensure(elapsed <= limit, || format!("took {elapsed:.1?}, limit {limit:?}")).map(|()| detail)
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
