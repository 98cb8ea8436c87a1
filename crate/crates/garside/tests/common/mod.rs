#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use garside::coxeter::CoxeterSystem;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// A proptest runner with a fixed seed, so failures reproduce exactly.
pub fn seeded_runner(cases: u32, seed: u8) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

/// All words of length exactly `len` over `1..=rank`, in lexicographic order.
pub fn words(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=rank).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

/// The alternating word s t s … of length m.
pub fn alternating(s: usize, t: usize, m: usize) -> Vec<usize> {
    (0..m).map(|i| if i % 2 == 0 { s } else { t }).collect()
}

/// Equivalence class of a positive word under the braid relations,
/// found by exhaustive rewriting. Independent of any normal form.
pub fn braid_class(sys: &CoxeterSystem, word: &[usize]) -> BTreeSet<Vec<usize>> {
    let n = sys.rank();
    let mut seen = BTreeSet::new();
    seen.insert(word.to_vec());
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for s in 1..=n {
            for t in 1..=n {
                if s == t {
                    continue;
                }
                let m = sys.coxeter_entry(s, t) as usize;
                let lhs = alternating(s, t, m);
                let rhs = alternating(t, s, m);
                if w.len() < m {
                    continue;
                }
                for i in 0..=w.len() - m {
                    if w[i..i + m] == lhs[..] {
                        let mut v = w.clone();
                        v[i..i + m].copy_from_slice(&rhs);
                        if seen.insert(v.clone()) {
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
    }
    seen
}
