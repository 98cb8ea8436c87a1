//! Character tables of the symmetric and hyperoctahedral groups, type-A
//! generic degrees, and the cuspidal span check for endomorphisms of X(π).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Element, Family};
use crate::{Error, HeckePoly, Result};

/// Largest n for which [`char_table_a`] builds the table of Sₙ.
pub const MAX_SYMMETRIC_DEGREE: usize = 8;
/// Largest n for which [`char_table_b`] builds the table of W(Bₙ).
pub const MAX_HYPEROCTAHEDRAL_RANK: usize = 6;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Default)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of n in reverse lexicographic order, (n) first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn conjugate(&self) -> Partition {
        let len = self.0.first().copied().unwrap_or(0);
        Partition((1..=len).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.0[j] - i - 1);
            }
        }
        out
    }

    /// Σ (i−1)λᵢ.
    pub fn n_value(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Order of the centralizer in S_|λ| of a permutation of cycle type λ.
    pub fn centralizer_order(&self) -> u64 {
        multiplicities(&self.0).map(|(r, m)| (r as u64).pow(m as u32) * factorial(m)).product()
    }

    /// Degree of the irreducible character of S_|λ| labelled by λ.
    pub fn dimension(&self) -> u64 {
        factorial(self.size()) / self.hook_lengths().iter().map(|&h| h as u64).product::<u64>()
    }

    fn beta_set(&self) -> Vec<usize> {
        let l = self.0.len();
        self.0.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma or dot separated parts, e.g. `2,1`; empty for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split([',', '.'])
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A pair of partitions; labels characters and classes of W(Bₙ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bipartition(pub Partition, pub Partition);

impl Bipartition {
    pub fn size(&self) -> usize {
        self.0.size() + self.1.size()
    }

    /// All pairs of total size n: by decreasing size of the first part, each
    /// side in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for a in Partition::all(k) {
                for b in Partition::all(n - k) {
                    out.push(Bipartition(a.clone(), b));
                }
            }
        }
        out
    }

    /// Signed cycle types (positive cycles, negative cycles) of W(Bₙ), the
    /// identity first.
    pub fn classes(n: usize) -> Vec<Bipartition> {
        let mut out = Bipartition::all(n);
        out.sort_by(|x, y| (x.1.size(), &x.0, &x.1).cmp(&(y.1.size(), &y.0, &y.1)));
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0, self.1)
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn multiplicities(parts: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let distinct: BTreeSet<usize> = parts.iter().copied().collect();
    distinct.into_iter().map(move |r| (r, parts.iter().filter(|&&p| p == r).count()))
}

/// Exact character table; `values[i][j]` is the value of row i on class j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharTable<L> {
    pub rows: Vec<L>,
    pub classes: Vec<L>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<i64>>,
}

impl<L: PartialEq> CharTable<L> {
    pub fn order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    /// Values on the identity class.
    pub fn dimensions(&self) -> Vec<i64> {
        self.values.iter().map(|r| r[0]).collect()
    }

    pub fn row(&self, label: &L) -> Option<&[i64]> {
        self.rows.iter().position(|r| r == label).map(|i| self.values[i].as_slice())
    }

    pub fn class_index(&self, label: &L) -> Option<usize> {
        self.classes.iter().position(|c| c == label)
    }

    /// Row and column orthogonality.
    pub fn is_orthogonal(&self) -> bool {
        let order = self.order() as i128;
        let k = self.classes.len();
        let rows_ok = (0..self.rows.len()).all(|i| {
            (0..self.rows.len()).all(|j| {
                let s: i128 = (0..k)
                    .map(|c| self.class_sizes[c] as i128 * self.values[i][c] as i128 * self.values[j][c] as i128)
                    .sum();
                s == if i == j { order } else { 0 }
            })
        });
        let cols_ok = (0..k).all(|a| {
            (0..k).all(|b| {
                let s: i128 = self.values.iter().map(|r| r[a] as i128 * r[b] as i128).sum();
                s * self.class_sizes[a] as i128 == if a == b { order } else { 0 }
            })
        });
        rows_ok && cols_ok && self.rows.len() == k
    }
}

/// Murnaghan–Nakayama on beta-sets: remove an r-rim-hook from every bead
/// that can slide down by r.
fn strip_hooks(beta: &[usize], r: usize) -> Vec<(Vec<usize>, i64)> {
    let set: BTreeSet<usize> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for &b in beta {
        if b < r || set.contains(&(b - r)) {
            continue;
        }
        let between = set.range(b - r + 1..b).count();
        let mut next: Vec<usize> = beta.iter().map(|&x| if x == b { b - r } else { x }).collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        out.push((next, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn mn_value(beta: Vec<usize>, cycles: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (beta, cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = strip_hooks(&key.0, r).into_iter().map(|(b, sign)| sign * mn_value(b, rest, memo)).sum();
    memo.insert(key, v);
    v
}

/// χ_λ on the class of cycle type μ.
pub fn character_value_a(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    mn_value(lambda.beta_set(), mu.parts(), &mut HashMap::new())
}

/// Character table of S_n: rows λ in reverse lexicographic order, columns
/// cycle types in lexicographic order (identity first).
pub fn char_table_a(n: usize) -> Result<CharTable<Partition>> {
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::GroupTooLarge(factorial(MAX_SYMMETRIC_DEGREE) as usize));
    }
    let rows = Partition::all(n);
    let classes: Vec<Partition> = rows.iter().rev().cloned().collect();
    let order = factorial(n);
    let class_sizes = classes.iter().map(|mu| order / mu.centralizer_order()).collect();
    let values = rows
        .iter()
        .map(|lambda| {
            let mut memo = HashMap::new();
            classes.iter().map(|mu| mn_value(lambda.beta_set(), mu.parts(), &mut memo)).collect()
        })
        .collect();
    Ok(CharTable { rows, classes, class_sizes, values })
}

fn mn_value_b(
    alpha: Vec<usize>,
    beta: Vec<usize>,
    cycles: &[(usize, i64)],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>, Vec<(usize, i64)>), i64>,
) -> i64 {
    let Some((&(r, eps), rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (alpha, beta, cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (alpha, beta) = (&key.0, &key.1);
    let mut v = 0;
    for (a, sign) in strip_hooks(alpha, r) {
        v += sign * mn_value_b(a, beta.clone(), rest, memo);
    }
    for (b, sign) in strip_hooks(beta, r) {
        v += eps * sign * mn_value_b(alpha.clone(), b, rest, memo);
    }
    memo.insert(key, v);
    v
}

fn signed_cycles(class: &Bipartition) -> Vec<(usize, i64)> {
    let mut cycles: Vec<(usize, i64)> =
        class.0.parts().iter().map(|&r| (r, 1)).chain(class.1.parts().iter().map(|&r| (r, -1))).collect();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    cycles
}

/// χ_{(α,β)} on the class with positive cycles μ⁺ and negative cycles μ⁻.
pub fn character_value_b(label: &Bipartition, class: &Bipartition) -> i64 {
    if label.size() != class.size() {
        return 0;
    }
    mn_value_b(label.0.beta_set(), label.1.beta_set(), &signed_cycles(class), &mut HashMap::new())
}

/// Character table of W(Bₙ) = (ℤ/2)ⁿ ⋊ Sₙ: rows are pairs (α, β) with
/// ((n), ∅) trivial and (∅, (1ⁿ)) the sign; columns are signed cycle types.
pub fn char_table_b(n: usize) -> Result<CharTable<Bipartition>> {
    if n > MAX_HYPEROCTAHEDRAL_RANK {
        return Err(Error::GroupTooLarge(
            (factorial(MAX_HYPEROCTAHEDRAL_RANK) << MAX_HYPEROCTAHEDRAL_RANK) as usize,
        ));
    }
    let rows = Bipartition::all(n);
    let classes = Bipartition::classes(n);
    let order = factorial(n) << n;
    let class_sizes = classes
        .iter()
        .map(|c| {
            let z: u64 = [&c.0, &c.1]
                .iter()
                .flat_map(|p| multiplicities(p.parts()).collect::<Vec<_>>())
                .map(|(r, m)| (2 * r as u64).pow(m as u32) * factorial(m))
                .product();
            order / z
        })
        .collect();
    let values = rows
        .iter()
        .map(|label| {
            let mut memo = HashMap::new();
            classes
                .iter()
                .map(|c| mn_value_b(label.0.beta_set(), label.1.beta_set(), &signed_cycles(c), &mut memo))
                .collect()
        })
        .collect();
    Ok(CharTable { rows, classes, class_sizes, values })
}

/// Generic degree of the unipotent character of GLₙ labelled by λ:
/// q^{n(λ)} ∏ᵢ(qⁱ−1) / ∏_h(q^h−1) over the hook lengths h.
pub fn generic_degree_type_a(lambda: &Partition) -> HeckePoly {
    let q_minus_one = |k: usize| HeckePoly::from_terms([(k as i32, BigInt::one()), (0, -BigInt::one())]);
    let num = (1..=lambda.size()).fold(HeckePoly::monomial(lambda.n_value() as i32, BigInt::one()), |acc, i| {
        &acc * &q_minus_one(i)
    });
    lambda
        .hook_lengths()
        .into_iter()
        .try_fold(num, |acc, h| acc.div_monic(&q_minus_one(h)))
        .expect("hook products divide the q-factorial")
}

/// a_λ + A_λ: valuation plus degree of the generic degree.
pub fn aa_sum_type_a(lambda: &Partition) -> usize {
    let d = generic_degree_type_a(lambda);
    (d.valuation().unwrap_or(0) + d.degree().unwrap_or(0)) as usize
}

/// Cycle type of w ∈ W(Aₙ) acting on {1, …, n+1}, sᵢ = (i, i+1).
pub fn cycle_type_type_a(sys: &Arc<CoxeterSystem>, w: &Element) -> Result<Partition> {
    let label = sys.label();
    if label.family != Family::A {
        return Err(Error::UnsupportedType(label.to_string()));
    }
    let m = label.rank + 1;
    let mut perm: Vec<usize> = (0..m).collect();
    for s in sys.word(w) {
        perm.swap(s - 1, s);
    }
    let mut seen = vec![false; m];
    let mut parts = Vec::new();
    for start in 0..m {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// Orders d of roots of π in type Aₙ: the divisors of n and of n+1.
pub fn applicable_orders_type_a(n: usize) -> Vec<usize> {
    let divisors = |m: usize| (1..=m).filter(move |d| m % d == 0);
    let set: BTreeSet<usize> = divisors(n).chain(divisors(n + 1)).collect();
    set.into_iter().collect()
}

/// Cycle type of the d-regular class of S_{n+1}: the image of a d-th root of π.
pub fn regular_class_type_a(n: usize, d: usize) -> Result<Partition> {
    let m = n + 1;
    let parts = if m % d == 0 {
        vec![d; m / d]
    } else if n % d == 0 {
        let mut p = vec![d; n / d];
        p.push(1);
        p
    } else {
        return Err(Error::HypothesesNotMet(format!("{d} divides neither {n} nor {m}")));
    };
    Partition::new(parts)
}

/// Outcome of the span check at one value of q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanSample {
    /// The value of q.
    pub q: String,
    /// The value of q^{1/d} used for the fractional powers.
    pub q_root: String,
    /// Constraint (c) evaluated on the Coxeter vector.
    pub root_constraint: String,
    pub constraint_rank: usize,
    pub intersection_dimension: usize,
    /// Σ χ(c)² q^{(2N−a−A)/d}.
    pub certificate_value: String,
}

/// Report of [`span_check_type_a`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub rank: usize,
    pub d: usize,
    pub characters: Vec<Partition>,
    pub a_plus_a: Vec<usize>,
    pub cuspidal_classes: Vec<Partition>,
    pub cuspidal_dimension: usize,
    pub regular_class: Partition,
    /// Number of nonzero functionals Σ_{a+A=i} λ_χ χ(1).
    pub degree_constraints: usize,
    /// Degree constraints that are already nonzero on the cuspidal span.
    pub degree_constraints_nonzero: usize,
    /// Terms (2N−a−A, χ(c)²) of the certificate as a polynomial in q^{1/d}.
    pub certificate_terms: Vec<(usize, i64)>,
    pub certificate_positive: bool,
    pub samples: Vec<SpanSample>,
    /// Largest intersection dimension over the samples.
    pub intersection_dimension: usize,
}

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = &rows[r][c] / &pivot;
                for k in c..cols {
                    let delta = &factor * &rows[rank][k];
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rational_pow(base: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * base)
}

/// Checks that a class function on H_q(S_{n+1}) vanishing on proper
/// parabolic subalgebras, on powers of T_π and on T_x for x a d-th root of
/// π is zero. `n` is the rank; fractional powers q^{k/d} are evaluated at
/// q = s when every exponent is integral and at q = s^d otherwise, so all
/// arithmetic stays in ℚ.
pub fn span_check_type_a(n: usize, d: usize, q_samples: &[BigRational]) -> Result<SpanReport> {
    let m = n + 1;
    let regular_class = regular_class_type_a(n, d)?;
    let table = char_table_a(m)?;
    let sys = crate::coxeter::make_system(&format!("A{n}"))?;
    let classes = sys.conjugacy_classes()?;
    let cuspidal: Vec<Partition> = classes
        .iter()
        .filter(|c| sys.is_cuspidal_class(c))
        .map(|c| cycle_type_type_a(&sys, &c.representative))
        .collect::<Result<_>>()?;
    if cuspidal.len() != 1 {
        return Err(Error::NonCuspidalSpan(cuspidal.len()));
    }
    let two_n = n * m;
    let a_plus_a: Vec<usize> = table.rows.iter().map(aa_sum_type_a).collect();
    let col = |p: &Partition| table.class_index(p).expect("cycle type labels a class");
    let cusp_vectors: Vec<Vec<i64>> =
        cuspidal.iter().map(|c| table.values.iter().map(|r| r[col(c)]).collect()).collect();
    let to_q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let cusp_rank = rational_rank(cusp_vectors.iter().map(|v| v.iter().map(|&x| to_q(x)).collect()).collect());

    let dims = table.dimensions();
    let levels: BTreeSet<usize> = a_plus_a.iter().copied().collect();
    let degree_rows: Vec<Vec<BigRational>> = levels
        .iter()
        .map(|&i| (0..table.rows.len()).map(|k| if a_plus_a[k] == i { to_q(dims[k]) } else { BigRational::zero() }).collect())
        .filter(|r: &Vec<BigRational>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let apply = |row: &[BigRational], v: &[i64]| -> BigRational { row.iter().zip(v).map(|(a, &b)| a * to_q(b)).sum() };
    let degree_constraints_nonzero =
        degree_rows.iter().filter(|r| cusp_vectors.iter().any(|v| !apply(r, v).is_zero())).count();

    let x_col = col(&regular_class);
    let exponents: Vec<usize> = a_plus_a.iter().map(|&aa| two_n - aa).collect();
    let integral = (0..table.rows.len())
        .all(|k| exponents[k] % d == 0 || (table.values[k][x_col] == 0 && cusp_vectors.iter().all(|v| v[k] == 0)));
    let coxeter = &cusp_vectors[0];
    let certificate_terms: Vec<(usize, i64)> = (0..table.rows.len())
        .filter(|&k| coxeter[k] != 0)
        .map(|k| (exponents[k], coxeter[k] * coxeter[k]))
        .collect();
    let certificate_positive = certificate_terms.iter().all(|&(_, c)| c >= 0)
        && certificate_terms.iter().any(|&(e, c)| c > 0 && e == two_n);

    let mut samples = Vec::new();
    for s in q_samples {
        let (q, root) = if integral { (s.clone(), None) } else { (rational_pow(s, d), Some(s.clone())) };
        // q^{e/d}: exact when d | e, otherwise (q^{1/d})^e
        let power = |e: usize| match &root {
            None => rational_pow(&q, e / d),
            Some(t) => rational_pow(t, e),
        };
        let root_row: Vec<BigRational> =
            (0..table.rows.len()).map(|k| to_q(table.values[k][x_col]) * power(exponents[k])).collect();
        let mut constraints = degree_rows.clone();
        constraints.push(root_row.clone());
        let image: Vec<Vec<BigRational>> =
            constraints.iter().map(|r| cusp_vectors.iter().map(|v| apply(r, v)).collect()).collect();
        let constraint_rank = rational_rank(image);
        let certificate_value: BigRational =
            certificate_terms.iter().map(|&(e, c)| to_q(c) * power(e)).sum();
        samples.push(SpanSample {
            q: q.to_string(),
            q_root: root.as_ref().map_or_else(|| format!("{s}^(1/{d})"), ToString::to_string),
            root_constraint: apply(&root_row, coxeter).to_string(),
            constraint_rank,
            intersection_dimension: cusp_rank - constraint_rank,
            certificate_value: certificate_value.to_string(),
        });
    }
    let intersection_dimension = samples.iter().map(|s| s.intersection_dimension).max().unwrap_or(0);
    Ok(SpanReport {
        rank: n,
        d,
        characters: table.rows.clone(),
        a_plus_a,
        cuspidal_classes: cuspidal,
        cuspidal_dimension: cusp_rank,
        regular_class,
        degree_constraints: degree_rows.len(),
        degree_constraints_nonzero,
        certificate_terms,
        certificate_positive,
        samples,
        intersection_dimension,
    })
}

/// The default q samples 2, 3, 5, 7.
pub fn default_q_samples() -> Vec<BigRational> {
    [2, 3, 5, 7].into_iter().map(|q| BigRational::from_integer(BigInt::from(q))).collect()
}
