//! Dense integer polynomials and the ring ℤ[θ] with θ = 2cos(π/m).
//!
//! Polynomials are coefficient vectors, lowest degree first, with no
//! trailing zeros (the zero polynomial is the empty vector).

pub type IntPoly = Vec<i64>;

pub fn trim(p: &mut IntPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn poly_add(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(&mut out);
    out
}

pub fn poly_sub(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Division by a monic polynomial: returns `(quotient, remainder)`.
pub fn poly_divrem_monic(a: &[i64], b: &[i64]) -> (IntPoly, IntPoly) {
    assert_eq!(b.last(), Some(&1), "divisor must be monic");
    let mut r: IntPoly = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let mut q = vec![0i64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db];
        if c == 0 {
            continue;
        }
        q[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] -= c * bj;
        }
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

/// The cyclotomic polynomial Φ_n.
pub fn cyclotomic(n: u32) -> IntPoly {
    assert!(n >= 1);
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly_divrem_monic(&p, &cyclotomic(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

/// Dickson polynomials D_k with D_k(z + 1/z) = z^k + z^{-k}.
fn dickson(k: usize) -> IntPoly {
    let mut prev = vec![2i64];
    let mut cur = vec![0i64, 1];
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let shifted: IntPoly = std::iter::once(0).chain(cur.iter().copied()).collect();
        let next = poly_sub(&shifted, &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// ℤ[2cos(π/m)], elements stored as coefficient vectors of length `degree()`
/// in the power basis of θ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealCyclotomic {
    m: u32,
    minpoly: IntPoly,
}

impl RealCyclotomic {
    pub fn new(m: u32) -> Self {
        assert!(m >= 2);
        let phi = cyclotomic(2 * m);
        let e = (phi.len() - 1) / 2;
        let mut psi = vec![phi[e]];
        for k in 1..=e {
            let term: IntPoly = dickson(k).iter().map(|c| c * phi[e + k]).collect();
            psi = poly_add(&psi, &term);
        }
        Self { m, minpoly: psi }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Monic minimal polynomial of θ.
    pub fn minpoly(&self) -> &[i64] {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    fn reduce(&self, p: &[i64]) -> Vec<i64> {
        let (_, mut r) = poly_divrem_monic(p, &self.minpoly);
        r.resize(self.degree(), 0);
        r
    }

    pub fn from_int(&self, c: i64) -> Vec<i64> {
        self.reduce(&[c])
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.degree()]
    }

    /// 2cos(jπ/m).
    pub fn two_cos(&self, j: usize) -> Vec<i64> {
        self.reduce(&dickson(j))
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.reduce(&poly_mul(a, b))
    }

    pub fn is_zero(a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// Rational part, if the element lies in ℤ.
    pub fn as_int(a: &[i64]) -> Option<i64> {
        if a[1..].iter().all(|&x| x == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    /// Exact division by a nonzero integer; `None` if not divisible.
    pub fn div_int(a: &[i64], k: i64) -> Option<Vec<i64>> {
        a.iter().map(|&x| (x % k == 0).then_some(x / k)).collect()
    }
}

/// Polynomials over ℤ[θ], coefficient `i` multiplies x^i.
pub type RingPoly = Vec<Vec<i64>>;

/// Characteristic polynomial det(xI − M) by Faddeev–LeVerrier.
/// All intermediate divisions are exact because the coefficients are integral.
pub fn char_poly(ring: &RealCyclotomic, m: &[Vec<Vec<i64>>]) -> RingPoly {
    let n = m.len();
    let matmul = |a: &[Vec<Vec<i64>>], b: &[Vec<Vec<i64>>]| -> Vec<Vec<Vec<i64>>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(ring.zero(), |acc, k| {
                            ring.add(&acc, &ring.mul(&a[i][k], &b[k][j]))
                        })
                    })
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![ring.zero(); n + 1];
    coeffs[n] = ring.from_int(1);
    let mut acc: Vec<Vec<Vec<i64>>> = vec![vec![ring.zero(); n]; n];
    for k in 1..=n {
        let mut next = matmul(m, &acc);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = ring.add(&row[i], &coeffs[n - k + 1]);
        }
        acc = next;
        let am = matmul(m, &acc);
        let trace = (0..n).fold(ring.zero(), |t, i| ring.add(&t, &am[i][i]));
        coeffs[n - k] = RealCyclotomic::div_int(&ring.neg(&trace), k as i64)
            .expect("Faddeev-LeVerrier division is exact for integral matrices");
    }
    coeffs
}

/// Quotient and remainder of `a` by a monic `b` over ℤ[θ].
pub fn ring_poly_divrem(ring: &RealCyclotomic, a: &RingPoly, b: &RingPoly) -> (RingPoly, RingPoly) {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![ring.zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        if RealCyclotomic::is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = ring.sub(&r[k + j], &ring.mul(&c, bj));
        }
        q[k] = c;
    }
    while r.last().is_some_and(|c| RealCyclotomic::is_zero(c)) {
        r.pop();
    }
    (q, r)
}
