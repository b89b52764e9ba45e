//! Exact sparse polynomials in colored variables `x_j^{(i)}` (beam `j` in
//! `1..=m`, color `i` modulo `n`), loop symmetric functions and the
//! birational R-matrix over exact rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tableaux::{
    build_cylindric_shape, enumerate_cylindric_ssyt, enumerate_ssyt, CylindricShape, Letter,
    SkewShape, Tableau,
};

mod network;

pub use network::{network_sources_sinks, noncrossing_generating_function};

/// Reduces a color into `0..n`.
pub fn color(i: i64, n: usize) -> usize {
    i.rem_euclid(n as i64) as usize
}

/// The variable `x_beam^{(color)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredVariable {
    pub beam: usize,
    pub color: usize,
}

/// Exponent vector indexed by `(beam - 1) * n + color`.
pub type Monomial = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopPolynomial {
    n: usize,
    m: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LoopPolynomial {
    pub fn zero(n: usize, m: usize) -> Self {
        LoopPolynomial {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, m: usize) -> Self {
        let mut p = Self::zero(n, m);
        p.terms.insert(vec![0; n * m], BigInt::one());
        p
    }

    /// The variable `x_beam^{(color)}`; the color is reduced modulo `n`.
    pub fn var(beam: usize, color_index: i64, n: usize, m: usize) -> Self {
        let mut p = Self::zero(n, m);
        let mut mono = vec![0; n * m];
        mono[(beam - 1) * n + color(color_index, n)] = 1;
        p.terms.insert(mono, BigInt::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The monomials with nonzero coefficient, in monomial order.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().cloned().collect()
    }

    pub fn coefficient(&self, mono: &[u16]) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigInt) {
        debug_assert_eq!(mono.len(), self.n * self.m);
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.n == other.n && self.m == other.m,
            "polynomials over different variable sets"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = Self::zero(self.n, self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mono: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(mono, ca * cb);
            }
        }
        out
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_monomial_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn evaluate(&self, point: &RationalPoint) -> BigRational {
        assert!(point.n == self.n && point.m == self.m, "point has the wrong shape");
        let flat: Vec<&BigRational> = point.values.iter().flatten().collect();
        let mut total = BigRational::zero();
        for (mono, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (idx, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    v *= flat[idx];
                }
            }
            total += v;
        }
        total
    }

    /// Variables of a monomial with multiplicity, in monomial order.
    pub fn variables(&self, mono: &[u16]) -> Vec<ColoredVariable> {
        let mut out = Vec::new();
        for (idx, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                out.push(ColoredVariable {
                    beam: idx / self.n + 1,
                    color: idx % self.n,
                });
            }
        }
        out
    }

    /// One term per line, `c * x[j]^(i) * …`, lexicographically largest
    /// exponent vector first.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut lines = Vec::with_capacity(self.terms.len());
        for (mono, c) in self.terms.iter().rev() {
            let mut line = c.to_string();
            for v in self.variables(mono) {
                line.push_str(&format!(" * x[{}]^({})", v.beam, v.color));
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

impl fmt::Display for LoopPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

/// Positive rational values for every `x_j^{(i)}`; `values[j - 1][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    n: usize,
    m: usize,
    values: Vec<Vec<BigRational>>,
}

impl RationalPoint {
    pub fn new(values: Vec<Vec<BigRational>>) -> Result<Self> {
        let m = values.len();
        let n = values.first().map_or(0, Vec::len);
        if n == 0 || values.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidParameters("ragged or empty point".into()));
        }
        if values.iter().flatten().any(|v| !v.is_positive()) {
            return Err(Error::InvalidParameters("point values must be positive".into()));
        }
        Ok(RationalPoint { n, m, values })
    }

    pub fn from_integers(values: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|v| v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Integer values drawn uniformly from `1..=10^6`.
    pub fn random<R: Rng>(n: usize, m: usize, rng: &mut R) -> Self {
        let values = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| BigRational::from_integer(rng.gen_range(1..=1_000_000i64).into()))
                    .collect()
            })
            .collect();
        RationalPoint { n, m, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `x_beam^{(color)}`.
    pub fn get(&self, beam: usize, color_index: i64) -> &BigRational {
        &self.values[beam - 1][color(color_index, self.n)]
    }

    pub fn beam(&self, beam: usize) -> &[BigRational] {
        &self.values[beam - 1]
    }
}

/// `κ_r(x, y) = Σ_{s=0}^{n-1} Π_{t=1}^{s} y^{(r+t)} Π_{t=s+1}^{n-1} x^{(r+t)}`,
/// with `x`, `y` indexed by color.
pub fn kappa(r: i64, x: &[BigRational], y: &[BigRational]) -> BigRational {
    let n = x.len();
    let mut total = BigRational::zero();
    for s in 0..n as i64 {
        let mut term = BigRational::one();
        for t in 1..=s {
            term *= &y[color(r + t, n)];
        }
        for t in s + 1..n as i64 {
            term *= &x[color(r + t, n)];
        }
        total += term;
    }
    total
}

/// `κ_r` as a polynomial with `x` on beam 1 and `y` on beam 2.
pub fn kappa_poly(r: i64, n: usize) -> LoopPolynomial {
    let mut out = LoopPolynomial::zero(n, 2);
    for s in 0..n as i64 {
        let mut term = LoopPolynomial::one(n, 2);
        for t in 1..=s {
            term = term.mul(&LoopPolynomial::var(2, r + t, n, 2));
        }
        for t in s + 1..n as i64 {
            term = term.mul(&LoopPolynomial::var(1, r + t, n, 2));
        }
        out = out.add(&term);
    }
    out
}

/// Applies the birational R-matrix to beams `j` and `j + 1`.
pub fn birational_r_point(p: &RationalPoint, j: usize) -> Result<RationalPoint> {
    if j == 0 || j >= p.m {
        return Err(Error::IndexOutOfRange { index: j, len: p.m });
    }
    let n = p.n;
    let x = &p.values[j - 1];
    let y = &p.values[j];
    let kappas: Vec<BigRational> = (0..n as i64).map(|r| kappa(r, x, y)).collect();
    let k = |i: i64| &kappas[color(i, n)];
    let new_x = (0..n as i64)
        .map(|i| &y[color(i + 1, n)] * k(i + 1) / k(i))
        .collect();
    let new_y = (0..n as i64)
        .map(|i| &x[color(i - 1, n)] * k(i - 1) / k(i))
        .collect();
    let mut values = p.values.clone();
    values[j - 1] = new_x;
    values[j] = new_y;
    Ok(RationalPoint { n, m: p.m, values })
}

/// `e_k^{(r)} = Σ_{i_1 < … < i_k} x_{i_1}^{(r)} x_{i_2}^{(r+1)} ⋯ x_{i_k}^{(r+k-1)}`.
pub fn elementary_e(k: i64, r: i64, m: usize, n: usize) -> LoopPolynomial {
    let mut out = LoopPolynomial::zero(n, m);
    if k < 0 || k as usize > m {
        return out;
    }
    let k = k as usize;
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        let mut mono = vec![0u16; n * m];
        for (t, &beam) in idx.iter().enumerate() {
            mono[(beam - 1) * n + color(r + t as i64, n)] += 1;
        }
        out.add_term(mono, BigInt::one());
        // next k-subset in lexicographic order
        let mut t = k;
        loop {
            if t == 0 {
                return out;
            }
            t -= 1;
            if idx[t] < m - (k - 1 - t) {
                idx[t] += 1;
                for u in t + 1..k {
                    idx[u] = idx[u - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Monomial `Π_s x_{T(s)}^{(c(s) + r)}` of a (base) filling.
fn tableau_monomial(t: &Tableau, r: i64, m: usize, n: usize) -> Monomial {
    let mut mono = vec![0u16; n * m];
    for (i, row) in t.rows().iter().enumerate() {
        let offset = t.inner().part(i);
        for (k, &x) in row.iter().enumerate() {
            let (row_idx, col_idx) = (i as i64 + 1, (offset + k) as i64 + 1);
            mono[(x as usize - 1) * n + color(row_idx - col_idx + r, n)] += 1;
        }
    }
    mono
}

fn sum_of_fillings(fillings: &[Tableau], r: i64, m: usize, n: usize) -> LoopPolynomial {
    let mut out = LoopPolynomial::zero(n, m);
    for t in fillings {
        out.add_term(tableau_monomial(t, r, m, n), BigInt::one());
    }
    out
}

/// Loop skew Schur function `s^{(r)}_{λ/μ}` in `m` beams.
pub fn loop_schur(shape: &SkewShape, r: i64, m: usize, n: usize) -> LoopPolynomial {
    sum_of_fillings(&enumerate_ssyt(shape, m as Letter), r, m, n)
}

/// Cylindric loop Schur function `s^{(r)}_D` in `m` beams.
pub fn cylindric_loop_schur(d: &CylindricShape, r: i64, m: usize) -> LoopPolynomial {
    sum_of_fillings(&enumerate_cylindric_ssyt(d, m as Letter), r, m, d.n())
}

/// `s^{(r)}_{D_s(λ/μ)}` from the base shape.
pub fn cylindric_loop_schur_of(
    base: SkewShape,
    s: usize,
    r: i64,
    m: usize,
    n: usize,
) -> Result<LoopPolynomial> {
    let d = build_cylindric_shape(base, n, s)?;
    Ok(cylindric_loop_schur(&d, r, m))
}

/// Calls `visit` with every multiplicity vector over `m` beams with entries
/// below `n` summing to `k`.
pub(crate) fn for_each_bounded_multiset(m: usize, n: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(i: usize, left: usize, n: usize, counts: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if i == counts.len() {
            if left == 0 {
                visit(counts);
            }
            return;
        }
        let room = (counts.len() - i - 1) * (n - 1);
        let lo = left.saturating_sub(room);
        for c in lo..=left.min(n - 1) {
            counts[i] = c;
            rec(i + 1, left - c, n, counts, visit);
        }
        counts[i] = 0;
    }
    let mut counts = vec![0; m];
    rec(0, k, n, &mut counts, visit);
}

/// `τ_k^{(a)}`: multisets `γ_1 ≤ … ≤ γ_k` of beams, each used at most
/// `n - 1` times, weighted by `x_{γ_1}^{(a)} x_{γ_2}^{(a-1)} ⋯`.
pub fn tau_poly(k: i64, a: i64, m: usize, n: usize) -> LoopPolynomial {
    let mut out = LoopPolynomial::zero(n, m);
    if k < 0 || k as usize > (n - 1) * m {
        return out;
    }
    for_each_bounded_multiset(m, n, k as usize, &mut |counts| {
        let mut mono = vec![0u16; n * m];
        let mut t = 0i64;
        for (beam, &c) in counts.iter().enumerate() {
            for _ in 0..c {
                mono[beam * n + color(a - t, n)] += 1;
                t += 1;
            }
        }
        out.add_term(mono, BigInt::one());
    });
    out
}

/// Tests `f(p) = f(R_j p)` for every `j` at `trials` random points.
pub fn invariance_check(f: &LoopPolynomial, trials: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let p = RationalPoint::random(f.n, f.m, &mut rng);
        let base = f.evaluate(&p);
        for j in 1..f.m {
            let q = birational_r_point(&p, j).expect("j is in range");
            if f.evaluate(&q) != base {
                return false;
            }
        }
    }
    true
}

/// Whether `(τ_N)^2 - τ_{N-n} τ_{N+n}` (color 0) has no negative coefficient.
pub fn cell_transfer_positivity(n: usize, m: usize, big_n: i64) -> bool {
    let t = tau_poly(big_n, 0, m, n);
    let lo = tau_poly(big_n - n as i64, 0, m, n);
    let hi = tau_poly(big_n + n as i64, 0, m, n);
    t.mul(&t).sub(&lo.mul(&hi)).is_monomial_positive()
}
