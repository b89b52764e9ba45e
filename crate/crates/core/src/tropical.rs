//! Min-plus evaluation at path coordinates and the piecewise-linear shape
//! formulas built from it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Signed;

use crate::crystals::TensorElement;
use crate::error::{Error, Result};
use crate::loopsym::{color, cylindric_loop_schur, LoopPolynomial, Monomial};
use crate::tableaux::{build_cylindric_shape, Letter, Partition, SkewShape};

/// Integer values for every `x_j^{(i)}`; `values[j - 1][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalAssignment {
    n: usize,
    values: Vec<Vec<i64>>,
}

impl TropicalAssignment {
    pub fn new(values: Vec<Vec<i64>>) -> Result<Self> {
        let n = values.first().map_or(0, Vec::len);
        if n == 0 || values.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidParameters("ragged or empty assignment".into()));
        }
        Ok(TropicalAssignment { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, beam: usize, color_index: i64) -> i64 {
        self.values[beam - 1][color(color_index, self.n)]
    }

    pub fn beam(&self, beam: usize) -> &[i64] {
        &self.values[beam - 1]
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    fn flat(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().flatten().copied()
    }
}

/// `x_j^{(i + j - 1)}` is the number of letters `i` in `b_{m + 1 - j}`.
pub fn path_coordinates(p: &TensorElement) -> Result<TropicalAssignment> {
    if !p.is_one_row() {
        return Err(Error::InvalidParameters("path coordinates need one-row factors".into()));
    }
    let n = p.n();
    let m = p.len();
    let mut values = vec![vec![0i64; n]; m];
    for (idx, word) in p.words().iter().enumerate() {
        let j = m - idx;
        for &letter in word {
            values[j - 1][color(letter as i64 + j as i64 - 1, n)] += 1;
        }
    }
    Ok(TropicalAssignment { n, values })
}

/// Inverse of [`path_coordinates`] for nonnegative assignments.
pub fn path_from_coordinates(a: &TropicalAssignment) -> Result<TensorElement> {
    let n = a.n;
    let m = a.m();
    let mut words = Vec::with_capacity(m);
    for idx in 0..m {
        let j = m - idx;
        let mut word = Vec::new();
        for letter in 1..=n {
            let count = a.get(j, letter as i64 + j as i64 - 1);
            if count < 0 {
                return Err(Error::InvalidParameters("negative letter count".into()));
            }
            word.extend(std::iter::repeat_n(letter as Letter, count as usize));
        }
        words.push(word);
    }
    TensorElement::from_words(&words, n)
}

fn support_value(mono: &[u16], a: &TropicalAssignment) -> i64 {
    mono.iter().zip(a.flat()).map(|(&e, v)| e as i64 * v).sum()
}

/// Replaces `+` by `min` and `×` by `+`; coefficients are dropped.
pub fn trop_eval(f: &LoopPolynomial, a: &TropicalAssignment) -> Result<i64> {
    if f.n() != a.n || f.m() != a.m() {
        return Err(Error::InvalidParameters("assignment does not match polynomial".into()));
    }
    if f.terms().any(|(_, c)| c.is_negative()) {
        return Err(Error::NotSubtractionFree);
    }
    f.terms()
        .map(|(mono, _)| support_value(mono, a))
        .min()
        .ok_or(Error::ZeroPolynomial)
}

fn trop_support(support: &[Monomial], a: &TropicalAssignment) -> Result<i64> {
    support
        .iter()
        .map(|mono| support_value(mono, a))
        .min()
        .ok_or(Error::ZeroPolynomial)
}

fn trop_kappa(r: i64, x: &[i64], y: &[i64]) -> i64 {
    let n = x.len() as i64;
    (0..n)
        .map(|s| {
            (1..=s).map(|t| y[color(r + t, x.len())]).sum::<i64>()
                + (s + 1..n).map(|t| x[color(r + t, x.len())]).sum::<i64>()
        })
        .min()
        .unwrap_or(0)
}

/// Tropical birational R-matrix on beams `j` and `j + 1`.
pub fn birational_r_trop(a: &TropicalAssignment, j: usize) -> Result<TropicalAssignment> {
    let m = a.m();
    if j == 0 || j >= m {
        return Err(Error::IndexOutOfRange { index: j, len: m });
    }
    let n = a.n;
    let x = &a.values[j - 1];
    let y = &a.values[j];
    let k: Vec<i64> = (0..n as i64).map(|r| trop_kappa(r, x, y)).collect();
    let kk = |i: i64| k[color(i, n)];
    let new_x = (0..n as i64)
        .map(|i| y[color(i + 1, n)] + kk(i + 1) - kk(i))
        .collect();
    let new_y = (0..n as i64)
        .map(|i| x[color(i - 1, n)] + kk(i - 1) - kk(i))
        .collect();
    let mut values = a.values.clone();
    values[j - 1] = new_x;
    values[j] = new_y;
    Ok(TropicalAssignment { n, values })
}

/// `λ(s,0) = (n-s)^m`, then repeatedly strip the largest ribbon of at most
/// `n` boxes containing the whole bottom row, down to `∅`.
pub fn lambda_shapes(s: usize, n: usize, m: usize) -> Result<Vec<Partition>> {
    if n < 2 || s == 0 || s >= n {
        return Err(Error::InvalidParameters(format!("need 1 <= s < n, got s={s}, n={n}")));
    }
    let mut shapes = vec![Partition::rectangle(m, n - s)];
    loop {
        let last = shapes.last().expect("nonempty");
        if last.is_empty() {
            return Ok(shapes);
        }
        let next = remove_bottom_ribbon(last, n)?;
        shapes.push(next);
    }
}

fn remove_bottom_ribbon(lambda: &Partition, n: usize) -> Result<Partition> {
    let parts = lambda.parts();
    let rows = parts.len();
    // rim cells, one per content, ordered from the bottom-left box
    let mut rim: Vec<(usize, usize)> = Vec::new();
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len {
            if lambda.part(i + 1) <= j + 1 {
                rim.push((i, j));
            }
        }
    }
    rim.sort_by_key(|&(i, j)| j as i64 - i as i64);
    let bottom = parts[rows - 1];
    for len in (bottom..=n.min(rim.len())).rev() {
        let mut remainder = parts.to_vec();
        for &(i, _) in &rim[..len] {
            remainder[i] -= 1;
        }
        let is_partition = remainder.windows(2).all(|w| w[0] >= w[1]);
        let removes_suffixes = rim[..len].iter().all(|&(i, j)| j >= remainder[i]);
        if is_partition && removes_suffixes && remainder[rows - 1] == 0 {
            return Ok(Partition::from_unsorted(remainder));
        }
    }
    Err(Error::RibbonRemovalFailure(parts.to_vec()))
}

type SupportKey = (usize, usize, usize);
type Supports = Arc<Vec<Vec<Monomial>>>;

fn shape_supports(s: usize, n: usize, m: usize) -> Result<Supports> {
    static CACHE: OnceLock<Mutex<HashMap<SupportKey, Supports>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&(s, n, m)) {
        return Ok(hit.clone());
    }
    let mut supports = Vec::new();
    for lambda in lambda_shapes(s, n, m)? {
        let d = build_cylindric_shape(SkewShape::straight(lambda), n, s)?;
        supports.push(cylindric_loop_schur(&d, 0, m).support());
    }
    let supports = Arc::new(supports);
    cache
        .lock()
        .expect("cache poisoned")
        .insert((s, n, m), supports.clone());
    Ok(supports)
}

fn partition_from_differences(diffs: Vec<i64>) -> Result<Partition> {
    let ok = diffs.iter().all(|&d| d >= 0) && diffs.windows(2).all(|w| w[0] >= w[1]);
    if !ok {
        return Err(Error::NotAPartition(diffs));
    }
    Ok(Partition::from_unsorted(
        diffs.into_iter().filter(|&d| d > 0).map(|d| d as usize).collect(),
    ))
}

/// Part `r` is `trop s^{(0)}_{D_s(λ(s,r-1))} - trop s^{(0)}_{D_s(λ(s,r))}`.
pub fn conjectured_shape(p: &TensorElement, s: usize) -> Result<Partition> {
    let a = path_coordinates(p)?;
    let supports = shape_supports(s, p.n(), p.len())?;
    let values = supports
        .iter()
        .map(|sup| trop_support(sup, &a))
        .collect::<Result<Vec<_>>>()?;
    partition_from_differences(values.windows(2).map(|w| w[0] - w[1]).collect())
}

/// `Θ_k^{(a)}`, the tropical `τ_k^{(a)}`, by dynamic programming over beams.
pub fn theta(k: i64, a_color: i64, x: &TropicalAssignment) -> Result<i64> {
    let n = x.n;
    let m = x.m();
    if k < 0 || k as usize > (n - 1) * m {
        return Err(Error::ZeroPolynomial);
    }
    let k = k as usize;
    let mut dp: Vec<Option<i64>> = vec![None; k + 1];
    dp[0] = Some(0);
    for beam in 1..=m {
        let mut next = vec![None; k + 1];
        for (t, cur) in dp.iter().enumerate() {
            let Some(cur) = *cur else { continue };
            let mut cost = cur;
            for c in 0..n.min(k - t + 1) {
                if c > 0 {
                    cost += x.get(beam, a_color - (t + c - 1) as i64);
                }
                let slot: &mut Option<i64> = &mut next[t + c];
                *slot = Some(slot.map_or(cost, |v: i64| v.min(cost)));
            }
        }
        dp = next;
    }
    dp[k].ok_or(Error::ZeroPolynomial)
}

/// `ν^{(1)}` from differences of `Θ^{(0)}`, indices clamped at zero.
pub fn first_shape_theorem(p: &TensorElement) -> Result<Partition> {
    let a = path_coordinates(p)?;
    let n = p.n() as i64;
    let top = (n - 1) * p.len() as i64;
    let count = soliton_count_bound(p.n(), p.len()) as i64;
    let values = (0..=count)
        .map(|r| theta((top - r * n).max(0), 0, &a))
        .collect::<Result<Vec<_>>>()?;
    partition_from_differences(values.windows(2).map(|w| w[0] - w[1]).collect())
}

/// `min_q (q ℓ + Θ^{(0)}_{max((n-1)m - qn, 0)})` for `0 ≤ q ≤ ⌈(n-1)m/n⌉`:
/// the terms of the full minimum over `i` sharing `⌈i/n⌉ = q`, keeping the
/// smallest index. The last group is needed when `n` does not divide
/// `(n-1)m`.
pub fn energy_formula_trop(p: &TensorElement, ell: usize) -> Result<i64> {
    let a = path_coordinates(p)?;
    let n = p.n() as i64;
    let top = (n - 1) * p.len() as i64;
    let groups = soliton_count_bound(p.n(), p.len()) as i64;
    (0..=groups)
        .map(|q| Ok(q * ell as i64 + theta((top - q * n).max(0), 0, &a)?))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().min().unwrap_or(0))
}

/// For convex `A_0 = 0, A_1, …, A_n`, returns the successive differences of
/// `A(x) = min_i ((n-i)x + A_i)` and the conjugate `(A_n - A_{n-1}, …, A_1)`.
pub fn partition_from_convex(a: &[i64]) -> Result<(Partition, Partition)> {
    if a.is_empty() || a[0] != 0 || a.iter().any(|&v| v < 0) {
        return Err(Error::InvalidParameters("need A_0 = 0 and A_i >= 0".into()));
    }
    for i in 1..a.len().saturating_sub(1) {
        if a[i - 1] + a[i + 1] < 2 * a[i] {
            return Err(Error::ConvexityViolation(i));
        }
    }
    let n = a.len() as i64 - 1;
    let eval = |x: i64| (0..=n).map(|i| (n - i) * x + a[i as usize]).min().unwrap_or(0);
    let a_n = a[n as usize];
    let delta: Vec<usize> = (0..a_n).map(|x| (eval(x + 1) - eval(x)) as usize).collect();
    let conj: Vec<usize> = (1..=n as usize).rev().map(|i| (a[i] - a[i - 1]) as usize).collect();
    Ok((Partition::from_unsorted(delta), Partition::from_unsorted(conj)))
}

/// `⌈(n-1)m/n⌉`.
pub fn soliton_count_bound(n: usize, m: usize) -> usize {
    ((n - 1) * m).div_ceil(n)
}
