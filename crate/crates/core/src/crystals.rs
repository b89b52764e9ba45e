//! Kirillov–Reshetikhin crystals `B^{r,s}` of type `A^{(1)}_{n-1}`, tensor
//! products, the combinatorial R-matrix and the energy function.
//!
//! Tensor products follow Kashiwara's convention: `f_a` acts on the left
//! factor of `b ⊗ b'` when `φ_a(b) > ε_a(b')`, and `e_a` acts on the left
//! factor when `φ_a(b) >= ε_a(b')`.

use std::fmt;

use crate::error::{Error, Result};
use crate::tableaux::{enumerate_ssyt, row_insert_word, Letter, Partition, SkewShape, Tableau};

/// Raising (`E`) or lowering (`F`) operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    E,
    F,
}

/// An element of `B^{r,s}`: an `r x s` semistandard tableau over `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KRElement {
    n: usize,
    r: usize,
    s: usize,
    tableau: Tableau,
}

fn check_params(r: usize, s: usize, n: usize) -> Result<()> {
    if n < 2 || r == 0 || r >= n || s == 0 {
        return Err(Error::InvalidParameters(format!(
            "B^{{{r},{s}}} needs 1 <= r <= n-1 and s >= 1 (n={n})"
        )));
    }
    Ok(())
}

impl KRElement {
    pub fn new(tableau: Tableau, n: usize) -> Result<Self> {
        if !tableau.inner().is_empty() {
            return Err(Error::InvalidTableau("skew tableau is not a KR element".into()));
        }
        let r = tableau.rows().len();
        let s = tableau.rows().first().map_or(0, Vec::len);
        check_params(r, s, n)?;
        if tableau.rows().iter().any(|row| row.len() != s) {
            return Err(Error::InvalidTableau(format!("{tableau} is not rectangular")));
        }
        if let Some(&x) = tableau.rows().iter().flatten().find(|&&x| x as usize > n) {
            return Err(Error::AlphabetError { letter: x, n: n as u32 });
        }
        Ok(KRElement { n, r, s, tableau })
    }

    pub fn from_rows(rows: Vec<Vec<Letter>>, n: usize) -> Result<Self> {
        Self::new(Tableau::from_rows(rows)?, n)
    }

    /// One-row element of `B^{1,s}`.
    pub fn one_row(word: &[Letter], n: usize) -> Result<Self> {
        if word.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing(word.to_vec()));
        }
        Self::from_rows(vec![word.to_vec()], n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        self.tableau.rows()
    }

    pub fn row_word(&self) -> Vec<Letter> {
        self.tableau.row_word()
    }

    /// Number of occurrences of each letter, index 0 unused.
    pub fn content(&self) -> Vec<usize> {
        self.tableau.content(self.n)
    }

    /// Every element of `B^{r,s}`, ordered by row word.
    pub fn all(r: usize, s: usize, n: usize) -> Result<Vec<KRElement>> {
        check_params(r, s, n)?;
        let shape = SkewShape::straight(Partition::rectangle(r, s));
        Ok(enumerate_ssyt(&shape, n as Letter)
            .into_iter()
            .map(|tableau| KRElement { n, r, s, tableau })
            .collect())
    }

    pub fn epsilon(&self, a: usize) -> usize {
        signature(&reading(std::slice::from_ref(self)), a).0
    }

    pub fn phi(&self, a: usize) -> usize {
        signature(&reading(std::slice::from_ref(self)), a).1
    }

    pub fn kashiwara(&self, op: Op, a: usize) -> Option<KRElement> {
        let mut f = vec![self.clone()];
        apply_kashiwara(&mut f, op, a)?;
        f.pop()
    }
}

impl fmt::Display for KRElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tableau)
    }
}

/// `b_1 ⊗ b_2 ⊗ … ⊗ b_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorElement {
    n: usize,
    factors: Vec<KRElement>,
}

impl TensorElement {
    pub fn new(factors: Vec<KRElement>, n: usize) -> Result<Self> {
        if let Some(b) = factors.iter().find(|b| b.n != n) {
            return Err(Error::InvalidParameters(format!(
                "factor {b} has alphabet {} but the tensor has {n}",
                b.n
            )));
        }
        if n < 2 {
            return Err(Error::InvalidParameters(format!("alphabet size {n} < 2")));
        }
        Ok(TensorElement { n, factors })
    }

    /// Tensor of one-row factors given by their words.
    pub fn from_words<W: AsRef<[Letter]>>(words: &[W], n: usize) -> Result<Self> {
        let factors = words
            .iter()
            .map(|w| KRElement::one_row(w.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[KRElement] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Whether every factor is a single row.
    pub fn is_one_row(&self) -> bool {
        self.factors.iter().all(|b| b.r == 1)
    }

    /// Widths `s_1, …, s_m`.
    pub fn widths(&self) -> Vec<usize> {
        self.factors.iter().map(KRElement::s).collect()
    }

    /// Words of one-row factors.
    pub fn words(&self) -> Vec<Vec<Letter>> {
        self.factors.iter().map(|b| b.row_word()).collect()
    }

    pub fn epsilon(&self, a: usize) -> usize {
        signature(&reading(&self.factors), a).0
    }

    pub fn phi(&self, a: usize) -> usize {
        signature(&reading(&self.factors), a).1
    }

    pub fn kashiwara(&self, op: Op, a: usize) -> Option<TensorElement> {
        let mut factors = self.factors.clone();
        apply_kashiwara(&mut factors, op, a)?;
        Some(TensorElement { n: self.n, factors })
    }

    /// Number of letters different from 1.
    pub fn ball_count(&self) -> usize {
        self.factors
            .iter()
            .flat_map(|b| b.rows().iter().flatten())
            .filter(|&&x| x != 1)
            .count()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊗ ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Positions `(factor, row, col)` of the letters in tensor reading order:
/// factors left to right, and within a tableau the reversed row word.
fn reading(factors: &[KRElement]) -> Vec<(usize, usize, usize, Letter)> {
    let mut out = Vec::new();
    for (k, b) in factors.iter().enumerate() {
        for (i, row) in b.rows().iter().enumerate() {
            for j in (0..row.len()).rev() {
                out.push((k, i, j, row[j]));
            }
        }
    }
    out
}

/// `(ε, φ, rightmost unbracketed -, leftmost unbracketed +)` for index `a`.
fn signature(
    letters: &[(usize, usize, usize, Letter)],
    a: usize,
) -> (usize, usize, Option<usize>, Option<usize>) {
    let a = a as Letter;
    let mut minus: Vec<usize> = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (idx, &(_, _, _, x)) in letters.iter().enumerate() {
        if x == a {
            plus.push(idx);
        } else if x == a + 1 {
            // a `+` to the left cancels against this `-`
            if plus.pop().is_none() {
                minus.push(idx);
            }
        }
    }
    (minus.len(), plus.len(), minus.last().copied(), plus.first().copied())
}

fn apply_kashiwara(factors: &mut [KRElement], op: Op, a: usize) -> Option<()> {
    let n = factors.first()?.n;
    if a == 0 || a >= n {
        return None;
    }
    let letters = reading(factors);
    let (_, _, minus, plus) = signature(&letters, a);
    let (idx, new) = match op {
        Op::E => (minus?, a as Letter),
        Op::F => (plus?, a as Letter + 1),
    };
    let (k, i, j, _) = letters[idx];
    let mut rows = factors[k].rows().to_vec();
    rows[i][j] = new;
    let t = Tableau::from_rows(rows).ok()?;
    factors[k] = KRElement::new(t, n).ok()?;
    Some(())
}

/// `u^{r,s}`: row `i` filled with the letter `i`.
pub fn highest_weight_element(r: usize, s: usize, n: usize) -> Result<KRElement> {
    check_params(r, s, n)?;
    let rows = (1..=r).map(|i| vec![i as Letter; s]).collect();
    KRElement::from_rows(rows, n)
}

pub fn kashiwara_kr(op: Op, a: usize, b: &KRElement) -> Option<KRElement> {
    b.kashiwara(op, a)
}

pub fn kashiwara_tensor(op: Op, a: usize, p: &TensorElement) -> Option<TensorElement> {
    p.kashiwara(op, a)
}

fn product_tableau(b: &KRElement, b2: &KRElement) -> Result<Tableau> {
    if b.n != b2.n {
        return Err(Error::InvalidParameters(format!(
            "alphabets differ: {} vs {}",
            b.n, b2.n
        )));
    }
    Ok(row_insert_word(&b2.tableau, &b.row_word()))
}

/// `R: b ⊗ b2 ↦ b̃2 ⊗ b̃` with `(b2 ← row(b)) = (b̃ ← row(b̃2))`.
pub fn combinatorial_r(b: &KRElement, b2: &KRElement) -> Result<(KRElement, KRElement)> {
    let p = product_tableau(b, b2)?;
    let (r, s, r2, s2) = (b.r, b.s, b2.r, b2.s);
    let mut extracted: Vec<Vec<Letter>> = Vec::with_capacity(r2);
    let found = peel_strips(p.clone(), r, s, s2, r2, &mut extracted, &mut |rest, rows| {
        // the last inserted row is the top row, so rows come out top first
        let cand = Tableau::from_rows(rows.to_vec()).ok()?;
        let tilde = Tableau::from_rows(rest.rows().to_vec()).ok()?;
        if row_insert_word(&tilde, &cand.row_word()) != p {
            return None;
        }
        Some((
            KRElement::new(cand, b.n).ok()?,
            KRElement::new(tilde, b.n).ok()?,
        ))
    });
    found.ok_or_else(|| {
        Error::InternalError(format!("no R-image found for {b} ⊗ {b2}"))
    })
}

/// Removes `remaining` horizontal strips of size `width` from `t` by reverse
/// bumping, keeping the `rows x cols` rectangle, and hands each complete
/// decomposition to `accept`.
type Accept<'a, T> = dyn FnMut(&Tableau, &[Vec<Letter>]) -> Option<T> + 'a;

fn peel_strips<T>(
    t: Tableau,
    rows: usize,
    cols: usize,
    width: usize,
    remaining: usize,
    extracted: &mut Vec<Vec<Letter>>,
    accept: &mut Accept<'_, T>,
) -> Option<T> {
    if remaining == 0 {
        let shape = t.straight_shape();
        if shape != Partition::rectangle(rows, cols) {
            return None;
        }
        return accept(&t, extracted);
    }
    let shape = t.straight_shape();
    let len = shape.len();
    // removable counts per row for a horizontal strip staying above the rectangle
    let caps: Vec<usize> = (0..len)
        .map(|i| {
            let floor = shape.part(i + 1).max(if i < rows { cols } else { 0 });
            shape.part(i).saturating_sub(floor)
        })
        .collect();
    let mut counts = vec![0usize; len];
    choose_counts(0, width, &caps, &mut counts, &mut |counts| {
        let mut u = t.clone();
        let mut word = Vec::with_capacity(width);
        // cells of the strip from right to left: lower rows hold the leftmost cells
        for (i, &c) in counts.iter().enumerate() {
            for _ in 0..c {
                word.push(u.reverse_bump(i));
            }
        }
        word.reverse();
        if word.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
        if let Some(prev) = extracted.last() {
            // this row sits below the one peeled before it
            if prev.iter().zip(&word).any(|(x, y)| x >= y) {
                return None;
            }
        }
        extracted.push(word);
        let res = peel_strips(u, rows, cols, width, remaining - 1, extracted, accept);
        extracted.pop();
        res
    })
}

fn choose_counts<T>(
    i: usize,
    left: usize,
    caps: &[usize],
    counts: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if i == caps.len() {
        return if left == 0 { visit(counts) } else { None };
    }
    let rest: usize = caps[i + 1..].iter().sum();
    let lo = left.saturating_sub(rest);
    for k in lo..=caps[i].min(left) {
        counts[i] = k;
        if let Some(x) = choose_counts(i + 1, left - k, caps, counts, visit) {
            return Some(x);
        }
    }
    counts[i] = 0;
    None
}

/// Boxes of `(b2 ← row(b))` outside the row-wise concatenation of the two
/// rectangles.
pub fn energy_h(b: &KRElement, b2: &KRElement) -> Result<usize> {
    let p = product_tableau(b, b2)?;
    let shape = p.straight_shape();
    let frame = Partition::rectangle(b.r, b.s).concatenate(&Partition::rectangle(b2.r, b2.s));
    Ok((0..shape.len())
        .map(|i| shape.part(i).saturating_sub(frame.part(i)))
        .sum())
}

/// Applies local R-matrices at the 1-based positions `swaps` in order;
/// position `k` exchanges factors `k` and `k+1`.
pub fn apply_r_permutation(p: &TensorElement, swaps: &[usize]) -> Result<TensorElement> {
    let mut factors = p.factors.clone();
    for &k in swaps {
        if k == 0 || k >= factors.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: factors.len(),
            });
        }
        let (x, y) = combinatorial_r(&factors[k - 1], &factors[k])?;
        factors[k - 1] = x;
        factors[k] = y;
    }
    Ok(TensorElement { n: p.n, factors })
}

/// Every tensor of `m` one-row factors with widths in `1..=width_cap`.
pub fn one_row_paths(n: usize, m: usize, width_cap: usize) -> Result<Vec<TensorElement>> {
    let mut by_width = Vec::with_capacity(width_cap);
    for s in 1..=width_cap {
        by_width.push(KRElement::all(1, s, n)?);
    }
    let choices: Vec<&KRElement> = by_width.iter().flatten().collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        let factors = idx.iter().map(|&i| choices[i].clone()).collect();
        out.push(TensorElement { n, factors });
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kr(rows: &[&[Letter]], n: usize) -> KRElement {
        KRElement::from_rows(rows.iter().map(|r| r.to_vec()).collect(), n).unwrap()
    }

    /// Exhaustive search over the codomain for the insertion characterization.
    fn brute_force_r(b: &KRElement, b2: &KRElement) -> Vec<(KRElement, KRElement)> {
        let p = product_tableau(b, b2).unwrap();
        let mut out = Vec::new();
        for x in KRElement::all(b2.r, b2.s, b.n).unwrap() {
            for y in KRElement::all(b.r, b.s, b.n).unwrap() {
                if row_insert_word(y.tableau(), &x.row_word()) == p {
                    out.push((x.clone(), y));
                }
            }
        }
        out
    }

    #[test]
    fn highest_weight_elements() {
        assert_eq!(highest_weight_element(2, 3, 4).unwrap(), kr(&[&[1, 1, 1], &[2, 2, 2]], 4));
        assert_eq!(highest_weight_element(1, 1, 2).unwrap(), kr(&[&[1]], 2));
        assert_eq!(
            highest_weight_element(3, 2, 4).unwrap(),
            kr(&[&[1, 1], &[2, 2], &[3, 3]], 4)
        );
        assert!(highest_weight_element(2, 1, 2).is_err());
    }

    #[test]
    fn kashiwara_examples() {
        let b = kr(&[&[1, 1, 2]], 3);
        assert_eq!(b.kashiwara(Op::F, 1), Some(kr(&[&[1, 2, 2]], 3)));
        let p = TensorElement::from_words(&[[1], [1]], 2).unwrap();
        assert_eq!(
            p.kashiwara(Op::F, 1),
            Some(TensorElement::from_words(&[[2], [1]], 2).unwrap())
        );
        assert_eq!(kr(&[&[1, 1]], 2).kashiwara(Op::E, 1), None);
        // a column [1;2] is killed by f_1
        assert_eq!(kr(&[&[1], &[2]], 3).kashiwara(Op::F, 1), None);
    }

    #[test]
    fn e_and_f_are_inverse() {
        for b in KRElement::all(2, 2, 4).unwrap() {
            for a in 1..4 {
                if let Some(c) = b.kashiwara(Op::F, a) {
                    assert_eq!(c.kashiwara(Op::E, a).as_ref(), Some(&b));
                    assert_eq!(c.phi(a) + 1, b.phi(a));
                }
                if let Some(c) = b.kashiwara(Op::E, a) {
                    assert_eq!(c.kashiwara(Op::F, a).as_ref(), Some(&b));
                }
            }
        }
    }

    #[test]
    fn r_golden_example() {
        let b = kr(&[&[2, 2], &[3, 4]], 5);
        let b2 = kr(&[&[1, 1, 3], &[2, 3, 4], &[4, 5, 5]], 5);
        let (x, y) = combinatorial_r(&b, &b2).unwrap();
        assert_eq!(x, kr(&[&[1, 2, 2], &[3, 3, 4], &[4, 4, 5]], 5));
        assert_eq!(y, kr(&[&[1, 3], &[2, 5]], 5));
        assert_eq!(energy_h(&b, &b2).unwrap(), 1);
    }

    #[test]
    fn r_small_cases() {
        let (x, y) = combinatorial_r(&kr(&[&[1, 1]], 2), &kr(&[&[2]], 2)).unwrap();
        assert_eq!((x, y), (kr(&[&[1]], 2), kr(&[&[1, 2]], 2)));
        let b = kr(&[&[1, 3]], 3);
        assert_eq!(combinatorial_r(&b, &b).unwrap(), (b.clone(), b));
    }

    #[test]
    fn energy_small_cases() {
        assert_eq!(energy_h(&kr(&[&[1, 1]], 2), &kr(&[&[1, 1]], 2)).unwrap(), 0);
        assert_eq!(energy_h(&kr(&[&[1]], 2), &kr(&[&[2]], 2)).unwrap(), 1);
    }

    #[test]
    fn r_matches_brute_force() {
        let shapes = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2)];
        for &(r, s) in &shapes {
            for &(r2, s2) in &shapes {
                for b in KRElement::all(r, s, 3).unwrap() {
                    for b2 in KRElement::all(r2, s2, 3).unwrap() {
                        let oracle = brute_force_r(&b, &b2);
                        assert_eq!(oracle.len(), 1, "{b} ⊗ {b2}");
                        assert_eq!(combinatorial_r(&b, &b2).unwrap(), oracle[0]);
                    }
                }
            }
        }
    }

    #[test]
    fn r_is_an_involution() {
        for b in KRElement::all(2, 1, 4).unwrap() {
            for b2 in KRElement::all(1, 3, 4).unwrap() {
                let (x, y) = combinatorial_r(&b, &b2).unwrap();
                assert_eq!(combinatorial_r(&x, &y).unwrap(), (b.clone(), b2.clone()));
            }
        }
    }

    #[test]
    fn swaps() {
        let p = TensorElement::from_words(&[vec![1, 1], vec![2]], 2).unwrap();
        assert_eq!(apply_r_permutation(&p, &[]).unwrap(), p);
        let q = apply_r_permutation(&p, &[1]).unwrap();
        assert_eq!(q, TensorElement::from_words(&[vec![1], vec![1, 2]], 2).unwrap());
        assert!(matches!(
            apply_r_permutation(&p, &[2]),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
    }
}
