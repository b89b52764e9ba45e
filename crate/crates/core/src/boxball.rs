//! Box-ball dynamics: the elementary moves `K_a`, the evolutions `T^{1,∞}`
//! and `T^{r,s}`, energies, and asymptotic soliton extraction.

use std::fmt;
use std::str::FromStr;

use crate::crystals::{combinatorial_r, energy_h, highest_weight_element, KRElement, TensorElement};
use crate::error::{Error, Result};
use crate::tableaux::Letter;

/// A row of boxes; letter 1 is an empty box and larger letters are balls.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxBallState {
    n: usize,
    cells: Vec<Letter>,
}

impl BoxBallState {
    pub fn new(cells: Vec<Letter>, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters(format!("alphabet size {n} < 2")));
        }
        if let Some(&x) = cells.iter().find(|&&x| x == 0 || x as usize > n) {
            return Err(Error::AlphabetError { letter: x, n: n as u32 });
        }
        Ok(BoxBallState { n, cells })
    }

    /// Parses a line such as `.332...42`, where `.` is an empty box.
    pub fn parse(line: &str, n: usize) -> Result<Self> {
        let cells = line
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '.' => Ok(1),
                _ => c.to_digit(10).ok_or_else(|| Error::ParseError {
                    position,
                    message: format!("unexpected character {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(cells, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Letter] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn ball_count(&self) -> usize {
        self.cells.iter().filter(|&&x| x != 1).count()
    }

    /// The state as a tensor of `B^{1,1}` factors.
    pub fn to_tensor(&self) -> TensorElement {
        let words: Vec<[Letter; 1]> = self.cells.iter().map(|&x| [x]).collect();
        TensorElement::from_words(&words, self.n).expect("cells are valid letters")
    }

    /// Text line with `.` for empty boxes.
    pub fn render(&self) -> String {
        render_letters(&self.cells)
    }

    /// Like [`render`](Self::render), padded with empty boxes to `width`.
    pub fn render_width(&self, width: usize) -> String {
        let mut s = self.render();
        let len = s.chars().count();
        if len < width {
            s.extend(std::iter::repeat_n('.', width - len));
        }
        s
    }

    /// Drops trailing empty boxes beyond `len`.
    fn trim_to(&mut self, len: usize) {
        while self.cells.len() > len && self.cells.last() == Some(&1) {
            self.cells.pop();
        }
    }
}

impl fmt::Display for BoxBallState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for BoxBallState {
    type Err = Error;

    /// Parses a line, taking the alphabet to be the largest letter present (at least 2).
    fn from_str(s: &str) -> Result<Self> {
        let max = s.chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(2);
        Self::parse(s, max.max(2) as usize)
    }
}

pub fn render_letters(cells: &[Letter]) -> String {
    cells
        .iter()
        .map(|&x| match x {
            1 => ".".to_string(),
            2..=9 => x.to_string(),
            _ => format!("({x})"),
        })
        .collect()
}

/// `K_a`: moves every ball `a` once, leftmost unmoved ball first, each to the
/// nearest empty box on its right. The tail grows as needed.
pub fn ball_move_k(state: &BoxBallState, a: Letter) -> BoxBallState {
    let original_len = state.cells.len();
    let mut cells = state.cells.clone();
    let mut moved = vec![false; cells.len()];
    while let Some(i) = (0..cells.len()).find(|&i| cells[i] == a && !moved[i]) {
        let j = match (i + 1..cells.len()).find(|&j| cells[j] == 1) {
            Some(j) => j,
            None => {
                cells.push(1);
                moved.push(false);
                cells.len() - 1
            }
        };
        cells[i] = 1;
        cells[j] = a;
        moved[j] = true;
    }
    let mut out = BoxBallState { n: state.n, cells };
    out.trim_to(original_len);
    out
}

/// `T^{1,∞} = K_2 K_3 ⋯ K_n`, so `K_n` acts first.
pub fn evolve_t1inf(state: &BoxBallState) -> BoxBallState {
    let mut s = state.clone();
    for a in (2..=state.n as Letter).rev() {
        s = ball_move_k(&s, a);
    }
    s
}

/// Carriers `u^{(1)}, …, u^{(m+1)}` of one `T^{r,s}` sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarrierRecord {
    pub carriers: Vec<KRElement>,
}

impl CarrierRecord {
    pub fn last(&self) -> &KRElement {
        self.carriers.last().expect("a sweep has at least one carrier")
    }
}

/// One left-to-right carrier sweep `u^{(k)} ⊗ b_k ↦ b'_k ⊗ u^{(k+1)}`
/// starting from `u^{r,s}`.
pub fn evolve_trs(p: &TensorElement, r: usize, s: usize) -> Result<(TensorElement, CarrierRecord)> {
    let mut u = highest_weight_element(r, s, p.n())?;
    let mut carriers = Vec::with_capacity(p.len() + 1);
    let mut out = Vec::with_capacity(p.len());
    carriers.push(u.clone());
    for b in p.factors() {
        let (b2, next) = combinatorial_r(&u, b)?;
        out.push(b2);
        u = next;
        carriers.push(u.clone());
    }
    Ok((TensorElement::new(out, p.n())?, CarrierRecord { carriers }))
}

/// `E^{r,s}(p) = Σ_k H(u^{(k)} ⊗ b_k)`.
pub fn energy_ers(p: &TensorElement, r: usize, s: usize) -> Result<usize> {
    let (_, record) = evolve_trs(p, r, s)?;
    p.factors()
        .iter()
        .zip(&record.carriers)
        .map(|(b, u)| energy_h(u, b))
        .sum()
}

/// Appends `count` factors `[1]`.
pub fn pad_path(p: &TensorElement, count: usize) -> TensorElement {
    let mut factors = p.factors().to_vec();
    let one = KRElement::one_row(&[1], p.n()).expect("[1] is a valid element");
    factors.extend(std::iter::repeat_n(one, count));
    TensorElement::new(factors, p.n()).expect("same alphabet")
}

/// Solitons of a flattened path: maximal weakly decreasing runs of balls,
/// split at empty boxes and at ascents, with their start positions.
fn solitons(letters: &[Letter]) -> Vec<(usize, Vec<Letter>)> {
    let mut out: Vec<(usize, Vec<Letter>)> = Vec::new();
    let mut current: Option<(usize, Vec<Letter>)> = None;
    for (i, &x) in letters.iter().enumerate() {
        let ascent = current
            .as_ref()
            .is_some_and(|(_, w)| w.last().is_some_and(|&last| last < x));
        if x == 1 || ascent {
            out.extend(current.take());
        }
        if x != 1 {
            current.get_or_insert_with(|| (i, Vec::new())).1.push(x);
        }
    }
    out.extend(current);
    out
}

/// Whether `next` is `prev` with every soliton moved right by its length,
/// and lengths weakly increase to the right.
fn is_asymptotic(prev: &[(usize, Vec<Letter>)], next: &[(usize, Vec<Letter>)]) -> bool {
    prev.len() == next.len()
        && prev
            .iter()
            .zip(next)
            .all(|((p0, w0), (p1, w1))| w0 == w1 && *p1 == p0 + w0.len())
        && next.windows(2).all(|pair| pair[0].1.len() <= pair[1].1.len())
}

/// Evolves by `T^{1,ℓ}` (ℓ = ball count) until the balls have left the
/// original path and every soliton moves freely at speed equal to its
/// length; returns the solitons from left to right.
pub fn asymptotic_solitons(p: &TensorElement) -> Result<Vec<Vec<Letter>>> {
    let balls = p.ball_count();
    if balls == 0 {
        return Ok(Vec::new());
    }
    let m = p.len();
    let letters_total: usize = p.widths().iter().sum();
    let bound = (letters_total + balls) * balls + 2;
    let mut path = pad_path(p, balls);
    let mut prev: Option<Vec<(usize, Vec<Letter>)>> = None;
    for _ in 0..=bound {
        // keep at least `balls` empty factors after the last ball
        let words = path.words();
        let last_ball = words.iter().rposition(|w| w.iter().any(|&x| x != 1)).unwrap_or(0);
        let spare = words.len() - 1 - last_ball;
        if spare < balls {
            path = pad_path(&path, balls - spare);
        }
        let words = path.words();
        let in_tail = words[..m].iter().flatten().all(|&x| x == 1);
        let current = in_tail.then(|| {
            let flat: Vec<Letter> = words.iter().flatten().copied().collect();
            solitons(&flat)
        });
        if let (Some(before), Some(now)) = (&prev, &current) {
            if is_asymptotic(before, now) {
                return Ok(now.iter().map(|(_, w)| w.clone()).collect());
            }
        }
        prev = current;
        path = evolve_trs(&path, 1, balls)?.0;
    }
    Err(Error::NonConvergence(bound))
}
