//! Partitions, skew and cylindric shapes, semistandard tableaux and
//! Schensted row insertion.
//!
//! Boxes are addressed as `(row, col)` with both indices starting at 1, rows
//! counted from the top and columns from the left. The content of a box is
//! `row - col`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub type Letter = u32;

/// A partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// `true` when every part of `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Number of boxes in the first `k` columns.
    pub fn boxes_in_first_columns(&self, k: usize) -> usize {
        self.0.iter().map(|&p| p.min(k)).sum()
    }

    /// Componentwise sum of parts.
    pub fn concatenate(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidTableau(format!(
                "inner shape {inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size());
        for i in 0..self.outer.len() {
            for j in self.inner.part(i)..self.outer.part(i) {
                cells.push((i + 1, j + 1));
            }
        }
        cells
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col > self.inner.part(row - 1) && col <= self.outer.part(row - 1)
    }

    /// Number of boxes in each column `1..=outer[0]`.
    pub fn column_lengths(&self) -> Vec<usize> {
        let outer = self.outer.conjugate();
        let inner = self.inner.conjugate();
        (0..self.outer.part(0))
            .map(|j| outer.part(j) - inner.part(j))
            .collect()
    }
}

/// A (possibly skew) tableau. Row `i` holds the entries of columns
/// `inner[i] + 1 ..= inner[i] + rows[i].len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    inner: Partition,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau {
            inner: Partition::empty(),
            rows: Vec::new(),
        }
    }

    /// A straight-shape tableau; validated as semistandard.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Self> {
        Self::skew_from_rows(Partition::empty(), rows)
    }

    pub fn skew_from_rows(inner: Partition, mut rows: Vec<Vec<Letter>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) && rows.len() > inner.len() {
            rows.pop();
        }
        let t = Tableau { inner, rows };
        t.shape()?;
        if !t.is_semistandard() {
            return Err(Error::InvalidTableau(format!("{:?} is not semistandard", t.rows)));
        }
        Ok(t)
    }

    /// A single-row tableau; the word must be weakly increasing.
    pub fn single_row(word: &[Letter]) -> Result<Self> {
        if word.is_empty() {
            return Ok(Tableau::empty());
        }
        Self::from_rows(vec![word.to_vec()])
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Result<SkewShape> {
        let outer: Vec<usize> = (0..self.rows.len().max(self.inner.len()))
            .map(|i| self.inner.part(i) + self.rows.get(i).map_or(0, Vec::len))
            .collect();
        SkewShape::new(Partition::new(outer)?, self.inner.clone())
    }

    /// Outer shape of a straight tableau.
    pub fn straight_shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    /// Entry at `(row, col)`, both 1-based.
    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        let offset = self.inner.part(row.checked_sub(1)?);
        if col <= offset {
            return None;
        }
        self.rows.get(row - 1)?.get(col - offset - 1).copied()
    }

    pub fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i == 0 {
                continue;
            }
            let offset = self.inner.part(i);
            for (k, &x) in row.iter().enumerate() {
                if let Some(above) = self.get(i, offset + k + 1) {
                    if above >= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Letter multiplicities, indexed by letter (index 0 unused).
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n + 1];
        for &x in self.rows.iter().flatten() {
            if (x as usize) < c.len() {
                c[x as usize] += 1;
            } else {
                c.resize(x as usize + 1, 0);
                c[x as usize] += 1;
            }
        }
        c
    }

    /// Rows concatenated from the bottom row to the top row.
    pub fn row_word(&self) -> Vec<Letter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Schensted row insertion of one letter into a straight tableau.
    /// Returns the row index (0-based) where a new box was created.
    pub fn insert(&mut self, letter: Letter) -> usize {
        debug_assert!(self.inner.is_empty());
        let mut x = letter;
        for (i, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&y| y > x) {
                Some(pos) => x = std::mem::replace(&mut row[pos], x),
                None => {
                    row.push(x);
                    return i;
                }
            }
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }

    /// Reverse bump from the last box of row `row` (0-based); returns the
    /// letter ejected from the first row.
    pub(crate) fn reverse_bump(&mut self, row: usize) -> Letter {
        let mut x = self.rows[row].pop().expect("reverse bump from an empty row");
        if self.rows[row].is_empty() && row + 1 == self.rows.len() {
            self.rows.pop();
        }
        for i in (0..row).rev() {
            let r = &mut self.rows[i];
            let pos = r
                .iter()
                .rposition(|&y| y < x)
                .expect("reverse bump requires a smaller entry in the row above");
            x = std::mem::replace(&mut r[pos], x);
        }
        x
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for _ in 0..self.inner.part(i) {
                write!(f, ".")?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// `(T <- w)`: inserts the letters of `word` from left to right.
pub fn row_insert_word(tableau: &Tableau, word: &[Letter]) -> Tableau {
    let mut t = tableau.clone();
    for &x in word {
        t.insert(x);
    }
    t
}

pub fn row_word(tableau: &Tableau) -> Vec<Letter> {
    tableau.row_word()
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// Every semistandard filling of `shape` with entries in `1..=max_entry`,
/// ordered lexicographically by row word.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: Letter) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut filling = vec![0 as Letter; cells.len()];
    let index_of = |row: usize, col: usize| cells.iter().position(|&c| c == (row, col));
    let left: Vec<Option<usize>> = cells.iter().map(|&(i, j)| index_of(i, j.wrapping_sub(1))).collect();
    let above: Vec<Option<usize>> = cells.iter().map(|&(i, j)| index_of(i.wrapping_sub(1), j)).collect();

    let mut out = Vec::new();
    fill_cells(0, &left, &above, max_entry, &mut filling, &mut |f| {
        out.push(build_tableau(shape, f));
    });
    out.sort_by_cached_key(|t| t.row_word());
    out
}

fn fill_cells(
    k: usize,
    left: &[Option<usize>],
    above: &[Option<usize>],
    max_entry: Letter,
    filling: &mut [Letter],
    emit: &mut dyn FnMut(&[Letter]),
) {
    if k == filling.len() {
        emit(filling);
        return;
    }
    let lo_left = left[k].map_or(1, |i| filling[i]);
    let lo_above = above[k].map_or(1, |i| filling[i] + 1);
    for x in lo_left.max(lo_above)..=max_entry {
        filling[k] = x;
        fill_cells(k + 1, left, above, max_entry, filling, emit);
    }
}

fn build_tableau(shape: &SkewShape, filling: &[Letter]) -> Tableau {
    let mut rows = Vec::with_capacity(shape.outer().len());
    let mut k = 0;
    for i in 0..shape.outer().len() {
        let len = shape.outer().part(i) - shape.inner().part(i);
        rows.push(filling[k..k + len].to_vec());
        k += len;
    }
    Tableau {
        inner: shape.inner().clone(),
        rows,
    }
}

/// A skew shape propagated periodically by the shift `(n - s, s)`: each copy
/// sits `s` rows higher and `n - s` columns further right. The base shape is
/// the fundamental domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylindricShape {
    base: SkewShape,
    n: usize,
    s: usize,
    /// `(cell, neighbour, strict)`: constraints between base cells that only
    /// appear through a shifted copy. `strict` marks a column relation.
    wrap: Vec<(usize, usize, bool)>,
}

impl CylindricShape {
    pub fn base(&self) -> &SkewShape {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Cells of the fundamental domain.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.base.cells()
    }

    /// Whether a filling of the base cells (row-major order) satisfies the
    /// relations that cross between copies.
    pub fn satisfies_wrap(&self, filling: &[Letter]) -> bool {
        self.wrap.iter().all(|&(a, b, strict)| {
            if strict {
                filling[a] < filling[b]
            } else {
                filling[a] <= filling[b]
            }
        })
    }

    /// Number of wrap relations; zero when the shape behaves like its base.
    pub fn wrap_relations(&self) -> usize {
        self.wrap.len()
    }
}

/// Locates `(row, col)` (signed) in the periodic set: returns the base cell
/// index and the copy number.
fn locate(
    base_cells: &[(usize, usize)],
    lookup: &HashSet<(i64, i64)>,
    n: usize,
    s: usize,
    row: i64,
    col: i64,
    span: i64,
) -> Option<(usize, i64)> {
    let (ds, dc) = (s as i64, (n - s) as i64);
    for k in -span..=span {
        // copy k moves a base cell by (-k s, +k (n-s))
        let (r0, c0) = (row + k * ds, col - k * dc);
        if lookup.contains(&(r0, c0)) {
            let idx = base_cells
                .iter()
                .position(|&(i, j)| i as i64 == r0 && j as i64 == c0)
                .expect("lookup and base agree");
            return Some((idx, k));
        }
    }
    None
}

pub fn build_cylindric_shape(base: SkewShape, n: usize, s: usize) -> Result<CylindricShape> {
    if n < 2 || s == 0 || s >= n {
        return Err(Error::InvalidCylindricShape(format!(
            "need 1 <= s <= n-1, got n={n}, s={s}"
        )));
    }
    if base.outer().part(0) > n - s {
        return Err(Error::InvalidCylindricShape(format!(
            "longest row {} exceeds n-s={}",
            base.outer().part(0),
            n - s
        )));
    }
    // both boundaries must propagate to periodic partitions:
    // column n-s+1 is column 1 moved up by s
    for (name, p) in [("outer", base.outer()), ("inner", base.inner())] {
        let cols = p.conjugate();
        if cols.part(0) > cols.part(n - s - 1) + s {
            return Err(Error::InvalidCylindricShape(format!(
                "{name} shape {p} does not propagate to a cylindric partition"
            )));
        }
    }
    let cells = base.cells();
    let lookup: HashSet<(i64, i64)> = cells.iter().map(|&(i, j)| (i as i64, j as i64)).collect();
    let height = base.outer().len() as i64;
    let span = height / s as i64 + (n as i64) + 2;
    let (ds, dc) = (s as i64, (n - s) as i64);

    // copies must not overlap
    for &(i, j) in &cells {
        for k in 1..=span {
            if lookup.contains(&(i as i64 - k * ds, j as i64 + k * dc)) {
                return Err(Error::InvalidCylindricShape(format!(
                    "shifted copies of {:?} overlap",
                    base.outer()
                )));
            }
        }
    }

    let member = |row: i64, col: i64| locate(&cells, &lookup, n, s, row, col, span).is_some();

    // convexity: every box between two comparable boxes belongs to the set
    let window: Vec<(i64, i64)> = (-span..=span)
        .flat_map(|k| cells.iter().map(move |&(i, j)| (i as i64 - k * ds, j as i64 + k * dc)))
        .collect();
    for &(i, j) in &cells {
        let (i, j) = (i as i64, j as i64);
        for &(p, q) in &window {
            if p >= i && q >= j {
                for a in i..=p {
                    for b in j..=q {
                        if !member(a, b) {
                            return Err(Error::InvalidCylindricShape(format!(
                                "propagation of {}/{} is not convex",
                                base.outer(),
                                base.inner()
                            )));
                        }
                    }
                }
            }
        }
    }

    let mut wrap = Vec::new();
    for (idx, &(i, j)) in cells.iter().enumerate() {
        let (i, j) = (i as i64, j as i64);
        for (ni, nj, strict) in [(i, j + 1, false), (i + 1, j, true)] {
            if let Some((other, k)) = locate(&cells, &lookup, n, s, ni, nj, span) {
                if k != 0 {
                    wrap.push((idx, other, strict));
                }
            }
        }
    }

    Ok(CylindricShape { base, n, s, wrap })
}

/// Cylindric semistandard fillings of `shape` with entries in `1..=max_entry`,
/// returned as fillings of the base shape.
pub fn enumerate_cylindric_ssyt(shape: &CylindricShape, max_entry: Letter) -> Vec<Tableau> {
    enumerate_ssyt(&shape.base, max_entry)
        .into_iter()
        .filter(|t| {
            let filling: Vec<Letter> = t.rows.iter().flatten().copied().collect();
            shape.satisfies_wrap(&filling)
        })
        .collect()
}
