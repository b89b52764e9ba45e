//! Plumbing behind the `rigtrop` binary: path parsing, polynomial specs,
//! the seeded conjecture sweep and the verification suites.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::crystals::{one_row_paths, TensorElement};
use crate::error::{Error, Result};
use crate::loopsym::{
    cylindric_loop_schur_of, elementary_e, loop_schur, tau_poly, LoopPolynomial,
};
use crate::rigged::phi;
use crate::tableaux::{Letter, Partition, SkewShape};
use crate::tropical::conjectured_shape;

mod suites;

pub use suites::{run_suite, SuiteOutcome, SuiteReport, SUITES};

/// A one-row path written as `n=<int>; <word>,<word>,...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSpec {
    pub n: usize,
    pub factors: Vec<Vec<Letter>>,
}

impl PathSpec {
    pub fn to_tensor(&self) -> Result<TensorElement> {
        TensorElement::from_words(&self.factors, self.n)
    }

    pub fn from_tensor(p: &TensorElement) -> Result<Self> {
        if !p.is_one_row() {
            return Err(Error::InvalidParameters("path has a factor with several rows".into()));
        }
        Ok(PathSpec {
            n: p.n(),
            factors: p.words(),
        })
    }
}

impl fmt::Display for PathSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        for (i, w) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for x in w {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for PathSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_path(s)
    }
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        position,
        message: message.into(),
    }
}

/// Parses `n=<int>; <word>,<word>,...`; each character of a word is a letter.
pub fn parse_path(text: &str) -> Result<PathSpec> {
    let semi = text
        .find(';')
        .ok_or_else(|| parse_error(text.len(), "expected `;` after the alphabet size"))?;
    let head = &text[..semi];
    let head_start = head.len() - head.trim_start().len();
    let eq = head
        .find('=')
        .ok_or_else(|| parse_error(head_start, "expected `n=<int>`"))?;
    if head[..eq].trim() != "n" {
        return Err(parse_error(head_start, "expected `n=<int>`"));
    }
    let n: usize = head[eq + 1..]
        .trim()
        .parse()
        .map_err(|_| parse_error(eq + 1, "alphabet size is not an integer"))?;
    if n < 2 {
        return Err(parse_error(eq + 1, "alphabet size must be at least 2"));
    }
    let mut factors = Vec::new();
    let mut pos = semi + 1;
    for piece in text[semi + 1..].split(',') {
        let trimmed = piece.trim();
        let start = pos + (piece.len() - piece.trim_start().len());
        if trimmed.is_empty() {
            return Err(parse_error(start, "empty word"));
        }
        let mut word = Vec::with_capacity(trimmed.len());
        for (k, ch) in trimmed.char_indices() {
            let letter = ch
                .to_digit(10)
                .ok_or_else(|| parse_error(start + k, format!("unexpected character `{ch}`")))?;
            if letter == 0 || letter as usize > n {
                return Err(Error::AlphabetError { letter, n: n as u32 });
            }
            word.push(letter);
        }
        if word.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing(word));
        }
        factors.push(word);
        pos += piece.len() + 1;
    }
    Ok(PathSpec { n, factors })
}

/// Widths uniform in `1..=width_cap`; each word uniform among weakly
/// increasing words of that width (stars and bars).
pub fn random_path<R: Rng>(n: usize, m: usize, width_cap: usize, rng: &mut R) -> TensorElement {
    let words: Vec<Vec<Letter>> = (0..m)
        .map(|_| {
            let w = rng.gen_range(1..=width_cap);
            let mut bars = sample(rng, w + n - 1, n - 1).into_vec();
            bars.sort_unstable();
            let mut word = Vec::with_capacity(w);
            let mut letter = 1;
            let mut bar = 0;
            for slot in 0..w + n - 1 {
                if bar < bars.len() && bars[bar] == slot {
                    letter += 1;
                    bar += 1;
                } else {
                    word.push(letter);
                }
            }
            word
        })
        .collect();
    TensorElement::from_words(&words, n).expect("generated words are valid")
}

/// Seeded random paths with `n` and `m` fixed.
pub fn random_paths(n: usize, m: usize, width_cap: usize, samples: usize, seed: u64) -> Vec<TensorElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| random_path(n, m, width_cap, &mut rng)).collect()
}

/// One comparison of `ν^{(s)}(Φ(p))` with the conjectured shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SweepRecord {
    pub n: usize,
    pub m: usize,
    pub path: String,
    pub s: usize,
    pub phi_shape: String,
    pub formula_shape: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub m: usize,
    pub width_cap: usize,
    pub samples: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub records: Vec<SweepRecord>,
    /// Mismatch count for `s = 1, …, n-1`.
    pub mismatches: Vec<usize>,
}

impl SweepReport {
    pub fn paths(&self) -> usize {
        self.records.len() / (self.n - 1).max(1)
    }

    pub fn mismatch_records(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(|r| !r.matches)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,path,s,phi_shape,formula_shape,match\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},\"{}\",{},\"{}\",\"{}\",{}\n",
                r.n, r.m, r.path, r.s, r.phi_shape, r.formula_shape, r.matches
            ));
        }
        out
    }

    pub fn summary(&self) -> String {
        let per_s: Vec<String> = self
            .mismatches
            .iter()
            .enumerate()
            .map(|(i, c)| format!("s={}: {c}", i + 1))
            .collect();
        format!(
            "n={} m={} width_cap={} paths={} mismatches [{}]",
            self.n,
            self.m,
            self.width_cap,
            self.paths(),
            per_s.join(", ")
        )
    }
}

fn compare_path(p: &TensorElement) -> Result<Vec<SweepRecord>> {
    let rc = phi(p)?;
    let path = PathSpec::from_tensor(p)?.to_string();
    Ok((1..p.n())
        .map(|s| {
            let expected = rc.shape(s);
            let (formula_shape, matches) = match conjectured_shape(p, s) {
                Ok(shape) => (shape.to_string(), shape == expected),
                Err(e) => (format!("error: {e}"), false),
            };
            SweepRecord {
                n: p.n(),
                m: p.len(),
                path: path.clone(),
                s,
                phi_shape: expected.to_string(),
                formula_shape,
                matches,
            }
        })
        .collect())
}

/// Compares `Φ` shapes with the conjectured shapes on every path of the
/// grid (when `exhaustive`) and on `samples` seeded random paths.
pub fn sweep_conjecture(
    n: usize,
    m: usize,
    width_cap: usize,
    samples: usize,
    seed: u64,
    exhaustive: bool,
) -> Result<SweepReport> {
    if n < 2 || width_cap == 0 {
        return Err(Error::InvalidParameters("need n >= 2 and width_cap >= 1".into()));
    }
    let mut paths = if exhaustive {
        one_row_paths(n, m, width_cap)?
    } else {
        Vec::new()
    };
    paths.extend(random_paths(n, m, width_cap, samples, seed));
    let nested = paths
        .par_iter()
        .map(compare_path)
        .collect::<Result<Vec<_>>>()?;
    let mut records: Vec<SweepRecord> = nested.into_iter().flatten().collect();
    records.sort();
    let mut mismatches = vec![0; n - 1];
    for r in records.iter().filter(|r| !r.matches) {
        mismatches[r.s - 1] += 1;
    }
    Ok(SweepReport {
        n,
        m,
        width_cap,
        samples,
        seed,
        exhaustive,
        records,
        mismatches,
    })
}

/// Which loop symmetric function to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    Elementary,
    Schur,
    CylindricSchur,
    Tau,
}

impl FromStr for PolyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(PolyKind::Elementary),
            "schur" => Ok(PolyKind::Schur),
            "cschur" => Ok(PolyKind::CylindricSchur),
            "tau" => Ok(PolyKind::Tau),
            _ => Err(parse_error(0, format!("unknown polynomial kind `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySpec {
    pub kind: PolyKind,
    pub n: usize,
    pub m: usize,
    /// Color `r` (or `a` for `τ`).
    pub r: i64,
    /// Degree for `e` and `τ`.
    pub k: i64,
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    /// Shift parameter of the cylinder.
    pub s: usize,
}

impl PolySpec {
    pub fn build(&self) -> Result<LoopPolynomial> {
        if self.n < 2 || self.m == 0 {
            return Err(Error::InvalidParameters("need n >= 2 and m >= 1".into()));
        }
        let shape = || -> Result<SkewShape> {
            SkewShape::new(
                Partition::new(self.outer.clone())?,
                Partition::new(self.inner.clone())?,
            )
        };
        Ok(match self.kind {
            PolyKind::Elementary => elementary_e(self.k, self.r, self.m, self.n),
            PolyKind::Tau => tau_poly(self.k, self.r, self.m, self.n),
            PolyKind::Schur => loop_schur(&shape()?, self.r, self.m, self.n),
            PolyKind::CylindricSchur => {
                cylindric_loop_schur_of(shape()?, self.s, self.r, self.m, self.n)?
            }
        })
    }
}

/// Parses a comma separated list of integers; the empty string is `[]`.
pub fn parse_list<T: FromStr>(text: &str) -> Result<Vec<T>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in text.split(',') {
        out.push(
            piece
                .trim()
                .parse()
                .map_err(|_| parse_error(pos, format!("`{}` is not a number", piece.trim())))?,
        );
        pos += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paths() {
        let p = parse_path("n=4; 2,24,3").unwrap();
        assert_eq!(p.factors, vec![vec![2], vec![2, 4], vec![3]]);
        assert_eq!(p.to_string(), "n=4; 2,24,3");
        assert_eq!(parse_path(&p.to_string()).unwrap(), p);
        assert!(matches!(parse_path("n=2; ,"), Err(Error::ParseError { position: 5, .. })));
        assert_eq!(parse_path("n=3; 32"), Err(Error::NotWeaklyIncreasing(vec![3, 2])));
        assert_eq!(parse_path("n=3; 14"), Err(Error::AlphabetError { letter: 4, n: 3 }));
        assert!(matches!(parse_path("n=3 12"), Err(Error::ParseError { .. })));
        assert!(matches!(parse_path("m=3; 12"), Err(Error::ParseError { .. })));
        assert!(matches!(parse_path("n=3; 1x"), Err(Error::ParseError { position: 6, .. })));
    }

    #[test]
    fn random_paths_are_seeded() {
        let a = random_paths(4, 5, 4, 20, 9);
        assert_eq!(a, random_paths(4, 5, 4, 20, 9));
        assert_ne!(a, random_paths(4, 5, 4, 20, 10));
        assert!(a.iter().all(|p| p.widths().iter().all(|&w| (1..=4).contains(&w))));
    }

    #[test]
    fn small_sweeps() {
        let r = sweep_conjecture(3, 3, 2, 0, 1, true).unwrap();
        assert_eq!(r.mismatches, vec![0, 0]);
        assert_eq!(r.paths(), 729);
        let r = sweep_conjecture(2, 4, 3, 50, 1, false).unwrap();
        assert_eq!(r.mismatches, vec![0]);
        let empty = sweep_conjecture(3, 3, 2, 0, 1, false).unwrap();
        assert!(empty.records.is_empty());
        let a = sweep_conjecture(3, 2, 3, 30, 4, false).unwrap().to_csv();
        assert_eq!(a, sweep_conjecture(3, 2, 3, 30, 4, false).unwrap().to_csv());
        assert!(a.starts_with("n,m,path,s,phi_shape,formula_shape,match\n"));
    }

    #[test]
    fn poly_specs() {
        let spec = PolySpec {
            kind: "cschur".parse().unwrap(),
            n: 3,
            m: 3,
            r: 1,
            k: 0,
            outer: vec![2, 1],
            inner: vec![],
            s: 1,
        };
        assert_eq!(spec.build().unwrap().len(), 7);
        assert!("nope".parse::<PolyKind>().is_err());
        assert_eq!(parse_list::<usize>("2, 1").unwrap(), vec![2, 1]);
        assert!(parse_list::<usize>("").unwrap().is_empty());
    }
}
