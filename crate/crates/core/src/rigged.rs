//! Rigged configurations for tensor products of one-row crystals, the
//! bijection `Φ`, its inverse, and Kashiwara operators on configurations.
//!
//! A configuration is stored as a multiset of strings per level; strings are
//! kept sorted by decreasing length, then decreasing rigging, so equality is
//! multiset equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystals::{KRElement, Op, TensorElement};
use crate::error::{Error, Result};
use crate::tableaux::{Letter, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RcString {
    pub length: usize,
    pub rigging: i64,
}

impl RcString {
    pub fn new(length: usize, rigging: i64) -> Self {
        RcString { length, rigging }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RiggedConfiguration {
    n: usize,
    nu0: Vec<usize>,
    /// `strings[a - 1]` holds level `a`.
    strings: Vec<Vec<RcString>>,
}

fn q(rows: &[usize], k: usize) -> i64 {
    rows.iter().map(|&r| r.min(k) as i64).sum()
}

fn sort_strings(v: &mut [RcString]) {
    v.sort_by(|x, y| y.length.cmp(&x.length).then(y.rigging.cmp(&x.rigging)));
}

impl RiggedConfiguration {
    /// The empty configuration with no factors.
    pub fn empty(n: usize) -> Self {
        RiggedConfiguration {
            n,
            nu0: Vec::new(),
            strings: vec![Vec::new(); n.saturating_sub(1)],
        }
    }

    /// Builds and validates a configuration. `strings[a - 1]` lists level `a`.
    pub fn new(n: usize, nu0: Vec<usize>, strings: Vec<Vec<RcString>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRiggedConfiguration(format!("alphabet size {n} < 2")));
        }
        if strings.len() != n - 1 {
            return Err(Error::InvalidRiggedConfiguration(format!(
                "expected {} levels of strings, got {}",
                n - 1,
                strings.len()
            )));
        }
        if nu0.contains(&0) {
            return Err(Error::InvalidRiggedConfiguration("zero-width factor in nu0".into()));
        }
        let rc = Self::assemble(n, nu0, strings);
        for a in 1..n {
            for st in rc.level(a) {
                if st.length == 0 {
                    return Err(Error::InvalidRiggedConfiguration(format!(
                        "string of length 0 at level {a}"
                    )));
                }
                let p = rc.vacancy(a, st.length);
                if st.rigging > p {
                    return Err(Error::InvalidRiggedConfiguration(format!(
                        "rigging {} exceeds vacancy {p} for a length {} string at level {a}",
                        st.rigging, st.length
                    )));
                }
            }
        }
        Ok(rc)
    }

    fn assemble(n: usize, mut nu0: Vec<usize>, mut strings: Vec<Vec<RcString>>) -> Self {
        nu0.sort_unstable_by(|a, b| b.cmp(a));
        for level in &mut strings {
            level.retain(|s| s.length > 0);
            sort_strings(level);
        }
        RiggedConfiguration { n, nu0, strings }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nu0(&self) -> Partition {
        Partition::from_unsorted(self.nu0.clone())
    }

    /// Strings at level `a` (1-based).
    pub fn level(&self, a: usize) -> &[RcString] {
        &self.strings[a - 1]
    }

    /// `ν^{(a)}` as a partition; `a = 0` gives `ν^{(0)}`.
    pub fn shape(&self, a: usize) -> Partition {
        Partition::from_unsorted(self.rows(a))
    }

    fn rows(&self, a: usize) -> Vec<usize> {
        if a == 0 {
            self.nu0.clone()
        } else if a >= self.n {
            Vec::new()
        } else {
            self.strings[a - 1].iter().map(|s| s.length).collect()
        }
    }

    /// `P^{(a)}_k = Q_k(ν^{(a-1)}) - 2 Q_k(ν^{(a)}) + Q_k(ν^{(a+1)})`.
    pub fn vacancy(&self, a: usize, k: usize) -> i64 {
        q(&self.rows(a - 1), k) - 2 * q(&self.rows(a), k) + q(&self.rows(a + 1), k)
    }

    /// Vacancy minus rigging.
    pub fn corigging(&self, a: usize, st: &RcString) -> i64 {
        self.vacancy(a, st.length) - st.rigging
    }

    pub fn is_empty(&self) -> bool {
        self.nu0.is_empty() && self.strings.iter().all(Vec::is_empty)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RcJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RcJson = serde_json::from_str(text).map_err(|e| Error::ParseError {
            position: e.column(),
            message: e.to_string(),
        })?;
        raw.try_into()
    }
}

impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu0={}", self.nu0())?;
        for a in 1..self.n {
            write!(f, "; {a}:")?;
            for (i, s) in self.level(a).iter().enumerate() {
                let sep = if i == 0 { "" } else { "," };
                write!(f, "{sep}({},{})", s.length, s.rigging)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RcJson {
    n: usize,
    nu0: Vec<usize>,
    strings: BTreeMap<String, Vec<(usize, i64)>>,
}

impl From<&RiggedConfiguration> for RcJson {
    fn from(rc: &RiggedConfiguration) -> Self {
        let strings = (1..rc.n)
            .map(|a| {
                let v = rc.level(a).iter().map(|s| (s.length, s.rigging)).collect();
                (a.to_string(), v)
            })
            .collect();
        RcJson {
            n: rc.n,
            nu0: rc.nu0.clone(),
            strings,
        }
    }
}

impl TryFrom<RcJson> for RiggedConfiguration {
    type Error = Error;

    fn try_from(raw: RcJson) -> Result<Self> {
        let mut levels = vec![Vec::new(); raw.n.saturating_sub(1)];
        for (key, v) in raw.strings {
            let a: usize = key.parse().map_err(|_| {
                Error::InvalidRiggedConfiguration(format!("level key {key:?} is not an integer"))
            })?;
            if a == 0 || a >= raw.n {
                return Err(Error::InvalidRiggedConfiguration(format!(
                    "level {a} outside 1..{}",
                    raw.n.saturating_sub(1)
                )));
            }
            levels[a - 1] = v.into_iter().map(|(l, r)| RcString::new(l, r)).collect();
        }
        RiggedConfiguration::new(raw.n, raw.nu0, levels)
    }
}

/// Mutable working state for the bijection; `nu0` keeps factor order.
struct Work {
    n: usize,
    nu0: Vec<usize>,
    strings: Vec<Vec<RcString>>,
}

impl Work {
    fn rows(&self, a: usize) -> Vec<usize> {
        if a == 0 {
            self.nu0.clone()
        } else if a >= self.n {
            Vec::new()
        } else {
            self.strings[a - 1].iter().map(|s| s.length).collect()
        }
    }

    fn vacancy(&self, a: usize, k: usize) -> i64 {
        q(&self.rows(a - 1), k) - 2 * q(&self.rows(a), k) + q(&self.rows(a + 1), k)
    }

    fn is_singular(&self, a: usize, st: &RcString) -> bool {
        st.rigging == self.vacancy(a, st.length)
    }

    /// Longest singular string at level `a` with length at most `cap`; the
    /// implicit empty string gives `Some(None)`.
    fn largest_singular(&self, a: usize, cap: usize) -> Option<usize> {
        self.strings[a - 1]
            .iter()
            .enumerate()
            .filter(|(_, s)| s.length <= cap && self.is_singular(a, s))
            .max_by(|(i, x), (j, y)| x.length.cmp(&y.length).then(j.cmp(i)))
            .map(|(i, _)| i)
    }

    /// Shortest singular string at level `a` with length at least `floor`.
    fn smallest_singular(&self, a: usize, floor: usize) -> Option<usize> {
        self.strings[a - 1]
            .iter()
            .enumerate()
            .filter(|(_, s)| s.length >= floor && self.is_singular(a, s))
            .min_by(|(i, x), (j, y)| x.length.cmp(&y.length).then(i.cmp(j)))
            .map(|(i, _)| i)
    }

    /// Adds letter `c` to factor `row` whose current width is `k - 1`.
    fn add_letter(&mut self, row: usize, c: Letter) {
        let c = c as usize;
        // selections are made against the configuration before the box is added
        let mut chosen: Vec<(usize, Option<usize>)> = Vec::new();
        let mut cap = usize::MAX;
        for a in (1..c).rev() {
            let pick = self.largest_singular(a, cap);
            cap = pick.map_or(0, |i| self.strings[a - 1][i].length);
            chosen.push((a, pick));
        }
        self.nu0[row] += 1;
        let mut changed: Vec<(usize, usize)> = Vec::new();
        for (a, pick) in chosen {
            let level = &mut self.strings[a - 1];
            let idx = match pick {
                Some(i) => {
                    level[i].length += 1;
                    i
                }
                None => {
                    level.push(RcString::new(1, 0));
                    level.len() - 1
                }
            };
            changed.push((a, idx));
        }
        for (a, idx) in changed {
            let len = self.strings[a - 1][idx].length;
            self.strings[a - 1][idx].rigging = self.vacancy(a, len);
        }
    }

    /// Removes the leftmost box of factor `row`, returning its letter.
    /// Singular strings are located with that box split off as a separate
    /// single-box factor.
    fn remove_letter(&mut self, row: usize) -> Result<Letter> {
        if self.nu0[row] == 0 {
            return Err(Error::InvalidRiggedConfiguration("factor already empty".into()));
        }
        self.nu0[row] -= 1;
        self.nu0.push(1);
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        let mut floor = 1;
        let mut letter = self.n;
        for a in 1..self.n {
            match self.smallest_singular(a, floor) {
                Some(i) => {
                    floor = self.strings[a - 1][i].length;
                    chosen.push((a, i));
                }
                None => {
                    letter = a;
                    break;
                }
            }
        }
        self.nu0.pop();
        for &(a, i) in &chosen {
            self.strings[a - 1][i].length -= 1;
        }
        for &(a, i) in &chosen {
            let len = self.strings[a - 1][i].length;
            self.strings[a - 1][i].rigging = self.vacancy(a, len);
        }
        for level in &mut self.strings {
            level.retain(|s| s.length > 0);
        }
        Ok(letter as Letter)
    }

}

/// `Φ` applied factor by factor; entry `i` is the image of `b_1 ⊗ … ⊗ b_{i+1}`.
pub fn phi_trace(p: &TensorElement) -> Result<Vec<RiggedConfiguration>> {
    if !p.is_one_row() {
        return Err(Error::InvalidParameters(
            "the bijection is implemented for one-row factors".into(),
        ));
    }
    let n = p.n();
    let mut w = Work {
        n,
        nu0: Vec::new(),
        strings: vec![Vec::new(); n - 1],
    };
    let mut out = Vec::with_capacity(p.len());
    for b in p.factors() {
        w.nu0.push(0);
        let row = w.nu0.len() - 1;
        for &c in b.row_word().iter().rev() {
            w.add_letter(row, c);
        }
        out.push(RiggedConfiguration::assemble(n, w.nu0.clone(), w.strings.clone()));
    }
    Ok(out)
}

pub fn phi(p: &TensorElement) -> Result<RiggedConfiguration> {
    Ok(phi_trace(p)?
        .pop()
        .unwrap_or_else(|| RiggedConfiguration::empty(p.n())))
}

/// `Φ^{-1}` producing one-row factors of the given widths, left to right.
pub fn phi_inverse(rc: &RiggedConfiguration, shape_order: &[usize]) -> Result<TensorElement> {
    let n = rc.n;
    if Partition::from_unsorted(shape_order.to_vec()) != rc.nu0() {
        return Err(Error::InvalidRiggedConfiguration(format!(
            "widths {shape_order:?} do not match nu0 {}",
            rc.nu0()
        )));
    }
    let mut w = Work {
        n,
        nu0: shape_order.to_vec(),
        strings: rc.strings.clone(),
    };
    let mut words: Vec<Vec<Letter>> = vec![Vec::new(); shape_order.len()];
    for row in (0..shape_order.len()).rev() {
        let mut word = Vec::with_capacity(shape_order[row]);
        while w.nu0[row] > 0 {
            word.push(w.remove_letter(row)?);
        }
        // letters come out leftmost first
        if word.windows(2).any(|x| x[0] > x[1]) {
            return Err(Error::InvalidRiggedConfiguration(format!(
                "reconstructed factor {word:?} is not weakly increasing"
            )));
        }
        words[row] = word;
    }
    if w.strings.iter().any(|l| !l.is_empty()) {
        return Err(Error::InvalidRiggedConfiguration(
            "strings remain after removing every box".into(),
        ));
    }
    let factors = words
        .iter()
        .map(|word| KRElement::one_row(word, n))
        .collect::<Result<Vec<_>>>()?;
    let p = TensorElement::new(factors, n)?;
    if phi(&p)? != *rc {
        return Err(Error::InvalidRiggedConfiguration(format!(
            "{rc} is not the image of a path"
        )));
    }
    Ok(p)
}

/// Kashiwara operator `ẽ_a` or `f̃_a` on a rigged configuration; `None` is
/// the crystal zero.
pub fn rc_kashiwara(op: Op, a: usize, rc: &RiggedConfiguration) -> Option<RiggedConfiguration> {
    if a == 0 || a >= rc.n {
        return None;
    }
    let level = rc.level(a);
    let x = level.iter().map(|s| s.rigging).min().unwrap_or(0).min(0);
    let with_x = level.iter().enumerate().filter(|(_, s)| s.rigging == x);
    let target = match op {
        Op::E => {
            if x >= 0 {
                return None;
            }
            with_x.min_by_key(|(_, s)| s.length).map(|(i, _)| i)
        }
        // the empty string has rigging 0 and counts as length 0
        Op::F => with_x.max_by_key(|(_, s)| s.length).map(|(i, _)| i),
    };

    let mut strings = rc.strings.clone();
    let corig: Vec<Vec<i64>> = (1..rc.n)
        .map(|b| rc.level(b).iter().map(|s| rc.corigging(b, s)).collect())
        .collect();
    let (new_len, new_rig) = match (op, target) {
        (Op::E, Some(i)) => {
            let s = strings[a - 1][i];
            strings[a - 1][i] = RcString::new(s.length - 1, x + 1);
            (s.length - 1, x + 1)
        }
        (Op::E, None) => return None,
        (Op::F, Some(i)) => {
            let s = strings[a - 1][i];
            strings[a - 1][i] = RcString::new(s.length + 1, x - 1);
            (s.length + 1, x - 1)
        }
        (Op::F, None) => {
            strings[a - 1].push(RcString::new(1, x - 1));
            (1, x - 1)
        }
    };
    let changed = match target {
        Some(i) => i,
        None => strings[a - 1].len() - 1,
    };
    let shapes = Work {
        n: rc.n,
        nu0: rc.nu0.clone(),
        strings: strings.clone(),
    };
    for b in 1..rc.n {
        for (i, s) in strings[b - 1].iter_mut().enumerate() {
            if b == a && i == changed {
                continue;
            }
            s.rigging = shapes.vacancy(b, s.length) - corig[b - 1][i];
        }
    }
    if op == Op::F && new_rig > shapes.vacancy(a, new_len) {
        return None;
    }
    Some(RiggedConfiguration::assemble(rc.n, rc.nu0.clone(), strings))
}

/// Every string satisfies `0 <= rigging <= vacancy`.
pub fn is_highest_weight(rc: &RiggedConfiguration) -> bool {
    (1..rc.n).all(|a| {
        rc.level(a)
            .iter()
            .all(|s| s.rigging >= 0 && s.rigging <= rc.vacancy(a, s.length))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rc(n: usize, nu0: &[usize], levels: &[&[(usize, i64)]]) -> RiggedConfiguration {
        let strings = levels
            .iter()
            .map(|l| l.iter().map(|&(a, b)| RcString::new(a, b)).collect())
            .collect();
        RiggedConfiguration::new(n, nu0.to_vec(), strings).unwrap()
    }

    fn golden_hw() -> RiggedConfiguration {
        rc(
            4,
            &[3, 2, 2, 1, 1],
            &[&[(2, 1), (2, 0), (1, 0)], &[(2, 0), (1, 0)], &[(1, 0)]],
        )
    }

    #[test]
    fn vacancies() {
        let x = golden_hw();
        assert_eq!(x.vacancy(1, 0), 0);
        assert_eq!(x.vacancy(1, 2), 1);
        let y = rc(2, &[1], &[&[]]);
        assert_eq!(y.vacancy(1, 1), 1);
    }

    #[test]
    fn phi_golden_steps() {
        let p = TensorElement::from_words(&[vec![2], vec![2, 4], vec![3]], 4).unwrap();
        let trace = phi_trace(&p).unwrap();
        assert_eq!(trace[0], rc(4, &[1], &[&[(1, -1)], &[], &[]]));
        assert_eq!(trace[1], rc(4, &[1, 2], &[&[(2, -2), (1, -1)], &[(1, 1)], &[(1, -1)]]));
        assert_eq!(
            trace[2],
            rc(4, &[1, 2, 1], &[&[(2, -2), (2, -2)], &[(2, 1)], &[(1, -1)]])
        );
        let q = TensorElement::from_words(&[vec![2], vec![4]], 4).unwrap();
        assert_eq!(
            phi(&q).unwrap(),
            rc(4, &[1, 1], &[&[(1, -1), (1, -1)], &[(1, 1)], &[(1, -1)]])
        );
        let empty = TensorElement::from_words::<Vec<Letter>>(&[], 4).unwrap();
        assert!(phi(&empty).unwrap().is_empty());
    }

    #[test]
    fn phi_inverse_golden() {
        let x = rc(4, &[1, 2, 1], &[&[(2, -2), (2, -2)], &[(2, 1)], &[(1, -1)]]);
        let p = phi_inverse(&x, &[1, 2, 1]).unwrap();
        assert_eq!(p, TensorElement::from_words(&[vec![2], vec![2, 4], vec![3]], 4).unwrap());
        let empty = RiggedConfiguration::empty(3);
        assert!(phi_inverse(&empty, &[]).unwrap().is_empty());
    }

    #[test]
    fn golden_highest_weight_path() {
        let p = TensorElement::from_words(
            &[vec![1, 1, 1], vec![2, 2], vec![1, 3], vec![4], vec![3]],
            4,
        )
        .unwrap();
        assert_eq!(phi(&p).unwrap(), golden_hw());
    }

    #[test]
    fn rc_operators_golden() {
        let x = golden_hw();
        assert!(is_highest_weight(&x));
        let f1 = rc_kashiwara(Op::F, 1, &x).unwrap();
        assert_eq!(f1.level(1), &[RcString::new(3, -1), RcString::new(2, 1), RcString::new(1, 0)]);
        assert_eq!(f1.level(2), x.level(2));
        assert!(!is_highest_weight(&f1));
        assert_eq!(rc_kashiwara(Op::F, 2, &x), None);
        let f3 = rc_kashiwara(Op::F, 3, &x).unwrap();
        assert_eq!(f3.level(3), &[RcString::new(2, -1)]);
        assert_eq!(f3.level(2), &[RcString::new(2, 1), RcString::new(1, 0)]);
        assert_eq!(rc_kashiwara(Op::E, 1, &f1), Some(x.clone()));
        assert_eq!(rc_kashiwara(Op::E, 2, &x), None);
        assert!(is_highest_weight(&RiggedConfiguration::empty(3)));
    }

    #[test]
    fn json_round_trip() {
        let x = golden_hw();
        let text = x.to_json();
        assert_eq!(RiggedConfiguration::from_json(&text).unwrap(), x);
        assert!(RiggedConfiguration::from_json(r#"{"n":3,"nu0":[1],"strings":{"1":[[1,5]]}}"#).is_err());
        assert!(RiggedConfiguration::from_json("{").is_err());
    }

    #[test]
    fn non_image_is_rejected() {
        let x = rc(3, &[1], &[&[(1, 0)], &[(1, -1)]]);
        assert_eq!(phi_inverse(&x, &[1]).unwrap(), TensorElement::from_words(&[[3]], 3).unwrap());
        let bad = rc(3, &[1], &[&[(1, -1)], &[(1, -2)]]);
        assert!(matches!(
            phi_inverse(&bad, &[1]),
            Err(Error::InvalidRiggedConfiguration(_))
        ));
    }
}
