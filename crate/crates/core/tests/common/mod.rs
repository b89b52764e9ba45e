//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use rigtrop::crystals::TensorElement;
use rigtrop::rigged::{RcString, RiggedConfiguration};
use rigtrop::tableaux::Letter;

/// One table row: the parameter `c` and the strings of each level.
pub struct TableRow {
    pub c: usize,
    pub levels: Vec<Vec<(usize, i64)>>,
}

/// A family of paths `[1^… 2^… …] ⊗ …` where one exponent is the parameter.
pub struct Family {
    pub n: usize,
    /// Letter counts per factor; `None` marks the parameter.
    pub counts: Vec<Vec<Option<usize>>>,
    pub rows: Vec<TableRow>,
}

impl Family {
    pub fn path(&self, c: usize) -> TensorElement {
        let words: Vec<Vec<Letter>> = self
            .counts
            .iter()
            .map(|factor| {
                factor
                    .iter()
                    .enumerate()
                    .flat_map(|(i, k)| std::iter::repeat_n(i as Letter + 1, k.unwrap_or(c)))
                    .collect()
            })
            .collect();
        TensorElement::from_words(&words, self.n).unwrap()
    }

    pub fn expected(&self, row: &TableRow) -> RiggedConfiguration {
        let p = self.path(row.c);
        let nu0 = p.widths();
        let strings = row
            .levels
            .iter()
            .map(|l| l.iter().map(|&(len, rig)| RcString::new(len, rig)).collect())
            .collect();
        RiggedConfiguration::new(self.n, nu0, strings).unwrap()
    }
}

fn factors(n: usize, flat: &[Option<usize>]) -> Vec<Vec<Option<usize>>> {
    flat.chunks(n).map(<[_]>::to_vec).collect()
}

fn rows(data: &[&[&[(usize, i64)]]]) -> Vec<TableRow> {
    data.iter()
        .enumerate()
        .map(|(c, levels)| TableRow {
            c,
            levels: levels.iter().map(|l| l.to_vec()).collect(),
        })
        .collect()
}

pub fn family_n3_first() -> Family {
    let s = Some;
    Family {
        n: 3,
        counts: factors(3, &[s(0), s(1), None, s(2), s(3), s(1), s(3), s(3), s(4)]),
        rows: rows(&[
            &[&[(8, -5), (4, -4)], &[(5, -1)]],
            &[&[(8, -5), (5, -4)], &[(6, -2)]],
            &[&[(8, -5), (6, -4)], &[(7, -3)]],
            &[&[(9, -5), (6, -3)], &[(8, -4)]],
            &[&[(10, -5), (6, -2)], &[(9, -5)]],
            &[&[(11, -5), (6, -1)], &[(10, -6)]],
            &[&[(12, -5), (6, -1)], &[(11, -7)]],
            &[&[(13, -5), (6, -1)], &[(12, -8)]],
        ]),
    }
}

pub fn family_n3_second() -> Family {
    let s = Some;
    Family {
        n: 3,
        counts: factors(3, &[s(2), s(1), None, s(3), s(1), s(1), s(0), s(1), s(2)]),
        rows: rows(&[
            &[&[(4, 1), (2, -1)], &[(3, -1)]],
            &[&[(4, 1), (3, -1)], &[(4, -2)]],
            &[&[(4, -1), (4, -1)], &[(5, -3)]],
            &[&[(5, -1), (4, -1)], &[(6, -4)]],
            &[&[(6, -1), (4, -1)], &[(7, -5)]],
            &[&[(7, -1), (4, -1)], &[(8, -6)]],
            &[&[(8, -1), (4, -1)], &[(9, -7)]],
            &[&[(9, -1), (4, -1)], &[(10, -8)]],
        ]),
    }
}

pub fn family_n4() -> Family {
    let s = Some;
    Family {
        n: 4,
        counts: factors(
            4,
            &[
                s(3), s(2), None, s(3),
                s(3), s(3), s(1), s(0),
                s(0), s(3), s(0), s(2),
                s(1), s(0), s(3), s(3),
            ],
        ),
        rows: rows(&[
            &[&[(8, -2), (8, -2), (4, -1)], &[(8, 4), (4, 0)], &[(8, -7)]],
            &[&[(9, -2), (8, -1), (4, -1)], &[(8, 2), (5, -1)], &[(8, -6)]],
            &[&[(10, -2), (8, 0), (4, -1)], &[(8, 0), (6, -2)], &[(8, -5)]],
            &[&[(11, -2), (8, 1), (4, -1)], &[(8, -2), (7, -3)], &[(8, -4)]],
            &[&[(12, -2), (8, 2), (4, -1)], &[(8, -4), (8, -4)], &[(8, -3)]],
            &[&[(13, -2), (8, 2), (4, -1)], &[(9, -5), (8, -4)], &[(8, -3)]],
            &[&[(14, -2), (8, 2), (4, -1)], &[(10, -6), (8, -4)], &[(8, -3)]],
            &[&[(15, -2), (8, 2), (4, -1)], &[(11, -7), (8, -4)], &[(8, -3)]],
        ]),
    }
}

pub fn families() -> Vec<Family> {
    vec![family_n3_first(), family_n3_second(), family_n4()]
}
