//! Named verification suites for `rigtrop verify`.

use serde::Serialize;

use crate::boxball::{asymptotic_solitons, energy_ers, evolve_t1inf, evolve_trs, pad_path, BoxBallState};
use crate::crystals::{
    apply_r_permutation, combinatorial_r, energy_h, highest_weight_element, one_row_paths,
    KRElement, TensorElement,
};
use crate::error::{Error, Result};
use crate::loopsym::{cell_transfer_positivity, cylindric_loop_schur_of, elementary_e, invariance_check};
use crate::rigged::{phi, phi_inverse, phi_trace, rc_kashiwara, RcString, RiggedConfiguration};
use crate::crystals::Op;
use crate::tableaux::{Letter, Partition, SkewShape};
use crate::tropical::{conjectured_shape, first_shape_theorem, lambda_shapes, partition_from_convex};

pub const SUITES: [&str; 8] = [
    "bijection",
    "r-invariance",
    "yang-baxter",
    "energy-eq",
    "ist",
    "lsym-pit",
    "cell-transfer",
    "tables",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suites: Vec<SuiteOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Runs the named suites (`all` runs every suite). Unknown names are
/// rejected before anything runs.
pub fn run_suite<S: AsRef<str>>(names: &[S]) -> Result<SuiteReport> {
    let mut selected: Vec<&str> = Vec::new();
    for name in names {
        let name = name.as_ref();
        if name == "all" {
            selected.extend(SUITES);
        } else if let Some(&known) = SUITES.iter().find(|&&s| s == name) {
            selected.push(known);
        } else {
            return Err(Error::UnknownSuite(name.to_string()));
        }
    }
    let suites = selected
        .into_iter()
        .map(|name| {
            let mut out = Checks::new(name);
            let run = match name {
                "bijection" => bijection(&mut out),
                "r-invariance" => r_invariance(&mut out),
                "yang-baxter" => yang_baxter(&mut out),
                "energy-eq" => energy_eq(&mut out),
                "ist" => ist(&mut out),
                "lsym-pit" => lsym_pit(&mut out),
                "cell-transfer" => cell_transfer(&mut out),
                _ => tables(&mut out),
            };
            if let Err(e) = run {
                out.fail(format!("aborted: {e}"));
            }
            out.0
        })
        .collect();
    Ok(SuiteReport { suites })
}

struct Checks(SuiteOutcome);

impl Checks {
    fn new(name: &str) -> Self {
        Checks(SuiteOutcome {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        })
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.0.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        // keep reports readable when something is badly broken
        if self.0.failures.len() < 20 {
            self.0.failures.push(what);
        }
    }
}

fn grid(ns: std::ops::RangeInclusive<usize>, max_m: usize, width_cap: usize) -> Result<Vec<TensorElement>> {
    let mut out = Vec::new();
    for n in ns {
        for m in 1..=max_m {
            out.extend(one_row_paths(n, m, width_cap)?);
        }
    }
    Ok(out)
}

fn bijection(c: &mut Checks) -> Result<()> {
    for p in grid(2..=4, 3, 2)? {
        let back = phi_inverse(&phi(&p)?, &p.widths())?;
        c.check(back == p, || format!("round trip fails for {p}"));
    }
    Ok(())
}

fn r_invariance(c: &mut Checks) -> Result<()> {
    for p in grid(2..=4, 3, 2)? {
        let rc = phi(&p)?;
        for j in 1..p.len() {
            let q = apply_r_permutation(&p, &[j])?;
            c.check(phi(&q)? == rc, || format!("R_{j} changes Φ of {p}"));
        }
    }
    Ok(())
}

fn yang_baxter(c: &mut Checks) -> Result<()> {
    for n in 2..=3 {
        for p in one_row_paths(n, 3, 3)? {
            let left = apply_r_permutation(&p, &[1, 2, 1])?;
            let right = apply_r_permutation(&p, &[2, 1, 2])?;
            c.check(left == right, || format!("braid relation fails for {p}"));
        }
    }
    Ok(())
}

fn energy_eq(c: &mut Checks) -> Result<()> {
    for p in grid(2..=4, 3, 2)? {
        let rc = phi(&p)?;
        for r in 1..p.n() {
            for s in 1..=4 {
                let q = rc.shape(r).boxes_in_first_columns(s);
                let e = energy_ers(&p, r, s)?;
                c.check(e == q, || format!("E^{{{r},{s}}} = {e} but Q = {q} for {p}"));
            }
        }
    }
    Ok(())
}

/// `Φ(T^{r,s} p)` shifts each rigging of level `r` by `min(s, length)` when
/// the carrier returns to `u^{r,s}`; for `r = 1` the path is padded with
/// empty boxes first so the carrier can relax.
pub(crate) fn ist_holds(p: &TensorElement, r: usize, s: usize) -> Result<Option<bool>> {
    let p = if r == 1 { pad_path(p, p.ball_count()) } else { p.clone() };
    let (q, record) = evolve_trs(&p, r, s)?;
    if record.last() != &highest_weight_element(r, s, p.n())? {
        return Ok(None);
    }
    let rc = phi(&p)?;
    let strings = (1..p.n())
        .map(|a| {
            rc.level(a)
                .iter()
                .map(|st| {
                    let shift = if a == r { st.length.min(s) as i64 } else { 0 };
                    RcString::new(st.length, st.rigging + shift)
                })
                .collect()
        })
        .collect();
    let shifted = RiggedConfiguration::new(p.n(), rc.nu0().parts().to_vec(), strings)?;
    Ok(Some(phi(&q)? == shifted))
}

fn ist(c: &mut Checks) -> Result<()> {
    for p in grid(2..=3, 3, 2)? {
        for r in 1..p.n() {
            for s in 1..=3 {
                if let Some(ok) = ist_holds(&p, r, s)? {
                    c.check(ok, || format!("T^{{{r},{s}}} rigging shift fails for {p}"));
                }
            }
        }
    }
    Ok(())
}

fn lsym_pit(c: &mut Checks) -> Result<()> {
    for n in 2..=3 {
        for m in 2..=3 {
            for k in 1..=m as i64 {
                for r in 0..n as i64 {
                    let f = elementary_e(k, r, m, n);
                    c.check(invariance_check(&f, 5, 11), || format!("e_{k}^({r}) n={n} m={m}"));
                }
            }
        }
    }
    let shapes: [(&[usize], &[usize], usize, usize); 4] = [
        (&[2, 1], &[], 3, 1),
        (&[2, 2, 2], &[], 3, 1),
        (&[2, 1, 1], &[], 4, 2),
        (&[2, 2], &[1], 3, 1),
    ];
    for (outer, inner, n, s) in shapes {
        let base = SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)?;
        for m in 2..=3 {
            let f = cylindric_loop_schur_of(base.clone(), s, 0, m, n)?;
            c.check(invariance_check(&f, 5, 13), || format!("cylindric {outer:?}/{inner:?} n={n} m={m}"));
        }
    }
    Ok(())
}

fn cell_transfer(c: &mut Checks) -> Result<()> {
    for n in 2..=3 {
        for m in 1..=3 {
            for big in 0..=((n - 1) * m) as i64 {
                c.check(cell_transfer_positivity(n, m, big), || format!("n={n} m={m} N={big}"));
            }
        }
    }
    Ok(())
}

const BOX_BALL: [&str; 8] = [
    ".332...42...4.................",
    "....332..42..4................",
    ".......332.42.4...............",
    "..........33.4242.............",
    "............33.2.442..........",
    "..............3.32..442.......",
    "...............3..32...442....",
    "................3...32....442.",
];

type Levels = &'static [&'static [(usize, i64)]];

/// Path families with one free exponent `c` (written `None`) and the
/// configurations for `c = 0, 1, …`.
struct Family {
    n: usize,
    counts: &'static [Option<usize>],
    rows: &'static [Levels],
}

const FAMILIES: [Family; 3] = [
    Family {
        n: 3,
        counts: &[Some(0), Some(1), None, Some(2), Some(3), Some(1), Some(3), Some(3), Some(4)],
        rows: &[
            &[&[(8, -5), (4, -4)], &[(5, -1)]],
            &[&[(8, -5), (5, -4)], &[(6, -2)]],
            &[&[(8, -5), (6, -4)], &[(7, -3)]],
            &[&[(9, -5), (6, -3)], &[(8, -4)]],
            &[&[(10, -5), (6, -2)], &[(9, -5)]],
            &[&[(11, -5), (6, -1)], &[(10, -6)]],
            &[&[(12, -5), (6, -1)], &[(11, -7)]],
            &[&[(13, -5), (6, -1)], &[(12, -8)]],
        ],
    },
    Family {
        n: 3,
        counts: &[Some(2), Some(1), None, Some(3), Some(1), Some(1), Some(0), Some(1), Some(2)],
        rows: &[
            &[&[(4, 1), (2, -1)], &[(3, -1)]],
            &[&[(4, 1), (3, -1)], &[(4, -2)]],
            &[&[(4, -1), (4, -1)], &[(5, -3)]],
            &[&[(5, -1), (4, -1)], &[(6, -4)]],
            &[&[(6, -1), (4, -1)], &[(7, -5)]],
            &[&[(7, -1), (4, -1)], &[(8, -6)]],
            &[&[(8, -1), (4, -1)], &[(9, -7)]],
            &[&[(9, -1), (4, -1)], &[(10, -8)]],
        ],
    },
    Family {
        n: 4,
        counts: &[
            Some(3), Some(2), None, Some(3),
            Some(3), Some(3), Some(1), Some(0),
            Some(0), Some(3), Some(0), Some(2),
            Some(1), Some(0), Some(3), Some(3),
        ],
        rows: &[
            &[&[(8, -2), (8, -2), (4, -1)], &[(8, 4), (4, 0)], &[(8, -7)]],
            &[&[(9, -2), (8, -1), (4, -1)], &[(8, 2), (5, -1)], &[(8, -6)]],
            &[&[(10, -2), (8, 0), (4, -1)], &[(8, 0), (6, -2)], &[(8, -5)]],
            &[&[(11, -2), (8, 1), (4, -1)], &[(8, -2), (7, -3)], &[(8, -4)]],
            &[&[(12, -2), (8, 2), (4, -1)], &[(8, -4), (8, -4)], &[(8, -3)]],
            &[&[(13, -2), (8, 2), (4, -1)], &[(9, -5), (8, -4)], &[(8, -3)]],
            &[&[(14, -2), (8, 2), (4, -1)], &[(10, -6), (8, -4)], &[(8, -3)]],
            &[&[(15, -2), (8, 2), (4, -1)], &[(11, -7), (8, -4)], &[(8, -3)]],
        ],
    },
];

fn family_path(f: &Family, c: usize) -> Result<TensorElement> {
    let words: Vec<Vec<Letter>> = f
        .counts
        .chunks(f.n)
        .map(|factor| {
            factor
                .iter()
                .enumerate()
                .flat_map(|(i, k)| std::iter::repeat_n(i as Letter + 1, k.unwrap_or(c)))
                .collect()
        })
        .collect();
    TensorElement::from_words(&words, f.n)
}

fn rc_of(n: usize, nu0: &[usize], levels: Levels) -> Result<RiggedConfiguration> {
    let strings = levels
        .iter()
        .map(|l| l.iter().map(|&(len, rig)| RcString::new(len, rig)).collect())
        .collect();
    RiggedConfiguration::new(n, nu0.to_vec(), strings)
}

fn kr(rows: &[&[Letter]], n: usize) -> Result<KRElement> {
    KRElement::from_rows(rows.iter().map(|r| r.to_vec()).collect(), n)
}

fn tables(c: &mut Checks) -> Result<()> {
    // box-ball evolution and its solitons
    let mut state = BoxBallState::parse(BOX_BALL[0], 4)?;
    for (t, line) in BOX_BALL.iter().enumerate().skip(1) {
        state = evolve_t1inf(&state);
        let got = state.render_width(line.len());
        c.check(&got == line, || format!("t={t}: {got}"));
    }
    let start = BoxBallState::parse(BOX_BALL[0], 4)?.to_tensor();
    let solitons = asymptotic_solitons(&start)?;
    c.check(solitons == [vec![3], vec![3, 2], vec![4, 4, 2]], || format!("solitons {solitons:?}"));

    // R-matrix and energy on B^{2,2} ⊗ B^{3,3}
    let b = kr(&[&[2, 2], &[3, 4]], 5)?;
    let b2 = kr(&[&[1, 1, 3], &[2, 3, 4], &[4, 5, 5]], 5)?;
    let image = combinatorial_r(&b, &b2)?;
    let expect = (kr(&[&[1, 2, 2], &[3, 3, 4], &[4, 4, 5]], 5)?, kr(&[&[1, 3], &[2, 5]], 5)?);
    c.check(image == expect, || "R image".into());
    c.check(energy_h(&b, &b2)? == 1, || "H".into());

    // Φ step by step
    let p = TensorElement::from_words(&[vec![2], vec![2, 4], vec![3]], 4)?;
    let trace = phi_trace(&p)?;
    let steps = [
        rc_of(4, &[1], &[&[(1, -1)], &[], &[]])?,
        rc_of(4, &[1, 2], &[&[(2, -2), (1, -1)], &[(1, 1)], &[(1, -1)]])?,
        rc_of(4, &[1, 2, 1], &[&[(2, -2), (2, -2)], &[(2, 1)], &[(1, -1)]])?,
    ];
    c.check(trace == steps, || "Φ trace".into());
    let half = TensorElement::from_words(&[vec![2], vec![4]], 4)?;
    c.check(
        phi(&half)? == rc_of(4, &[1, 1], &[&[(1, -1), (1, -1)], &[(1, 1)], &[(1, -1)]])?,
        || "Φ([2]⊗[4])".into(),
    );

    // Kashiwara operators on a highest weight configuration
    let hw = rc_of(4, &[3, 2, 2, 1, 1], &[&[(2, 1), (2, 0), (1, 0)], &[(2, 0), (1, 0)], &[(1, 0)]])?;
    let f1 = rc_kashiwara(Op::F, 1, &hw);
    let f1_expect = rc_of(4, &[3, 2, 2, 1, 1], &[&[(3, -1), (2, 1), (1, 0)], &[(2, 0), (1, 0)], &[(1, 0)]])?;
    c.check(f1.as_ref() == Some(&f1_expect), || format!("f_1 gives {f1:?}"));
    c.check(rc_kashiwara(Op::F, 2, &hw).is_none(), || "f_2 should vanish".into());
    let f3 = rc_kashiwara(Op::F, 3, &hw);
    let f3_expect = rc_of(4, &[3, 2, 2, 1, 1], &[&[(2, 1), (2, 0), (1, 0)], &[(2, 1), (1, 0)], &[(2, -1)]])?;
    c.check(f3.as_ref() == Some(&f3_expect), || format!("f_3 gives {f3:?}"));

    // configuration tables and shape formulas
    for (i, f) in FAMILIES.iter().enumerate() {
        for (cval, levels) in f.rows.iter().enumerate() {
            let p = family_path(f, cval)?;
            let expected = rc_of(f.n, &p.widths(), levels)?;
            c.check(phi(&p)? == expected, || format!("family {i} c={cval}: Φ"));
            c.check(first_shape_theorem(&p)? == expected.shape(1), || {
                format!("family {i} c={cval}: first shape")
            });
            for s in 1..f.n {
                let got = conjectured_shape(&p, s);
                c.check(got.as_ref() == Ok(&expected.shape(s)), || {
                    format!("family {i} c={cval} s={s}: {got:?}")
                });
            }
        }
    }

    // ribbon sequences and the convex example
    let ribbons: [(usize, usize, usize, &[&[usize]]); 3] = [
        (2, 6, 7, &[&[4; 7], &[4, 4, 4, 4, 3, 3], &[4, 4, 4, 2, 2], &[4, 4, 1, 1], &[4], &[]]),
        (3, 6, 3, &[&[3, 3, 3], &[2, 2], &[1], &[]]),
        (1, 3, 3, &[&[2, 2, 2], &[2, 1], &[]]),
    ];
    for (s, n, m, expect) in ribbons {
        let got = lambda_shapes(s, n, m)?;
        let got: Vec<&[usize]> = got.iter().map(Partition::parts).collect();
        c.check(got == expect, || format!("λ({s},·) for n={n} m={m}: {got:?}"));
    }
    let (delta, conj) = partition_from_convex(&[0, 2, 7])?;
    c.check(delta.parts() == [2, 2, 1, 1, 1] && conj.parts() == [5, 2], || "convex example".into());
    Ok(())
}
