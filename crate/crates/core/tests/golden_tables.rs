mod common;

use rigtrop::rigged::{phi, phi_inverse};
use rigtrop::tropical::{conjectured_shape, first_shape_theorem};

#[test]
fn phi_reproduces_tables() {
    for fam in common::families() {
        for row in &fam.rows {
            let p = fam.path(row.c);
            let rc = phi(&p).unwrap();
            assert_eq!(rc, fam.expected(row), "n={} c={} path {p}", fam.n, row.c);
            assert_eq!(phi_inverse(&rc, &p.widths()).unwrap(), p);
        }
    }
}

#[test]
fn shape_formulas_reproduce_tables() {
    for fam in common::families() {
        for row in &fam.rows {
            let p = fam.path(row.c);
            let rc = fam.expected(row);
            assert_eq!(first_shape_theorem(&p).unwrap(), rc.shape(1), "c={}", row.c);
            for s in 1..fam.n {
                assert_eq!(
                    conjectured_shape(&p, s).unwrap(),
                    rc.shape(s),
                    "n={} c={} s={s}",
                    fam.n,
                    row.c
                );
            }
        }
    }
}
