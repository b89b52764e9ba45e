use proptest::prelude::*;

use rigtrop::boxball::{energy_ers, evolve_t1inf, evolve_trs, pad_path, BoxBallState};
use rigtrop::crystals::{
    apply_r_permutation, combinatorial_r, energy_h, highest_weight_element, Op, TensorElement,
};
use rigtrop::loopsym::tau_poly;
use rigtrop::rigged::{phi, phi_inverse, rc_kashiwara};
use rigtrop::tableaux::Letter;
use rigtrop::tropical::{
    birational_r_trop, energy_formula_trop, first_shape_theorem, path_coordinates,
    path_from_coordinates, soliton_count_bound, theta, trop_eval,
};

fn word(n: usize, max_width: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(1..=n as Letter, 1..=max_width).prop_map(|mut w| {
        w.sort_unstable();
        w
    })
}

fn path_in(n: usize, max_len: usize, max_width: usize) -> impl Strategy<Value = TensorElement> {
    prop::collection::vec(word(n, max_width), 1..=max_len)
        .prop_map(move |ws| TensorElement::from_words(&ws, n).unwrap())
}

fn path() -> impl Strategy<Value = TensorElement> {
    (2usize..=4).prop_flat_map(|n| path_in(n, 4, 4))
}

fn small_path() -> impl Strategy<Value = TensorElement> {
    (2usize..=3).prop_flat_map(|n| path_in(n, 3, 3))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn phi_round_trip(p in path()) {
        let x = phi(&p).unwrap();
        prop_assert_eq!(phi_inverse(&x, &p.widths()).unwrap(), p);
    }

    #[test]
    fn r_is_an_involution_preserving_energy(p in path_in(3, 2, 4)) {
        prop_assume!(p.len() == 2);
        let (b, c) = (&p.factors()[0], &p.factors()[1]);
        let (c2, b2) = combinatorial_r(b, c).unwrap();
        prop_assert_eq!(c2.s(), c.s());
        prop_assert_eq!(energy_h(&c2, &b2).unwrap(), energy_h(b, c).unwrap());
        let back = combinatorial_r(&c2, &b2).unwrap();
        prop_assert_eq!(&back.0, b);
        prop_assert_eq!(&back.1, c);
    }

    #[test]
    fn r_commutes_with_crystal_operators(p in path_in(3, 2, 3), a in 1usize..3) {
        prop_assume!(p.len() == 2);
        let q = apply_r_permutation(&p, &[1]).unwrap();
        for op in [Op::E, Op::F] {
            let lhs = p.kashiwara(op, a).map(|t| apply_r_permutation(&t, &[1]).unwrap());
            prop_assert_eq!(lhs, q.kashiwara(op, a));
        }
    }

    #[test]
    fn phi_intertwines_crystal_operators(p in path(), a in 1usize..4) {
        prop_assume!(a < p.n());
        let x = phi(&p).unwrap();
        for op in [Op::E, Op::F] {
            let lhs = p.kashiwara(op, a).map(|t| phi(&t).unwrap());
            prop_assert_eq!(lhs, rc_kashiwara(op, a, &x));
        }
    }

    #[test]
    fn box_ball_conserves_balls(cells in prop::collection::vec(1 as Letter..=4, 1..12)) {
        let mut padded = cells.clone();
        padded.extend(std::iter::repeat_n(1, cells.len() * 2));
        let state = BoxBallState::new(padded, 4).unwrap();
        let next = evolve_t1inf(&state);
        let count = |s: &BoxBallState, a: Letter| s.cells().iter().filter(|&&x| x == a).count();
        for a in 1..=4 {
            prop_assert_eq!(count(&state, a), count(&next, a));
        }
    }

    #[test]
    fn carrier_sweeps_commute(p in path(), s in 1usize..4, t in 1usize..4) {
        let p = pad_path(&p, p.ball_count() * 2 + 2);
        let u = |s| highest_weight_element(1, s, p.n()).unwrap();
        let (ps, rs) = evolve_trs(&p, 1, s).unwrap();
        let (pt, rt) = evolve_trs(&p, 1, t).unwrap();
        prop_assume!(rs.last() == &u(s) && rt.last() == &u(t));
        let (pst, r1) = evolve_trs(&ps, 1, t).unwrap();
        let (pts, r2) = evolve_trs(&pt, 1, s).unwrap();
        prop_assume!(r1.last() == &u(t) && r2.last() == &u(s));
        prop_assert_eq!(pst, pts);
    }

    #[test]
    fn tropical_r_is_combinatorial_r(p in path(), j in 1usize..4) {
        prop_assume!(j < p.len());
        let a = path_coordinates(&p).unwrap();
        let q = path_from_coordinates(&birational_r_trop(&a, j).unwrap()).unwrap();
        // beam j is factor m + 1 - j
        prop_assert_eq!(q, apply_r_permutation(&p, &[p.len() - j]).unwrap());
    }

    #[test]
    fn coordinates_round_trip(p in path()) {
        let a = path_coordinates(&p).unwrap();
        prop_assert_eq!(path_from_coordinates(&a).unwrap(), p);
    }

    #[test]
    fn first_shape_is_bounded_and_matches_phi(p in path()) {
        let shape = first_shape_theorem(&p).unwrap();
        prop_assert!(shape.len() <= soliton_count_bound(p.n(), p.len()));
        prop_assert_eq!(shape, phi(&p).unwrap().shape(1));
    }

    #[test]
    fn tropical_energy_matches_carrier_energy(p in path(), ell in 1usize..7) {
        let e = energy_ers(&p, 1, ell).unwrap() as i64;
        prop_assert_eq!(energy_formula_trop(&p, ell).unwrap(), e);
    }

    #[test]
    fn theta_matches_tropical_tau(p in small_path(), c in 0i64..3) {
        let (n, m) = (p.n(), p.len());
        let a = path_coordinates(&p).unwrap();
        let mut previous = None;
        for k in 0..=((n - 1) * m) as i64 {
            let t = theta(k, c, &a).unwrap();
            prop_assert_eq!(t, trop_eval(&tau_poly(k, c, m, n), &a).unwrap());
            // coordinates are nonnegative, so adding variables never lowers the minimum
            if let Some(prev) = previous {
                prop_assert!(t >= prev);
            }
            previous = Some(t);
        }
    }
}
