use std::f64::consts::PI;

use carlson::{c64, duplication_step, rc, rd, rf, rg, rj, Complex, DuplicationState, Tolerance};
use proptest::prelude::*;

const R: f64 = 1e-10;

fn tol() -> Tolerance {
    Tolerance::new(R).unwrap()
}

fn close(a: Complex, b: Complex, rel: f64) -> bool {
    (a - b).norm() <= rel * b.norm()
}

/// Point of the cut plane with modulus in [0.01, 100].
fn cut_plane() -> impl Strategy<Value = Complex> {
    (-2.0f64..2.0, -0.95 * PI..0.95 * PI).prop_map(|(e, t)| Complex::from_polar(10f64.powf(e), t))
}

fn positive() -> impl Strategy<Value = Complex> {
    (-2.0f64..2.0).prop_map(|e| c64(10f64.powf(e), 0.0))
}

fn right_half() -> impl Strategy<Value = Complex> {
    (-2.0f64..2.0, -0.5 * PI..0.5 * PI).prop_map(|(e, t)| Complex::from_polar(10f64.powf(e), t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rf_is_symmetric(x in cut_plane(), y in cut_plane(), z in cut_plane()) {
        let v = rf(x, y, z, tol()).unwrap().value;
        for (a, b, c) in [(y, x, z), (z, y, x), (x, z, y), (y, z, x)] {
            prop_assert!(close(rf(a, b, c, tol()).unwrap().value, v, 4.0 * R));
        }
    }

    #[test]
    fn rj_symmetric_in_first_three(
        x in right_half(), y in right_half(), z in right_half(), p in right_half()
    ) {
        let v = rj(x, y, z, p, tol()).unwrap().value;
        for (a, b, c) in [(y, x, z), (z, y, x), (x, z, y)] {
            prop_assert!(close(rj(a, b, c, p, tol()).unwrap().value, v, 4.0 * R));
        }
    }

    #[test]
    fn rd_symmetric_in_first_two(x in cut_plane(), y in cut_plane(), z in cut_plane()) {
        let v = rd(x, y, z, tol()).unwrap().value;
        prop_assert!(close(rd(y, x, z, tol()).unwrap().value, v, 4.0 * R));
    }

    #[test]
    fn homogeneity(x in cut_plane(), y in cut_plane(), z in cut_plane(), s in -3.0f64..3.0) {
        let l = 10f64.powf(s);
        let (lx, ly, lz) = (x * l, y * l, z * l);
        let f = rf(x, y, z, tol()).unwrap().value;
        prop_assert!(close(rf(lx, ly, lz, tol()).unwrap().value, f / l.sqrt(), 4.0 * R));
        let d = rd(x, y, z, tol()).unwrap().value;
        prop_assert!(close(rd(lx, ly, lz, tol()).unwrap().value, d / (l * l.sqrt()), 4.0 * R));
        let g = rg(x, y, z, tol()).unwrap().value;
        prop_assert!(close(rg(lx, ly, lz, tol()).unwrap().value, g * l.sqrt(), 4.0 * R));
        let c = rc(x, y, tol()).unwrap().value;
        prop_assert!(close(rc(lx, ly, tol()).unwrap().value, c / l.sqrt(), 4.0 * R));
    }

    #[test]
    fn conjugation(x in cut_plane(), y in cut_plane(), z in cut_plane()) {
        let v = rf(x, y, z, tol()).unwrap().value;
        let w = rf(x.conj(), y.conj(), z.conj(), tol()).unwrap().value;
        prop_assert!(close(w, v.conj(), 4.0 * R));
        let v = rd(x, y, z, tol()).unwrap().value;
        let w = rd(x.conj(), y.conj(), z.conj(), tol()).unwrap().value;
        prop_assert!(close(w, v.conj(), 4.0 * R));
    }

    #[test]
    fn duplication_leaves_rf_unchanged(x in cut_plane(), y in cut_plane(), z in cut_plane()) {
        let v = rf(x, y, z, tol()).unwrap().value;
        let mut s = DuplicationState::for_rf(x, y, z, tol());
        for _ in 0..3 {
            s = duplication_step(&s);
            prop_assert!(close(rf(s.x, s.y, s.z, tol()).unwrap().value, v, 2.0 * R));
        }
    }

    #[test]
    fn degenerate_forms(x in cut_plane(), y in cut_plane()) {
        let a = rf(x, y, y, tol()).unwrap().value;
        prop_assert!(close(a, rc(x, y, tol()).unwrap().value, 4.0 * R));
    }

    #[test]
    fn rj_with_p_equal_z_is_rd(x in positive(), y in right_half(), z in right_half()) {
        let a = rj(x, y, z, z, tol()).unwrap().value;
        prop_assert!(close(a, rd(x, y, z, tol()).unwrap().value, 4.0 * R));
    }

    #[test]
    fn rg_is_symmetric(x in cut_plane(), y in cut_plane(), z in cut_plane()) {
        // Each ordering may pick a different pivot internally.
        let g = rg(x, y, z, tol()).unwrap().value;
        let g2 = rg(z, x, y, tol()).unwrap().value;
        prop_assert!(close(g2, g, 8.0 * R));
    }

    #[test]
    fn tighter_tolerance_never_takes_fewer_steps(x in cut_plane(), y in cut_plane(), z in cut_plane()) {
        let mut last = 0;
        for r in [1e-4, 1e-7, 1e-10, 1e-13] {
            let n = rf(x, y, z, Tolerance::new(r).unwrap()).unwrap().n_iterations;
            prop_assert!(n >= last);
            last = n;
        }
    }

    #[test]
    fn looser_tolerance_stays_within_bound(x in cut_plane(), y in cut_plane(), z in cut_plane()) {
        let exact = rf(x, y, z, Tolerance::new(1e-13).unwrap()).unwrap().value;
        for r in [1e-4, 1e-6, 1e-8] {
            let v = rf(x, y, z, Tolerance::new(r).unwrap()).unwrap().value;
            prop_assert!(close(v, exact, r));
        }
    }
}

#[test]
fn real_arguments_give_real_values() {
    let v = rf(c64(2.0, 0.0), c64(3.0, 0.0), c64(4.0, 0.0), tol()).unwrap().value;
    assert_eq!(v.im, 0.0);
    let v = rj(c64(2.0, 0.0), c64(3.0, 0.0), c64(4.0, 0.0), c64(-0.5, 0.0), tol()).unwrap().value;
    assert_eq!(v.im, 0.0);
}
