use super::{require_cut_plane_or_zero, scaled, scaling_for, DuplicationState};
use crate::complex::{ldexp, principal_sqrt, Complex};
use crate::error::Result;
use crate::tolerance::{EvalResult, Tolerance, MAX_REL_ERR_RF};

/// `R_F(x, y, z) = 1/2 ∫₀^∞ [(t+x)(t+y)(t+z)]^(-1/2) dt`.
///
/// At most one argument may be zero; the others must lie off the
/// nonpositive real axis.
pub fn rf(x: Complex, y: Complex, z: Complex, r: Tolerance) -> Result<EvalResult> {
    let r = r.limit("rf", MAX_REL_ERR_RF)?;
    require_cut_plane_or_zero("rf", &[x, y, z], 1)?;
    let k = scaling_for(&[x, y, z]);
    let [xs, ys, zs] = scaled([x, y, z], k);
    let (value, n) = rf_kernel(xs, ys, zs, r)?;
    Ok(EvalResult::new(ldexp(value, k / 2), r, n))
}

/// Duplication plus the degree-five series, for validated arguments of
/// moderate size.
pub(crate) fn rf_kernel(x: Complex, y: Complex, z: Complex, r: Tolerance) -> Result<(Complex, u32)> {
    let start = DuplicationState::for_rf(x, y, z, r);
    let a0 = start.a;
    let end = start.run("rf", |_, _| Ok(()))?;

    let denom = end.a / end.scale();
    let xx = (a0 - x) / denom;
    let yy = (a0 - y) / denom;
    let zz = -xx - yy;
    let e2 = xx * yy - zz * zz;
    let e3 = xx * yy * zz;
    let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
    Ok((series / principal_sqrt(end.a), end.m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c64;
    use crate::error::Error;

    fn tol() -> Tolerance {
        Tolerance::new(1e-12).unwrap()
    }

    fn close(a: Complex, b: Complex, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm()
    }

    #[test]
    fn check_values() {
        let v = rf(c64(1.0, 0.0), c64(2.0, 0.0), c64(0.0, 0.0), tol()).unwrap();
        assert!(close(v.value, c64(1.311_028_777_146_1, 0.0), 1e-13));
        let v = rf(c64(0.0, 1.0), c64(0.0, -1.0), c64(0.0, 0.0), tol()).unwrap();
        assert!(close(v.value, c64(1.854_074_677_301_4, 0.0), 1e-13));
        let v = rf(c64(2.0, 0.0), c64(3.0, 0.0), c64(4.0, 0.0), tol()).unwrap();
        assert!(close(v.value, c64(0.584_082_841_677_15, 0.0), 1e-13));
    }

    #[test]
    fn equal_arguments() {
        let v = rf(c64(9.0, 0.0), c64(9.0, 0.0), c64(9.0, 0.0), tol()).unwrap();
        assert_eq!(v.n_iterations, 0);
        assert!(close(v.value, c64(1.0 / 3.0, 0.0), 1e-15));
    }

    #[test]
    fn domain_errors() {
        let zero = c64(0.0, 0.0);
        assert!(matches!(
            rf(zero, zero, c64(1.0, 0.0), tol()),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            rf(c64(-1.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0), tol()),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            rf(c64(f64::NAN, 0.0), c64(1.0, 0.0), c64(1.0, 0.0), tol()),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn extreme_scales() {
        let base = rf(c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0), tol()).unwrap().value;
        for &s in &[1e-300, 1e-150, 1e150, 1e300] {
            let v = rf(c64(s, 0.0), c64(2.0 * s, 0.0), c64(3.0 * s, 0.0), tol()).unwrap();
            assert!(close(v.value * s.sqrt(), base, 1e-13), "scale {s}");
        }
    }
}
