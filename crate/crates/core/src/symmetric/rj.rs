use super::rc::{rc, rc_kernel};
use super::rf::rf_kernel;
use super::{is_zero, require_finite, scaled, scaling_for, DuplicationState};
use crate::complex::{in_cut_plane, is_real, ldexp, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::tolerance::{EvalResult, Tolerance, MAX_REL_ERR_RJ};

/// How an admissible `R_J` call is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RjRoute {
    /// Duplication with the `R_C` correction sum.
    Direct,
    /// Cauchy principal value for real nonnegative `x, y, z` and negative `p`.
    PrincipalValue,
}

fn nonneg_real(w: Complex) -> bool {
    is_real(w) && w.re >= 0.0
}

fn at_most_one_zero(args: &[Complex]) -> bool {
    args.iter().filter(|&&w| is_zero(w)).count() <= 1
}

/// Classifies `(x, y, z, p)` against the argument sets for which the
/// algorithm is known to keep `p` away from zero under duplication.
///
/// Returns `None` when no case applies.
pub fn rj_admissibility(x: Complex, y: Complex, z: Complex, p: Complex) -> Option<RjRoute> {
    let xyz = [x, y, z];
    if is_zero(p) || !at_most_one_zero(&xyz) {
        return None;
    }
    let all_nonneg_real = xyz.iter().all(|&w| nonneg_real(w));

    if all_nonneg_real && is_real(p) && p.re < 0.0 {
        return Some(RjRoute::PrincipalValue);
    }
    // Closed right half-plane for x, y, z and Re p > 0.
    if xyz.iter().all(|w| w.re >= 0.0) && p.re > 0.0 {
        return Some(RjRoute::Direct);
    }
    if !in_cut_plane(p) {
        return None;
    }
    if all_nonneg_real {
        return Some(RjRoute::Direct);
    }
    // Two nonzero conjugates in the cut plane, third real and nonnegative.
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let (a, b, c) = (xyz[i], xyz[j], xyz[k]);
        if in_cut_plane(a) && a.conj() == b && nonneg_real(c) {
            return Some(RjRoute::Direct);
        }
    }
    None
}

/// `R_J(x, y, z, p) = 3/2 ∫₀^∞ [(t+x)(t+y)(t+z)]^(-1/2) (t+p)^(-1) dt`.
///
/// Accepts only the argument sets described by [`rj_admissibility`]. For real
/// nonnegative `x, y, z` and negative `p` the Cauchy principal value is
/// returned.
pub fn rj(x: Complex, y: Complex, z: Complex, p: Complex, r: Tolerance) -> Result<EvalResult> {
    rj_impl(x, y, z, p, r, false)
}

/// Like [`rj`], but arguments outside the admissible sets are evaluated with
/// the duplication algorithm anyway. Such results have `unchecked` set.
pub fn rj_unchecked(
    x: Complex,
    y: Complex,
    z: Complex,
    p: Complex,
    r: Tolerance,
) -> Result<EvalResult> {
    rj_impl(x, y, z, p, r, true)
}

fn rj_impl(
    x: Complex,
    y: Complex,
    z: Complex,
    p: Complex,
    r: Tolerance,
    allow_unchecked: bool,
) -> Result<EvalResult> {
    let r = r.limit("rj", MAX_REL_ERR_RJ)?;
    require_finite("rj", &[x, y, z, p])?;
    if is_zero(p) {
        return Err(Error::domain("rj", "fourth argument must be nonzero"));
    }
    let route = rj_admissibility(x, y, z, p);
    let unchecked = route.is_none();
    if unchecked && !allow_unchecked {
        return Err(Error::domain(
            "rj",
            format!("arguments ({x}, {y}, {z}, {p}) fit none of the admissible cases"),
        ));
    }

    let k = scaling_for(&[x, y, z, p]);
    let [xs, ys, zs, ps] = scaled([x, y, z, p], k);
    let (value, n) = match route {
        Some(RjRoute::PrincipalValue) => rj_principal_value(xs.re, ys.re, zs.re, -ps.re, r)?,
        _ => rj_kernel(xs, ys, zs, ps, r)?,
    };
    let mut out = EvalResult::new(ldexp(value, 3 * k / 2), r, n);
    out.unchecked = unchecked;
    Ok(out)
}

pub(crate) fn rj_kernel(
    x: Complex,
    y: Complex,
    z: Complex,
    p: Complex,
    r: Tolerance,
) -> Result<(Complex, u32)> {
    let start = DuplicationState::for_rj(x, y, z, p, r);
    let a0 = start.a;
    let one = Complex::new(1.0, 0.0);
    let mut sum = Complex::new(0.0, 0.0);
    let end = start.run("rj", |s, t| {
        let (d, e) = (t.d.unwrap_or(one), t.e.unwrap_or_default());
        let c = rc(one, one + e, r)?.value;
        sum += s.scale() / d * c;
        Ok(())
    })?;

    let denom = end.a / end.scale();
    let xx = (a0 - x) / denom;
    let yy = (a0 - y) / denom;
    let zz = (a0 - z) / denom;
    let pp = -(xx + yy + zz) / 2.0;
    let xyz = xx * yy * zz;
    let p2 = pp * pp;
    let e2 = xx * yy + xx * zz + yy * zz - 3.0 * p2;
    let e3 = xyz + 2.0 * e2 * pp + 4.0 * p2 * pp;
    let e4 = (2.0 * xyz + e2 * pp + 3.0 * p2 * pp) * pp;
    let e5 = xyz * p2;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    let tail = end.scale() * series / (end.a * principal_sqrt(end.a));
    Ok((tail + 6.0 * sum, end.m))
}

/// Principal value of `R_J(x, y, z, -q)` for real `x, y, z >= 0` and `q > 0`.
///
/// The arguments are ordered so that `y` is the middle one; then the
/// auxiliary `p = y + (z-y)(y-x)/(y+q)` is at least `y > 0` and every term is
/// an ordinary integral.
fn rj_principal_value(x: f64, y: f64, z: f64, q: f64, r: Tolerance) -> Result<(Complex, u32)> {
    let mut v = [x, y, z];
    v.sort_by(f64::total_cmp);
    let [x, y, z] = v;
    let c = |t: f64| Complex::new(t, 0.0);

    let p_minus_y = (z - y) * (y - x) / (y + q);
    let p = y + p_minus_y;
    let (rf_value, mut n) = rf_kernel(c(x), c(y), c(z), r)?;
    let mut acc = -3.0 * rf_value;
    if p_minus_y != 0.0 {
        let (rj_value, m) = rj_kernel(c(x), c(y), c(z), c(p), r)?;
        acc += p_minus_y * rj_value;
        n = n.max(m);
    }
    let pq = p * q;
    let xz_pq = x * z + pq;
    let (rc_value, _) = rc_kernel(c(xz_pq), c(pq), r)?;
    acc += 3.0 * (x * y * z / xz_pq).sqrt() * rc_value;
    Ok((acc / (y + q), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c64;

    fn tol() -> Tolerance {
        Tolerance::new(1e-12).unwrap()
    }

    fn close(a: Complex, b: Complex, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm()
    }

    #[test]
    fn check_values() {
        let v = rj(c64(0.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0), tol()).unwrap();
        assert!(close(v.value, c64(0.776_886_237_785_82, 0.0), 1e-13));
        let v = rj(c64(-1.0, 1.0), c64(-1.0, -1.0), c64(1.0, 0.0), c64(2.0, 0.0), tol()).unwrap();
        assert!(close(v.value, c64(0.941_483_588_412_20, 0.0), 1e-13));
        let v = rj(c64(0.0, 1.0), c64(0.0, -1.0), c64(0.0, 0.0), c64(1.0, -1.0), tol()).unwrap();
        assert!(close(v.value, c64(1.826_011_522_900_9, 1.229_066_190_864_3), 1e-13));
        assert!(!v.unchecked);
    }

    #[test]
    fn principal_value_sign_change() {
        let v = rj(c64(2.0, 0.0), c64(3.0, 0.0), c64(4.0, 0.0), c64(-0.5, 0.0), tol()).unwrap();
        assert!(close(v.value, c64(0.247_238_197_030_52, 0.0), 1e-12));
        let v = rj(c64(2.0, 0.0), c64(3.0, 0.0), c64(4.0, 0.0), c64(-5.0, 0.0), tol()).unwrap();
        assert!(close(v.value, c64(-0.127_112_300_429_64, 0.0), 1e-12));
    }

    #[test]
    fn admissibility_cases() {
        let c = c64;
        assert_eq!(
            rj_admissibility(c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)),
            Some(RjRoute::PrincipalValue)
        );
        assert_eq!(
            rj_admissibility(c(0.0, 1.0), c(1.0, 2.0), c(3.0, 0.0), c(1.0, 5.0)),
            Some(RjRoute::Direct)
        );
        assert_eq!(
            rj_admissibility(c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0), c(-1.0, 1.0)),
            Some(RjRoute::Direct)
        );
        assert_eq!(
            rj_admissibility(c(-1.0, 1.0), c(-1.0, -1.0), c(1.0, 0.0), c(-3.0, 1.0)),
            Some(RjRoute::Direct)
        );
        assert_eq!(
            rj_admissibility(c(-1.0, 1.0), c(-2.0, -1.0), c(0.0, -1.0), c(-1.0, 1.0)),
            None
        );
        // Conjugate pair but p on the cut.
        assert_eq!(
            rj_admissibility(c(-1.0, 1.0), c(-1.0, -1.0), c(1.0, 0.0), c(-3.0, 0.0)),
            None
        );
        assert_eq!(
            rj_admissibility(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)),
            None
        );
    }

    #[test]
    fn unchecked_override() {
        let args = (c64(-1.0, 1.0), c64(-2.0, -1.0), c64(0.0, -1.0), c64(-1.0, 1.0));
        assert!(rj(args.0, args.1, args.2, args.3, tol()).is_err());
        let v = rj_unchecked(args.0, args.1, args.2, args.3, tol()).unwrap();
        assert!(v.unchecked);
        assert!(close(v.value, c64(1.824_902_739_370_4, -1.221_847_578_482_7), 1e-12));
        let ok = rj_unchecked(c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0), c64(4.0, 0.0), tol())
            .unwrap();
        assert!(!ok.unchecked);
    }

    #[test]
    fn zero_p_rejected_even_unchecked() {
        let one = c64(1.0, 0.0);
        assert!(rj_unchecked(one, one, one, c64(0.0, 0.0), tol()).is_err());
    }
}
