use super::{is_zero, require_finite, scaled, scaling_for};
use crate::complex::{in_cut_plane, ldexp, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::tolerance::{EvalResult, Tolerance, MAX_REL_ERR_RC};

use super::MAX_DUPLICATIONS;

/// `R_C(x, y) = 1/2 ∫₀^∞ (t+x)^(-1/2) (t+y)^(-1) dt`.
///
/// `x` may be zero or any point of the cut plane. When `y` is real and
/// negative the Cauchy principal value is returned, computed from
/// `R_C(x, -q) = (x/(x+q))^(1/2) R_C(x+q, q)`.
pub fn rc(x: Complex, y: Complex, r: Tolerance) -> Result<EvalResult> {
    let r = r.limit("rc", MAX_REL_ERR_RC)?;
    require_finite("rc", &[x, y])?;
    if is_zero(y) {
        return Err(Error::domain("rc", "second argument must be nonzero"));
    }
    if !is_zero(x) && !in_cut_plane(x) {
        return Err(Error::domain(
            "rc",
            format!("first argument {x} lies on the negative real axis"),
        ));
    }

    if y.im == 0.0 && y.re < 0.0 {
        let q = Complex::new(-y.re, 0.0);
        if is_zero(x) {
            return Ok(EvalResult::new(Complex::new(0.0, 0.0), r, 0));
        }
        let shifted = x + q;
        let k = scaling_for(&[shifted, q]);
        let [xs, qs] = scaled([shifted, q], k);
        let (value, n) = rc_kernel(xs, qs, r)?;
        let factor = principal_sqrt(x / shifted);
        return Ok(EvalResult::new(factor * ldexp(value, k / 2), r, n));
    }

    let k = scaling_for(&[x, y]);
    let [xs, ys] = scaled([x, y], k);
    let (value, n) = rc_kernel(xs, ys, r)?;
    Ok(EvalResult::new(ldexp(value, k / 2), r, n))
}

/// Duplication plus the degree-seven series in `s`.
pub(crate) fn rc_kernel(x: Complex, y: Complex, r: Tolerance) -> Result<(Complex, u32)> {
    let a0 = (x + 2.0 * y) / 3.0;
    let q = (3.0 * r.value()).powf(-0.125) * (a0 - x).norm();

    let (mut xm, mut ym, mut am) = (x, y, a0);
    let mut scale = 1.0;
    let mut m = 0;
    while scale * q >= am.norm() {
        if m >= MAX_DUPLICATIONS || !am.norm().is_finite() {
            return Err(Error::NoConvergence {
                func: "rc",
                cap: MAX_DUPLICATIONS,
            });
        }
        let lambda = 2.0 * principal_sqrt(xm) * principal_sqrt(ym) + ym;
        am = (am + lambda) * 0.25;
        xm = (xm + lambda) * 0.25;
        ym = (ym + lambda) * 0.25;
        scale *= 0.25;
        m += 1;
    }

    let s = (y - a0) * scale / am;
    let series = 1.0
        + s * s
            * (3.0 / 10.0
                + s * (1.0 / 7.0
                    + s * (3.0 / 8.0 + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * (9.0 / 8.0))))));
    Ok((series / principal_sqrt(am), m))
}
