use super::{is_zero, require_cut_plane_or_zero, scaled, scaling_for, DuplicationState};
use crate::complex::{in_cut_plane, ldexp, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::tolerance::{EvalResult, Tolerance, MAX_REL_ERR_RD};

/// `R_D(x, y, z) = 3/2 ∫₀^∞ [(t+x)(t+y)]^(-1/2) (t+z)^(-3/2) dt`.
///
/// `z` must be nonzero; at most one of `x`, `y` may be zero.
pub fn rd(x: Complex, y: Complex, z: Complex, r: Tolerance) -> Result<EvalResult> {
    let r = r.limit("rd", MAX_REL_ERR_RD)?;
    require_cut_plane_or_zero("rd", &[x, y, z], 1)?;
    if is_zero(z) || !in_cut_plane(z) {
        return Err(Error::domain("rd", "third argument must be nonzero"));
    }
    let k = scaling_for(&[x, y, z]);
    let [xs, ys, zs] = scaled([x, y, z], k);
    let (value, n) = rd_kernel(xs, ys, zs, r)?;
    Ok(EvalResult::new(ldexp(value, 3 * k / 2), r, n))
}

pub(crate) fn rd_kernel(x: Complex, y: Complex, z: Complex, r: Tolerance) -> Result<(Complex, u32)> {
    let start = DuplicationState::for_rd(x, y, z, r);
    let a0 = start.a;
    let mut sum = Complex::new(0.0, 0.0);
    let end = start.run("rd", |s, t| {
        sum += s.scale() / (t.sqrt_z * (s.z + t.lambda));
        Ok(())
    })?;

    let denom = end.a / end.scale();
    let xx = (a0 - x) / denom;
    let yy = (a0 - y) / denom;
    let zz = -(xx + yy) / 3.0;
    let xy = xx * yy;
    let z2 = zz * zz;
    let e2 = xy - 6.0 * z2;
    let e3 = (3.0 * xy - 8.0 * z2) * zz;
    let e4 = 3.0 * (xy - z2) * z2;
    let e5 = xy * z2 * zz;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    let tail = end.scale() * series / (end.a * principal_sqrt(end.a));
    Ok((tail + 3.0 * sum, end.m))
}
