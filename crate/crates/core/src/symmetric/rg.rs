use super::rd::rd_kernel;
use super::rf::rf_kernel;
use super::{is_zero, require_cut_plane_or_zero, scaled, scaling_for};
use crate::complex::{ldexp, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::tolerance::{EvalResult, Tolerance, MAX_REL_ERR_RD};

/// Completely symmetric integral of the second kind `R_G(x, y, z)`.
///
/// Any or all arguments may be zero except all three at once. With two zeros
/// the value is `sqrt(z)/2`; otherwise it comes from
/// `2 R_G = z R_F - (x-z)(y-z) R_D / 3 + sqrt(x) sqrt(y) / sqrt(z)` with the
/// arguments permuted so that `z != 0` and `|(x-z)(y-z)|` is smallest.
pub fn rg(x: Complex, y: Complex, z: Complex, r: Tolerance) -> Result<EvalResult> {
    let r = r.limit("rg", MAX_REL_ERR_RD)?;
    require_cut_plane_or_zero("rg", &[x, y, z], 3)?;
    let args = [x, y, z];
    let nonzero: Vec<Complex> = args.iter().copied().filter(|&w| !is_zero(w)).collect();
    match nonzero.len() {
        0 => return Err(Error::domain("rg", "arguments must not all be zero")),
        1 => return Ok(EvalResult::new(principal_sqrt(nonzero[0]) / 2.0, r, 0)),
        _ => {}
    }

    let [x, y, z] = pivot(args);
    let k = scaling_for(&[x, y, z]);
    let [xs, ys, zs] = scaled([x, y, z], k);
    let (f, nf) = rf_kernel(xs, ys, zs, r)?;
    let (d, nd) = rd_kernel(xs, ys, zs, r)?;
    let root = principal_sqrt(xs) * principal_sqrt(ys) / principal_sqrt(zs);
    let twice = zs * f - (xs - zs) * (ys - zs) * d / 3.0 + root;
    Ok(EvalResult::new(ldexp(twice * 0.5, -k / 2), r, nf + nd))
}

/// Chooses the nonzero argument minimising `|(x-z)(y-z)|` as `z`.
fn pivot(args: [Complex; 3]) -> [Complex; 3] {
    let mut best = None;
    for k in 0..3 {
        if is_zero(args[k]) {
            continue;
        }
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let w = ((args[i] - args[k]) * (args[j] - args[k])).norm();
        if best.is_none_or(|(bw, _)| w < bw) {
            best = Some((w, [args[i], args[j], args[k]]));
        }
    }
    best.map(|(_, a)| a).unwrap_or(args)
}
