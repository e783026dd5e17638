//! Carlson's symmetric integrals `R_F`, `R_C`, `R_J`, `R_D` and `R_G`.
//!
//! Each routine iterates the duplication theorem until the arguments are
//! close enough to their mean that a short symmetric power series reaches the
//! requested relative error. Arguments are first rescaled by an even power of
//! two so the largest lies in `[1, 4)`; homogeneity then undoes the scaling
//! exactly.

mod duplication;
mod rc;
mod rd;
mod rf;
mod rg;
mod rj;

pub use duplication::{duplication_step, DuplicationState, StepTerms, MAX_DUPLICATIONS};
pub use rc::rc;
pub use rd::rd;
pub use rf::rf;
pub use rg::rg;
pub use rj::{rj, rj_admissibility, rj_unchecked, RjRoute};

use crate::complex::{in_cut_plane, is_finite, ldexp, scale_exponent, Complex};
use crate::error::{Error, Result};

pub(crate) fn require_finite(func: &'static str, args: &[Complex]) -> Result<()> {
    if args.iter().all(|&w| is_finite(w)) {
        Ok(())
    } else {
        Err(Error::domain(func, "arguments must be finite"))
    }
}

pub(crate) fn is_zero(z: Complex) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// Each argument is zero or lies in the cut plane, and at most `max_zeros`
/// of them are zero.
pub(crate) fn require_cut_plane_or_zero(
    func: &'static str,
    args: &[Complex],
    max_zeros: usize,
) -> Result<()> {
    require_finite(func, args)?;
    let zeros = args.iter().filter(|&&w| is_zero(w)).count();
    if zeros > max_zeros {
        return Err(Error::domain(
            func,
            format!("at most {max_zeros} argument(s) may be zero"),
        ));
    }
    if let Some(w) = args.iter().find(|&&w| !is_zero(w) && !in_cut_plane(w)) {
        return Err(Error::domain(
            func,
            format!("argument {w} lies on the nonpositive real axis"),
        ));
    }
    Ok(())
}

/// Exponent `k` (even) such that `2^k * max|arg|` lies in `[1, 4)`.
pub(crate) fn scaling_for(args: &[Complex]) -> i32 {
    let m = args.iter().map(|w| w.norm()).fold(0.0, f64::max);
    scale_exponent(m)
}

pub(crate) fn scaled<const N: usize>(args: [Complex; N], k: i32) -> [Complex; N] {
    args.map(|w| ldexp(w, k))
}
