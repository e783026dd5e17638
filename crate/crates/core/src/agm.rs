//! Complete integrals `R_F(x, y, 0)`, `R_G(x, y, 0)` and `R_D(0, y, z)` by
//! arithmetic-geometric means.
//!
//! Starting from `sqrt(x)` and `sqrt(y)`, both in the open right half-plane,
//! the means converge quadratically. Iteration stops at the first `n` with
//! `|x_n - y_n| < 2.7 sqrt(r) |x_n|`.

use std::f64::consts::PI;

use crate::complex::{in_cut_plane, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::symmetric::require_finite;
use crate::tolerance::Tolerance;

/// Iteration cap for the means.
pub const MAX_AGM_STEPS: u32 = 60;

/// `R_F(x, y, 0)` and `R_G(x, y, 0)` from one run of the means.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompleteIntegrals {
    pub rf0: Complex,
    pub rg0: Complex,
    pub n_iterations: u32,
}

/// One iterate of the means together with the running sum
/// `sum_{m=1}^{n} 2^(m-2) (x_m - y_m)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgmState {
    pub m: u32,
    pub x: Complex,
    pub y: Complex,
    pub partial_sum: Complex,
}

impl AgmState {
    pub fn new(x: Complex, y: Complex) -> Self {
        AgmState {
            m: 0,
            x: principal_sqrt(x),
            y: principal_sqrt(y),
            partial_sum: Complex::new(0.0, 0.0),
        }
    }

    pub fn step(&self) -> Self {
        let m = self.m + 1;
        let x = (self.x + self.y) * 0.5;
        let y = principal_sqrt(self.x * self.y);
        let d = x - y;
        let weight = 2f64.powi(m as i32 - 2);
        AgmState {
            m,
            x,
            y,
            partial_sum: self.partial_sum + weight * d * d,
        }
    }

    fn converged(&self, r: f64) -> bool {
        (self.x - self.y).norm() < 2.7 * r.sqrt() * self.x.norm()
    }
}

fn check_args(func: &'static str, x: Complex, y: Complex) -> Result<()> {
    require_finite(func, &[x, y])?;
    for w in [x, y] {
        if !in_cut_plane(w) {
            return Err(Error::domain(
                func,
                format!("argument {w} must be nonzero and off the nonpositive real axis"),
            ));
        }
    }
    Ok(())
}

/// `R_F(x, y, 0)` and `R_G(x, y, 0)` for `x, y` in the cut plane.
pub fn complete_rf_rg(x: Complex, y: Complex, r: Tolerance) -> Result<CompleteIntegrals> {
    check_args("complete_rf_rg", x, y)?;
    complete_unchecked(x, y, r.value())
}

fn complete_unchecked(x: Complex, y: Complex, r: f64) -> Result<CompleteIntegrals> {
    let start = AgmState::new(x, y);
    let mut s = start;
    while !s.converged(r) {
        if s.m >= MAX_AGM_STEPS {
            return Err(Error::NoConvergence {
                func: "complete_rf_rg",
                cap: MAX_AGM_STEPS,
            });
        }
        s = s.step();
    }
    let rf0 = PI / (s.x + s.y);
    let mean0 = (start.x + start.y) * 0.5;
    let rg0 = (mean0 * mean0 - s.partial_sum) * rf0 * 0.5;
    Ok(CompleteIntegrals {
        rf0,
        rg0,
        n_iterations: s.m,
    })
}

/// `R_D(0, y, z)` for `y, z` in the cut plane.
///
/// For `y == z` exactly this is `(3 pi / 4) y^(-3/2)`. Otherwise it is
/// `3 / (z (y - z)) [2 R_G(y, z, 0) - z R_F(y, z, 0)]`; the bracket cancels
/// when `y` is close to `z`, so the means are run to a relative error reduced
/// by `|y - z| / max(|y|, |z|)`.
pub fn rd_complete(y: Complex, z: Complex, r: Tolerance) -> Result<Complex> {
    check_args("rd_complete", y, z)?;
    if y == z {
        return Ok(3.0 * PI / 4.0 / (y * principal_sqrt(y)));
    }
    let diff = y - z;
    let spread = diff.norm() / y.norm().max(z.norm());
    let inner = (r.value() * spread.min(1.0)).max(f64::EPSILON);
    let c = complete_unchecked(y, z, inner)?;
    Ok(3.0 / (z * diff) * (2.0 * c.rg0 - z * c.rf0))
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
        let c = complete_rf_rg(c64(1.0, 0.0), c64(2.0, 0.0), tol()).unwrap();
        assert!(close(c.rf0, c64(1.311_028_777_146_1, 0.0), 1e-13));
        let c = complete_rf_rg(c64(-1.0, 1.0), c64(0.0, 1.0), tol()).unwrap();
        assert!(close(c.rf0, c64(0.796_125_865_842_34, -1.213_856_669_836_5), 1e-13));
        assert!(close(c.rg0, c64(0.446_605_916_770_18, 0.707_683_523_575_15), 1e-12));
        let c = complete_rf_rg(c64(16.0, 0.0), c64(16.0, 0.0), tol()).unwrap();
        assert_eq!(c.n_iterations, 0);
        assert!(close(c.rg0, c64(PI, 0.0), 1e-15));
    }

    #[test]
    fn conjugate_arguments() {
        let c = complete_rf_rg(c64(0.0, 1.0), c64(0.0, -1.0), tol()).unwrap();
        assert!(close(c.rf0, c64(1.854_074_677_301_4, 0.0), 1e-13));
    }

    #[test]
    fn rd_complete_values() {
        let v = rd_complete(c64(2.0, 0.0), c64(1.0, 0.0), tol()).unwrap();
        assert!(close(v, c64(1.797_210_352_103_4, 0.0), 1e-12));
        let v = rd_complete(c64(1.0, 0.0), c64(1.0, 0.0), tol()).unwrap();
        assert!(close(v, c64(2.356_194_490_192_345, 0.0), 1e-15));
        let v = rd_complete(c64(0.0, 1.0), c64(0.0, -1.0), tol()).unwrap();
        assert!(close(v, c64(1.270_819_627_191_0, 2.781_112_015_952_1), 1e-12));
    }

    #[test]
    fn errors() {
        let one = c64(1.0, 0.0);
        assert!(complete_rf_rg(c64(0.0, 0.0), one, tol()).is_err());
        assert!(complete_rf_rg(c64(-1.0, 0.0), one, tol()).is_err());
        assert!(rd_complete(one, c64(0.0, 0.0), tol()).is_err());
    }

    #[test]
    fn few_iterations() {
        let r = Tolerance::new(1e-10).unwrap();
        for (x, y) in [(1.0, 2.0), (0.3, 7.0), (1.0, 0.0199), (0.01, 1.0)] {
            let c = complete_rf_rg(c64(x, 0.0), c64(y, 0.0), r).unwrap();
            assert!(c.n_iterations <= 8, "({x}, {y}) took {}", c.n_iterations);
        }
    }
}
