use crate::complex::Complex;
use crate::error::{Error, Result};

/// Smallest admissible relative error: roundoff must stay negligible next to
/// the truncation error the algorithms control.
pub const MIN_REL_ERR: f64 = 50.0 * f64::EPSILON;

/// Upper limits per algorithm.
pub const MAX_REL_ERR_RF: f64 = 3.0e-4;
pub const MAX_REL_ERR_RC: f64 = 2.0e-4;
pub const MAX_REL_ERR_RJ: f64 = 1.0e-4;
pub const MAX_REL_ERR_RD: f64 = 1.0e-4;

/// Default relative error when none is given.
pub const DEFAULT_REL_ERR: f64 = 1.0e-10;

/// Requested bound on the relative error of a result.
///
/// Construction only checks the lower bound and the loosest upper bound;
/// each algorithm then checks its own limit on entry.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    pub fn new(r: f64) -> Result<Self> {
        Self::checked("tolerance", r, MAX_REL_ERR_RF)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub(crate) fn checked(func: &'static str, r: f64, max: f64) -> Result<Self> {
        if r.is_finite() && r > MIN_REL_ERR && r <= max {
            Ok(Tolerance(r))
        } else {
            Err(Error::Tolerance {
                func,
                r,
                min: MIN_REL_ERR,
                max,
            })
        }
    }

    pub(crate) fn limit(self, func: &'static str, max: f64) -> Result<Self> {
        Self::checked(func, self.0, max)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(DEFAULT_REL_ERR)
    }
}

/// Value of an integral together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex,
    pub r: Tolerance,
    /// Duplication steps taken by the outermost algorithm.
    pub n_iterations: u32,
    /// Set when the caller bypassed the admissibility checks of `rj`.
    pub unchecked: bool,
}

impl EvalResult {
    pub(crate) fn new(value: Complex, r: Tolerance, n_iterations: u32) -> Self {
        EvalResult {
            value,
            r,
            n_iterations,
            unchecked: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert!(Tolerance::new(1e-10).is_ok());
        assert!(Tolerance::new(3e-4).is_ok());
        assert!(Tolerance::new(3.1e-4).is_err());
        assert!(Tolerance::new(1e-15).is_err());
        assert!(Tolerance::new(f64::NAN).is_err());
        assert!(Tolerance::new(-1e-6).is_err());
        let t = Tolerance::new(2e-4).unwrap();
        assert!(t.limit("rj", MAX_REL_ERR_RJ).is_err());
        assert!(t.limit("rc", MAX_REL_ERR_RC).is_ok());
        assert_eq!(Tolerance::default().value(), 1e-10);
    }
}
