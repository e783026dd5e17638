//! Inverse circular and hyperbolic functions through `R_C`.

use std::fmt;
use std::str::FromStr;

use crate::complex::{is_real, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::symmetric::rc;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseKind {
    /// `ln(x/y)`
    Ln,
    /// `arctan(x/y)`
    Arctan,
    /// `arctanh(x/y)`
    Arctanh,
    /// `arcsin(x/y)`
    Arcsin,
    /// `arcsinh(x/y)`
    Arcsinh,
    /// `arccos(x/y)`
    Arccos,
    /// `arccosh(x/y)`
    Arccosh,
}

impl InverseKind {
    pub const ALL: [InverseKind; 7] = [
        InverseKind::Ln,
        InverseKind::Arctan,
        InverseKind::Arctanh,
        InverseKind::Arcsin,
        InverseKind::Arcsinh,
        InverseKind::Arccos,
        InverseKind::Arccosh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InverseKind::Ln => "ln",
            InverseKind::Arctan => "atan",
            InverseKind::Arctanh => "atanh",
            InverseKind::Arcsin => "asin",
            InverseKind::Arcsinh => "asinh",
            InverseKind::Arccos => "acos",
            InverseKind::Arccosh => "acosh",
        }
    }

    /// Real-variable domain for `x` given `y > 0`.
    fn real_domain_ok(self, x: f64, y: f64) -> bool {
        match self {
            InverseKind::Ln => x > 0.0,
            InverseKind::Arctan | InverseKind::Arcsinh => true,
            InverseKind::Arctanh => -y < x && x < y,
            InverseKind::Arcsin => -y <= x && x <= y,
            InverseKind::Arccos => 0.0 <= x && x <= y,
            InverseKind::Arccosh => x >= y,
        }
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InverseKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        InverseKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown inverse function {s:?}"))
    }
}

/// Evaluates the inverse function of `x/y` named by `kind` as an elementary
/// prefactor times `R_C`.
///
/// For real `x, y` the usual real domains apply (with `y > 0`); complex
/// arguments are accepted whenever the `R_C` call is defined.
pub fn inverse_via_rc(kind: InverseKind, x: Complex, y: Complex, r: Tolerance) -> Result<Complex> {
    if is_real(x) && is_real(y) {
        if !(y.re > 0.0) {
            return Err(Error::domain(kind.name(), "y must be positive"));
        }
        if !kind.real_domain_ok(x.re, y.re) {
            return Err(Error::domain(
                kind.name(),
                format!("x = {} outside the real domain for y = {}", x.re, y.re),
            ));
        }
    }
    let x2 = x * x;
    let y2 = y * y;
    // y^2 - x^2 factored to keep accuracy near |x| = |y|.
    let diff = (y - x) * (y + x);
    let v = match kind {
        InverseKind::Ln => {
            let h = (x + y) * 0.5;
            (x - y) * rc(h * h, x * y, r)?.value
        }
        InverseKind::Arctan => x * rc(y2, y2 + x2, r)?.value,
        InverseKind::Arctanh => x * rc(y2, diff, r)?.value,
        InverseKind::Arcsin => x * rc(diff, y2, r)?.value,
        InverseKind::Arcsinh => x * rc(y2 + x2, y2, r)?.value,
        InverseKind::Arccos => principal_sqrt(diff) * rc(x2, y2, r)?.value,
        InverseKind::Arccosh => principal_sqrt(-diff) * rc(x2, y2, r)?.value,
    };
    Ok(v)
}
