//! Reference values by direct quadrature of the defining integrals.
//!
//! The half-line is split at `t = 1` (or around a pole); the head uses
//! `t = u^2` to absorb `t^(-1/2)` endpoint behavior and the tail uses
//! `t = L / v^2`, which maps it onto `(0, 1]` with a bounded integrand.

use std::fmt;
use std::str::FromStr;

use crate::complex::{in_cut_plane, is_finite, is_real, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::quartic::{QuadraticCoeffs, QuarticSpec, UpperLimit};
use crate::verify::quadrature::{integrate, QuadratureOptions};

/// Coarsest accuracy the oracle promises; tighter targets are refused.
pub const ORACLE_TARGET: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Integrand {
    Rf,
    Rc,
    Rj,
    Rd,
    Rg,
}

impl Integrand {
    pub const ALL: [Integrand; 5] = [
        Integrand::Rf,
        Integrand::Rc,
        Integrand::Rj,
        Integrand::Rd,
        Integrand::Rg,
    ];

    pub fn arity(self) -> usize {
        match self {
            Integrand::Rc => 2,
            Integrand::Rj => 4,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Integrand::Rf => "rf",
            Integrand::Rc => "rc",
            Integrand::Rj => "rj",
            Integrand::Rd => "rd",
            Integrand::Rg => "rg",
        }
    }

    /// Index of the argument that may sit on the negative axis as a pole.
    fn pole_index(self) -> Option<usize> {
        match self {
            Integrand::Rc => Some(1),
            Integrand::Rj => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Integrand {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Integrand::ALL
            .into_iter()
            .find(|i| i.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown integral {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleSpec {
    pub integrand: Integrand,
    pub args: Vec<Complex>,
    pub principal_value: bool,
    pub target: f64,
}

impl OracleSpec {
    /// Spec at the default target, with the principal-value flag set when
    /// the pole argument is real and negative.
    pub fn new(integrand: Integrand, args: &[Complex]) -> Self {
        let principal_value = integrand
            .pole_index()
            .and_then(|k| args.get(k))
            .is_some_and(|&w| is_real(w) && w.re < 0.0);
        OracleSpec {
            integrand,
            args: args.to_vec(),
            principal_value,
            target: ORACLE_TARGET,
        }
    }

    fn validate(&self) -> Result<Option<f64>> {
        let func = "oracle";
        let kind = self.integrand;
        if self.args.len() != kind.arity() {
            return Err(Error::domain(
                func,
                format!("{kind} takes {} arguments, got {}", kind.arity(), self.args.len()),
            ));
        }
        if !(self.target >= ORACLE_TARGET) {
            return Err(Error::domain(
                func,
                format!("target {} is below the oracle floor {ORACLE_TARGET}", self.target),
            ));
        }
        if !self.args.iter().all(|&w| is_finite(w)) {
            return Err(Error::domain(func, "arguments must be finite"));
        }
        let pole = kind.pole_index();
        let mut pole_at = None;
        for (k, &w) in self.args.iter().enumerate() {
            if Some(k) == pole {
                if w == Complex::new(0.0, 0.0) {
                    return Err(Error::domain(func, "pole argument must be nonzero"));
                }
                if is_real(w) && w.re < 0.0 {
                    pole_at = Some(-w.re);
                }
                continue;
            }
            if w != Complex::new(0.0, 0.0) && !in_cut_plane(w) {
                return Err(Error::domain(func, format!("argument {w} is off the cut plane")));
            }
        }
        if pole_at.is_some() != self.principal_value {
            return Err(Error::domain(
                func,
                "principal-value flag does not match the arguments",
            ));
        }
        let zeros = self.args.iter().filter(|w| w.norm() == 0.0).count();
        let max_zeros = match kind {
            Integrand::Rf | Integrand::Rj => 1,
            Integrand::Rc => 0,
            Integrand::Rd => 1,
            Integrand::Rg => 3,
        };
        if kind == Integrand::Rd && self.args[2].norm() == 0.0 {
            return Err(Error::domain(func, "third argument of rd must be nonzero"));
        }
        if kind == Integrand::Rc && self.args[0].norm() == 0.0 {
            // R_C(0, y) is finite; only y = 0 diverges.
        } else if zeros > max_zeros {
            return Err(Error::domain(func, "too many zero arguments"));
        }
        if kind == Integrand::Rg && zeros == 3 {
            return Err(Error::domain(func, "rg needs a nonzero argument"));
        }
        Ok(pole_at)
    }
}

fn inv_sqrt_product(args: &[Complex], t: f64) -> Complex {
    let prod: Complex = args.iter().map(|&w| principal_sqrt(w + t)).product();
    prod.inv()
}

/// The part of the integrand that stays regular at a negative-axis pole.
fn regular(kind: Integrand, a: &[Complex], t: f64) -> Complex {
    match kind {
        Integrand::Rf => 0.5 * inv_sqrt_product(a, t),
        Integrand::Rc => 0.5 * inv_sqrt_product(&a[..1], t),
        Integrand::Rj => 1.5 * inv_sqrt_product(&a[..3], t),
        Integrand::Rd => {
            let s = principal_sqrt(a[2] + t);
            1.5 * inv_sqrt_product(&a[..2], t) / (s * s * s)
        }
        Integrand::Rg => {
            let sum: Complex = a.iter().map(|&w| w / (w + t)).sum();
            0.25 * t * inv_sqrt_product(a, t) * sum
        }
    }
}

fn density(kind: Integrand, a: &[Complex], t: f64) -> Complex {
    match kind.pole_index() {
        Some(k) => regular(kind, a, t) / (a[k] + t),
        None => regular(kind, a, t),
    }
}

/// `∫_0^L f(t) dt` via `t = u^2`.
fn head<F: Fn(f64) -> Complex>(f: &F, l: f64, opts: QuadratureOptions) -> Result<Complex> {
    let r = integrate(|u| 2.0 * u * f(u * u), 0.0, l.sqrt(), opts)?;
    Ok(r.value)
}

/// `∫_L^∞ f(t) dt` via `t = L / v^2`.
fn tail<F: Fn(f64) -> Complex>(f: &F, l: f64, opts: QuadratureOptions) -> Result<Complex> {
    let r = integrate(|v| (2.0 * l / (v * v * v)) * f(l / (v * v)), 0.0, 1.0, opts)?;
    Ok(r.value)
}

pub fn oracle_eval(spec: &OracleSpec) -> Result<Complex> {
    let pole = spec.validate()?;
    let kind = spec.integrand;
    let args = spec.args.as_slice();
    let opts = QuadratureOptions {
        rel_tol: spec.target * 1e-2,
        abs_tol: 0.0,
        max_intervals: 4000,
    };
    let f = |t: f64| density(kind, args, t);
    match pole {
        None => Ok(head(&f, 1.0, opts)? + tail(&f, 1.0, opts)?),
        Some(t0) => {
            // Symmetric excision taken to the limit: the pair t0 ± u folds
            // into a regular integrand on (0, h].
            let h = 0.5 * t0;
            let g = |t: f64| regular(kind, args, t);
            let folded = integrate(|u| (g(t0 + u) - g(t0 - u)) / u, 0.0, h, opts)?.value;
            Ok(head(&f, t0 - h, opts)? + folded + tail(&f, t0 + h, opts)?)
        }
    }
}

/// `q(e + d)` expanded about `e`, accurate relative to its own size near
/// a zero at `e`.
fn shifted(q: &QuadraticCoeffs, e: f64, d: f64) -> f64 {
    q.eval(e) + d * (2.0 * (q.g + q.h * e) + q.h * d)
}

/// `∫_y^x dt / sqrt(q1 q2)` by quadrature.
///
/// A finite interval is halved and each half integrated in the offset `d`
/// from its own endpoint, with `d = L s^2` absorbing an inverse square root
/// at a simple zero; an infinite tail beyond `L` uses `t = L - 1 + 1/v^2`.
pub fn quartic_oracle(spec: &QuarticSpec) -> Result<f64> {
    spec.validate()?;
    let opts = QuadratureOptions {
        rel_tol: ORACLE_TARGET * 1e-2,
        abs_tol: 0.0,
        max_intervals: 4000,
    };
    let (q1, q2) = (spec.q1, spec.q2);
    // Integral over offsets 0..len from endpoint e, moving in direction dir.
    let from_end = |e: f64, dir: f64, len: f64| -> Result<Complex> {
        let f = |s: f64| {
            let d = dir * len * s * s;
            let v = shifted(&q1, e, d) * shifted(&q2, e, d);
            Complex::new(2.0 * len * s / v.sqrt(), 0.0)
        };
        Ok(integrate(f, 0.0, 1.0, opts)?.value)
    };
    let value = match spec.x {
        UpperLimit::Finite(x) => {
            let half = 0.5 * (x - spec.y);
            from_end(spec.y, 1.0, half)? + from_end(x, -1.0, half)?
        }
        UpperLimit::Infinity => {
            let l = spec.y + 1.0;
            let tail = integrate(
                |v| Complex::new((2.0 / (v * v * v)) * spec.integrand(l - 1.0 + 1.0 / (v * v)), 0.0),
                0.0,
                1.0,
                opts,
            )?;
            from_end(spec.y, 1.0, 1.0)? + tail.value
        }
    };
    Ok(value.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c64;

    fn re(v: f64) -> Complex {
        c64(v, 0.0)
    }

    fn eval(kind: Integrand, args: &[Complex]) -> Complex {
        oracle_eval(&OracleSpec::new(kind, args)).unwrap()
    }

    #[test]
    fn reference_values() {
        let v = eval(Integrand::Rf, &[re(2.0), re(3.0), re(4.0)]);
        assert!((v.re - 0.584_082_841_677_15).abs() < 1e-9);
        let v = eval(Integrand::Rc, &[re(0.0), re(0.25)]);
        assert!((v.re - std::f64::consts::PI).abs() < 1e-9);
        let v = eval(Integrand::Rd, &[re(2.0), re(3.0), re(4.0)]);
        assert!((v.re - 0.165_105_272_942_61).abs() < 1e-9);
        let v = eval(Integrand::Rg, &[re(2.0), re(3.0), re(4.0)]);
        assert!((v.re - 1.725_503_028_069_2).abs() < 1e-9);
    }

    #[test]
    fn complex_and_principal_values() {
        let v = eval(Integrand::Rc, &[c64(0.0, 1.0), re(-1.0)]);
        assert!((v - c64(0.777_785_969_204_47, 0.198_324_849_934_29)).norm() < 1e-9);
        let v = eval(Integrand::Rj, &[re(2.0), re(3.0), re(4.0), re(-0.5)]);
        assert!((v.re - 0.247_238_197_030_52).abs() < 1e-9);
        let v = eval(Integrand::Rj, &[re(2.0), re(3.0), re(4.0), re(-5.0)]);
        assert!((v.re + 0.127_112_300_429_64).abs() < 1e-9);
        let v = eval(Integrand::Rf, &[c64(-1.0, 1.0), c64(0.0, 1.0), c64(1.0, -1.0)]);
        assert!((v - c64(0.939_120_502_186_19, -0.532_962_520_186_35)).norm() < 1e-9);
    }

    #[test]
    fn quartic_examples() {
        let spec = QuarticSpec::finite(
            QuadraticCoeffs::new(1.0, 0.0, -1.0),
            QuadraticCoeffs::new(1.0, 0.0, 1.0),
            0.0,
            1.0,
        );
        assert!((quartic_oracle(&spec).unwrap() - 1.311_028_777_146_06).abs() < 1e-9);
        let spec = QuarticSpec::to_infinity(
            QuadraticCoeffs::new(0.0, 0.5, 0.0),
            QuadraticCoeffs::new(-1.0, 0.0, 1.0),
            1.0,
        );
        assert!((quartic_oracle(&spec).unwrap() - 2.622_057_554_292_12).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_specs() {
        let mut spec = OracleSpec::new(Integrand::Rf, &[re(1.0), re(2.0), re(3.0)]);
        spec.target = 1e-12;
        assert!(oracle_eval(&spec).is_err());
        let mut spec = OracleSpec::new(Integrand::Rc, &[re(1.0), re(-2.0)]);
        spec.principal_value = false;
        assert!(oracle_eval(&spec).is_err());
        assert!(oracle_eval(&OracleSpec::new(Integrand::Rf, &[re(-1.0), re(2.0), re(3.0)])).is_err());
        assert!(oracle_eval(&OracleSpec::new(Integrand::Rf, &[re(0.0), re(0.0), re(3.0)])).is_err());
        assert!(oracle_eval(&OracleSpec::new(Integrand::Rd, &[re(1.0), re(2.0), re(0.0)])).is_err());
        assert!(oracle_eval(&OracleSpec::new(Integrand::Rc, &[re(1.0)])).is_err());
    }
}
