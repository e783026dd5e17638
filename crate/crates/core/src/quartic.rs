//! `∫_y^x dt / sqrt(q1(t) q2(t))` for real quadratics `q_i = f_i + 2 g_i t + h_i t^2`,
//! reduced to a single `R_F` call.

use crate::complex::{principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::symmetric::rf;
use crate::tolerance::Tolerance;

const FUNC: &str = "quartic";

/// Chebyshev sample count for the positivity check.
const SAMPLES: usize = 33;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticCoeffs {
    pub f: f64,
    pub g: f64,
    pub h: f64,
}

impl QuadraticCoeffs {
    pub const fn new(f: f64, g: f64, h: f64) -> Self {
        QuadraticCoeffs { f, g, h }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.f + t * (2.0 * self.g + t * self.h)
    }

    /// `g^2 - f h`; negative exactly when the zeros are a complex pair.
    pub fn discriminant(&self) -> f64 {
        self.g * self.g - self.f * self.h
    }

    pub fn degree(&self) -> u32 {
        if self.h != 0.0 {
            2
        } else if self.g != 0.0 {
            1
        } else {
            0
        }
    }

    /// Real zeros in ascending order.
    pub fn real_roots(&self) -> Vec<f64> {
        match self.degree() {
            0 => vec![],
            1 => vec![-self.f / (2.0 * self.g)],
            _ => {
                let d = self.discriminant();
                if d < 0.0 {
                    return vec![];
                }
                let s = d.sqrt();
                let q = -(self.g + s.copysign(self.g));
                let (a, b) = if q == 0.0 {
                    (0.0, 0.0)
                } else {
                    (q / self.h, self.f / q)
                };
                if a <= b {
                    vec![a, b]
                } else {
                    vec![b, a]
                }
            }
        }
    }

    /// `(a, b)` with zeros `a ± b i`, `b > 0`, when the zeros are complex.
    pub fn complex_zeros(&self) -> Option<(f64, f64)> {
        let d = self.discriminant();
        (self.h != 0.0 && d < 0.0).then(|| (-self.g / self.h, (-d).sqrt() / self.h.abs()))
    }

    /// Rounding scale of `eval(t)`.
    fn magnitude(&self, t: f64) -> f64 {
        self.f.abs() + (2.0 * self.g * t).abs() + (self.h * t * t).abs()
    }

    fn vanishes_at(&self, t: f64) -> bool {
        self.eval(t).abs() <= 8.0 * f64::EPSILON * self.magnitude(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UpperLimit {
    Finite(f64),
    Infinity,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticSpec {
    pub q1: QuadraticCoeffs,
    pub q2: QuadraticCoeffs,
    pub y: f64,
    pub x: UpperLimit,
}

impl QuarticSpec {
    pub fn finite(q1: QuadraticCoeffs, q2: QuadraticCoeffs, y: f64, x: f64) -> Self {
        QuarticSpec {
            q1,
            q2,
            y,
            x: UpperLimit::Finite(x),
        }
    }

    pub fn to_infinity(q1: QuadraticCoeffs, q2: QuadraticCoeffs, y: f64) -> Self {
        QuarticSpec {
            q1,
            q2,
            y,
            x: UpperLimit::Infinity,
        }
    }

    /// The integrand at `t`.
    pub fn integrand(&self, t: f64) -> f64 {
        1.0 / (self.q1.eval(t) * self.q2.eval(t)).sqrt()
    }

    fn with_limits(&self, y: f64, x: UpperLimit) -> Self {
        QuarticSpec { y, x, ..*self }
    }

    /// Checks the interval and the sign conditions on both quadratics.
    pub fn validate(&self) -> Result<()> {
        let y = self.y;
        if !y.is_finite() {
            return Err(Error::domain(FUNC, "lower limit must be finite"));
        }
        for q in [self.q1, self.q2] {
            if ![q.f, q.g, q.h].iter().all(|c| c.is_finite()) {
                return Err(Error::domain(FUNC, "coefficients must be finite"));
            }
            if q.f == 0.0 && q.g == 0.0 && q.h == 0.0 {
                return Err(Error::domain(FUNC, "quadratic is identically zero"));
            }
        }
        match self.x {
            UpperLimit::Finite(x) if !(x.is_finite() && x > y) => {
                return Err(Error::domain(FUNC, format!("need x > y, got [{y}, {x}]")));
            }
            UpperLimit::Infinity if self.q1.degree() + self.q2.degree() < 3 => {
                return Err(Error::domain(
                    FUNC,
                    "integral to infinity diverges: total degree below 3",
                ));
            }
            _ => {}
        }
        for (name, q) in [("q1", self.q1), ("q2", self.q2)] {
            self.check_positive(name, q)?;
        }
        for end in self.endpoints() {
            let z1 = self.q1.vanishes_at(end);
            let z2 = self.q2.vanishes_at(end);
            let double = |q: QuadraticCoeffs, z: bool| {
                z && q.degree() == 2 && q.discriminant().abs() <= 8.0 * f64::EPSILON * q.g * q.g
            };
            if (z1 && z2) || double(self.q1, z1) || double(self.q2, z2) {
                return Err(Error::domain(
                    FUNC,
                    format!("integrand has a non-integrable zero at t = {end}"),
                ));
            }
        }
        Ok(())
    }

    fn endpoints(&self) -> Vec<f64> {
        match self.x {
            UpperLimit::Finite(x) => vec![self.y, x],
            UpperLimit::Infinity => vec![self.y],
        }
    }

    /// Chebyshev points of the open interval; on a half-line they are mapped
    /// through `t = y + s / (1 - s)`.
    fn sample_points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..SAMPLES).map(move |j| {
            let c = ((2 * j + 1) as f64 * std::f64::consts::PI / (2 * SAMPLES) as f64).cos();
            let s = 0.5 * (1.0 - c);
            match self.x {
                UpperLimit::Finite(x) => self.y + (x - self.y) * s,
                UpperLimit::Infinity => self.y + s / (1.0 - s),
            }
        })
    }

    fn check_positive(&self, name: &str, q: QuadraticCoeffs) -> Result<()> {
        let (lo, hi) = match self.x {
            UpperLimit::Finite(x) => (self.y, x),
            UpperLimit::Infinity => (self.y, f64::INFINITY),
        };
        let slack = 8.0 * f64::EPSILON * lo.abs().max(if hi.is_finite() { hi.abs() } else { 0.0 });
        if let Some(root) = q
            .real_roots()
            .into_iter()
            .find(|&t| t > lo + slack && t < hi - slack)
        {
            return Err(Error::domain(
                FUNC,
                format!("{name} has a zero at t = {root} inside the interval"),
            ));
        }
        if let Some(t) = self.sample_points().find(|&t| !(q.eval(t) > 0.0)) {
            return Err(Error::domain(
                FUNC,
                format!("{name} is not positive at t = {t}"),
            ));
        }
        if hi.is_infinite() {
            let lead = match q.degree() {
                2 => q.h,
                1 => q.g,
                _ => q.f,
            };
            if lead <= 0.0 {
                return Err(Error::domain(FUNC, format!("{name} is negative for large t")));
            }
        }
        Ok(())
    }

    /// Real point where the diagonals of the quadrilateral of complex zeros
    /// cross the axis, when both quadratics have complex zeros.
    pub fn diagonal_crossing(&self) -> Option<f64> {
        let (a, b) = self.q1.complex_zeros()?;
        let (c, d) = self.q2.complex_zeros()?;
        Some((a * d + c * b) / (b + d))
    }
}

/// `U`, `T`, `V` of the reduction together with the endpoint values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReductionIntermediates {
    pub u: Complex,
    pub t: Complex,
    pub v: Complex,
    pub q1_y: f64,
    pub q2_y: f64,
    /// `None` for an infinite upper limit.
    pub q1_x: Option<f64>,
    pub q2_x: Option<f64>,
}

impl ReductionIntermediates {
    pub fn new(spec: &QuarticSpec) -> Self {
        let (q1, q2) = (spec.q1, spec.q2);
        let q1_y = q1.eval(spec.y).max(0.0);
        let q2_y = q2.eval(spec.y).max(0.0);
        let (u, q1_x, q2_x) = match spec.x {
            UpperLimit::Finite(x) => {
                let q1_x = q1.eval(x).max(0.0);
                let q2_x = q2.eval(x).max(0.0);
                let u = ((q1_x * q2_y).sqrt() + (q1_y * q2_x).sqrt()) / (x - spec.y);
                (u, Some(q1_x), Some(q2_x))
            }
            UpperLimit::Infinity => ((q1.h * q2_y).sqrt() + (q1_y * q2.h).sqrt(), None, None),
        };
        let t = 2.0 * q1.g * q2.g - q1.f * q2.h - q2.f * q1.h;
        let v = 2.0 * principal_sqrt(Complex::new(q1.discriminant() * q2.discriminant(), 0.0));
        ReductionIntermediates {
            u: Complex::new(u, 0.0),
            t: Complex::new(t, 0.0),
            v,
            q1_y,
            q2_y,
            q1_x,
            q2_x,
        }
    }

    /// `R_F` arguments `(U^2 + T + V, U^2 + T - V, U^2)`.
    pub fn rf_args(&self) -> [Complex; 3] {
        let u2 = self.u * self.u;
        let base = u2 + self.t;
        let mut args = [base + self.v, base - self.v, u2];
        // A real argument that should be zero may come out as a rounding-level
        // negative number.
        let scale = 16.0 * f64::EPSILON * (u2.re + self.t.re.abs() + self.v.norm());
        for a in &mut args {
            if a.im == 0.0 && a.re < 0.0 && -a.re <= scale {
                a.re = 0.0;
            }
        }
        args
    }
}

/// Result of [`eval_quartic_detailed`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticValue {
    pub value: Complex,
    /// The split point, when the interval was divided at the diagonal crossing.
    pub split_at: Option<f64>,
}

fn eval_unsplit(spec: &QuarticSpec, r: Tolerance) -> Result<Complex> {
    let [a, b, c] = ReductionIntermediates::new(spec).rf_args();
    Ok(2.0 * rf(a, b, c, r)?.value)
}

pub fn eval_quartic_detailed(spec: &QuarticSpec, r: Tolerance) -> Result<QuarticValue> {
    spec.validate()?;
    let split = spec.diagonal_crossing().filter(|&t| {
        let margin = match spec.x {
            UpperLimit::Finite(x) => 8.0 * f64::EPSILON * (x - spec.y),
            UpperLimit::Infinity => 8.0 * f64::EPSILON * spec.y.abs().max(t.abs()),
        };
        let below_top = match spec.x {
            UpperLimit::Finite(x) => t < x - margin,
            UpperLimit::Infinity => true,
        };
        t > spec.y + margin && below_top
    });
    let value = match split {
        Some(t) => {
            let lower = spec.with_limits(spec.y, UpperLimit::Finite(t));
            let upper = spec.with_limits(t, spec.x);
            eval_unsplit(&lower, r)? + eval_unsplit(&upper, r)?
        }
        None => eval_unsplit(spec, r)?,
    };
    Ok(QuarticValue {
        value,
        split_at: split,
    })
}

pub fn eval_quartic(spec: &QuarticSpec, r: Tolerance) -> Result<f64> {
    Ok(eval_quartic_detailed(spec, r)?.value.re)
}
