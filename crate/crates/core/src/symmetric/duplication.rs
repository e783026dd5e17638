//! State of the duplication iteration shared by `rf`, `rd` and `rj`.
//!
//! One step replaces every argument `w` by `(w + lambda) / 4`, where
//! `lambda = sqrt(x)sqrt(y) + sqrt(x)sqrt(z) + sqrt(y)sqrt(z)`. The weighted
//! mean `A` obeys the same recurrence, so it is advanced directly rather
//! than recomputed from the arguments.

use crate::complex::{principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// Hard cap on the number of duplications.
pub const MAX_DUPLICATIONS: u32 = 120;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DuplicationState {
    /// Iteration index.
    pub m: u32,
    /// Weighted mean `A_m` of the arguments.
    pub a: Complex,
    pub x: Complex,
    pub y: Complex,
    pub z: Complex,
    /// Fourth argument, present for `rj`.
    pub p: Option<Complex>,
    /// `(p - x)(p - y)(p - z)` of the initial arguments, present for `rj`.
    pub delta: Option<Complex>,
    /// Termination threshold: iteration stops at the first `m` with
    /// `4^-m * q < |A_m|`.
    pub q: f64,
}

/// Quantities computed while advancing from `m` to `m + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepTerms {
    pub lambda: Complex,
    pub sqrt_x: Complex,
    pub sqrt_y: Complex,
    pub sqrt_z: Complex,
    /// `d_m = (sqrt p + sqrt x)(sqrt p + sqrt y)(sqrt p + sqrt z)`.
    pub d: Option<Complex>,
    /// `e_m = 4^(-3m) * delta / d_m^2`.
    pub e: Option<Complex>,
}

fn max_deviation(a: Complex, args: &[Complex]) -> f64 {
    args.iter().map(|&w| (a - w).norm()).fold(0.0, f64::max)
}

impl DuplicationState {
    /// Initial state for `R_F(x, y, z)`: `A_0` is the plain mean and
    /// `Q = (3r)^(-1/6) max|A_0 - w|`.
    pub fn for_rf(x: Complex, y: Complex, z: Complex, r: Tolerance) -> Self {
        let a = (x + y + z) / 3.0;
        let q = (3.0 * r.value()).powf(-1.0 / 6.0) * max_deviation(a, &[x, y, z]);
        Self::initial(a, x, y, z, None, q)
    }

    /// Initial state for `R_D(x, y, z)`, which is treated as symmetric in
    /// `x, y, z, z, z`.
    pub fn for_rd(x: Complex, y: Complex, z: Complex, r: Tolerance) -> Self {
        let a = (x + y + 3.0 * z) / 5.0;
        let q = (0.25 * r.value()).powf(-1.0 / 6.0) * max_deviation(a, &[x, y, z]);
        Self::initial(a, x, y, z, None, q)
    }

    /// Initial state for `R_J(x, y, z, p)`, treated as symmetric in
    /// `x, y, z, p, p`.
    pub fn for_rj(x: Complex, y: Complex, z: Complex, p: Complex, r: Tolerance) -> Self {
        let a = (x + y + z + 2.0 * p) / 5.0;
        let q = (0.25 * r.value()).powf(-1.0 / 6.0) * max_deviation(a, &[x, y, z, p]);
        let mut s = Self::initial(a, x, y, z, Some(p), q);
        s.delta = Some((p - x) * (p - y) * (p - z));
        s
    }

    fn initial(a: Complex, x: Complex, y: Complex, z: Complex, p: Option<Complex>, q: f64) -> Self {
        DuplicationState {
            m: 0,
            a,
            x,
            y,
            z,
            p,
            delta: None,
            q,
        }
    }

    /// `4^-m`, exact.
    pub fn scale(&self) -> f64 {
        0.25f64.powi(self.m as i32)
    }

    /// The stopping rule `4^-m Q < |A_m|`.
    pub fn converged(&self) -> bool {
        self.scale() * self.q < self.a.norm()
    }

    /// Advances one duplication and reports the terms used.
    pub fn step(&self) -> (StepTerms, DuplicationState) {
        let sx = principal_sqrt(self.x);
        let sy = principal_sqrt(self.y);
        let sz = principal_sqrt(self.z);
        let lambda = sx * sy + sx * sz + sy * sz;

        let (d, e) = match (self.p, self.delta) {
            (Some(p), Some(delta)) => {
                let sp = principal_sqrt(p);
                let d = (sp + sx) * (sp + sy) * (sp + sz);
                let e = delta * 0.015625f64.powi(self.m as i32) / (d * d);
                (Some(d), Some(e))
            }
            _ => (None, None),
        };

        let next = DuplicationState {
            m: self.m + 1,
            a: (self.a + lambda) * 0.25,
            x: (self.x + lambda) * 0.25,
            y: (self.y + lambda) * 0.25,
            z: (self.z + lambda) * 0.25,
            p: self.p.map(|p| (p + lambda) * 0.25),
            delta: self.delta,
            q: self.q,
        };
        let terms = StepTerms {
            lambda,
            sqrt_x: sx,
            sqrt_y: sy,
            sqrt_z: sz,
            d,
            e,
        };
        (terms, next)
    }

    /// Runs the iteration to termination, handing each step's terms to
    /// `on_step` together with the state they were computed from.
    pub(crate) fn run<F>(self, func: &'static str, mut on_step: F) -> Result<DuplicationState>
    where
        F: FnMut(&DuplicationState, &StepTerms) -> Result<()>,
    {
        let mut state = self;
        while !state.converged() {
            if state.m >= MAX_DUPLICATIONS || !state.a.norm().is_finite() {
                return Err(Error::NoConvergence {
                    func,
                    cap: MAX_DUPLICATIONS,
                });
            }
            let (terms, next) = state.step();
            on_step(&state, &terms)?;
            state = next;
        }
        Ok(state)
    }
}

/// One application of the duplication theorem.
pub fn duplication_step(state: &DuplicationState) -> DuplicationState {
    state.step().1
}
