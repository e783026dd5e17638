//! Addition-theorem identities checked on random arguments.
//!
//! For positive `x, y, p` and `lambda * mu = x y`:
//!
//! ```text
//! rf(x+l, y+l, l) + rf(x+m, y+m, m) = rf(x, y, 0)
//! rc(l, x+l) + rc(n, x+n) = rc(0, x)        where l n = x^2
//! rj(x+l, y+l, l, p+l) + rj(x+m, y+m, m, p+m) = rj(x, y, 0, p) - 3 rc(a, b)
//! rd(l, x+l, y+l) + rd(m, x+m, y+m) = rd(0, x, y) - 3 / (y sqrt(x+y+l+m))
//! ```
//!
//! with `a = p^2 (l+m+x+y)` and `b = p (p+l)(p+m)`. Separately, for `x, y, z`
//! in the cut plane, `rd(x,y,z) + rd(y,z,x) + rd(z,x,y) = 3 / (sqrt x sqrt y sqrt z)`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{in_cut_plane, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::symmetric::{rc, rd, rf, rj};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    RfAddition,
    RcAddition,
    RjAddition,
    RdAddition,
    RdCyclic,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::RfAddition,
        Identity::RcAddition,
        Identity::RjAddition,
        Identity::RdAddition,
        Identity::RdCyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::RfAddition => "rf addition",
            Identity::RcAddition => "rc addition",
            Identity::RjAddition => "rj addition",
            Identity::RdAddition => "rd addition",
            Identity::RdCyclic => "rd cyclic sum",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Arguments for the four addition identities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyCase {
    pub x: f64,
    pub y: f64,
    pub p: f64,
    pub lambda: Complex,
    pub mu: Complex,
    pub a: Complex,
    pub b: Complex,
}

impl ConsistencyCase {
    /// # Panics
    ///
    /// If `x, y, p` are not positive, `lambda` is off the cut plane, or the
    /// constructed `b - a` misses `p (p - x)(p - y)` by more than rounding.
    pub fn new(x: f64, y: f64, p: f64, lambda: Complex) -> Self {
        assert!(x > 0.0 && y > 0.0 && p > 0.0, "x, y, p must be positive");
        assert!(in_cut_plane(lambda), "lambda must lie in the cut plane");
        let mu = x * y / lambda;
        let a = p * p * (lambda + mu + x + y);
        let b = p * (p + lambda) * (p + mu);
        let expected = p * (p - x) * (p - y);
        let scale = a.norm() + b.norm() + p * (p + x) * (p + y);
        assert!(
            (b - a - expected).norm() <= 8.0 * f64::EPSILON * scale,
            "b - a = {} but p(p-x)(p-y) = {expected}",
            b - a
        );
        ConsistencyCase {
            x,
            y,
            p,
            lambda,
            mu,
            a,
            b,
        }
    }

    /// Residual of each addition identity relative to its largest term.
    ///
    /// The `rj` identity is left out unless `Re lambda >= 0`, where every
    /// `rj` call on the left stays within its admissible set.
    pub fn residuals(&self, r: Tolerance) -> Result<Vec<(Identity, f64)>> {
        let mut ids = vec![Identity::RfAddition, Identity::RcAddition];
        if self.lambda.re >= 0.0 && self.mu.re >= 0.0 {
            ids.push(Identity::RjAddition);
        }
        ids.push(Identity::RdAddition);
        ids.into_iter()
            .map(|id| Ok((id, self.residual(id, r)?)))
            .collect()
    }

    /// Residual of one addition identity relative to its largest term.
    pub fn residual(&self, identity: Identity, r: Tolerance) -> Result<f64> {
        let (x, y, p) = (re(self.x), re(self.y), re(self.p));
        let (l, m) = (self.lambda, self.mu);
        let zero = re(0.0);
        let terms = match identity {
            Identity::RfAddition => vec![
                rf(x + l, y + l, l, r)?.value,
                rf(x + m, y + m, m, r)?.value,
                -rf(x, y, zero, r)?.value,
            ],
            Identity::RcAddition => {
                // The rc identity is the rf one with y = x, so its partner is x^2 / l.
                let n = x * x / l;
                vec![
                    rc(l, x + l, r)?.value,
                    rc(n, x + n, r)?.value,
                    -rc(zero, x, r)?.value,
                ]
            }
            Identity::RjAddition => vec![
                rj(x + l, y + l, l, p + l, r)?.value,
                rj(x + m, y + m, m, p + m, r)?.value,
                -rj(x, y, zero, p, r)?.value,
                3.0 * rc(self.a, self.b, r)?.value,
            ],
            Identity::RdAddition => vec![
                rd(l, x + l, y + l, r)?.value,
                rd(m, x + m, y + m, r)?.value,
                -rd(zero, x, y, r)?.value,
                3.0 / (y * principal_sqrt(x + y + l + m)),
            ],
            Identity::RdCyclic => {
                return Err(Error::domain(
                    "consistency",
                    "the cyclic rd identity takes its own arguments",
                ))
            }
        };
        Ok(residual(&terms))
    }
}

/// Residual of the cyclic `rd` identity relative to its largest term.
pub fn rd_cyclic_residual(x: Complex, y: Complex, z: Complex, r: Tolerance) -> Result<f64> {
    let t = [
        rd(x, y, z, r)?.value,
        rd(y, z, x, r)?.value,
        rd(z, x, y, r)?.value,
        -3.0 / (principal_sqrt(x) * principal_sqrt(y) * principal_sqrt(z)),
    ];
    Ok(residual(&t))
}

fn re(v: f64) -> Complex {
    Complex::new(v, 0.0)
}

/// `|sum of terms| / max |term|`.
fn residual(terms: &[Complex]) -> f64 {
    let sum: Complex = terms.iter().sum();
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    sum.norm() / scale
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyFailure {
    pub identity: Identity,
    pub trial: usize,
    pub residual: f64,
    pub inputs: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityStats {
    pub identity: Identity,
    pub trials: usize,
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub seed: u64,
    pub trials: usize,
    pub r: f64,
    pub bound: f64,
    pub stats: Vec<IdentityStats>,
    pub failures: Vec<ConsistencyFailure>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.stats.iter().map(|s| s.max_residual).fold(0.0, f64::max)
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "consistency: seed {}, {} trials, r = {:e}, bound {:e}",
            self.seed, self.trials, self.r, self.bound
        )?;
        for s in &self.stats {
            writeln!(
                f,
                "  {:<14} {:>5} checks, max residual {:.2e}",
                s.identity.name(),
                s.trials,
                s.max_residual
            )?;
        }
        for fail in self.failures.iter().take(20) {
            writeln!(
                f,
                "  FAIL {} trial {}: residual {:.2e} at {}",
                fail.identity, fail.trial, fail.residual, fail.inputs
            )?;
        }
        write!(f, "consistency: {} failures", self.failures.len())
    }
}

/// Uniform on `(0, 10]`.
fn positive(rng: &mut ChaCha8Rng) -> f64 {
    10.0 * (1.0 - rng.gen::<f64>())
}

/// Modulus log-uniform over `[10^-lo, 10^hi]`, phase uniform in `(-max, max)`,
/// resampled until the point lies in the cut plane.
fn polar(rng: &mut ChaCha8Rng, decades: f64, max_phase: f64) -> Complex {
    loop {
        let rho = 10f64.powf(rng.gen_range(-decades..decades));
        let theta = rng.gen_range(-max_phase..max_phase);
        let z = Complex::from_polar(rho, theta);
        if in_cut_plane(z) {
            return z;
        }
    }
}

/// Runs `trials` random cases of every identity with a seeded generator.
///
/// Every identity is checked once per trial. An identity fails when its
/// residual exceeds `10 r`.
pub fn run_consistency_suite(seed: u64, trials: usize, r: Tolerance) -> ConsistencyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 10.0 * r.value();
    let mut stats: Vec<IdentityStats> = Identity::ALL
        .iter()
        .map(|&identity| IdentityStats {
            identity,
            trials: 0,
            max_residual: 0.0,
        })
        .collect();
    let mut failures = Vec::new();
    let mut record = |identity: Identity, trial: usize, res: f64, inputs: &dyn Fn() -> String| {
        let s = stats
            .iter_mut()
            .find(|s| s.identity == identity)
            .expect("identity listed");
        s.trials += 1;
        s.max_residual = s.max_residual.max(if res.is_nan() { f64::INFINITY } else { res });
        if !(res <= bound) {
            failures.push(ConsistencyFailure {
                identity,
                trial,
                residual: res,
                inputs: inputs(),
            });
        }
    };

    for trial in 0..trials {
        let (x, y, p) = (positive(&mut rng), positive(&mut rng), positive(&mut rng));
        // The rj identity needs Re lambda >= 0, so it gets its own draw from
        // the right half-plane; the others range over the whole cut plane.
        let full = polar(&mut rng, 2.0, PI);
        let half = polar(&mut rng, 2.0, FRAC_PI_2);
        for (lambda, ids) in [
            (
                full,
                &[Identity::RfAddition, Identity::RcAddition, Identity::RdAddition][..],
            ),
            (half, &[Identity::RjAddition][..]),
        ] {
            let case = ConsistencyCase::new(x, y, p, lambda);
            for &identity in ids {
                let res = case.residual(identity, r);
                let describe = || {
                    let mut s = format!("x={x:e}, y={y:e}, p={p:e}, lambda={lambda:e}");
                    if let Err(e) = &res {
                        s.push_str(&format!(" ({e})"));
                    }
                    s
                };
                record(identity, trial, *res.as_ref().unwrap_or(&f64::INFINITY), &describe);
            }
        }

        let (a, b, c) = (
            polar(&mut rng, 1.0, PI),
            polar(&mut rng, 1.0, PI),
            polar(&mut rng, 1.0, PI),
        );
        let describe = || format!("x={a:e}, y={b:e}, z={c:e}");
        let res = rd_cyclic_residual(a, b, c, r).unwrap_or(f64::INFINITY);
        record(Identity::RdCyclic, trial, res, &describe);
    }

    ConsistencyReport {
        seed,
        trials,
        r: r.value(),
        bound,
        stats,
        failures,
    }
}
