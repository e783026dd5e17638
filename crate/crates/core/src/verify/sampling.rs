//! Random admissible arguments and the library-versus-oracle sweep.

use std::f64::consts::PI;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{in_cut_plane, Complex};
use crate::quartic::{QuadraticCoeffs, QuarticSpec};
use crate::tolerance::Tolerance;
use crate::verify::corpus::library_eval;
use crate::verify::oracle::{oracle_eval, Integrand, OracleSpec};

/// Largest phase drawn for complex arguments; keeps the integrands of the
/// oracle away from near-singular points on the negative axis.
const MAX_PHASE: f64 = 0.9 * PI;

fn magnitude(rng: &mut impl Rng) -> f64 {
    10f64.powf(rng.gen_range(-1.0..1.0))
}

fn real(rng: &mut impl Rng) -> Complex {
    Complex::new(magnitude(rng), 0.0)
}

fn cut_plane(rng: &mut impl Rng, max_phase: f64) -> Complex {
    loop {
        let z = Complex::from_polar(magnitude(rng), rng.gen_range(-max_phase..max_phase));
        if in_cut_plane(z) {
            return z;
        }
    }
}

fn right_half(rng: &mut impl Rng) -> Complex {
    cut_plane(rng, PI / 2.0)
}

/// Arguments at which both the library and the oracle are defined. Even
/// `variant` values give real arguments (with zeros and principal values
/// mixed in), odd values complex ones.
pub fn admissible_args(kind: Integrand, variant: usize, rng: &mut impl Rng) -> Vec<Complex> {
    let complex = variant % 2 == 1;
    let pick = (variant / 2) % 3;
    let zero = Complex::new(0.0, 0.0);
    let mut args: Vec<Complex> = match (kind, complex) {
        (Integrand::Rc, false) => {
            let y = real(rng);
            vec![real(rng), if pick == 0 { -y } else { y }]
        }
        (Integrand::Rc, true) => vec![cut_plane(rng, MAX_PHASE), cut_plane(rng, MAX_PHASE)],
        (Integrand::Rj, false) => {
            let p = real(rng);
            vec![real(rng), real(rng), real(rng), if pick == 0 { -p } else { p }]
        }
        (Integrand::Rj, true) => {
            if pick == 0 {
                let w = cut_plane(rng, MAX_PHASE);
                vec![w, w.conj(), real(rng), cut_plane(rng, MAX_PHASE)]
            } else {
                (0..4).map(|_| right_half(rng)).collect()
            }
        }
        (_, false) => (0..3).map(|_| real(rng)).collect(),
        (_, true) => (0..3).map(|_| cut_plane(rng, MAX_PHASE)).collect(),
    };
    // Occasionally zero the first argument where that is allowed.
    let zero_ok = match kind {
        Integrand::Rc => !complex && pick == 1,
        Integrand::Rj => pick == 2 && !complex,
        _ => pick == 2,
    };
    if zero_ok {
        args[0] = zero;
    }
    args
}

/// Multiple of 1/16 in `[lo, hi]` (in sixteenths).
fn sixteenths(rng: &mut impl Rng, lo: i32, hi: i32) -> f64 {
    f64::from(rng.gen_range(lo..=hi)) / 16.0
}

/// A quadratic (or, one time in five, linear) factor with real zeros that is
/// positive on `(y, x)`. With `endpoint` set, a zero sits exactly on that limit.
fn real_zero_factor(rng: &mut impl Rng, y: f64, x: f64, endpoint: Option<f64>) -> QuadraticCoeffs {
    let c = [0.5, 1.0, 2.0][rng.gen_range(0..3)];
    let mut gap = || sixteenths(rng, 2, 48);
    let linear = gap() < 0.75;
    let shape = (gap() * 16.0) as i32 % 3;
    if linear {
        // c (t - z) with z <= y, or c (z - t) with z >= x.
        return match endpoint {
            Some(e) if e == y => QuadraticCoeffs::new(-c * y, 0.5 * c, 0.0),
            Some(_) => QuadraticCoeffs::new(c * x, -0.5 * c, 0.0),
            None if shape == 0 => QuadraticCoeffs::new(-c * (y - gap()), 0.5 * c, 0.0),
            None => QuadraticCoeffs::new(c * (x + gap()), -0.5 * c, 0.0),
        };
    }
    let (z1, z2, s) = match endpoint {
        Some(e) if e == y => (y, y - gap(), 1.0),
        Some(_) => (x, x + gap(), 1.0),
        None => match shape {
            0 => (y - gap(), y - gap(), 1.0),
            1 => (x + gap(), x + gap(), 1.0),
            _ => (y - gap(), x + gap(), -1.0),
        },
    };
    // s c (t - z1)(t - z2); the straddling case is flipped to stay positive.
    QuadraticCoeffs::new(s * c * z1 * z2, -0.5 * s * c * (z1 + z2), s * c)
}

/// Random finite spec whose quadratics have real zeros and are positive on
/// the interval; about one spec in three has a simple zero at a limit.
///
/// Limits, zeros and leading coefficients are short dyadic numbers, so every
/// coefficient and every endpoint value is exact. An endpoint zero is then
/// a true zero rather than a rounding-level residue, whose square root
/// would otherwise perturb the integral at the level of `sqrt(eps)`.
pub fn random_real_zero_quartic(rng: &mut impl Rng) -> QuarticSpec {
    let y = sixteenths(rng, -32, 32);
    let x = y + sixteenths(rng, 8, 48);
    let endpoint = match rng.gen_range(0..6) {
        0 => Some(y),
        1 => Some(x),
        _ => None,
    };
    let q1 = real_zero_factor(rng, y, x, endpoint);
    let q2 = real_zero_factor(rng, y, x, None);
    QuarticSpec::finite(q1, q2, y, x)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleMismatch {
    pub integrand: Integrand,
    pub args: Vec<Complex>,
    pub library: Option<Complex>,
    pub oracle: Option<Complex>,
    pub rel_dev: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub seed: u64,
    pub points: usize,
    pub bound: f64,
    /// Largest relative deviation per integral, in `Integrand::ALL` order.
    pub max_rel_dev: Vec<(Integrand, f64)>,
    pub mismatches: Vec<OracleMismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "oracle: seed {}, {} points per integral, bound {:e}",
            self.seed, self.points, self.bound
        )?;
        for (kind, dev) in &self.max_rel_dev {
            writeln!(f, "  {kind}: max rel dev {dev:.2e}")?;
        }
        for m in self.mismatches.iter().take(20) {
            writeln!(f, "  FAIL {}{:?}: rel dev {:.2e}", m.integrand, m.args, m.rel_dev)?;
        }
        write!(f, "oracle: {} mismatches", self.mismatches.len())
    }
}

/// Compares the library at tolerance `r` with the quadrature oracle on
/// `points` random admissible argument sets per integral. Agreement means a
/// relative deviation of at most `max(1e-7, 10 r)`.
pub fn run_oracle_comparison(seed: u64, points: usize, r: Tolerance) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = (10.0 * r.value()).max(1e-7);
    let mut max_rel_dev = Vec::new();
    let mut mismatches = Vec::new();
    for kind in Integrand::ALL {
        let mut worst: f64 = 0.0;
        for variant in 0..points {
            let args = admissible_args(kind, variant, &mut rng);
            let library = library_eval(kind, &args, r).ok().map(|e| e.value);
            let oracle = oracle_eval(&OracleSpec::new(kind, &args)).ok();
            let rel_dev = match (library, oracle) {
                (Some(a), Some(b)) => (a - b).norm() / b.norm(),
                _ => f64::INFINITY,
            };
            worst = worst.max(rel_dev);
            if !(rel_dev <= bound) {
                mismatches.push(OracleMismatch {
                    integrand: kind,
                    args,
                    library,
                    oracle,
                    rel_dev,
                });
            }
        }
        max_rel_dev.push((kind, worst));
    }
    OracleReport {
        seed,
        points,
        bound,
        max_rel_dev,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quartic::eval_quartic;
    use crate::verify::oracle::quartic_oracle;

    #[test]
    fn random_quartics_validate_and_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let r = Tolerance::new(1e-10).unwrap();
        for _ in 0..20 {
            let spec = random_real_zero_quartic(&mut rng);
            let v = eval_quartic(&spec, r).unwrap();
            let o = quartic_oracle(&spec).unwrap();
            assert!((v - o).abs() <= 1e-7 * o.abs(), "{spec:?}: {v} vs {o}");
        }
    }

    #[test]
    fn small_sweep_agrees() {
        let report = run_oracle_comparison(11, 12, Tolerance::new(1e-10).unwrap());
        assert!(report.passed(), "{report}");
    }
}
