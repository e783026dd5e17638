//! Legendre's integrals and related functions in terms of `R_F`, `R_D`, `R_J`.
//!
//! Incomplete integrals use the amplitude form `s = sin(phi)`,
//! `R_F(cos^2 phi, 1 - k^2 s^2, 1)`, which is the `c = csc^2 phi` form scaled
//! by homogeneity and avoids forming `c - 1` for small amplitudes.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::agm::complete_rf_rg;
use crate::complex::{in_cut_plane, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::symmetric::{rd, rf, rj};
use crate::tolerance::Tolerance;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Legendre's complete integrals `K(k)` and `E(k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompleteKE {
    pub k: Complex,
    pub e: Complex,
}

/// `K(k) = R_F(1 - k^2, 1, 0)` and `E(k) = 2 R_G(1 - k^2, 1, 0)` by the AGM.
pub fn complete_k_e(k: Complex, r: Tolerance) -> Result<CompleteKE> {
    let m = ONE - k * k;
    if !in_cut_plane(m) {
        return Err(Error::domain(
            "complete_k_e",
            format!("k^2 = {} lies on [1, inf)", k * k),
        ));
    }
    let c = complete_rf_rg(m, ONE, r)?;
    Ok(CompleteKE {
        k: c.rf0,
        e: 2.0 * c.rg0,
    })
}

/// Amplitude split: `(sin phi, cos^2 phi)`, exact at the endpoints.
fn amplitude(func: &'static str, phi: f64) -> Result<(f64, f64)> {
    if !(0.0..=FRAC_PI_2).contains(&phi) {
        return Err(Error::domain(func, format!("amplitude {phi} outside [0, pi/2]")));
    }
    if phi == FRAC_PI_2 {
        return Ok((1.0, 0.0));
    }
    let c = phi.cos();
    Ok((phi.sin(), c * c))
}

fn complex(v: f64) -> Complex {
    Complex::new(v, 0.0)
}

/// Incomplete integral of the first kind `F(phi, k)`.
pub fn legendre_f(phi: f64, k: Complex, r: Tolerance) -> Result<Complex> {
    let (s, c2) = amplitude("legendre_f", phi)?;
    if s == 0.0 {
        return Ok(ZERO);
    }
    if phi == FRAC_PI_2 {
        return Ok(complete_k_e(k, r)?.k);
    }
    let y = ONE - k * k * (s * s);
    Ok(s * rf(complex(c2), y, ONE, r)?.value)
}

/// Incomplete integral of the second kind `E(phi, k)`.
pub fn legendre_e(phi: f64, k: Complex, r: Tolerance) -> Result<Complex> {
    let (s, c2) = amplitude("legendre_e", phi)?;
    if s == 0.0 {
        return Ok(ZERO);
    }
    if phi == FRAC_PI_2 {
        return Ok(complete_k_e(k, r)?.e);
    }
    let k2 = k * k;
    let y = ONE - k2 * (s * s);
    let f = rf(complex(c2), y, ONE, r)?.value;
    let d = rd(complex(c2), y, ONE, r)?.value;
    Ok(s * f - k2 * (s * s * s / 3.0) * d)
}

/// Incomplete integral of the third kind
/// `Pi(phi, k, n) = ∫₀^phi (1 + n sin^2)^(-1) (1 - k^2 sin^2)^(-1/2)`.
///
/// When `1 + n sin^2 phi < 0` the principal value is returned.
pub fn legendre_pi(phi: f64, k: Complex, n: f64, r: Tolerance) -> Result<Complex> {
    let (s, c2) = amplitude("legendre_pi", phi)?;
    if s == 0.0 {
        return Ok(ZERO);
    }
    let p = 1.0 + n * s * s;
    if p == 0.0 {
        return Err(Error::domain("legendre_pi", "1 + n sin^2(phi) vanishes"));
    }
    let y = ONE - k * k * (s * s);
    let f = rf(complex(c2), y, ONE, r)?.value;
    if n == 0.0 {
        return Ok(s * f);
    }
    let j = rj(complex(c2), y, ONE, complex(p), r)?.value;
    Ok(s * f - (n * s * s * s / 3.0) * j)
}

/// `D(phi, k) = ∫₀^phi sin^2 (1 - k^2 sin^2)^(-1/2) = (F - E) / k^2`.
pub fn legendre_d(phi: f64, k: Complex, r: Tolerance) -> Result<Complex> {
    let (s, c2) = amplitude("legendre_d", phi)?;
    if s == 0.0 {
        return Ok(ZERO);
    }
    let y = ONE - k * k * (s * s);
    Ok((s * s * s / 3.0) * rd(complex(c2), y, ONE, r)?.value)
}

/// Jacobi's zeta function `Z(beta, k)`, for `|beta| <= pi/2`.
pub fn jacobi_zeta(beta: f64, k: Complex, r: Tolerance) -> Result<Complex> {
    if !(beta.abs() <= FRAC_PI_2) {
        return Err(Error::domain("jacobi_zeta", format!("|beta| = {beta} exceeds pi/2")));
    }
    let kk = complete_k_e(k, r)?.k;
    let k2 = k * k;
    if beta.abs() == FRAC_PI_2 || beta == 0.0 || k2 == ZERO {
        return Ok(ZERO);
    }
    let (s, c) = beta.sin_cos();
    let y = ONE - k2 * (s * s);
    let j = rj(ZERO, ONE - k2, ONE, y, r)?.value;
    Ok(k2 / 3.0 * (s * c) * principal_sqrt(y) * j / kk)
}

/// Heuman's lambda function `Lambda_0(beta, k)`, for `0 <= beta < pi/2`.
pub fn heuman_lambda(beta: f64, k: Complex, r: Tolerance) -> Result<Complex> {
    if !(0.0..FRAC_PI_2).contains(&beta) {
        return Err(Error::domain(
            "heuman_lambda",
            format!("beta = {beta} outside [0, pi/2)"),
        ));
    }
    if beta == 0.0 {
        return Ok(ZERO);
    }
    let k2 = k * k;
    let m = ONE - k2;
    let (s, c) = beta.sin_cos();
    let delta = principal_sqrt(ONE - m * (s * s));
    let d2 = delta * delta;
    let mut bracket = rf(ZERO, m, ONE, r)?.value;
    if k2 != ZERO {
        bracket += k2 / (3.0 * d2) * rj(ZERO, m, ONE, ONE - k2 / d2, r)?.value;
    }
    Ok(2.0 / PI * (m * (s * c) / delta) * bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c64;
    use std::f64::consts::FRAC_PI_4;

    fn tol() -> Tolerance {
        Tolerance::new(1e-12).unwrap()
    }

    fn re(v: f64) -> Complex {
        c64(v, 0.0)
    }

    fn close(a: Complex, b: Complex, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(1e-300)
    }

    #[test]
    fn complete_values() {
        let c = complete_k_e(re(0.0), tol()).unwrap();
        assert!(close(c.k, re(FRAC_PI_2), 1e-15) && close(c.e, re(FRAC_PI_2), 1e-15));
        let c = complete_k_e(re(0.5f64.sqrt()), tol()).unwrap();
        assert!(close(c.k, re(1.854_074_677_301_4), 1e-12));
        let c = complete_k_e(re(0.99), tol()).unwrap();
        assert!(close(c.e, re(1.028_475_809_028_8), 1e-12));
        assert!(complete_k_e(re(1.0), tol()).is_err());
        assert!(complete_k_e(re(1.5), tol()).is_err());
    }

    #[test]
    fn first_kind() {
        assert_eq!(legendre_f(0.0, re(0.3), tol()).unwrap(), ZERO);
        assert!(close(legendre_f(1.0, re(0.0), tol()).unwrap(), re(1.0), 2e-12));
        // mpmath quadrature of the defining integral.
        let v = legendre_f(FRAC_PI_4, re(0.5), tol()).unwrap();
        assert!(close(v, re(0.804_366_101_232_065_6), 1e-12));
        assert!(legendre_f(2.0, re(0.5), tol()).is_err());
        assert!(legendre_f(-0.1, re(0.5), tol()).is_err());
    }

    #[test]
    fn quarter_period_matches_symmetric_form() {
        for k in [re(0.3), re(0.9), c64(0.4, 0.7)] {
            let via_agm = legendre_f(FRAC_PI_2, k, tol()).unwrap();
            let direct = rf(ZERO, ONE - k * k, ONE, tol()).unwrap().value;
            assert!(close(via_agm, direct, 4e-12));
            let via_agm = legendre_e(FRAC_PI_2, k, tol()).unwrap();
            let f = rf(ZERO, ONE - k * k, ONE, tol()).unwrap().value;
            let d = rd(ZERO, ONE - k * k, ONE, tol()).unwrap().value;
            assert!(close(via_agm, f - k * k / 3.0 * d, 4e-12));
        }
    }

    #[test]
    fn second_kind() {
        assert!(close(legendre_e(0.7, re(0.0), tol()).unwrap(), re(0.7), 2e-12));
        let v = legendre_e(FRAC_PI_2, re(0.99), tol()).unwrap();
        assert!(close(v, re(1.028_475_809_028_8), 1e-12));
        let v = legendre_e(std::f64::consts::FRAC_PI_3, re(0.5), tol()).unwrap();
        assert!(close(v, re(1.007_555_555_144_472_0), 1e-12));
    }

    #[test]
    fn third_kind() {
        let f = legendre_f(FRAC_PI_4, re(0.3), tol()).unwrap();
        assert!(close(legendre_pi(FRAC_PI_4, re(0.3), 0.0, tol()).unwrap(), f, 2e-12));
        let v = legendre_pi(FRAC_PI_2, re(0.0), 3.0, tol()).unwrap();
        assert!(close(v, re(FRAC_PI_4), 1e-12));
        let v = legendre_pi(std::f64::consts::FRAC_PI_3, re(0.5), 0.3, tol()).unwrap();
        assert!(close(v, re(1.003_563_782_138_978_6), 1e-12));
        assert!(legendre_pi(FRAC_PI_2, re(0.5), -1.0, tol()).is_err());
    }

    #[test]
    fn d_function() {
        let v = legendre_d(FRAC_PI_2, re(0.0), tol()).unwrap();
        assert!(close(v, re(FRAC_PI_4), 1e-12));
        let c = complete_k_e(re(0.5), tol()).unwrap();
        let v = legendre_d(FRAC_PI_2, re(0.5), tol()).unwrap();
        assert!(close(v, (c.k - c.e) / 0.25, 1e-11));
        let v = legendre_d(FRAC_PI_4, re(0.5), tol()).unwrap();
        assert!(close(v, re(0.148_680_462_083_771_5), 1e-12));
    }

    #[test]
    fn zeta_and_lambda() {
        assert_eq!(jacobi_zeta(0.5, re(0.0), tol()).unwrap(), ZERO);
        assert_eq!(jacobi_zeta(FRAC_PI_2, re(0.6), tol()).unwrap(), ZERO);
        let v = jacobi_zeta(FRAC_PI_4, re(0.5), tol()).unwrap();
        assert!(close(v, re(0.066_987_409_357_021_84), 1e-11));
        assert!(close(
            heuman_lambda(std::f64::consts::FRAC_PI_6, re(0.0), tol()).unwrap(),
            re(0.5),
            1e-12
        ));
        assert_eq!(heuman_lambda(0.0, re(0.4), tol()).unwrap(), ZERO);
        let v = heuman_lambda(FRAC_PI_4, re(0.6), tol()).unwrap();
        assert!(close(v, re(0.643_766_878_984_604_7), 1e-11));
        assert!(heuman_lambda(FRAC_PI_2, re(0.6), tol()).is_err());
    }
}
