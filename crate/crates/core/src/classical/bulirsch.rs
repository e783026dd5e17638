//! Bulirsch's integrals `el1`, `el2`, `el3` and `cel`.

use crate::complex::Complex;
use crate::error::Result;
use crate::symmetric::{rd, rf, rj};
use crate::tolerance::Tolerance;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Argument sets for the four Bulirsch forms; `kc` is the complementary
/// modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bulirsch {
    El1 { x: f64, kc: Complex },
    El2 { x: f64, kc: Complex, a: Complex, b: Complex },
    El3 { x: f64, kc: Complex, p: Complex },
    Cel { kc: Complex, p: Complex, a: Complex, b: Complex },
}

pub fn bulirsch(args: Bulirsch, r: Tolerance) -> Result<Complex> {
    match args {
        Bulirsch::El1 { x, kc } => el1(x, kc, r),
        Bulirsch::El2 { x, kc, a, b } => el2(x, kc, a, b, r),
        Bulirsch::El3 { x, kc, p } => el3(x, kc, p, r),
        Bulirsch::Cel { kc, p, a, b } => cel(kc, p, a, b, r),
    }
}

/// `(1, 1 + kc^2 x^2, 1 + x^2)`.
fn triple(x: f64, kc: Complex) -> (Complex, Complex, Complex) {
    let x2 = x * x;
    (ONE, ONE + kc * kc * x2, Complex::new(1.0 + x2, 0.0))
}

/// `el1(x, kc) = x R_F(1, 1 + kc^2 x^2, 1 + x^2)`.
pub fn el1(x: f64, kc: Complex, r: Tolerance) -> Result<Complex> {
    if x == 0.0 {
        return Ok(ZERO);
    }
    let (u, v, w) = triple(x, kc);
    Ok(x * rf(u, v, w, r)?.value)
}

/// `el2(x, kc, a, b) = a x R_F(...) + (b - a) x^3 R_D(...) / 3`.
pub fn el2(x: f64, kc: Complex, a: Complex, b: Complex, r: Tolerance) -> Result<Complex> {
    if x == 0.0 {
        return Ok(ZERO);
    }
    let (u, v, w) = triple(x, kc);
    let mut out = a * x * rf(u, v, w, r)?.value;
    if b != a {
        out += (b - a) * (x * x * x / 3.0) * rd(u, v, w, r)?.value;
    }
    Ok(out)
}

/// `el3(x, kc, p) = x R_F(...) + (1 - p) x^3 R_J(..., 1 + p x^2) / 3`.
pub fn el3(x: f64, kc: Complex, p: Complex, r: Tolerance) -> Result<Complex> {
    if x == 0.0 {
        return Ok(ZERO);
    }
    let (u, v, w) = triple(x, kc);
    let mut out = x * rf(u, v, w, r)?.value;
    if p != ONE {
        let q = ONE + p * (x * x);
        out += (ONE - p) * (x * x * x / 3.0) * rj(u, v, w, q, r)?.value;
    }
    Ok(out)
}

/// `cel(kc, p, a, b) = a R_F(0, kc^2, 1) + (b - p a) R_J(0, kc^2, 1, p) / 3`.
pub fn cel(kc: Complex, p: Complex, a: Complex, b: Complex, r: Tolerance) -> Result<Complex> {
    let k2 = kc * kc;
    let mut out = a * rf(ZERO, k2, ONE, r)?.value;
    let coeff = b - p * a;
    if coeff != ZERO {
        out += coeff / 3.0 * rj(ZERO, k2, ONE, p, r)?.value;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c64;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn tol() -> Tolerance {
        Tolerance::new(1e-12).unwrap()
    }

    fn close(a: Complex, b: Complex, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm()
    }

    #[test]
    fn el1_arctan() {
        let v = el1(1.0, ONE, tol()).unwrap();
        assert!(close(v, c64(FRAC_PI_4, 0.0), 1e-12));
        // kc = 1 collapses to arctan(x).
        let v = el1(3.0, ONE, tol()).unwrap();
        assert!(close(v, c64(3f64.atan(), 0.0), 1e-12));
    }

    #[test]
    fn el3_with_unit_p_is_el1() {
        let kc = c64(0.7, 0.0);
        let a = el3(0.8, kc, ONE, tol()).unwrap();
        let b = el1(0.8, kc, tol()).unwrap();
        assert!(close(a, b, 2e-12));
    }

    #[test]
    fn el2_equal_coefficients() {
        let kc = c64(0.4, 0.2);
        let a = c64(1.5, -0.5);
        let v = el2(1.3, kc, a, a, tol()).unwrap();
        let w = a * el1(1.3, kc, tol()).unwrap();
        assert!(close(v, w, 2e-12));
        // kc = 1, a = 0, b = 1: ∫₀^atan(x) sin^2 θ dθ.
        let t = 2f64.atan();
        let v = el2(2.0, ONE, ZERO, ONE, tol()).unwrap();
        assert!(close(v, c64((t - 0.4) / 2.0, 0.0), 1e-12));
    }

    #[test]
    fn cel_values() {
        let v = cel(ONE, ONE, ONE, ONE, tol()).unwrap();
        assert!(close(v, c64(FRAC_PI_2, 0.0), 1e-12));
        // cel(kc, 1, 1, 1) = K with k^2 = 1 - kc^2.
        let kc = c64(0.6, 0.0);
        let v = bulirsch(Bulirsch::Cel { kc, p: ONE, a: ONE, b: ONE }, tol()).unwrap();
        let k = rf(ZERO, kc * kc, ONE, tol()).unwrap().value;
        assert!(close(v, k, 1e-12));
        assert!(cel(kc, ZERO, ONE, c64(2.0, 0.0), tol()).is_err());
    }
}
