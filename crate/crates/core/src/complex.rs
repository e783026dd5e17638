//! Branch-correct complex primitives.
//!
//! Every square root taken by the integral algorithms goes through
//! [`principal_sqrt`], which never depends on the sign of a zero imaginary
//! part: `-0.0` is treated as `+0.0`, so the negative real axis always maps to
//! the positive imaginary axis.

use crate::error::{Error, Result};

/// The argument carrier for every routine in this crate.
pub type Complex = num_complex::Complex64;

/// Shorthand constructor.
#[inline]
pub const fn c64(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

#[inline]
fn unsigned_zero(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

/// Replaces a signed zero in either component by `+0.0`.
#[inline]
pub fn normalize_zero(z: Complex) -> Complex {
    Complex::new(unsigned_zero(z.re), unsigned_zero(z.im))
}

/// True when both components are finite.
#[inline]
pub fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// True when `z` has an exactly zero imaginary part.
#[inline]
pub fn is_real(z: Complex) -> bool {
    z.im == 0.0
}

/// Principal square root: nonnegative real part, and `Im >= 0` when the real
/// part vanishes.
pub fn principal_sqrt(z: Complex) -> Complex {
    let z = normalize_zero(z);
    if z.re == 0.0 && z.im == 0.0 {
        return Complex::new(0.0, 0.0);
    }
    // Keep |re| + hypot(re, im) away from overflow and the subnormal range.
    let big = z.re.abs().max(z.im.abs());
    let (z, unscale) = if big > 1.0e300 {
        (z * 0.25, 2.0)
    } else if big < 1.0e-300 {
        (z * 2f64.powi(200), 2f64.powi(-100))
    } else {
        (z, 1.0)
    };
    let t = ((z.re.abs() + z.re.hypot(z.im)) * 0.5).sqrt();
    let w = if z.re >= 0.0 {
        Complex::new(t, z.im / (2.0 * t))
    } else {
        Complex::new(z.im.abs() / (2.0 * t), t.copysign(z.im))
    };
    w * unscale
}

/// True iff `z` is nonzero and not a nonpositive real number.
pub fn in_cut_plane(z: Complex) -> bool {
    let z = normalize_zero(z);
    !(z.im == 0.0 && z.re <= 0.0)
}

/// Principal argument in `(-pi, pi]`.
pub fn phase(z: Complex) -> Result<f64> {
    let z = normalize_zero(z);
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::UndefinedPhase);
    }
    Ok(z.im.atan2(z.re))
}

/// `z * 2^k` without intermediate overflow for any `|k| <= 2200`.
pub(crate) fn ldexp(z: Complex, k: i32) -> Complex {
    let half = k / 2;
    let a = 2f64.powi(half);
    let b = 2f64.powi(k - half);
    z * a * b
}

/// Even exponent `2j` such that `m * 2^(2j)` lies in `[1, 4)`.
pub(crate) fn scale_exponent(m: f64) -> i32 {
    if m == 0.0 || !m.is_finite() {
        return 0;
    }
    let e = m.log2().floor() as i32;
    // log2 can be off by one at exact powers of two; correct it.
    let e = if 2f64.powi(e) > m {
        e - 1
    } else if 2f64.powi(e + 1) <= m {
        e + 1
    } else {
        e
    };
    -2 * e.div_euclid(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn sqrt_examples() {
        assert_eq!(principal_sqrt(c64(4.0, 0.0)), c64(2.0, 0.0));
        assert_eq!(principal_sqrt(c64(-4.0, 0.0)), c64(0.0, 2.0));
        assert_eq!(principal_sqrt(c64(-4.0, -0.0)), c64(0.0, 2.0));
        let w = principal_sqrt(c64(0.0, 2.0));
        assert!((w - c64(1.0, 1.0)).norm() < 1e-15);
        assert_eq!(principal_sqrt(c64(0.0, 0.0)), c64(0.0, 0.0));
        assert_eq!(principal_sqrt(c64(-0.0, -0.0)), c64(0.0, 0.0));
    }

    #[test]
    fn sqrt_extreme_magnitudes() {
        for &z in &[
            c64(1e307, 1e307),
            c64(-1.7e308, 1.0),
            c64(1e-310, -3e-311),
            c64(-5e-324, 0.0),
        ] {
            let w = principal_sqrt(z);
            assert!(w.re >= 0.0);
            // Compare at unit scale so the check itself does not underflow.
            let k = scale_exponent(z.norm());
            let ws = ldexp(w, k / 2);
            let zs = ldexp(z, k);
            assert!((ws * ws - zs).norm() <= 1e-14 * zs.norm(), "{z} -> {w}");
        }
    }

    #[test]
    fn cut_plane_examples() {
        assert!(in_cut_plane(c64(1.0, 0.0)));
        assert!(!in_cut_plane(c64(-1.0, 0.0)));
        assert!(!in_cut_plane(c64(0.0, 0.0)));
        assert!(!in_cut_plane(c64(-1.0, -0.0)));
        assert!(in_cut_plane(c64(-1.0, 1e-300)));
    }

    #[test]
    fn phase_examples() {
        assert_eq!(phase(c64(1.0, 0.0)).unwrap(), 0.0);
        assert_eq!(phase(c64(0.0, 1.0)).unwrap(), FRAC_PI_2);
        assert_eq!(phase(c64(-1.0, 0.0)).unwrap(), PI);
        assert_eq!(phase(c64(-1.0, -0.0)).unwrap(), PI);
        assert_eq!(phase(c64(0.0, 0.0)), Err(Error::UndefinedPhase));
    }

    #[test]
    fn scale_exponent_lands_in_range() {
        for &m in &[1e-300, 0.3, 1.0, 2.0, 3.999, 4.0, 7.0, 1e300, 5e-324] {
            let k = scale_exponent(m);
            assert_eq!(k % 2, 0);
            let s = ldexp(c64(m, 0.0), k).re;
            assert!((1.0..4.0).contains(&s), "{m} -> {s}");
        }
    }
}
