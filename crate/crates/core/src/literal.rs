//! Text form of complex numbers: `A`, `Bi`, `A+Bi`, `A-Bi`, bare `i`.
//!
//! `A` and `B` are decimal or scientific literals. A leading sign is
//! optional; the Unicode minus sign is accepted as `-`. Whitespace is not.

use std::fmt::Write as _;

use crate::complex::Complex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed complex literal {text:?}: {reason}")]
pub struct LiteralError {
    pub text: String,
    pub reason: &'static str,
}

fn err(text: &str, reason: &'static str) -> LiteralError {
    LiteralError {
        text: text.to_string(),
        reason,
    }
}

fn parse_real(s: &str, whole: &str) -> Result<f64, LiteralError> {
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    if body.is_empty() {
        return Err(err(whole, "missing digits"));
    }
    if !body.starts_with(|c: char| c.is_ascii_digit() || c == '.') {
        return Err(err(whole, "number must start with a digit or '.'"));
    }
    if !body
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
    {
        return Err(err(whole, "unexpected character"));
    }
    let v: f64 = s.parse().map_err(|_| err(whole, "invalid number"))?;
    if !v.is_finite() {
        return Err(err(whole, "value out of range"));
    }
    Ok(v)
}

/// Parses the signed coefficient of `i`; an empty or bare-sign coefficient
/// means one.
fn parse_imag(s: &str, whole: &str) -> Result<f64, LiteralError> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s, whole),
    }
}

pub fn parse_complex(text: &str) -> Result<Complex, LiteralError> {
    let s = text.replace('\u{2212}', "-");
    if s.is_empty() {
        return Err(err(text, "empty"));
    }
    if s.chars().any(char::is_whitespace) {
        return Err(err(text, "whitespace inside literal"));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex::new(parse_real(&s, text)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => {
            let re = parse_real(&body[..k], text)?;
            let im = parse_imag(&body[k..], text)?;
            Ok(Complex::new(re, im))
        }
        None => Ok(Complex::new(0.0, parse_imag(body, text)?)),
    }
}

/// Shortest representation that parses back to exactly the same bits.
pub fn format_exact(z: Complex) -> String {
    format!("{:e}{:+e}i", z.re, z.im)
}

/// `v` rounded to `digits` significant digits, in fixed notation for
/// moderate magnitudes and scientific otherwise.
pub fn format_significant(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 {
            format!("{:.*}", digits - 1, 0.0)
        } else {
            v.to_string()
        };
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..15).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let all: String = mantissa.chars().filter(|c| *c != '.').collect();
    let mut out = String::from(sign);
    if exp >= 0 {
        let int_len = exp as usize + 1;
        if all.len() <= int_len {
            out.push_str(&all);
            out.extend(std::iter::repeat_n('0', int_len - all.len()));
        } else {
            out.push_str(&all[..int_len]);
            out.push('.');
            out.push_str(&all[int_len..]);
        }
    } else {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
        out.push_str(&all);
    }
    out
}

/// `RE` for real values, `RE+IMi` / `RE-IMi` otherwise.
pub fn format_complex(z: Complex, digits: usize) -> String {
    let mut out = format_significant(z.re, digits);
    if z.im != 0.0 {
        let im = format_significant(z.im.abs(), digits);
        let sign = if z.im < 0.0 { '-' } else { '+' };
        let _ = write!(out, "{sign}{im}i");
    }
    out
}
