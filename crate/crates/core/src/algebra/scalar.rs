use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Complex number with exact rational real and imaginary parts.
pub type ExactComplex = Complex<BigRational>;

pub(crate) fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub(crate) fn real(value: BigRational) -> ExactComplex {
    Complex::new(value, BigRational::zero())
}

pub(crate) fn imag(value: BigRational) -> ExactComplex {
    Complex::new(BigRational::zero(), value)
}

pub(crate) fn from_int(value: i64) -> ExactComplex {
    real(BigRational::from_integer(BigInt::from(value)))
}

pub(crate) fn to_f64(value: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

/// Parses `123`, `-1.25`, `3/4` or `-7/2` into an exact rational.
///
/// Decimal literals are read exactly (`0.1` is `1/10`), which keeps
/// spectroscopic constants like `739.685` free of binary rounding.
pub fn parse_rational(text: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::InvalidNumber(text.to_string());
    let trimmed = text.trim();
    let (negative, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_decimal(num).ok_or_else(bad)?;
        let den = parse_decimal(den).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(bad());
        }
        num / den
    } else {
        parse_decimal(body).ok_or_else(bad)?
    };
    Ok(if negative { -value } else { value })
}

fn parse_decimal(text: &str) -> Option<BigRational> {
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    Some(BigRational::new(numer, denom))
}

fn fmt_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Splits a coefficient into a leading sign and an unsigned body in the
/// polynomial text grammar. The flag reports whether the body is exactly `1`.
pub(crate) fn fmt_coefficient(c: &ExactComplex) -> (bool, String, bool) {
    if c.im.is_zero() {
        let negative = c.re.is_negative();
        let magnitude = c.re.abs();
        let unit = magnitude.is_one();
        (negative, fmt_rational(&magnitude), unit)
    } else if c.re.is_zero() {
        let negative = c.im.is_negative();
        (negative, format!("{}i", fmt_rational(&c.im.abs())), false)
    } else {
        let sign = if c.im.is_negative() { '-' } else { '+' };
        let body = format!(
            "({}{}{}i)",
            fmt_rational(&c.re),
            sign,
            fmt_rational(&c.im.abs())
        );
        (false, body, false)
    }
}
