//! The scalar type and conversions at the exact/float boundary.

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator (maintained by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Parse an exact rational from `p/q`, a plain integer, or a finite decimal
/// such as `0.25` (decimals convert exactly via a power-of-ten denominator).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRationalLiteral {
        text: text.to_owned(),
    };
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let numer: BigInt = n.parse().map_err(|_| bad())?;
        let denom: BigInt = d.parse().map_err(|_| bad())?;
        if denom == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(Rational::new(numer, denom));
    }
    if let Ok(i) = s.parse::<BigInt>() {
        return Ok(Rational::from_integer(i));
    }
    // Finite decimal: sign, integer part, '.', fractional part.
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = digits.split_once('.').ok_or_else(bad)?;
    if frac_part.is_empty() && int_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let joined = format!("{int_part}{frac_part}");
    let numer: BigInt = joined.parse().map_err(|_| bad())?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(Rational::new(numer * sign, denom))
}

/// Lossy conversion to `f64`, failing only when the value does not fit.
pub fn rational_to_f64(r: &Rational) -> Result<f64> {
    r.to_f64().filter(|v| v.is_finite()).ok_or(Error::Overflow)
}

/// Shorthand for an integer-valued `Rational`.
pub(crate) fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d` (panics on `d == 0`, which is a programming error).
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
