use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"`. Whitespace around the parts is not allowed.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::parse(format!("\"{text}\""), msg.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected an integer or a ratio p/q"));
        }
        s.parse::<BigInt>().map_err(|_| bad("malformed integer"))
    };
    let numer = parse_int(num)?;
    let denom = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad("denominator is zero"));
    }
    Ok(Rational::new(numer, denom))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub(crate) fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}
