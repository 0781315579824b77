//! Exact rational scalars and their text form.
//!
//! Design coordinates and polynomial coefficients accept three spellings:
//! integers (`-1`), decimals (`0.4`, parsed exactly as 4/10), and fractions
//! (`2/5`). Nothing is ever rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Error;

/// Rational from an integer.
pub fn from_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational n/d; panics if d = 0.
pub fn from_ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `-1`, `0.4` or `2/5` into an exact rational.
pub fn parse_rational(input: &str) -> Result<BigRational, Error> {
    let s = input.trim();
    let err = || Error::Parse(format!("invalid rational literal `{input}`"));
    if s.is_empty() {
        return Err(err());
    }
    let (sign, rest) = match s.as_bytes()[0] {
        b'-' => (-1, &s[1..]),
        b'+' => (1, &s[1..]),
        _ => (1, s),
    };
    // every numeric component must start with a digit (or a decimal point);
    // the sign was handled above, so `--1` and `1/-2` are rejected
    let digit_led = |s: &str| {
        let s = s.trim();
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    };
    if rest.is_empty() {
        return Err(err());
    }
    let value = if let Some((num, den)) = rest.split_once('/') {
        if !digit_led(num) || !digit_led(den) {
            return Err(err());
        }
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{input}`")));
        }
        BigRational::new(n, d)
    } else if let Some((int_part, frac_part)) = rest.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let int_part = if int_part.is_empty() { "0" } else { int_part };
        if !digit_led(int_part) {
            return Err(err());
        }
        let n: BigInt = int_part.parse().map_err(|_| err())?;
        let frac: BigInt = frac_part.parse().map_err(|_| err())?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        BigRational::new(n * &scale + frac, scale)
    } else {
        if !digit_led(rest) {
            return Err(err());
        }
        let n: BigInt = rest.parse().map_err(|_| err())?;
        BigRational::from_integer(n)
    };
    Ok(if sign < 0 { -value } else { value })
}

/// `3`, `-5`, `2/5` -- integers print without a denominator.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
