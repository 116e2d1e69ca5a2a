//! Exact rationals backed by arbitrary-precision integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for `num / den` with small integers.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::domain(format!("malformed rational `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::domain(format!("zero denominator in `{text}`")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `k!` as a rational.
pub fn factorial(k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(m, j)`.
pub fn binomial(m: u32, j: u32) -> BigInt {
    if j > m {
        return BigInt::zero();
    }
    let j = j.min(m - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}
