//! Exact rational helpers: parsing, formatting and small conversions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `4^(-n)` for any integer scale `n`.
pub fn quarter_pow(n: i32) -> Rational {
    let four = BigInt::from(4);
    let p = num_traits::pow(four, n.unsigned_abs() as usize);
    if n >= 0 {
        Rational::new(BigInt::one(), p)
    } else {
        Rational::from_integer(p)
    }
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`; whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Exact `"p/q"` rendering (integers render without a denominator).
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Rounds to `digits` decimal places (half away from zero). Display only.
pub fn format_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled: BigInt = r.numer().abs() * &scale * 2 + r.denom();
    let (q, _) = scaled.div_rem(&(r.denom() * 2));
    let (whole, fracpart) = q.div_rem(&scale);
    let sign = if r.is_negative() && !q.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0>width$}", fracpart.to_string(), width = digits)
    }
}

pub fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
