//! Exact rationals.
//!
//! Everything in this crate is an exact identity or strict inequality of
//! rationals, so there is no floating point anywhere. Literals print as
//! `p/q` with `q > 0` and `gcd(p, q) = 1`, or as `p` when `q = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Binomial coefficient `C(k, 2)` as a rational.
pub fn choose2(k: u32) -> Rational {
    let k = i64::from(k);
    int(k * (k - 1) / 2)
}

/// Parses `p/q`, `p`, or `-p/q`. Whitespace around the literal is ignored.
pub fn parse(text: &str) -> Result<Rational, Error> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational literal: {t:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Canonical `p/q` text. `num-rational` already normalizes sign and gcd.
pub fn fmt(x: &Rational) -> String {
    x.to_string()
}

pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

pub fn is_negative(x: &Rational) -> bool {
    x.is_negative()
}

/// Midpoint of two rationals.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}
