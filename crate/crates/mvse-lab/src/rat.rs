//! Exact rational scalars.
//!
//! Every arithmetic path in this crate works over arbitrary-precision
//! rationals; floating point appears only in rendering and in test oracles
//! that are explicitly approximate. `Rat` keeps itself in reduced form with
//! a positive denominator, so equality is structural equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics on a zero denominator; intended for literals.
pub fn frac(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator in rational literal");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"p/q"` or `"p"` (optional sign, arbitrary precision).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational numerator in {s:?}")))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational denominator in {s:?}")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Render as `"p"` for integers, `"p/q"` otherwise. Inverse of [`parse_rat`].
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// |r|.
pub fn abs(r: &Rat) -> Rat {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}

/// Nearest double, for rendering and diagnostic output only — every
/// decision in this library is made in exact arithmetic.
pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
