//! Exact rational scalars.
//!
//! Values are `num_rational::BigRational`, which keeps the denominator
//! positive and the fraction reduced after every operation. The textual
//! form is `p/q`, or `p` when the denominator is one.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders `p/q`, or `p` for integers.
pub fn format(x: &Rational) -> String {
    x.to_string()
}

/// Parses `p/q` or `p`.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(alloc::format!("not a rational: {s:?}"));
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. Proportional vectors map to the same result.
pub(crate) fn primitive(v: &[Rational]) -> alloc::vec::Vec<BigInt> {
    let lcm = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: alloc::vec::Vec<BigInt> =
        v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    normalize(&mut out);
    out
}

/// Divides an integer vector by its content and fixes the sign of the
/// leading nonzero entry.
pub(crate) fn normalize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    if negate {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
}
