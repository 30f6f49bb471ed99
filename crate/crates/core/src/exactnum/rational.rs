use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ball::{ApproxComplex, U};
use crate::error::{Error, Result};

/// Shorthand for a small rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"n"` or `"n/d"` (optional leading sign, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Embed a rational as a real ball (one rounding of the quotient).
pub fn rat_to_ball(x: &BigRational) -> ApproxComplex {
    let v = x.to_f64().unwrap_or(f64::NAN);
    let exact = BigRational::from_float(v).map(|r| &r == x).unwrap_or(false);
    let err = if exact { 0.0 } else { 2.0 * U * v.abs() + f64::MIN_POSITIVE };
    ApproxComplex::with_err(v, 0.0, err)
}

/// Split `n > 0` as `m^2 * s` with `s` squarefree. Returns `(m, s)`.
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    assert!(n > 0);
    let mut m = 1u64;
    let mut s = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    s *= rest;
    (m, s)
}
