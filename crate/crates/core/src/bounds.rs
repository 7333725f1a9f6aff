//! Closed-form upper bounds on the number of root-invariant regions.

use crate::error::{Error, Result};
use crate::family::TimeDomain;

fn pow(base: u128, n: u32) -> Result<u128> {
    base.checked_pow(n).ok_or(Error::Overflow)
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// 6(4td + 4d)^n for n parameters.
pub fn warren_bound(t: u32, d: u32, n: u32) -> Result<u128> {
    let (t, d) = (t as u128, d as u128);
    let base = mul(4, mul(t, d)?)?.checked_add(mul(4, d)?).ok_or(Error::Overflow)?;
    mul(6, pow(base, n)?)
}

/// (q² + q + 2)/2: components of the complement of a degree-q plane curve.
pub fn curve_complement_bound(q: u32) -> Result<u128> {
    let q = q as u128;
    let num = mul(q, q)?.checked_add(q + 2).ok_or(Error::Overflow)?;
    debug_assert_eq!(num % 2, 0);
    Ok(num / 2)
}

/// Two-parameter polynomial families: q = 2td + 2d.
pub fn planar_bound(t: u32, d: u32) -> Result<u128> {
    curve_complement_bound(degree_arg(2 * t as u64 * d as u64 + 2 * d as u64)?)
}

/// Two-parameter matrix families: q = 2t²d, plus 2td in discrete time.
pub fn matrix_planar_bound(t: u32, d: u32, time: TimeDomain) -> Result<u128> {
    let (t, d) = (t as u64, d as u64);
    let q = match time {
        TimeDomain::Continuous => 2 * t * t * d,
        TimeDomain::Discrete => 2 * t * t * d + 2 * t * d,
    };
    curve_complement_bound(degree_arg(q)?)
}

/// 6(4t²d)^n continuous, 6(4t²d + 4td)^n discrete.
pub fn matrix_warren_bound(t: u32, d: u32, n: u32, time: TimeDomain) -> Result<u128> {
    let (t, d) = (t as u128, d as u128);
    let mut base = mul(4, mul(mul(t, t)?, d)?)?;
    if time == TimeDomain::Discrete {
        base = base.checked_add(mul(4, mul(t, d)?)?).ok_or(Error::Overflow)?;
    }
    mul(6, pow(base, n)?)
}

fn degree_arg(q: u64) -> Result<u32> {
    u32::try_from(q).map_err(|_| Error::Overflow)
}
