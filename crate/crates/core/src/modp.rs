//! Arithmetic modulo a fixed prime p ≡ 1 (mod 4), used to certify that two
//! polynomials are coprime without exact remainder sequences.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{Gauss, Rational};

pub const P: u64 = 998_244_353;

pub fn mul(a: u64, b: u64) -> u64 {
    (a as u128 * b as u128 % P as u128) as u64
}

pub fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

pub fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

/// A square root of -1; 3 generates the multiplicative group.
pub fn iota() -> u64 {
    pow(3, (P - 1) / 4)
}

fn int_mod(x: &BigInt) -> u64 {
    let r = (x.abs() % BigInt::from(P)).to_u64().expect("reduced below p");
    if x.is_negative() {
        sub(0, r)
    } else {
        r
    }
}

/// Image of x, or `None` when p divides its denominator.
pub fn rat(x: &Rational) -> Option<u64> {
    let d = int_mod(x.denom());
    if d.is_zero() {
        return None;
    }
    Some(mul(int_mod(x.numer()), inv(d)))
}

/// Image of a + bi under i ↦ iota().
pub fn gauss(x: &Gauss, iota: u64) -> Option<u64> {
    Some(add(rat(&x.re)?, mul(rat(&x.im)?, iota)))
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree of gcd(a, b) over the field; coefficients lowest degree first, both
/// nonzero.
pub fn gcd_degree(a: &[u64], b: &[u64]) -> usize {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lb = inv(*b.last().expect("nonempty"));
        while a.len() >= b.len() {
            let q = mul(*a.last().expect("nonempty"), lb);
            let shift = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                a[j + shift] = sub(a[j + shift], mul(q, *bj));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}
