//! Exact rational and Gaussian-rational arithmetic.
//!
//! `Rational` is num's `BigRational`, which keeps every value reduced with a
//! positive denominator. `Gauss` is an element of Q(i).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `[+-]digits[.digits]` into its exact value.
pub fn rat_from_decimal(text: &str) -> Result<Rational> {
    let bad = || Error::Decimal(text.to_string());
    let t = text.trim();
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if body.ends_with('.') && frac_part.is_empty() && int_part.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let v = Rational::new(numer, denom);
    Ok(if neg { -v } else { v })
}

/// Accepts `num/den`, an integer, or a decimal literal.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| Error::Decimal(t.to_string()))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::Decimal(t.to_string()))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::new(n, d));
    }
    rat_from_decimal(t)
}

/// Always `num/den`, even for integers.
pub fn rat_to_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn rat_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact decimal rendering, available when the denominator is of the form 2^a 5^b.
pub fn rat_to_decimal(x: &Rational) -> Option<String> {
    let mut d = x.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let (mut a, mut b) = (0usize, 0usize);
    while d.is_even() {
        d /= &two;
        a += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        b += 1;
    }
    if !d.is_one() {
        return None;
    }
    let places = a.max(b);
    let scaled = x * Rational::from_integer(num_traits::pow(BigInt::from(10), places));
    let n = scaled.to_integer();
    let neg = n.is_negative();
    let mut digits = n.abs().to_string();
    if places == 0 {
        return Some(if neg { format!("-{digits}") } else { digits });
    }
    while digits.len() <= places {
        digits.insert(0, '0');
    }
    let split = digits.len() - places;
    let s = format!("{}.{}", &digits[..split], &digits[split..]);
    Some(if neg { format!("-{s}") } else { s })
}

/// Floor of a rational as a big integer.
pub fn rat_floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Element a + bi of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gauss {
    pub re: Rational,
    pub im: Rational,
}

impl Gauss {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gauss { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gauss { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Gauss::real(rat_int(n))
    }

    pub fn i() -> Self {
        Gauss { re: Rational::zero(), im: Rational::one() }
    }

    pub fn zero() -> Self {
        Gauss::real(Rational::zero())
    }

    pub fn one() -> Self {
        Gauss::real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -&self.im }
    }

    /// re² + im², zero iff the value is zero.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Gauss { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, other: &Gauss) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Gauss { re: &self.re * k, im: &self.im * k }
    }

    /// Multiplication by i^k.
    pub fn mul_i_pow(&self, k: u32) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => Gauss { re: -&self.im, im: self.re.clone() },
            2 => -self,
            _ => Gauss { re: self.im.clone(), im: -&self.re },
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Gauss::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// Operation selector for [`gauss_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn gauss_arith(x: &Gauss, y: &Gauss, op: GaussOp) -> Result<Gauss> {
    Ok(match op {
        GaussOp::Add => x + y,
        GaussOp::Sub => x - y,
        GaussOp::Mul => x * y,
        GaussOp::Div => x.checked_div(y)?,
    })
}

impl<'a> Add<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn add(self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn sub(self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn mul(self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::real(&self.re * &o.re);
        }
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Gauss { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        &self * &o
    }
}

impl AddAssign<&Gauss> for Gauss {
    fn add_assign(&mut self, o: &Gauss) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Gauss> for Gauss {
    fn sub_assign(&mut self, o: &Gauss) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl From<Rational> for Gauss {
    fn from(r: Rational) -> Self {
        Gauss::real(r)
    }
}

impl fmt::Display for Gauss {
    /// `3/2`, `-i`, `(1/2+3*i)`; parseable by the input grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", self.im)
        };
        if self.re.is_zero() {
            return write!(f, "{im}");
        }
        if self.im.is_negative() {
            write!(f, "({}{})", self.re, im)
        } else {
            write!(f, "({}+{})", self.re, im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> Gauss {
        Gauss::new(rat_int(a), rat_int(b))
    }

    #[test]
    fn decimal_literals() {
        assert_eq!(rat_from_decimal("0.4753").unwrap(), rat(4753, 10000));
        assert_eq!(rat_from_decimal("1").unwrap(), rat_int(1));
        assert_eq!(rat_from_decimal("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(rat_from_decimal("33.5").unwrap(), rat(67, 2));
        assert_eq!(rat_from_decimal(".25").unwrap(), rat(1, 4));
        for bad in ["", "-", "1.2.3", "0,4753", "abc", "1e5", "."] {
            assert!(rat_from_decimal(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(gauss_arith(&g(1, 2), &g(3, -1), GaussOp::Mul).unwrap(), g(5, 5));
        let x = g(3, 4);
        assert_eq!(&x * &x.conj(), g(25, 0));
        assert_eq!(gauss_arith(&g(1, 1), &g(1, 1), GaussOp::Div).unwrap(), Gauss::one());
        assert_eq!(gauss_arith(&g(1, 1), &Gauss::zero(), GaussOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(g(0, 1).to_string(), "i");
        assert_eq!(g(2, -3).to_string(), "(2-3*i)");
        assert_eq!(Gauss::new(rat(1, 2), rat(0, 1)).to_string(), "1/2");
        assert_eq!(rat_to_string(&rat_int(3)), "3/1");
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_gauss() -> impl Strategy<Value = Gauss> {
        (arb_rat(), arb_rat()).prop_map(|(a, b)| Gauss::new(a, b))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_gauss(), y in arb_gauss(), z in arb_gauss()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), Gauss::one());
                prop_assert!(!x.norm().is_zero());
            }
        }

        #[test]
        fn decimal_round_trip(n in -1_000_000i64..1_000_000, places in 0u32..7) {
            let x = Rational::new(BigInt::from(n), num_traits::pow(BigInt::from(10), places as usize));
            let text = rat_to_decimal(&x).unwrap();
            prop_assert_eq!(rat_from_decimal(&text).unwrap(), x);
        }
    }
}
