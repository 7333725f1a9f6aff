//! Dense univariate polynomials over Q: Sturm chains, Cauchy indices and
//! real-root isolation by Descartes bisection.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat_int, Rational};
use crate::modp;
use crate::error::{Error, Result};

/// Coefficients stored lowest degree first, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UPoly::new(c.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn constant(k: Rational) -> Self {
        UPoly::new(vec![k])
    }

    pub fn x() -> Self {
        UPoly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.c.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * rat_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> UPoly {
        UPoly::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly { c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let z = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = self.c.clone();
        let dd = d.degree();
        if r.len() < d.c.len() {
            return Ok((UPoly::zero(), self.clone()));
        }
        let inv_lc = Rational::one() / d.lc();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &inv_lc;
            if !f.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] -= &f * b;
                }
            }
            q[k] = f;
        }
        r.truncate(dd);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    pub fn rem(&self, d: &UPoly) -> Result<UPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&(Rational::one() / self.lc()))
    }

    /// Divides by the positive rational that makes the coefficients coprime integers.
    /// Signs, and therefore Sturm variations, are unchanged.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let ints = self.to_integer_primitive();
        UPoly::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Coprime integer coefficients with the same signs as `self`.
    pub fn to_integer_primitive(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for a in &self.c {
            l = l.lcm(a.denom());
        }
        let mut ints: Vec<BigInt> = self.c.iter().map(|a| (a * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for a in &ints {
            g = g.gcd(a);
        }
        if !g.is_zero() && !g.is_one() {
            for a in ints.iter_mut() {
                *a /= &g;
            }
        }
        ints
    }

    /// Monic gcd by a primitive remainder sequence over the integers, after a
    /// modular check that settles the common coprime case.
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_zero() || b.is_zero() {
            return if a.is_zero() { b.monic() } else { a.monic() };
        }
        if coprime_mod_p(a, b) {
            return UPoly::constant(Rational::one());
        }
        let (mut x, mut y) = (a.to_integer_primitive(), b.to_integer_primitive());
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let mut r = prem_int(&x, &y);
            make_primitive(&mut r);
            x = y;
            y = r;
        }
        UPoly::new(x.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree(&self) -> UPoly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = UPoly::gcd(self, &self.derivative());
        self.div_rem(&g).expect("gcd nonzero").0.monic()
    }

    /// p(a + b x).
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> UPoly {
        let lin = UPoly::new(vec![a.clone(), b.clone()]);
        let mut acc = UPoly::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(&lin).add(&UPoly::constant(c.clone()));
        }
        acc
    }

    /// Sign of the value at `x`, or at ±∞ when `x` is `None`.
    pub fn sign_at(&self, x: Option<&Rational>, positive_infinity: bool) -> i8 {
        match x {
            Some(x) => sgn(&self.eval(x)),
            None => {
                let s = sgn(&self.lc());
                if positive_infinity || self.degree() % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

/// True when the images mod p certify gcd(a, b) = 1: a keeps its degree, so
/// any common factor would keep its degree too.
fn coprime_mod_p(a: &UPoly, b: &UPoly) -> bool {
    let image = |f: &UPoly| f.c.iter().map(modp::rat).collect::<Option<Vec<u64>>>();
    match (image(a), image(b)) {
        (Some(x), Some(y)) => x.last() != Some(&0) && y.iter().any(|&c| c != 0) && modp::gcd_degree(&x, &y) == 0,
        _ => false,
    }
}

/// Pseudo-remainder of integer polynomials (lowest degree first), trimmed.
fn prem_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let lr = r.pop().expect("nonempty");
        let shift = r.len() + 1 - b.len();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b[..b.len() - 1].iter().enumerate() {
            r[j + shift] -= &lr * bj;
        }
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r
}

fn sgn(x: &Rational) -> i8 {
    match x.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*x")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Integer polynomial used for fast exact sign evaluation at rationals.
#[derive(Clone, Debug)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn from_upoly(p: &UPoly) -> Self {
        IntPoly(p.to_integer_primitive())
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Sign of p(n/d), with d > 0, using d^deg p(n/d) = sum c_k n^k d^(deg-k).
    fn sign_at(&self, x: &Rational) -> i8 {
        if self.0.is_empty() {
            return 0;
        }
        let n = x.numer();
        let d = x.denom();
        let mut acc = self.0.last().unwrap().clone();
        let mut dpow = BigInt::one();
        for c in self.0.iter().rev().skip(1) {
            dpow *= d;
            acc = acc * n + c * &dpow;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    fn sign_at_inf(&self, positive: bool) -> i8 {
        let s = match self.0.last() {
            None => return 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        };
        if positive || self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }
}

/// A generalized Sturm sequence f0, f1, f2 = -rem(f0, f1), ...
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(f0: &UPoly, f1: &UPoly) -> Self {
        let mut seq = Vec::new();
        let (mut a, mut b) = (f0.primitive(), f1.primitive());
        if !a.is_zero() {
            seq.push(IntPoly::from_upoly(&a));
        }
        while !b.is_zero() {
            seq.push(IntPoly::from_upoly(&b));
            let r = a.rem(&b).expect("nonzero divisor").neg().primitive();
            a = b;
            b = r;
        }
        SturmChain { seq }
    }

    /// Classical chain f, f'.
    pub fn of(f: &UPoly) -> Self {
        SturmChain::new(f, &f.derivative())
    }

    /// Sign variations at `x`; `None` means -∞ (`positive = false`) or +∞.
    pub fn variations(&self, x: Option<&Rational>, positive: bool) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for p in &self.seq {
            let s = match x {
                Some(x) => p.sign_at(x),
                None => p.sign_at_inf(positive),
            };
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    fn head_sign(&self, x: &Rational) -> i8 {
        self.seq.first().map_or(0, |p| p.sign_at(x))
    }
}

/// Number of distinct real roots of `f` in the open interval (lo, hi);
/// `None` bounds stand for -∞ and +∞.
pub fn sturm_count(f: &UPoly, lo: Option<&Rational>, hi: Option<&Rational>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::Domain("Sturm count of the zero polynomial".into()));
    }
    let chain = SturmChain::of(f);
    for x in [lo, hi].into_iter().flatten() {
        if chain.head_sign(x) == 0 {
            return Err(Error::EndpointRoot(x.to_string()));
        }
    }
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return Ok(0);
        }
    }
    let va = chain.variations(lo, false);
    let vb = chain.variations(hi, true);
    Ok(va.saturating_sub(vb))
}

/// Cauchy index of num/den over the whole real line: jumps from -∞ to +∞
/// minus jumps from +∞ to -∞.
pub fn cauchy_index(num: &UPoly, den: &UPoly) -> i64 {
    let chain = SturmChain::new(den, num);
    chain.variations(None, false) as i64 - chain.variations(None, true) as i64
}

/// B ≥ 1 with every complex root of `f` strictly inside |z| < B.
pub fn cauchy_root_bound(f: &UPoly) -> Rational {
    if f.degree() == 0 {
        return Rational::one();
    }
    let lc = f.lc().abs();
    let m = f.c[..f.c.len() - 1]
        .iter()
        .map(|a| a.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    Point,
    Open,
}

/// Isolating interval: an exact rational root, or an open interval holding one root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
    pub kind: IntervalKind,
}

impl Interval {
    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x, kind: IntervalKind::Point }
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo < hi);
        Interval { lo, hi, kind: IntervalKind::Open }
    }

    pub fn is_point(&self) -> bool {
        self.kind == IntervalKind::Point
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    /// Halves the interval around the root of the square-free `f` it isolates.
    pub fn bisect(&mut self, f: &UPoly) {
        if self.is_point() {
            return;
        }
        let m = self.midpoint();
        let sm = sgn(&f.eval(&m));
        if sm == 0 {
            *self = Interval::point(m);
            return;
        }
        let slo = sgn(&f.eval(&self.lo));
        let shi = sgn(&f.eval(&self.hi));
        let root_left = if slo != 0 {
            slo != sm
        } else if shi != 0 {
            shi == sm
        } else {
            // both endpoints are roots of f; count strictly inside (lo, m)
            let chain = SturmChain::of(f);
            chain.variations(Some(&self.lo), false) > chain.variations(Some(&m), false)
        };
        if root_left {
            self.hi = m;
        } else {
            self.lo = m;
        }
    }

    /// Bisects until the width is at most `w` (or the root turns out rational).
    pub fn refine_to(&mut self, f: &UPoly, w: &Rational) {
        while !self.is_point() && &self.width() > w {
            self.bisect(f);
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match self.kind {
            IntervalKind::Point => &self.lo == x,
            IntervalKind::Open => &self.lo < x && x < &self.hi,
        }
    }

    pub fn approx(&self) -> f64 {
        crate::arith::rat_to_f64(&self.midpoint())
    }
}

fn taylor_shift_one(p: &mut [BigInt]) {
    let n = p.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = p[j + 1].clone();
            p[j] += t;
        }
    }
}

fn sign_variations(p: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for c in p {
        let s = if c.is_zero() {
            0
        } else if c.is_negative() {
            -1
        } else {
            1
        };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Descartes bound for roots in (0, 1).
fn descartes_unit(p: &[BigInt]) -> usize {
    let mut q: Vec<BigInt> = p.iter().rev().cloned().collect();
    taylor_shift_one(&mut q);
    sign_variations(&q)
}

fn make_primitive(p: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for a in p.iter() {
        g = g.gcd(a);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for a in p.iter_mut() {
            *a /= &g;
        }
    }
}

/// Isolates the roots of square-free `p` (p(0) ≠ 0) in (0, 2^k).
fn isolate_positive(p: &[BigInt], k: u32, out: &mut Vec<Interval>) {
    // q(y) = p(2^k y), roots of interest in (0, 1).
    let mut q: Vec<BigInt> = p.iter().enumerate().map(|(i, c)| c << (k as usize * i)).collect();
    make_primitive(&mut q);
    let scale = Rational::from_integer(BigInt::one() << k as usize);
    let to_x = |c: &BigInt, level: u32| -> Rational {
        Rational::new(c.clone(), BigInt::one() << level as usize) * &scale
    };
    let mut stack: Vec<(Vec<BigInt>, BigInt, u32)> = vec![(q, BigInt::zero(), 0)];
    while let Some((q, c, level)) = stack.pop() {
        let v = descartes_unit(&q);
        if v == 0 {
            continue;
        }
        if v == 1 {
            out.push(Interval::open(to_x(&c, level), to_x(&(&c + 1), level)));
            continue;
        }
        let n = q.len() - 1;
        let mut left: Vec<BigInt> = q.iter().enumerate().map(|(i, a)| a << (n - i)).collect();
        make_primitive(&mut left);
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        let mid = BigInt::from(2) * &c + 1;
        if right[0].is_zero() {
            out.push(Interval::point(to_x(&mid, level + 1)));
            right.remove(0);
        }
        stack.push((right, mid, level + 1));
        stack.push((left, BigInt::from(2) * &c, level + 1));
    }
}

/// Whether `f`, nonzero at 0 and 1, has a real root in (0, 1), by Descartes
/// subdivision. `None` when `max_depth` halvings do not settle it, which
/// happens near multiple roots.
pub fn has_root_in_unit(f: &UPoly, max_depth: u32) -> Option<bool> {
    if f.is_zero() || f.degree() == 0 {
        return Some(false);
    }
    let mut stack = vec![(f.to_integer_primitive(), 0u32)];
    while let Some((q, depth)) = stack.pop() {
        let v = descartes_unit(&q);
        if v == 0 {
            continue;
        }
        if v % 2 == 1 {
            return Some(true);
        }
        if depth == max_depth {
            return None;
        }
        let n = q.len() - 1;
        let mut left: Vec<BigInt> = q.iter().enumerate().map(|(i, a)| a << (n - i)).collect();
        make_primitive(&mut left);
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        if right[0].is_zero() {
            return Some(true);
        }
        stack.push((right, depth + 1));
        stack.push((left, depth + 1));
    }
    Some(false)
}

/// Disjoint isolating intervals for the distinct real roots of `f`, sorted.
pub fn isolate_real_roots(f: &UPoly) -> Result<Vec<Interval>> {
    if f.is_zero() {
        return Err(Error::Domain("root isolation of the zero polynomial".into()));
    }
    isolate_squarefree(&f.squarefree())
}

/// As `isolate_real_roots`, for a nonzero `s` already known to be square-free.
pub fn isolate_squarefree(s: &UPoly) -> Result<Vec<Interval>> {
    if s.is_zero() {
        return Err(Error::Domain("root isolation of the zero polynomial".into()));
    }
    let mut s = s.clone();
    let mut out = Vec::new();
    if s.degree() == 0 {
        return Ok(out);
    }
    if s.eval(&Rational::zero()).is_zero() {
        out.push(Interval::point(Rational::zero()));
        s = UPoly::new(s.c[1..].to_vec());
    }
    if s.degree() == 0 {
        return Ok(out);
    }
    let b = cauchy_root_bound(&s);
    let mut k = 0u32;
    while Rational::from_integer(BigInt::one() << k as usize) < b {
        k += 1;
    }
    let ints = s.to_integer_primitive();
    isolate_positive(&ints, k, &mut out);
    let neg: Vec<BigInt> = ints
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    let mut negs = Vec::new();
    isolate_positive(&neg, k, &mut negs);
    for iv in negs {
        out.push(match iv.kind {
            IntervalKind::Point => Interval::point(-iv.lo),
            IntervalKind::Open => Interval::open(-iv.hi, -iv.lo),
        });
    }
    // An interval holds exactly one root, so a rational root is found by
    // testing the simplest rational inside.
    for iv in out.iter_mut().filter(|iv| !iv.is_point()) {
        let q = simplest_between(&iv.lo, &iv.hi);
        if s.eval(&q).is_zero() {
            *iv = Interval::point(q);
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    // Closures must be disjoint so neighbouring roots can be told apart.
    let mut i = 0;
    while i + 1 < out.len() {
        if out[i].hi < out[i + 1].lo {
            i += 1;
            continue;
        }
        let j = if out[i].is_point() { i + 1 } else { i };
        out[j].bisect(&s);
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
    }
    Ok(out)
}

/// Simplest rational strictly inside (lo, hi): least denominator, then least
/// absolute numerator. `None` bounds are infinite.
pub fn simplest_rational_in(lo: Option<&Rational>, hi: Option<&Rational>) -> Rational {
    match (lo, hi) {
        (None, None) => Rational::zero(),
        (Some(a), None) => {
            if a.is_negative() {
                Rational::zero()
            } else {
                Rational::from_integer(a.floor().to_integer() + 1)
            }
        }
        (None, Some(b)) => {
            if b.is_positive() {
                Rational::zero()
            } else {
                Rational::from_integer(b.ceil().to_integer() - 1)
            }
        }
        (Some(a), Some(b)) => {
            assert!(a < b, "empty interval");
            simplest_between(a, b)
        }
    }
}

fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    if a.is_negative() && b.is_positive() {
        return Rational::zero();
    }
    if !a.is_positive() && !b.is_positive() {
        // Mirror into the positive half-line.
        return -simplest_between(&-b, &-a);
    }
    // 0 ≤ a < b
    let fl = a.floor();
    let next = &fl + Rational::one();
    if &next < b {
        return next;
    }
    // a and b lie in [fl, fl + 1]; recurse on reciprocals of the fractional parts.
    let fa = a - &fl;
    let fb = b - &fl;
    let inner = if fa.is_zero() {
        simplest_rational_in(Some(&(Rational::one() / &fb)), None)
    } else {
        simplest_between(&(Rational::one() / &fb), &(Rational::one() / &fa))
    };
    fl + Rational::one() / inner
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    #[test]
    fn sturm_examples() {
        let f = UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(sturm_count(&f, None, None).unwrap(), 2);
        assert_eq!(sturm_count(&f, Some(&rat_int(0)), None).unwrap(), 1);
        assert_eq!(sturm_count(&UPoly::from_ints(&[1, 0, 1]), None, None).unwrap(), 0);
        assert!(matches!(
            sturm_count(&UPoly::from_ints(&[-1, 1]), Some(&rat_int(1)), None),
            Err(Error::EndpointRoot(_))
        ));
    }

    #[test]
    fn isolation_examples() {
        assert!(isolate_real_roots(&UPoly::from_ints(&[1, 0, 1])).unwrap().is_empty());
        let r = isolate_real_roots(&UPoly::from_ints(&[0, -2, 0, 1])).unwrap();
        assert_eq!(r.len(), 3);
        let root2 = |x: &Rational| x * x < rat_int(2);
        assert!(r[0].hi <= rat_int(0) && root2(&r[0].hi) && !root2(&r[0].lo));
        assert_eq!(r[1], Interval::point(rat_int(0)));
        assert!(r[2].lo >= rat_int(0) && root2(&r[2].lo) && !root2(&r[2].hi));
        let r = isolate_real_roots(&UPoly::from_ints(&[1, -2, 1])).unwrap();
        assert_eq!(r, vec![Interval::point(rat_int(1))]);
        assert!(isolate_real_roots(&UPoly::zero()).is_err());
    }

    #[test]
    fn cauchy_bound_examples() {
        assert!(cauchy_root_bound(&UPoly::from_ints(&[-4, 0, 1])) > rat_int(2));
        assert!(cauchy_root_bound(&UPoly::from_ints(&[10, 1])) > rat_int(10));
        assert_eq!(cauchy_root_bound(&UPoly::from_ints(&[3])), rat_int(1));
    }

    #[test]
    fn simplest_rational_examples() {
        assert_eq!(simplest_rational_in(Some(&rat(1, 3)), Some(&rat(1, 2))), rat(2, 5));
        assert_eq!(simplest_rational_in(Some(&rat_int(1)), Some(&rat_int(3))), rat_int(2));
        assert_eq!(simplest_rational_in(Some(&rat_int(-1)), Some(&rat_int(1))), rat_int(0));
        assert_eq!(simplest_rational_in(None, Some(&rat_int(-1))), rat_int(-2));
        assert_eq!(simplest_rational_in(Some(&rat(5, 2)), None), rat_int(3));
        assert_eq!(simplest_rational_in(Some(&rat(-7, 3)), Some(&rat(-9, 4))), rat(-16, 7));
    }

    /// Brute force over denominators for the simplest-rational oracle.
    fn simplest_brute(a: &Rational, b: &Rational) -> Rational {
        for d in 1i64.. {
            let dd = rat_int(d);
            let lo = (a * &dd).floor().to_integer() + 1;
            let hi = (b * &dd).ceil().to_integer() - 1;
            if lo <= hi {
                let zero = BigInt::zero();
                let n = if lo <= zero && zero <= hi { zero } else if lo > zero { lo } else { hi };
                return Rational::new(n, BigInt::from(d));
            }
        }
        unreachable!()
    }

    #[test]
    fn cauchy_index_simple_pole() {
        // 1/x jumps from -∞ to +∞ at 0.
        assert_eq!(cauchy_index(&UPoly::from_ints(&[1]), &UPoly::x()), 1);
        assert_eq!(cauchy_index(&UPoly::from_ints(&[-1]), &UPoly::x()), -1);
        assert_eq!(cauchy_index(&UPoly::x(), &UPoly::from_ints(&[1])), 0);
    }

    fn arb_poly() -> impl Strategy<Value = UPoly> {
        prop::collection::vec(-6i64..7, 1..8).prop_map(|c| UPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn simplest_matches_brute_force(n1 in -40i64..40, d1 in 1i64..12, w in 1i64..30, d2 in 1i64..12) {
            let a = rat(n1, d1);
            let b = &a + rat(w, d2 * 7);
            prop_assert_eq!(simplest_rational_in(Some(&a), Some(&b)), simplest_brute(&a, &b));
        }

        #[test]
        fn isolation_consistent_with_sturm(f in arb_poly()) {
            prop_assume!(!f.is_zero());
            let s = f.squarefree();
            let ivs = isolate_real_roots(&f).unwrap();
            for w in ivs.windows(2) {
                prop_assert!(w[0].hi < w[1].lo);
            }
            for iv in &ivs {
                if iv.is_point() {
                    prop_assert!(s.eval(&iv.lo).is_zero());
                } else {
                    prop_assert_eq!(sturm_count(&s, Some(&iv.lo), Some(&iv.hi)).unwrap(), 1);
                }
            }
            if s.degree() > 0 {
                let b = cauchy_root_bound(&s);
                let total = sturm_count(&s, Some(&-&b), Some(&b)).unwrap();
                prop_assert_eq!(total, ivs.len());
            } else {
                prop_assert!(ivs.is_empty());
            }
        }
    }

    #[test]
    fn unit_root_test() {
        let x = UPoly::new(vec![rat_int(0), rat_int(1)]);
        let lin = |a: i64, b: i64| UPoly::new(vec![-Rational::new(a.into(), b.into()), rat_int(1)]);
        // (x - 1/3)(x - 2/3) has two roots inside, (x - 2)(x + 1) none.
        assert_eq!(has_root_in_unit(&lin(1, 3).mul(&lin(2, 3)), 40), Some(true));
        assert_eq!(has_root_in_unit(&lin(2, 1).mul(&lin(-1, 1)), 40), Some(false));
        // x^2 - x + 1/4 + 1/1000 is positive on the line.
        let q = x.mul(&x).sub(&x).add(&UPoly::constant(Rational::new(251.into(), 1000.into())));
        assert_eq!(has_root_in_unit(&q, 40), Some(false));
        // A double root at an irrational point is not settled.
        let d = UPoly::new(vec![rat_int(-1), rat_int(0), rat_int(2)]);
        assert_eq!(has_root_in_unit(&d.mul(&d), 20), None);
    }
}
