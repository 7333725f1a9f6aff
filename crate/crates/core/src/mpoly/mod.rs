//! Sparse multivariate polynomials with Gaussian-rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order
//! is lexicographic with the first declared variable most significant. The
//! last entry is the lex-leading term.

mod gcd;
mod resultant;

pub use gcd::{content, gcd, gcd_in, squarefree_part};
pub use resultant::{bareiss_det, resultant};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Gauss, Rational};
use crate::error::{Error, Result};
use crate::upoly::{self, Interval, UPoly};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Gauss>,
}

impl MPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MPoly { vars: vars.iter().map(|v| v.as_ref().to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Gauss) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        MPoly::constant(vars, Gauss::one())
    }

    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let mut p = MPoly::zero(vars);
        let i = p.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.terms.insert(e, Gauss::one());
        Ok(p)
    }

    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: Exponents, c: Gauss) -> Self {
        let mut p = MPoly::zero(vars);
        assert_eq!(exps.len(), p.vars.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms<S: AsRef<str>>(vars: &[S], terms: impl IntoIterator<Item = (Exponents, Gauss)>) -> Self {
        let mut p = MPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len());
            p.add_term(e, &c);
        }
        p
    }

    /// Same variables as `self`, constant value `c`.
    pub fn lift(&self, c: Gauss) -> Self {
        MPoly::constant(&self.vars, c)
    }

    fn empty_like(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    fn add_term(&mut self, e: Exponents, c: &Gauss) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Gauss)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().iter().all(|&e| e == 0),
            _ => false,
        }
    }

    pub fn constant_value(&self) -> Option<Gauss> {
        if self.is_zero() {
            Some(Gauss::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn degree(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.var_index(name).map_or(0, |i| self.degree(i))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn depends_on(&self, idx: usize) -> bool {
        self.terms.keys().any(|e| e[idx] > 0)
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Exponents, &Gauss)> {
        self.terms.iter().next_back()
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Gauss::is_real)
    }

    /// Re-expresses `self` over `vars`, which must include every variable `self` uses.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let new_vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if new_vars == self.vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match new_vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if !self.depends_on(i) => map.push(None),
                None => return Err(Error::UnknownVariable(v.clone())),
            }
        }
        let mut out = MPoly { vars: new_vars, terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut ne = vec![0; out.vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] = k;
                }
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// Brings two polynomials onto the union of their variable lists.
    pub fn unify(a: &MPoly, b: &MPoly) -> (MPoly, MPoly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars = a.vars.clone();
        for v in &b.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (a.with_vars(&vars).unwrap(), b.with_vars(&vars).unwrap())
    }

    pub fn scale(&self, k: &Gauss) -> MPoly {
        if k.is_zero() {
            return self.empty_like();
        }
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn scale_rational(&self, k: &Rational) -> MPoly {
        self.scale(&Gauss::real(k.clone()))
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = self.lift(Gauss::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn conj(&self) -> MPoly {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c.conj())).collect() }
    }

    /// Real part of every coefficient (the variables are taken to be real).
    pub fn re_part(&self) -> MPoly {
        let mut p = self.empty_like();
        for (e, c) in &self.terms {
            p.add_term(e.clone(), &Gauss::real(c.re.clone()));
        }
        p
    }

    pub fn im_part(&self) -> MPoly {
        let mut p = self.empty_like();
        for (e, c) in &self.terms {
            p.add_term(e.clone(), &Gauss::real(c.im.clone()));
        }
        p
    }

    /// Substitutes values for some variables; the variable list is kept.
    pub fn evaluate(&self, assignment: &[(&str, Gauss)]) -> Result<MPoly> {
        let mut idx = Vec::new();
        for (name, v) in assignment {
            let i = self.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            idx.push((i, v));
        }
        if idx.is_empty() {
            return Ok(self.clone());
        }
        let mut powers: Vec<Vec<Gauss>> = idx.iter().map(|_| vec![Gauss::one()]).collect();
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let mut k = c.clone();
            for (slot, (i, v)) in idx.iter().enumerate() {
                let d = e[*i] as usize;
                let pw = &mut powers[slot];
                while pw.len() <= d {
                    let next = pw.last().unwrap() * *v;
                    pw.push(next);
                }
                k = &k * &pw[d];
                ne[*i] = 0;
            }
            out.add_term(ne, &k);
        }
        Ok(out)
    }

    /// Replaces variable `idx` by `value` (a polynomial over the same variables).
    pub fn substitute(&self, idx: usize, value: &MPoly) -> MPoly {
        let coeffs = self.coeffs_in(idx);
        let mut acc = self.empty_like();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn derivative(&self, idx: usize) -> MPoly {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[idx] -= 1;
            out.add_term(ne, &c.scale(&Rational::from_integer(BigInt::from(e[idx]))));
        }
        out
    }

    pub fn derivative_in(&self, name: &str) -> Result<MPoly> {
        let i = self.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.derivative(i))
    }

    /// Coefficients with respect to variable `idx`, lowest degree first.
    /// The variable list is kept; each coefficient is free of `idx`.
    pub fn coeffs_in(&self, idx: usize) -> Vec<MPoly> {
        let n = if self.is_zero() { 0 } else { self.degree(idx) as usize + 1 };
        let mut out = vec![self.empty_like(); n];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let d = ne[idx] as usize;
            ne[idx] = 0;
            out[d].terms.insert(ne, c.clone());
        }
        out
    }

    /// Inverse of [`MPoly::coeffs_in`].
    pub fn from_coeffs_in(template: &MPoly, idx: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = template.empty_like();
        for (d, c) in coeffs.iter().enumerate() {
            for (e, k) in &c.terms {
                let mut ne = e.clone();
                ne[idx] += d as u32;
                out.add_term(ne, k);
            }
        }
        out
    }

    /// Leading coefficient with respect to variable `idx`.
    pub fn lc_in(&self, idx: usize) -> MPoly {
        self.coeffs_in(idx).pop().unwrap_or_else(|| self.empty_like())
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        let (a, d) = if self.vars == d.vars { (self.clone(), d.clone()) } else { MPoly::unify(self, d) };
        if let Some(k) = d.constant_value() {
            return Some(a.scale(&k.inv().ok()?));
        }
        let (de, dc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let dinv = dc.inv().ok()?;
        let mut rem = a;
        let mut q = rem.empty_like();
        while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(x, y)| x < y) {
                return None;
            }
            let qe: Exponents = re.iter().zip(&de).map(|(x, y)| x - y).collect();
            let qc = &rc * &dinv;
            for (e, c) in &d.terms {
                let ne: Exponents = e.iter().zip(&qe).map(|(x, y)| x + y).collect();
                rem.add_term(ne, &-(c * &qc));
            }
            q.terms.insert(qe, qc);
        }
        Some(q)
    }

    /// Canonical associate: coprime integer coefficients (Gaussian integers
    /// when complex) and a positive real lex-leading coefficient.
    pub fn normalize(&self) -> MPoly {
        let Some((_, lead)) = self.leading_term() else {
            return self.clone();
        };
        let p = if self.is_real() {
            if lead.re.is_negative() {
                -self
            } else {
                self.clone()
            }
        } else {
            self.scale(&lead.inv().expect("nonzero"))
        };
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in p.terms.values() {
            l = l.lcm(c.re.denom()).lcm(c.im.denom());
            g = g.gcd(c.re.numer()).gcd(c.im.numer());
        }
        p.scale_rational(&Rational::new(l, g))
    }

    /// Univariate view in variable `idx`, when the polynomial is real and free of other variables.
    pub fn to_upoly(&self, idx: usize) -> Option<UPoly> {
        if !self.is_real() {
            return None;
        }
        let n = if self.is_zero() { 0 } else { self.degree(idx) as usize + 1 };
        let mut c = vec![Rational::zero(); n];
        for (e, k) in &self.terms {
            if e.iter().enumerate().any(|(i, &x)| i != idx && x > 0) {
                return None;
            }
            c[e[idx] as usize] = k.re.clone();
        }
        Some(UPoly::new(c))
    }

    /// Univariate view in the single variable the polynomial uses (any, if constant).
    pub fn as_univariate(&self) -> Option<UPoly> {
        let used: Vec<usize> = (0..self.vars.len()).filter(|&i| self.depends_on(i)).collect();
        match used.as_slice() {
            [] => self.to_upoly(0).or_else(|| self.constant_value().filter(Gauss::is_real).map(|c| UPoly::constant(c.re))),
            [i] => self.to_upoly(*i),
            _ => None,
        }
    }

    pub fn from_upoly<S: AsRef<str>>(vars: &[S], idx: usize, u: &UPoly) -> MPoly {
        let mut p = MPoly::zero(vars);
        for (d, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; p.vars.len()];
            e[idx] = d as u32;
            p.add_term(e, &Gauss::real(c.clone()));
        }
        p
    }

    /// Value at a point given as one Gaussian rational per variable.
    pub fn eval_full(&self, point: &[Gauss]) -> Gauss {
        let mut acc = Gauss::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Floating-point evaluation of the real part; display and oracles only.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = crate::arith::rat_to_f64(&c.re);
                for (x, &k) in point.iter().zip(e) {
                    t *= x.powi(k as i32);
                }
                t
            })
            .sum()
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        if self.vars != o.vars {
            let (a, b) = MPoly::unify(self, o);
            return &a + &b;
        }
        let (big, small) = if self.terms.len() >= o.terms.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        if self.vars != o.vars {
            let (a, b) = MPoly::unify(self, o);
            return &a - &b;
        }
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        if self.vars != o.vars {
            let (a, b) = MPoly::unify(self, o);
            return &a * &b;
        }
        let mut out = self.empty_like();
        if self.is_zero() || o.is_zero() {
            return out;
        }
        if let Some(k) = o.constant_value() {
            return self.scale(&k);
        }
        if let Some(k) = self.constant_value() {
            return o.scale(&k);
        }
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, o: MPoly) -> MPoly {
        &self + &o
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, o: MPoly) -> MPoly {
        &self - &o
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        &self * &o
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    /// Terms by descending total degree, then descending lex order.
    /// The output is accepted by the input-file expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Exponents, &Gauss)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            let (negative, mag) = if c.is_real() && c.re.is_negative() {
                (true, Gauss::real(-&c.re))
            } else {
                (false, c.clone())
            };
            let sep = match (n, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", mag, mono.join("*"))
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

fn univariate_of(f: &MPoly) -> Result<UPoly> {
    f.as_univariate()
        .ok_or_else(|| Error::Domain("expected a univariate polynomial with real coefficients".into()))
}

/// Real-root isolation for a univariate real polynomial.
pub fn isolate_real_roots(f: &MPoly) -> Result<Vec<Interval>> {
    upoly::isolate_real_roots(&univariate_of(f)?)
}

/// Distinct real roots in (lo, hi); `None` is an infinite endpoint.
pub fn sturm_count(f: &MPoly, lo: Option<&Rational>, hi: Option<&Rational>) -> Result<usize> {
    upoly::sturm_count(&univariate_of(f)?, lo, hi)
}

/// Modulus bound 1 + max |a_i / a_n| (|re| + |im| stands in for the modulus of complex ratios).
pub fn cauchy_root_bound(f: &MPoly) -> Result<Rational> {
    let used: Vec<usize> = (0..f.vars.len()).filter(|&i| f.depends_on(i)).collect();
    if f.is_zero() {
        return Err(Error::Domain("root bound of the zero polynomial".into()));
    }
    let idx = match used.as_slice() {
        [] => return Ok(Rational::one()),
        [i] => *i,
        _ => return Err(Error::Domain("expected a univariate polynomial".into())),
    };
    let coeffs = f.coeffs_in(idx);
    let lc = coeffs.last().unwrap().constant_value().unwrap();
    let mut m = Rational::zero();
    for c in &coeffs[..coeffs.len() - 1] {
        let q = c.constant_value().unwrap().checked_div(&lc)?;
        let bound = q.re.abs() + q.im.abs();
        if bound > m {
            m = bound;
        }
    }
    Ok(Rational::one() + m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn v(vars: &[&str], name: &str) -> MPoly {
        MPoly::var(vars, name).unwrap()
    }

    fn c(vars: &[&str], k: i64) -> MPoly {
        MPoly::constant(vars, Gauss::from_int(k))
    }

    #[test]
    fn arithmetic_examples() {
        let vs = ["r", "p"];
        let (r, p) = (v(&vs, "r"), v(&vs, "p"));
        assert_eq!(&(&r + &p) * &(&r - &p), &(&r * &r) - &(&p * &p));
        assert_eq!(&r + &MPoly::zero(&vs), r);
        let s = v(&["s"], "s");
        let one = c(&["s"], 1);
        assert_eq!((&s - &one).pow(2), &(&(&s * &s) - &s.scale(&Gauss::from_int(2))) + &one);
    }

    #[test]
    fn auto_extends_variables() {
        let r = v(&["r"], "r");
        let p = v(&["p"], "p");
        let sum = &r + &p;
        assert_eq!(sum.vars(), &["r".to_string(), "p".to_string()]);
        assert_eq!(sum.num_terms(), 2);
    }

    #[test]
    fn evaluate_examples() {
        let vs = ["r", "p"];
        let (r, p) = (v(&vs, "r"), v(&vs, "p"));
        let f = &(&r * &r) + &p;
        assert_eq!(f.evaluate(&[("r", Gauss::from_int(2))]).unwrap(), &p + &c(&vs, 4));
        assert_eq!(f.evaluate(&[]).unwrap(), f);
        let vs = ["s", "r"];
        let (s, r) = (v(&vs, "s"), v(&vs, "r"));
        let g = &(&s * &s) + &(&r * &s);
        let z = g.evaluate(&[("r", Gauss::from_int(1)), ("s", Gauss::from_int(-1))]).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn derivative_examples() {
        let vs = ["r", "p"];
        let (r, p) = (v(&vs, "r"), v(&vs, "p"));
        let f = &(&(&r * &r) * &p) + &p;
        assert_eq!(f.derivative_in("p").unwrap(), &(&r * &r) + &c(&vs, 1));
        assert!(c(&vs, 7).derivative_in("r").unwrap().is_zero());
        assert_eq!(p.pow(3).derivative_in("p").unwrap(), p.pow(2).scale(&Gauss::from_int(3)));
    }

    #[test]
    fn exact_division() {
        let vs = ["r", "p"];
        let (r, p) = (v(&vs, "r"), v(&vs, "p"));
        let a = &(&r + &p) * &(&r - &(&p * &p));
        assert_eq!(a.div_exact(&(&r + &p)).unwrap(), &r - &(&p * &p));
        assert!(a.div_exact(&(&r + &c(&vs, 1))).is_none());
    }

    #[test]
    fn normalize_is_canonical() {
        let vs = ["r", "p"];
        let (r, p) = (v(&vs, "r"), v(&vs, "p"));
        let f = (&r.scale_rational(&rat(-3, 2)) + &p.scale_rational(&rat(9, 4))).normalize();
        assert_eq!(f, &r.scale_rational(&rat_int(2)) - &p.scale_rational(&rat_int(3)));
    }

    #[test]
    fn display_round_shape() {
        let vs = ["r", "p"];
        let (r, p) = (v(&vs, "r"), v(&vs, "p"));
        let f = &(&(&r * &r).scale_rational(&rat_int(3)) - &p) + &c(&vs, -5);
        assert_eq!(f.to_string(), "3*r^2 - p - 5");
        let g = &p.scale(&Gauss::new(rat_int(1), rat_int(2))) + &r;
        assert_eq!(g.to_string(), "r + (1+2*i)*p");
    }

    #[test]
    fn root_bound_wrappers() {
        let p = v(&["p"], "p");
        let f = &(&p * &p) - &c(&["p"], 4);
        assert!(cauchy_root_bound(&f).unwrap() > rat_int(2));
        assert_eq!(cauchy_root_bound(&c(&["p"], 3)).unwrap(), rat_int(1));
        assert_eq!(sturm_count(&f, None, None).unwrap(), 2);
        assert_eq!(isolate_real_roots(&f).unwrap().len(), 2);
    }
}
