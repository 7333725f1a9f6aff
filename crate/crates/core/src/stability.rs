//! Exact stable-root counts: left half-plane for continuous time, unit disk
//! for discrete time.

use crate::arith::{rat_to_string, Gauss, Rational};
use crate::error::{Error, Result};
use crate::family::{bilinear_coeffs, PolyFamily, TimeDomain};
use crate::mpoly::MPoly;
use crate::upoly::{cauchy_index, isolate_real_roots, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootCount {
    pub stable: usize,
    pub unstable: usize,
    pub degree: usize,
    pub marginal: bool,
}

impl RootCount {
    fn marginal(degree: usize) -> Self {
        RootCount { stable: 0, unstable: 0, degree, marginal: true }
    }
}

fn trimmed(q: &[Gauss]) -> Result<Vec<Gauss>> {
    let mut q = q.to_vec();
    while q.last().is_some_and(Gauss::is_zero) {
        q.pop();
    }
    if q.is_empty() {
        return Err(Error::Domain("root count of the zero polynomial".into()));
    }
    Ok(q)
}

/// Roots with negative and positive real part of Σ q[k] s^k.
pub fn lhp_count_coeffs(q: &[Gauss]) -> Result<RootCount> {
    let q = trimmed(q)?;
    let n = q.len() - 1;
    // Rotate so q(iω) has a positive real leading term: deg R = n > deg I,
    // which keeps the argument away from the imaginary axis at ω = ±∞.
    let unit = q[n].mul_i_pow(n as u32).conj();
    let mut re = Vec::with_capacity(n + 1);
    let mut im = Vec::with_capacity(n + 1);
    for (k, a) in q.iter().enumerate() {
        let c = (&unit * a).mul_i_pow(k as u32);
        re.push(c.re);
        im.push(c.im);
    }
    let re = UPoly::new(re);
    let im = UPoly::new(im);
    if !im.is_zero() {
        let g = UPoly::gcd(&re, &im);
        if g.degree() > 0 && !isolate_real_roots(&g)?.is_empty() {
            return Ok(RootCount::marginal(n));
        }
    } else if !isolate_real_roots(&re)?.is_empty() {
        return Ok(RootCount::marginal(n));
    }
    // Δarg q(iω) over the real line is π·(stable - unstable) = -π·Ind(I/R).
    // A common factor without real roots pairs mirror-image roots and cancels.
    let diff = if im.is_zero() { 0 } else { -cauchy_index(&im, &re) };
    let stable = ((n as i64 + diff) / 2) as usize;
    Ok(RootCount { stable, unstable: n - stable, degree: n, marginal: false })
}

/// Roots inside and outside the unit disk of Σ q[k] z^k.
pub fn schur_count_coeffs(q: &[Gauss]) -> Result<RootCount> {
    let q = trimmed(q)?;
    let n = q.len() - 1;
    let at_one = q.iter().fold(Gauss::zero(), |acc, a| &acc + a);
    if at_one.is_zero() {
        return Ok(RootCount::marginal(n));
    }
    lhp_count_coeffs(&bilinear_coeffs(&q))
}

fn univariate_coeffs(q: &MPoly) -> Result<Vec<Gauss>> {
    let used: Vec<usize> = (0..q.vars().len()).filter(|&i| q.depends_on(i)).collect();
    if used.len() > 1 {
        return Err(Error::Domain(format!("{q} is not univariate")));
    }
    let idx = used.first().copied().unwrap_or(0);
    let mut out = vec![Gauss::zero(); q.degree(idx) as usize + 1];
    for (e, c) in q.terms() {
        out[e[idx] as usize] = c.clone();
    }
    Ok(out)
}

pub fn lhp_count(q: &MPoly) -> Result<RootCount> {
    lhp_count_coeffs(&univariate_coeffs(q)?)
}

pub fn schur_count(q: &MPoly) -> Result<RootCount> {
    schur_count_coeffs(&univariate_coeffs(q)?)
}

/// Stable-root count of `f` at the parameter point (r, p).
pub fn classify_point(f: &PolyFamily, r: &Rational, p: &Rational) -> Result<RootCount> {
    let q = f.specialize(&Gauss::real(r.clone()), &Gauss::real(p.clone()));
    if q.len() - 1 < f.degree_s() as usize {
        return Err(Error::DegreeDrop { r: rat_to_string(r), p: rat_to_string(p) });
    }
    let count = match f.time {
        TimeDomain::Continuous => lhp_count_coeffs(&q)?,
        TimeDomain::Discrete => schur_count_coeffs(&q)?,
    };
    if count.marginal {
        return Err(Error::BorderContact { r: rat_to_string(r), p: rat_to_string(p) });
    }
    Ok(count)
}
