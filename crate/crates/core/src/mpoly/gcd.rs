//! Recursive gcd by content/primitive-part splitting and subresultant
//! remainder sequences; square-free parts built on top of it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::MPoly;
use crate::arith::{Gauss, Rational};
use crate::error::{Error, Result};
use crate::modp;
use crate::upoly::UPoly;

/// Dense polynomial in one distinguished variable; coefficients are free of it.
type Dense = Vec<MPoly>;

fn trim(a: &mut Dense) {
    while a.last().is_some_and(MPoly::is_zero) {
        a.pop();
    }
}

fn deg(a: &Dense) -> usize {
    a.len().saturating_sub(1)
}

/// lc(b)^(deg a - deg b + 1) · a  mod  b.
fn prem(a: &Dense, b: &Dense) -> Dense {
    let n = deg(b);
    let lb = b.last().expect("nonzero divisor").clone();
    let mut r = a.clone();
    let mut e = (deg(a) + 1).saturating_sub(n) as u32;
    while !r.is_empty() && deg(&r) >= n {
        let d = deg(&r);
        let lr = r[d].clone();
        for x in r.iter_mut() {
            *x = &*x * &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &lr * bj;
            r[j + d - n] = &r[j + d - n] - &t;
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let k = lb.pow(e);
        for x in r.iter_mut() {
            *x = &*x * &k;
        }
    }
    r
}

fn divide_all(a: &Dense, d: &MPoly) -> Dense {
    a.iter().map(|x| x.div_exact(d).expect("subresultant division is exact")).collect()
}

/// Gcd of two primitive polynomials in `idx`, both of positive degree there.
fn subresultant_gcd(f: &MPoly, g: &MPoly, idx: usize) -> MPoly {
    let mut a: Dense = f.coeffs_in(idx);
    let mut b: Dense = g.coeffs_in(idx);
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let one = f.lift(crate::arith::Gauss::one());
    let mut gg = one.clone();
    let mut h = one.clone();
    loop {
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            let p = MPoly::from_coeffs_in(f, idx, &b);
            return primitive_part(&p, idx);
        }
        if deg(&r) == 0 {
            return one;
        }
        a = b;
        let div = &gg * &h.pow(delta);
        b = divide_all(&r, &div);
        gg = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => gg.pow(delta).div_exact(&h.pow(delta - 1)).expect("exact"),
        };
    }
}

/// Dense image in variable `idx` mod p, the other variables set to `point`.
fn image(f: &MPoly, idx: usize, point: &[u64], iota: u64) -> Option<Vec<u64>> {
    let mut out = vec![0; f.degree(idx) as usize + 1];
    for (e, c) in f.terms() {
        let mut t = modp::gauss(c, iota)?;
        for (j, &k) in e.iter().enumerate() {
            if j != idx {
                t = modp::mul(t, modp::pow(point[j], k as u64));
            }
        }
        out[e[idx] as usize] = modp::add(out[e[idx] as usize], t);
    }
    Some(out)
}

/// True when an image of f and g in one variable certifies that primitive f
/// and g share no factor of positive degree in `idx`. f must keep its degree
/// under the specialization, which forces any common factor to keep its own.
fn coprime_mod_p(f: &MPoly, g: &MPoly, idx: usize) -> bool {
    let iota = modp::iota();
    let n = f.vars().len();
    (0..3u64).any(|attempt| {
        let point: Vec<u64> = (0..n as u64).map(|j| 2 + 3 * j + 7 * attempt).collect();
        match (image(f, idx, &point, iota), image(g, idx, &point, iota)) {
            (Some(a), Some(b)) => a.last() != Some(&0) && b.iter().any(|&x| x != 0) && modp::gcd_degree(&a, &b) == 0,
            _ => false,
        }
    })
}

/// Integer coefficients of a real polynomial made integral by `normalize`.
fn int_coeff(c: &Gauss) -> BigInt {
    c.re.to_integer()
}

/// Largest absolute coefficient of a normalized real polynomial.
fn height(f: &MPoly) -> BigInt {
    f.terms().map(|(_, c)| int_coeff(c).abs()).max().unwrap_or_else(BigInt::zero)
}

/// Integer polynomial in `idx` (lowest degree first) from setting the other
/// variable of a bivariate `f` to `xi`.
fn eval_other(f: &MPoly, idx: usize, xi: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); f.degree(idx) as usize + 1];
    for (e, c) in f.terms() {
        out[e[idx] as usize] += int_coeff(c) * xi.pow(e[1 - idx]);
    }
    out
}

/// Gcd over Z of integer polynomials: content gcd times primitive gcd.
fn int_poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let content = a.iter().chain(b).fold(BigInt::zero(), |g, x| g.gcd(x));
    let to_u = |x: &[BigInt]| UPoly::new(x.iter().cloned().map(Rational::from_integer).collect());
    let g = UPoly::gcd(&to_u(a), &to_u(b));
    g.to_integer_primitive().into_iter().map(|x| x * &content).collect()
}

/// Symmetric base-xi digits of x, least significant first.
fn digits(x: &BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut x = x.clone();
    let mut out = Vec::new();
    while !x.is_zero() {
        let mut d = x.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        x = (&x - &d) / xi;
        out.push(d);
    }
    out
}

/// Heuristic gcd of primitive bivariate real polynomials: evaluate the other
/// variable at a large integer, take the univariate gcd, read the
/// coefficients back as base-xi digits and keep the result only if it
/// divides both inputs.
fn heuristic_gcd(f: &MPoly, g: &MPoly, idx: usize) -> Option<MPoly> {
    if f.vars().len() != 2 || !f.is_real() || !g.is_real() {
        return None;
    }
    let (fi, gi) = (f.normalize(), g.normalize());
    let mut xi = BigInt::from(2) * height(&fi).min(height(&gi)) + 29;
    for _ in 0..4 {
        let (a, b) = (eval_other(&fi, idx, &xi), eval_other(&gi, idx, &xi));
        if a.last().is_some_and(|x| !x.is_zero()) && b.last().is_some_and(|x| !x.is_zero()) {
            let gx = int_poly_gcd(&a, &b);
            let mut terms = Vec::new();
            for (k, c) in gx.iter().enumerate() {
                for (j, d) in digits(c, &xi).into_iter().enumerate() {
                    if !d.is_zero() {
                        let mut e = vec![0u32; 2];
                        e[idx] = k as u32;
                        e[1 - idx] = j as u32;
                        terms.push((e, Gauss::real(Rational::from_integer(d))));
                    }
                }
            }
            let h = MPoly::from_terms(f.vars(), terms);
            if !h.is_zero() {
                let h = h.normalize();
                if fi.div_exact(&h).is_some() && gi.div_exact(&h).is_some() {
                    return Some(h);
                }
            }
        }
        xi = &xi * BigInt::from(73794) / BigInt::from(27011);
    }
    None
}

fn primitive_part(p: &MPoly, idx: usize) -> MPoly {
    let c = content_idx(p, idx);
    p.div_exact(&c).expect("content divides")
}

fn content_idx(f: &MPoly, idx: usize) -> MPoly {
    let mut acc = f.lift(crate::arith::Gauss::zero());
    for c in f.coeffs_in(idx) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c, None).normalize();
        if acc.is_constant() {
            return acc.lift(crate::arith::Gauss::one());
        }
    }
    acc
}

fn gcd_rec(f: &MPoly, g: &MPoly, main: Option<usize>) -> MPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return f.lift(crate::arith::Gauss::one());
    }
    let n = f.vars().len();
    let v = match main {
        Some(i) if f.depends_on(i) || g.depends_on(i) => i,
        _ => (0..n).find(|&i| f.depends_on(i) || g.depends_on(i)).unwrap(),
    };
    if !f.depends_on(v) {
        return gcd_rec(f, &content_idx(g, v), None);
    }
    if !g.depends_on(v) {
        return gcd_rec(&content_idx(f, v), g, None);
    }
    let cf = content_idx(f, v);
    let cg = content_idx(g, v);
    let c = gcd_rec(&cf, &cg, None);
    let pf = f.div_exact(&cf).expect("content divides");
    let pg = g.div_exact(&cg).expect("content divides");
    if coprime_mod_p(&pf, &pg, v) {
        return c;
    }
    if let Some(h) = heuristic_gcd(&pf, &pg, v) {
        return &c * &h;
    }
    &c * &subresultant_gcd(&pf, &pg, v)
}

/// Normalized greatest common divisor.
pub fn gcd(f: &MPoly, g: &MPoly) -> MPoly {
    let (f, g) = MPoly::unify(f, g);
    gcd_rec(&f, &g, None).normalize()
}

/// Gcd computed with `main_var` as the remainder-sequence variable.
pub fn gcd_in(f: &MPoly, g: &MPoly, main_var: &str) -> Result<MPoly> {
    let (f, g) = MPoly::unify(f, g);
    let i = f.var_index(main_var).ok_or_else(|| Error::UnknownVariable(main_var.to_string()))?;
    Ok(gcd_rec(&f, &g, Some(i)).normalize())
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `var`, normalized.
pub fn content(f: &MPoly, var: &str) -> Result<MPoly> {
    let i = f.var_index(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    Ok(content_idx(f, i).normalize())
}

fn squarefree_rec(f: &MPoly, main: Option<usize>) -> MPoly {
    if f.is_constant() {
        return f.lift(crate::arith::Gauss::one());
    }
    let n = f.vars().len();
    let v = match main {
        Some(i) if f.depends_on(i) => i,
        _ => (0..n).find(|&i| f.depends_on(i)).unwrap(),
    };
    let c = content_idx(f, v);
    let pp = f.div_exact(&c).expect("content divides");
    let g = gcd_rec(&pp, &pp.derivative(v), Some(v));
    let q = pp.div_exact(&g).expect("gcd divides");
    (&squarefree_rec(&c, None) * &q).normalize()
}

/// Product of the distinct irreducible factors of `f`, normalized. Factors
/// free of `main_var` are reduced as well, so the zero set is unchanged.
pub fn squarefree_part(f: &MPoly, main_var: &str) -> Result<MPoly> {
    if f.is_zero() {
        return Err(Error::Domain("square-free part of the zero polynomial".into()));
    }
    let i = f.var_index(main_var).ok_or_else(|| Error::UnknownVariable(main_var.to_string()))?;
    Ok(squarefree_rec(f, Some(i)))
}
