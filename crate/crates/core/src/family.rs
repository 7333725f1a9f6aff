//! Parametric polynomial and matrix families in two real parameters.

use std::fmt;

use crate::arith::Gauss;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;

pub const S: &str = "s";
pub const OMEGA: &str = "omega";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TimeDomain {
    Continuous,
    Discrete,
}

impl fmt::Display for TimeDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TimeDomain::Continuous => "continuous",
            TimeDomain::Discrete => "discrete",
        })
    }
}

/// P(s, r, p) over the variable list `[s, r, p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFamily {
    pub poly: MPoly,
    pub time: TimeDomain,
    pub params: [String; 2],
}

impl PolyFamily {
    pub fn new(poly: &MPoly, time: TimeDomain, params: [&str; 2]) -> Result<Self> {
        let vars = [S, params[0], params[1]];
        let poly = poly.with_vars(&vars)?;
        if poly.degree(0) == 0 {
            return Err(Error::DegenerateFamily("the polynomial does not depend on s".into()));
        }
        Ok(PolyFamily { poly, time, params: [params[0].to_string(), params[1].to_string()] })
    }

    pub fn vars(&self) -> [&str; 3] {
        [S, &self.params[0], &self.params[1]]
    }

    /// Degree t in s.
    pub fn degree_s(&self) -> u32 {
        self.poly.degree(0)
    }

    /// Total degree d in the parameters.
    pub fn param_degree(&self) -> u32 {
        self.poly.terms().map(|(e, _)| e[1] + e[2]).max().unwrap_or(0)
    }

    /// Coefficients in s (lowest first) as polynomials in the parameters.
    pub fn coeffs_s(&self) -> Vec<MPoly> {
        self.poly.coeffs_in(0)
    }

    /// Univariate coefficients (lowest first) at the parameter point (r, p).
    pub fn specialize(&self, r: &Gauss, p: &Gauss) -> Vec<Gauss> {
        let mut out = vec![Gauss::zero(); self.degree_s() as usize + 1];
        for (e, c) in self.poly.terms() {
            let k = c * &(&r.pow(e[1]) * &p.pow(e[2]));
            out[e[0] as usize] += &k;
        }
        while out.len() > 1 && out.last().is_some_and(Gauss::is_zero) {
            out.pop();
        }
        out
    }
}

/// Square closed-loop matrix with entries in (r, p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFamily {
    pub entries: Vec<Vec<MPoly>>,
    pub time: TimeDomain,
    pub params: [String; 2],
}

impl MatrixFamily {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn param_degree(&self) -> u32 {
        self.entries.iter().flatten().map(MPoly::total_degree).max().unwrap_or(0)
    }
}

/// R + i·I = P(iω, r, p) with R, I real, over `[omega, r, p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub re: MPoly,
    pub im: MPoly,
}

/// Σ a_k (s+1)^k (s-1)^(t-k) applied to univariate coefficients (lowest first).
pub fn bilinear_coeffs(c: &[Gauss]) -> Vec<Gauss> {
    let t = c.len() - 1;
    let binom_mul = |poly: &[Gauss], sign: i64| -> Vec<Gauss> {
        // poly · (s + sign)
        let mut out = vec![Gauss::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            out[i + 1] += a;
            out[i] += &a.scale(&crate::arith::rat_int(sign));
        }
        out
    };
    let mut plus = vec![vec![Gauss::one()]];
    let mut minus = vec![vec![Gauss::one()]];
    for k in 0..t {
        plus.push(binom_mul(&plus[k], 1));
        minus.push(binom_mul(&minus[k], -1));
    }
    let mut out = vec![Gauss::zero(); t + 1];
    for (k, a) in c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let pk = &plus[k];
        let mk = &minus[t - k];
        for (i, x) in pk.iter().enumerate() {
            for (j, y) in mk.iter().enumerate() {
                out[i + j] += &(a * &(x * y));
            }
        }
    }
    out
}

/// Bilinear transform (s-1)^t P((s+1)/(s-1)), mapping Schur roots to Hurwitz roots.
pub fn to_continuous(f: &PolyFamily) -> Result<PolyFamily> {
    if f.time != TimeDomain::Discrete {
        return Err(Error::Argument("to_continuous expects a discrete family".into()));
    }
    let t = f.degree_s() as usize;
    let vars = f.vars();
    let s = MPoly::var(&vars, S)?;
    let one = MPoly::one(&vars);
    let sp = &s + &one;
    let sm = &s - &one;
    let coeffs = f.coeffs_s();
    let mut out = MPoly::zero(&vars);
    for (k, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        out = &out + &(a * &(&sp.pow(k as u32) * &sm.pow((t - k) as u32)));
    }
    if out.degree(0) < t as u32 || out.is_zero() {
        return Err(Error::DegenerateFamily("P(1, r, p) vanishes identically: a root is pinned at z = 1".into()));
    }
    Ok(PolyFamily { poly: out, time: TimeDomain::Continuous, params: f.params.clone() })
}

/// Substitutes s = iω and separates real and imaginary parts.
pub fn split_re_im(f: &PolyFamily) -> Result<SplitPair> {
    if f.time != TimeDomain::Continuous {
        return Err(Error::Argument("split_re_im expects a continuous family".into()));
    }
    let vars = [OMEGA, &f.params[0], &f.params[1]];
    let mut re = MPoly::zero(&vars);
    let mut im = MPoly::zero(&vars);
    for (e, c) in f.poly.terms() {
        let k = c.mul_i_pow(e[0]);
        let exps = e.clone();
        re = &re + &MPoly::monomial(&vars, exps.clone(), Gauss::real(k.re));
        im = &im + &MPoly::monomial(&vars, exps, Gauss::real(k.im));
    }
    Ok(SplitPair { re, im })
}

fn mat_mul(a: &[Vec<MPoly>], b: &[Vec<MPoly>], zero: &MPoly) -> Vec<Vec<MPoly>> {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| row.iter().zip(b).fold(zero.clone(), |acc, (x, brow)| &acc + &(x * &brow[j])))
                .collect()
        })
        .collect()
}

fn dims(m: &[Vec<MPoly>], name: &str) -> Result<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if rows == 0 || cols == 0 || m.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape(format!("{name} is not a rectangular nonempty matrix")));
    }
    Ok((rows, cols))
}

/// A + B·K·C.
pub fn closed_loop(
    a: &[Vec<MPoly>],
    b: &[Vec<MPoly>],
    c: &[Vec<MPoly>],
    k: &[Vec<MPoly>],
    time: TimeDomain,
    params: [&str; 2],
) -> Result<MatrixFamily> {
    let (ar, ac) = dims(a, "A")?;
    let (br, bc) = dims(b, "B")?;
    let (cr, cc) = dims(c, "C")?;
    let (kr, kc) = dims(k, "K")?;
    if ar != ac {
        return Err(Error::Shape(format!("A is {ar}x{ac}, not square")));
    }
    if br != ar || cc != ar || kr != bc || kc != cr {
        return Err(Error::Shape(format!(
            "cannot form A + BKC with A {ar}x{ac}, B {br}x{bc}, K {kr}x{kc}, C {cr}x{cc}"
        )));
    }
    let norm = |m: &[Vec<MPoly>]| -> Result<Vec<Vec<MPoly>>> {
        m.iter().map(|row| row.iter().map(|x| x.with_vars(&params)).collect()).collect()
    };
    let (a, b, c, k) = (norm(a)?, norm(b)?, norm(c)?, norm(k)?);
    let zero = MPoly::zero(&params);
    let bkc = mat_mul(&mat_mul(&b, &k, &zero), &c, &zero);
    let entries = a.iter().zip(&bkc).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect()).collect();
    Ok(MatrixFamily { entries, time, params: [params[0].to_string(), params[1].to_string()] })
}

/// det(sI - M) by Berkowitz's division-free algorithm.
pub fn charpoly(m: &MatrixFamily) -> Result<PolyFamily> {
    let n = m.size();
    if n == 0 || m.entries.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("charpoly needs a nonempty square matrix".into()));
    }
    let params = [m.params[0].as_str(), m.params[1].as_str()];
    let a: Vec<Vec<MPoly>> =
        m.entries.iter().map(|row| row.iter().map(|x| x.with_vars(&params)).collect()).collect::<Result<_>>()?;
    let zero = MPoly::zero(&params);
    let one = MPoly::one(&params);
    // v holds det(xI - A_r) for the leading r×r block, highest power first
    let mut v = vec![one.clone()];
    for r in 0..n {
        let mut t = vec![one.clone(), -&a[r][r]];
        let mut w: Vec<MPoly> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let dot = (0..r).fold(zero.clone(), |acc, j| &acc + &(&a[r][j] * &w[j]));
            t.push(-dot);
            w = (0..r).map(|i| (0..r).fold(zero.clone(), |acc, j| &acc + &(&a[i][j] * &w[j]))).collect();
        }
        v = (0..r + 2)
            .map(|i| (0..=i.min(r)).fold(zero.clone(), |acc, j| &acc + &(&t[i - j] * &v[j])))
            .collect();
    }
    let vars = [S, params[0], params[1]];
    let s = MPoly::var(&vars, S)?;
    let mut poly = MPoly::zero(&vars);
    for c in &v {
        poly = &(&poly * &s) + &c.with_vars(&vars)?;
    }
    PolyFamily::new(&poly, m.time, params)
}

/// The parameter locus where the leading coefficient in s vanishes, as a real polynomial.
/// A nonzero constant leading coefficient gives the constant 1.
pub fn leading_component(f: &PolyFamily) -> Result<MPoly> {
    let lead = f.poly.lc_in(0);
    let params = [f.params[0].as_str(), f.params[1].as_str()];
    let lead = lead.with_vars(&params)?;
    if lead.is_zero() {
        return Err(Error::DegenerateFamily("the leading coefficient vanishes identically".into()));
    }
    if lead.is_constant() {
        return Ok(MPoly::one(&params));
    }
    if lead.is_real() {
        return Ok(lead.normalize());
    }
    let re = lead.re_part();
    let im = lead.im_part();
    Ok((&(&re * &re) + &(&im * &im)).normalize())
}
