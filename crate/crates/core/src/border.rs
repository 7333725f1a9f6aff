//! Elimination of ω: the real algebraic curve containing the border.

use crate::error::{Error, Result};
use crate::family::{leading_component, split_re_im, to_continuous, PolyFamily, SplitPair, TimeDomain, OMEGA};
use crate::mpoly::{gcd, resultant, squarefree_part, MPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Resultant,
    Leading,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Resultant => "resultant",
            Source::Leading => "leading",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub source: Source,
    pub poly: MPoly,
    /// Finitely many real points (a sum of two squares of coprime polynomials
    /// sharing no factor with the rest of h); separates nothing.
    pub isolated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderCurve {
    pub h: MPoly,
    pub components: Vec<Component>,
    /// Total degree of h.
    pub degree: u32,
    /// Degree of h without its isolated components.
    pub curve_degree: u32,
}

/// Whether gcd(R, I) is free of ω.
pub fn check_coprime(sp: &SplitPair) -> Result<bool> {
    if sp.re.is_zero() && sp.im.is_zero() {
        return Err(Error::DegenerateFamily("P(jw) vanishes identically".into()));
    }
    Ok(!gcd(&sp.re, &sp.im).depends_on(0))
}

fn params_of(f: &PolyFamily) -> [&str; 2] {
    [f.params[0].as_str(), f.params[1].as_str()]
}

fn sqfree(f: &MPoly) -> Result<MPoly> {
    if f.is_constant() {
        return Ok(f.lift(crate::arith::Gauss::one()));
    }
    squarefree_part(f, &f.vars()[0])
}

/// A complex leading coefficient contributes Re² + Im²; with Re, Im coprime its
/// real zero set is a finite set of points.
fn leading_is_isolated(f: &PolyFamily) -> Result<bool> {
    let lead = f.poly.lc_in(0).with_vars(&params_of(f))?;
    if lead.is_constant() || lead.is_real() {
        return Ok(false);
    }
    Ok(gcd(&lead.re_part(), &lead.im_part()).is_constant())
}

/// h(r, p): square-free product of Res_ω(Re, Im) and the leading-coefficient
/// locus of the continuous form. Discrete families also keep the locus where
/// their own leading coefficient in z vanishes.
pub fn border_curve(f: &PolyFamily) -> Result<BorderCurve> {
    let cont = match f.time {
        TimeDomain::Continuous => f.clone(),
        TimeDomain::Discrete => to_continuous(f)?,
    };
    let params = params_of(f);
    let sp = split_re_im(&cont)?;
    if sp.re.is_zero() && sp.im.is_zero() {
        return Err(Error::DegenerateFamily("P(jw) vanishes identically".into()));
    }
    let res = if sp.re.is_zero() || sp.im.is_zero() {
        // One part vanishes for every ω: the whole plane is border.
        MPoly::zero(&sp.re.vars())
    } else {
        resultant(&sp.re, &sp.im, OMEGA)?
    };
    if res.is_zero() {
        let common = gcd(&sp.re, &sp.im);
        return Err(Error::CommonFactor(common.to_string()));
    }
    let res = sqfree(&res.with_vars(&params)?)?;

    let mut leads = vec![(leading_component(&cont)?, leading_is_isolated(&cont)?)];
    if f.time == TimeDomain::Discrete {
        leads.push((leading_component(f)?, leading_is_isolated(f)?));
    }

    let mut components = Vec::new();
    if !res.is_constant() {
        components.push(Component { source: Source::Resultant, poly: res.clone(), isolated: false });
    }
    let mut h = res;
    for (lead, isolated) in leads {
        let lead = sqfree(&lead)?;
        if lead.is_constant() || components.iter().any(|c| c.poly == lead) {
            continue;
        }
        let isolated = isolated && gcd(&lead, &h).is_constant();
        h = &h * &lead;
        components.push(Component { source: Source::Leading, poly: lead, isolated });
    }
    let h = sqfree(&h)?.normalize();
    let degree = h.total_degree();
    let point_degree: u32 = components.iter().filter(|c| c.isolated).map(|c| c.poly.total_degree()).sum();
    Ok(BorderCurve { h, components, degree, curve_degree: degree - point_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Gauss, Rational};
    use crate::family::S;

    const P3: [&str; 3] = [S, "r", "p"];
    const RP: [&str; 2] = ["r", "p"];

    fn v(name: &str) -> MPoly {
        MPoly::var(&P3, name).unwrap()
    }

    fn kq(vars: &[&str], re: Rational, im: Rational) -> MPoly {
        MPoly::constant(vars, Gauss::new(re, im))
    }

    fn k(x: i64) -> MPoly {
        kq(&P3, rat(x, 1), rat(0, 1))
    }

    fn g(re: i64, im: i64) -> MPoly {
        kq(&P3, rat(re, 1), rat(im, 1))
    }

    fn rp(terms: &[(i64, u32, u32)]) -> MPoly {
        MPoly::from_terms(&RP, terms.iter().map(|&(c, i, j)| (vec![i, j], Gauss::from_int(c))))
    }

    fn assert_proportional(a: &MPoly, b: &MPoly) {
        assert_eq!(a.normalize(), b.normalize());
    }

    fn omega_pair(re: MPoly, im: MPoly) -> SplitPair {
        SplitPair { re, im }
    }

    #[test]
    fn coprime_examples() {
        let vs = [OMEGA, "r", "p"];
        let w = MPoly::var(&vs, OMEGA).unwrap();
        let r = MPoly::var(&vs, "r").unwrap();
        let p = MPoly::var(&vs, "p").unwrap();
        assert!(!check_coprime(&omega_pair(w.clone(), &w * &r)).unwrap());
        assert!(check_coprime(&omega_pair(&(&w * &w) + &r, p)).unwrap());
        let zero = MPoly::zero(&vs);
        assert!(check_coprime(&omega_pair(zero.clone(), zero)).is_err());
    }

    #[test]
    fn line_border() {
        let f = PolyFamily::new(&(&v(S) + &v("r")), TimeDomain::Continuous, ["r", "p"]).unwrap();
        let b = border_curve(&f).unwrap();
        assert_eq!(b.h, MPoly::var(&RP, "r").unwrap());
        assert_eq!(b.degree, 1);
        assert_eq!(b.components.len(), 1);
        assert_eq!(b.components[0].source, Source::Resultant);
    }

    #[test]
    fn common_factor_rejected() {
        // (s + r)(s^2 + 1): the factor s^2 + 1 pins a root on the imaginary axis.
        let s = v(S);
        let f = &(&s + &v("r")) * &(&(&s * &s) + &k(1));
        let f = PolyFamily::new(&f, TimeDomain::Continuous, ["r", "p"]).unwrap();
        assert!(matches!(border_curve(&f), Err(Error::CommonFactor(_))));
    }

    #[test]
    fn leading_locus_included() {
        // r·s + p: border r·p = 0 from the resultant, the leading locus r = 0 merges in.
        let f = &(&v("r") * &v(S)) + &v("p");
        let f = PolyFamily::new(&f, TimeDomain::Continuous, ["r", "p"]).unwrap();
        let b = border_curve(&f).unwrap();
        assert_proportional(&b.h, &rp(&[(1, 1, 1)]));
        assert_eq!(b.curve_degree, 2);
    }

    #[test]
    fn discrete_sixth_order_example() {
        let s = v(S);
        let mut f = s.pow(6);
        f = &f + &(&(&v("r") + &(&g(0, 1) * &v("p"))) * &s.pow(5));
        f = &f + &kq(&P3, rat(3, 2), rat(0, 1));
        let f = PolyFamily::new(&f, TimeDomain::Discrete, ["r", "p"]).unwrap();
        let b = border_curve(&f).unwrap();
        let expect = rp(&[
            (9216, 0, 10),
            (46080, 2, 8),
            (92160, 4, 6),
            (92160, 6, 4),
            (46080, 8, 2),
            (9216, 10, 0),
            (-94464, 0, 8),
            (-377856, 2, 6),
            (-566784, 4, 4),
            (-377856, 6, 2),
            (-94464, 8, 0),
            (301440, 0, 6),
            (683136, 2, 4),
            (1051776, 4, 2),
            (276864, 6, 0),
            (-309600, 0, 4),
            (-619200, 2, 2),
            (-309600, 4, 0),
            (122500, 0, 2),
            (122500, 2, 0),
            (-15625, 0, 0),
        ]);
        let res = &b.components.iter().find(|c| c.source == Source::Resultant).unwrap().poly;
        assert_proportional(res, &expect);
        // (r + 5/2)^2 + p^2, scaled to integers.
        let lead = rp(&[(4, 2, 0), (20, 1, 0), (25, 0, 0), (4, 0, 2)]);
        assert_proportional(&b.h, &(&expect * &lead));
        assert_eq!((b.degree, b.curve_degree), (12, 10));
        assert!(b.components.iter().any(|c| c.source == Source::Leading && c.isolated));
    }

    #[test]
    fn constant_leading_gives_no_leading_component() {
        let s = v(S);
        let f = &(&s * &s) + &(&(&v("r") * &s) + &v("p"));
        let f = PolyFamily::new(&f, TimeDomain::Continuous, ["r", "p"]).unwrap();
        let b = border_curve(&f).unwrap();
        assert!(b.components.iter().all(|c| c.source == Source::Resultant));
        // Roots cross the axis at p = 0 (through s = 0) or at r = 0, p > 0.
        assert_proportional(&b.h, &rp(&[(1, 1, 1)]));
    }
}
