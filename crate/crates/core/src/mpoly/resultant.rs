//! Sylvester resultants by fraction-free (Bareiss) elimination.

use super::MPoly;
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials over a common variable list.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact.
pub fn bareiss_det(mut m: Vec<Vec<MPoly>>, template: &MPoly) -> MPoly {
    let n = m.len();
    let one = template.lift(crate::arith::Gauss::one());
    if n == 0 {
        return one;
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        // Sparsest nonzero pivot keeps the products small.
        let pivot = (k..n).filter(|&i| !m[i][k].is_zero()).min_by_key(|&i| m[i][k].num_terms());
        let Some(pr) = pivot else {
            return template.lift(crate::arith::Gauss::zero());
        };
        if pr != k {
            m.swap(pr, k);
            negate = !negate;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                let a = &pivot_row[k] * &row[j];
                let val = if factor.is_zero() { a } else { &a - &(&factor * &pivot_row[j]) };
                row[j] = val.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[k] = template.lift(crate::arith::Gauss::zero());
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Res_var(f, g): determinant of the Sylvester matrix with respect to `var`.
pub fn resultant(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly> {
    let (f, g) = MPoly::unify(f, g);
    if f.is_zero() || g.is_zero() {
        return Err(Error::Domain("resultant of a zero polynomial".into()));
    }
    let idx = f.var_index(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    let m = f.degree(idx) as usize;
    let n = g.degree(idx) as usize;
    if m == 0 && n == 0 {
        return Err(Error::Domain(format!("neither polynomial depends on {var}")));
    }
    if m == 0 {
        return Ok(f.pow(n as u32));
    }
    if n == 0 {
        return Ok(g.pow(m as u32));
    }
    let fc = f.coeffs_in(idx);
    let gc = g.coeffs_in(idx);
    let size = m + n;
    let zero = f.lift(crate::arith::Gauss::zero());
    let mut mat = vec![vec![zero; size]; size];
    for i in 0..n {
        for (d, c) in fc.iter().enumerate() {
            mat[i][i + m - d] = c.clone();
        }
    }
    for i in 0..m {
        for (d, c) in gc.iter().enumerate() {
            mat[n + i][i + n - d] = c.clone();
        }
    }
    Ok(bareiss_det(mat, &f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Gauss;
    use proptest::prelude::*;

    fn v(vars: &[&str], name: &str) -> MPoly {
        MPoly::var(vars, name).unwrap()
    }

    fn k(vars: &[&str], x: i64) -> MPoly {
        MPoly::constant(vars, Gauss::from_int(x))
    }

    #[test]
    fn sylvester_examples() {
        let vs = ["x"];
        let x = v(&vs, "x");
        let f = &(&x * &x) - &k(&vs, 1);
        assert_eq!(resultant(&f, &(&x - &k(&vs, 2)), "x").unwrap(), k(&vs, 3));
        assert!(resultant(&(&x - &k(&vs, 1)), &f, "x").unwrap().is_zero());

        let vs = ["r", "p"];
        let (r, p) = (v(&vs, "r"), v(&vs, "p"));
        let f = &(&p * &p) + &(&(&r * &r) - &k(&vs, 1));
        let g = p.scale(&Gauss::from_int(2));
        let expect = (&(&r * &r) - &k(&vs, 1)).scale(&Gauss::from_int(4));
        assert_eq!(resultant(&f, &g, "p").unwrap(), expect);
    }

    #[test]
    fn free_variable_cases() {
        let vs = ["w", "r"];
        let (w, r) = (v(&vs, "w"), v(&vs, "r"));
        // Res_w(r, w) with r of degree zero in w is r^1.
        assert_eq!(resultant(&r, &w, "w").unwrap(), r);
        assert!(matches!(resultant(&r, &r, "w"), Err(Error::Domain(_))));
    }

    #[test]
    fn bareiss_matches_cofactor_on_integers() {
        let vs = ["x"];
        let m: Vec<Vec<MPoly>> = [[2, -1, 0], [1, 3, 4], [0, 5, -2]]
            .iter()
            .map(|row| row.iter().map(|&a| k(&vs, a)).collect())
            .collect();
        // cofactor expansion: 2(3·-2 - 4·5) + 1(1·-2 - 0) = -52 - 2 = -54
        assert_eq!(bareiss_det(m, &k(&vs, 0)), k(&vs, -54));
    }

    fn arb_in_x() -> impl Strategy<Value = MPoly> {
        prop::collection::vec(((0u32..4), (0u32..2), -5i64..6), 1..5).prop_map(|ts| {
            MPoly::from_terms(&["x", "y"], ts.into_iter().map(|(a, b, c)| (vec![a, b], Gauss::from_int(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn multiplicative(f in arb_in_x(), g1 in arb_in_x(), g2 in arb_in_x()) {
            prop_assume!(f.depends_on(0) && g1.depends_on(0) && g2.depends_on(0));
            let lhs = resultant(&f, &(&g1 * &g2), "x").unwrap();
            let rhs = &resultant(&f, &g1, "x").unwrap() * &resultant(&f, &g2, "x").unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
