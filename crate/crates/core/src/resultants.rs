//! Divided differences, resultants and characteristic polynomials.
//!
//! For `p(x)` the divided difference is `P(x,y) = (p(x) - p(y)) / (x - y)`.
//! The characteristic polynomial of a pair is `Res_y(P, Q)`; for many
//! generators it is the gcd of the coefficients of `Res_y(P_1, sum z_i P_i)`.

use crate::arith::{MPoly, Poly, Scalar};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// `P(x,y) = sum_k table[k](x) * y^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct DividedDifference<F: Scalar> {
    pub source: Poly<F>,
    pub table: Vec<Poly<F>>,
}

impl<F: Scalar> DividedDifference<F> {
    pub fn y_degree(&self) -> usize {
        self.table.len() - 1
    }

    /// Value at a fixed `x`, as a polynomial in `y`.
    pub fn at_x(&self, x: &F) -> Poly<F> {
        Poly::new(self.table.iter().map(|c| c.eval(x)).collect(), self.source.ctx().clone())
    }
}

pub fn divided_difference<F: Scalar>(p: &Poly<F>) -> Result<DividedDifference<F>> {
    let n = p.degree().ok_or(Error::ConstantInput)?;
    if n == 0 {
        return Err(Error::ConstantInput);
    }
    let ctx = p.ctx();
    let a = p.coeffs();
    // c_k(x) = sum_{i > k} a_i x^{i-1-k}
    let table: Vec<Poly<F>> = (0..n)
        .map(|k| Poly::new((k + 1..=n).map(|i| a[i].clone()).collect(), ctx.clone()))
        .collect();
    // (x - y) P = p(x) - p(y), compared coefficientwise in y.
    let x = Poly::x(ctx);
    for k in 0..=n {
        let mut lhs = if k < n { x.mul(&table[k]) } else { Poly::zero(ctx) };
        if k > 0 {
            lhs = lhs.sub(&table[k - 1]);
        }
        let rhs = if k == 0 { p.sub(&Poly::constant(a[0].clone())) } else { Poly::constant(a[k].negated()) };
        assert_eq!(lhs, rhs, "divided difference identity");
    }
    Ok(DividedDifference { source: p.clone(), table })
}

/// Sylvester resultant of two polynomials in `y` whose coefficients are
/// polynomials in `x`. The slices are ascending in `y` and taken at their
/// formal length, so zero leading entries are kept.
pub fn resultant_y<F: Scalar>(f: &[Poly<F>], g: &[Poly<F>], ctx: &F::Ctx) -> Result<Poly<F>> {
    if f.iter().all(|c| c.is_zero()) || g.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroPolynomialInY);
    }
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return Ok(Poly::one(ctx));
    }
    let mut mat = vec![vec![Poly::zero(ctx); size]; size];
    for r in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            mat[n + r][r + j] = c.clone();
        }
    }
    bareiss_det(mat, ctx)
}

/// Fraction-free determinant of a matrix over `F[x]`.
pub fn bareiss_det<F: Scalar>(mut m: Vec<Vec<Poly<F>>>, ctx: &F::Ctx) -> Result<Poly<F>> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one(ctx));
    }
    let mut sign = false;
    let mut prev = Poly::one(ctx);
    for k in 0..n - 1 {
        let Some(p) = (k..n).filter(|&r| !m[r][k].is_zero()).min_by_key(|&r| m[r][k].deg()) else {
            return Ok(Poly::zero(ctx));
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = Poly::zero(ctx);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}

/// Monic `Res_y(P, Q)`; zero when `p` and `q` share a composition factor.
pub fn char_poly_pair<F: Scalar>(p: &Poly<F>, q: &Poly<F>) -> Result<Poly<F>> {
    let pp = divided_difference(p)?;
    let qq = divided_difference(q)?;
    Ok(resultant_y(&pp.table, &qq.table, p.ctx())?.monic())
}

/// Values of a polynomial in `nvars` variables of degree at most `deg` in
/// each, recovered from its values on the grid `{0..deg}^nvars`.
fn interpolate_grid<F: Scalar>(
    nvars: usize,
    deg: usize,
    ctx: &F::Ctx,
    eval: &dyn Fn(&[F]) -> Result<Poly<F>>,
) -> Result<BTreeMap<Vec<u32>, Poly<F>>> {
    let nodes: Vec<F> = (0..=deg).map(|c| F::from_i64(ctx, c as i64)).collect();
    // Lagrange basis in the grid variable, ascending coefficients.
    let basis: Vec<Poly<F>> = (0..=deg)
        .map(|i| {
            let mut l = Poly::one(ctx);
            for j in 0..=deg {
                if j != i {
                    let den = nodes[i].minus(&nodes[j]).inverse().expect("distinct nodes");
                    l = l.mul(&Poly::x_minus(&nodes[j])).scale(&den);
                }
            }
            l
        })
        .collect();
    fn rec<F: Scalar>(
        left: usize,
        prefix: &mut Vec<F>,
        nodes: &[F],
        basis: &[Poly<F>],
        ctx: &F::Ctx,
        eval: &dyn Fn(&[F]) -> Result<Poly<F>>,
    ) -> Result<BTreeMap<Vec<u32>, Poly<F>>> {
        if left == 0 {
            let v = eval(prefix)?;
            let mut m = BTreeMap::new();
            if !v.is_zero() {
                m.insert(vec![], v);
            }
            return Ok(m);
        }
        let mut out: BTreeMap<Vec<u32>, Poly<F>> = BTreeMap::new();
        for (i, c) in nodes.iter().enumerate() {
            prefix.push(c.clone());
            let sub = rec(left - 1, prefix, nodes, basis, ctx, eval)?;
            prefix.pop();
            for (e, val) in sub {
                for (j, bc) in basis[i].coeffs().iter().enumerate() {
                    if bc.is_zero() {
                        continue;
                    }
                    let mut key = vec![j as u32];
                    key.extend(e.iter());
                    let add = val.scale(bc);
                    let entry = out.entry(key).or_insert_with(|| Poly::zero(ctx));
                    *entry = entry.add(&add);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }
    rec(nvars, &mut Vec::new(), &nodes, &basis, ctx, eval)
}

/// `R(x, z_2..z_t) = Res_y(P_1, sum_i z_i P_i)`, homogeneous of degree
/// `deg p_1 - 1` in the `z` variables.
pub fn resultant_linear_combination<F: Scalar>(gens: &[Poly<F>]) -> Result<MPoly<F>> {
    if gens.len() < 2 || gens.iter().any(|g| g.deg() < 1) {
        return Err(Error::FewerThanTwoGenerators);
    }
    let ctx = gens[0].ctx().clone();
    let dds: Vec<DividedDifference<F>> = gens.iter().map(divided_difference).collect::<Result<_>>()?;
    let first = &dds[0];
    let rest = &dds[1..];
    let e = first.y_degree();
    let ny = rest.iter().map(|d| d.table.len()).max().unwrap();
    let k = rest.len() - 1;
    // Dehomogenize with z_2 = 1 and interpolate in z_3..z_t.
    let eval = |vals: &[F]| -> Result<Poly<F>> {
        let mut g = vec![Poly::zero(&ctx); ny];
        for (idx, d) in rest.iter().enumerate() {
            let w = if idx == 0 { F::one(&ctx) } else { vals[idx - 1].clone() };
            for (j, c) in d.table.iter().enumerate() {
                g[j] = g[j].add(&c.scale(&w));
            }
        }
        if g.iter().all(|c| c.is_zero()) {
            return Ok(Poly::zero(&ctx));
        }
        resultant_y(&first.table, &g, &ctx)
    };
    let grid = interpolate_grid(k, e, &ctx, &eval)?;
    let mut r = MPoly::zero(rest.len(), &ctx);
    for (exps, c) in grid {
        let s: u32 = exps.iter().sum();
        if s as usize > e {
            return Err(Error::Invalid("resultant is not homogeneous in z".into()));
        }
        let mut full = vec![e as u32 - s];
        full.extend(exps);
        r.insert_add(full, c);
    }
    Ok(r)
}

/// Monic gcd of the coefficients `d_a(x)` of `R(x, z)`; zero when all vanish.
pub fn char_poly_multi<F: Scalar>(gens: &[Poly<F>]) -> Result<Poly<F>> {
    let r = resultant_linear_combination(gens)?;
    let mut g = Poly::zero(gens[0].ctx());
    for (_, c) in r.terms() {
        g = if g.is_zero() { c.monic() } else { g.gcd(c)? };
    }
    Ok(g)
}

/// gcd of [`char_poly_multi`] over every choice of distinguished generator.
pub fn char_poly_multi_symmetric<F: Scalar>(gens: &[Poly<F>]) -> Result<Poly<F>> {
    let mut g = Poly::zero(gens.first().ok_or(Error::FewerThanTwoGenerators)?.ctx());
    for i in 0..gens.len() {
        let mut order = vec![gens[i].clone()];
        order.extend(gens.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()));
        let c = char_poly_multi(&order)?;
        g = if g.is_zero() { c } else if c.is_zero() { g } else { g.gcd(&c)? };
    }
    Ok(g)
}

/// The relation `F(P, Q) = Res_x(p(x) - P, q(x) - Q)` as a polynomial in two
/// auxiliary variables with constant coefficients.
pub fn resultant_relation<F: Scalar>(p: &Poly<F>, q: &Poly<F>) -> Result<MPoly<F>> {
    let (m, n) = (p.deg(), q.deg());
    if m == 0 || n == 0 {
        return Err(Error::ConstantInput);
    }
    if num_integer::gcd(m, n) != 1 {
        return Err(Error::DegreesNotCoprime(m, n));
    }
    let ctx = p.ctx().clone();
    let as_consts = |v: &Poly<F>| -> Vec<Poly<F>> { v.coeffs().iter().map(|c| Poly::constant(c.clone())).collect() };
    let eval = |vals: &[F]| -> Result<Poly<F>> {
        let pv = p.sub(&Poly::constant(vals[0].clone()));
        let qv = q.sub(&Poly::constant(vals[1].clone()));
        resultant_y(&as_consts(&pv), &as_consts(&qv), &ctx)
    };
    let grid = interpolate_grid(2, m.max(n), &ctx, &eval)?;
    let mut r = MPoly::zero(2, &ctx);
    for (e, c) in grid {
        r.insert_add(e, c);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(cs)
    }

    #[test]
    fn divided_difference_cubic() {
        let d = divided_difference(&q(&[0, -1, 0, 1])).unwrap();
        assert_eq!(d.table, vec![q(&[-1, 0, 1]), q(&[0, 1]), q(&[1])]);
        let d2 = divided_difference(&q(&[0, 0, 1])).unwrap();
        assert_eq!(d2.table, vec![q(&[0, 1]), q(&[1])]);
        assert_eq!(divided_difference(&q(&[5])), Err(Error::ConstantInput));
    }

    #[test]
    fn small_resultants() {
        let f = vec![q(&[-1, 0, 1]), q(&[0, 1]), q(&[1])];
        let g = vec![q(&[0, 1]), q(&[1])];
        assert_eq!(resultant_y(&f, &g, &()).unwrap(), q(&[-1, 0, 1]));
        assert!(resultant_y(&g, &g, &()).unwrap().is_zero());
    }

    #[test]
    fn pair_examples() {
        assert_eq!(char_poly_pair(&q(&[0, -1, 0, 1]), &q(&[0, 0, 1])).unwrap(), q(&[-1, 0, 1]));
        let chi = char_poly_pair(&q(&[0, 0, -1, 0, 1]), &q(&[0, 0, 0, 1])).unwrap();
        assert_eq!(chi, q(&[0, 0, 1, 0, -1, 0, 1]));
    }

    #[test]
    fn composition_gives_zero() {
        let h = q(&[1, 0, 1]);
        let p = q(&[0, 1, 1]).compose(&h);
        let r = q(&[2, 0, 0, 1]).compose(&h);
        assert!(char_poly_pair(&p, &r).unwrap().is_zero());
    }

    #[test]
    fn multi_reduces_to_pair() {
        let a = q(&[0, -1, 0, 1]);
        let b = q(&[0, 0, 1]);
        assert_eq!(char_poly_multi(&[a, b]).unwrap(), q(&[-1, 0, 1]));
    }

    #[test]
    fn cusp_relation() {
        let f = resultant_relation(&q(&[0, 0, 0, 1]), &q(&[0, 0, 1])).unwrap();
        let terms: Vec<(Vec<u32>, Poly<Rat>)> = f.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        assert_eq!(terms.len(), 2);
        let c20 = f.coeff(&[2, 0]);
        let c03 = f.coeff(&[0, 3]);
        assert_eq!(c20, c03.neg());
        assert!(c20 == q(&[1]) || c20 == q(&[-1]));
    }
}
