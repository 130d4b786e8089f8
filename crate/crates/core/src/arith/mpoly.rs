use super::{Poly, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in auxiliary variables `z_1..z_k` whose coefficients are
/// polynomials in `x`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<F: Scalar> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Poly<F>>,
    ctx: F::Ctx,
}

impl<F: Scalar> MPoly<F> {
    pub fn zero(nvars: usize, ctx: &F::Ctx) -> Self {
        MPoly { nvars, terms: BTreeMap::new(), ctx: ctx.clone() }
    }

    /// `coef * z^exps`.
    pub fn term(exps: Vec<u32>, coef: Poly<F>) -> Self {
        let ctx = coef.ctx().clone();
        let mut m = MPoly::zero(exps.len(), &ctx);
        if !coef.is_zero() {
            m.terms.insert(exps, coef);
        }
        m
    }

    /// The variable `z_i` (0-based).
    pub fn var(i: usize, nvars: usize, ctx: &F::Ctx) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::term(e, Poly::one(ctx))
    }

    pub fn from_poly(p: Poly<F>, nvars: usize) -> Self {
        MPoly::term(vec![0; nvars], p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Poly<F>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Poly<F> {
        self.terms.get(exps).cloned().unwrap_or_else(|| Poly::zero(&self.ctx))
    }

    pub fn insert_add(&mut self, exps: Vec<u32>, c: Poly<F>) {
        assert_eq!(exps.len(), self.nvars);
        let s = match self.terms.remove(&exps) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(exps, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.insert_add(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Poly::constant(F::one(&self.ctx).negated())))
    }

    pub fn scale(&self, c: &Poly<F>) -> Self {
        let mut r = MPoly::zero(self.nvars, &self.ctx);
        for (e, a) in &self.terms {
            r.insert_add(e.clone(), a.mul(c));
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = MPoly::zero(self.nvars, &self.ctx);
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                r.insert_add(e, a.mul(b));
            }
        }
        r
    }

    /// Total degree in the auxiliary variables, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// Partial derivative in `z_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut r = MPoly::zero(self.nvars, &self.ctx);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            r.insert_add(e2, c.scale(&F::from_i64(&self.ctx, e[i] as i64)));
        }
        r
    }

    /// Substitutes polynomials in `x` for every auxiliary variable.
    pub fn substitute(&self, vals: &[Poly<F>]) -> Poly<F> {
        assert_eq!(vals.len(), self.nvars);
        let mut acc = Poly::zero(&self.ctx);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in vals.iter().zip(e) {
                t = t.mul(&v.pow(k));
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl<F: Scalar> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, k) })
                    .collect();
                if mono.is_empty() {
                    format!("({})", c)
                } else {
                    format!("({})*{}", c, mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    #[test]
    fn product_and_substitution() {
        let z1 = MPoly::<Rat>::var(0, 2, &());
        let z2 = MPoly::<Rat>::var(1, 2, &());
        let f = z1.mul(&z1).sub(&z2.mul(&z2).mul(&z2));
        assert!(f.is_homogeneous(2) == false);
        let x = Poly::<Rat>::x(&());
        let v = f.substitute(&[x.pow(3), x.pow(2)]);
        assert!(v.is_zero());
        let d = f.partial(0);
        assert_eq!(d.coeff(&[1, 0]), Poly::from_ints(&[2]));
    }
}
