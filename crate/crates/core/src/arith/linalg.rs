//! Exact dense linear algebra over a [`Scalar`] field.

use super::{Poly, Scalar};
use std::collections::BTreeMap;

/// Brings `m` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref<F: Scalar>(m: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("nonzero pivot");
        for c in col..ncols {
            m[row][c] = m[row][c].times(&inv);
        }
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..ncols {
                let v = m[row][c].times(&f);
                m[r][c] = m[r][c].minus(&v);
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    pivots
}

pub fn rank<F: Scalar>(m: &[Vec<F>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of `{v : m v = 0}` for a matrix with `ncols` columns.
pub fn nullspace<F: Scalar>(m: &[Vec<F>], ncols: usize, ctx: &F::Ctx) -> Vec<Vec<F>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(ctx); ncols];
        v[free] = F::one(ctx);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = a[r][free].negated();
        }
        basis.push(v);
    }
    basis
}

/// Determinant by Gaussian elimination.
pub fn determinant<F: Scalar>(mut m: Vec<Vec<F>>, ctx: &F::Ctx) -> F {
    let n = m.len();
    let mut det = F::one(ctx);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return F::zero(ctx);
        };
        if p != col {
            m.swap(p, col);
            det = det.negated();
        }
        let piv = m[col][col].clone();
        det = det.times(&piv);
        let inv = piv.inverse().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].times(&inv);
            for c in col..n {
                let v = m[col][c].times(&f);
                m[r][c] = m[r][c].minus(&v);
            }
        }
    }
    det
}

/// Applies a matrix to a vector.
pub fn mat_vec<F: Scalar>(m: &[Vec<F>], v: &[F], ctx: &F::Ctx) -> Vec<F> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(F::zero(ctx), |acc, (a, b)| acc.plus(&a.times(b))))
        .collect()
}

/// Linear span of polynomials kept in echelon form by leading degree.
/// Every stored row is monic and no two rows share a leading degree.
#[derive(Clone, Debug)]
pub struct PolySpan<F: Scalar> {
    rows: BTreeMap<usize, Poly<F>>,
    ctx: F::Ctx,
}

impl<F: Scalar> PolySpan<F> {
    pub fn new(ctx: &F::Ctx) -> Self {
        PolySpan { rows: BTreeMap::new(), ctx: ctx.clone() }
    }

    /// Reduces `p` against the rows from the top degree down.
    pub fn reduce(&self, p: &Poly<F>) -> Poly<F> {
        let mut coeffs: Vec<F> = p.coeffs().to_vec();
        for (&d, row) in self.rows.iter().rev() {
            if d >= coeffs.len() || coeffs[d].is_zero() {
                continue;
            }
            let c = coeffs[d].clone();
            for (i, rc) in row.coeffs().iter().enumerate() {
                coeffs[i] = coeffs[i].minus(&c.times(rc));
            }
        }
        Poly::new(coeffs, self.ctx.clone())
    }

    /// Adds `p` to the span; returns `true` when the dimension grew.
    pub fn insert(&mut self, p: &Poly<F>) -> bool {
        let r = self.reduce(p);
        match r.degree() {
            None => false,
            Some(d) => {
                self.rows.insert(d, r.monic());
                true
            }
        }
    }

    pub fn contains(&self, p: &Poly<F>) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Leading degrees of the echelon rows, increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Poly<F>> {
        self.rows.values()
    }

    pub fn row(&self, d: usize) -> Option<&Poly<F>> {
        self.rows.get(&d)
    }

    /// Fully reduced rows: each row has zero coefficient at every other pivot.
    pub fn reduced_rows(&self) -> Vec<Poly<F>> {
        let mut done: BTreeMap<usize, Poly<F>> = BTreeMap::new();
        for (&k, row) in self.rows.iter() {
            let mut r = row.clone();
            for (&j, lower) in done.iter() {
                let c = r.coeff(j);
                if !c.is_zero() {
                    r = r.sub(&lower.scale(&c));
                }
            }
            done.insert(k, r);
        }
        done.into_values().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn rref_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3, &());
        assert_eq!(ns.len(), 1);
        let img = mat_vec(&a, &ns[0], &());
        assert!(img.iter().all(|v| *v == rat(0)));
    }

    #[test]
    fn determinant_small() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(determinant(a, &()), rat(5));
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(b, &()), rat(-1));
    }

    #[test]
    fn poly_span_membership() {
        let mut s = PolySpan::<Rat>::new(&());
        assert!(s.insert(&Poly::from_ints(&[0, -1, 0, 1])));
        assert!(s.insert(&Poly::from_ints(&[0, 0, 1])));
        assert!(!s.insert(&Poly::from_ints(&[0, -2, 3, 2])));
        assert!(s.contains(&Poly::from_ints(&[0, -1, 1, 1])));
        assert!(!s.contains(&Poly::from_ints(&[0, 1])));
        let red = s.reduced_rows();
        assert_eq!(red[1], Poly::from_ints(&[0, -1, 0, 1]));
    }
}
