//! Derivations at a point: `k_alpha = dim M/M^2`, the space of derivative
//! combinations that satisfy the Leibniz rule, integrals, and the `L_n`
//! coefficient recurrence.

use crate::arith::linalg::{nullspace, rank, PolySpan};
use crate::arith::{Poly, Scalar};
use crate::conditions::{power_bound, LinearFunctional, Subalgebra};
use crate::roots::RootMode;
use crate::error::{Error, Result};
use crate::sagbi::SagbiBasis;
use crate::spectrum::{compute_spectrum, Spectrum, PAIRING_TOL};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Elements `b_d - b_d(alpha)` of `M_alpha`, one per semigroup degree in `1..=bound`.
fn maximal_ideal_basis<F: Scalar>(b: &SagbiBasis<F>, alpha: &F, bound: usize) -> Vec<Poly<F>> {
    b.linear_basis(bound)
        .into_iter()
        .filter(|p| p.deg() > 0)
        .map(|p| {
            let v = p.eval(alpha);
            p.sub(&Poly::constant(v))
        })
        .collect()
}

/// Products `(g - g(alpha)) f` with `g` a SAGBI element and `f` an
/// `M_alpha` basis element, of degree at most `bound`. These span `M_alpha^2`
/// since the centered generators generate `M_alpha` as an ideal of `A`.
fn square_products<F: Scalar>(b: &SagbiBasis<F>, alpha: &F, m: &[Poly<F>], bound: usize) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    for g in b.elements().iter().filter(|g| g.deg() > 0) {
        let gc = g.sub(&Poly::constant(g.eval(alpha)));
        for f in m {
            if gc.deg() + f.deg() <= bound {
                out.push(gc.mul(f));
            }
        }
    }
    out
}

fn span_of<F: Scalar>(ps: &[Poly<F>], ctx: &F::Ctx) -> PolySpan<F> {
    let mut s = PolySpan::new(ctx);
    for p in ps {
        s.insert(p);
    }
    s
}

fn k_at_bound<F: Scalar>(b: &SagbiBasis<F>, alpha: &F, bound: usize) -> usize {
    let m = maximal_ideal_basis(b, alpha, bound);
    let sq = span_of(&square_products(b, alpha, &m, bound), b.ctx());
    m.len() - sq.dim()
}

/// Starting degree bound for the doubling search: conductor plus the least
/// positive degree. From there on `M_alpha^2` has elements of every larger
/// degree, so the truncated value can only decrease with the bound.
fn initial_bound<F: Scalar>(b: &SagbiBasis<F>) -> usize {
    let least = b.degrees().iter().copied().find(|&d| d > 0).unwrap_or(1);
    (b.semigroup().conductor() + least).max(4)
}

/// A polynomial `pi` with `pi K[x]` inside `M_alpha`. Read off the defining
/// conditions when the algebra carries them, otherwise built from an exact
/// spectrum and [`power_bound`].
pub fn ideal_in_maximal<F: Scalar>(a: &Subalgebra<F>, alpha: &F) -> Option<Poly<F>> {
    let ctx = a.ctx();
    let (points, exponent) = match a.conditions() {
        Some(conds) => {
            let mut pts: Vec<F> = Vec::new();
            for c in conds {
                for p in c.points() {
                    if !pts.contains(&p) {
                        pts.push(p);
                    }
                }
            }
            (pts, conds.iter().map(|c| c.max_order()).max().unwrap_or(0) + 1)
        }
        None => {
            let spec = compute_spectrum(a, &RootMode::Field(Vec::new()), PAIRING_TOL).ok()?;
            let pts = spec.exact_points()?;
            let n = power_bound(a, &pts).ok()?;
            (pts, n)
        }
    };
    let mut pi = Poly::one(&ctx);
    for p in &points {
        pi = pi.mul(&Poly::x_minus(p).pow(exponent as u32));
    }
    if !pi.eval(alpha).is_zero() {
        pi = pi.mul(&Poly::x_minus(alpha));
    }
    Some(pi)
}

/// Spanning data for `M_alpha` and `M_alpha^2` that is exact up to `bound`.
struct LocalData<F: Scalar> {
    m: Vec<Poly<F>>,
    sq: Vec<Poly<F>>,
    /// `pi` with `pi K[x]` in `M_alpha`, when known.
    ideal_m: Option<Poly<F>>,
    /// `pi * gcd(g - g(alpha))`, whose multiples lie in `M_alpha^2`.
    ideal_sq: Option<Poly<F>>,
    bound: usize,
}

fn multiples<F: Scalar>(p: &Poly<F>, count: usize) -> impl Iterator<Item = Poly<F>> + '_ {
    (0..count).map(move |j| p.shift_up(j))
}

/// With `pi K[x]` inside `M_alpha` and `G = gcd(g_k - g_k(alpha))`, every
/// element of `M_alpha^2` of degree at most `max deg g_k + deg pi - 1` is a
/// combination of the products `(g_k - g_k(alpha)) m` and multiples of `pi G`.
fn exact_local<F: Scalar>(b: &SagbiBasis<F>, alpha: &F, pi: Poly<F>) -> Result<LocalData<F>> {
    let centered: Vec<Poly<F>> =
        b.elements().iter().filter(|g| g.deg() > 0).map(|g| g.sub(&Poly::constant(g.eval(alpha)))).collect();
    let mut g = centered[0].clone();
    for c in &centered[1..] {
        g = g.gcd(c)?;
    }
    let top = centered.iter().map(|c| c.deg()).max().unwrap_or(1);
    let bound = (top + pi.deg()).saturating_sub(1).max(1);
    let ideal_sq = pi.mul(&g);
    let m = maximal_ideal_basis(b, alpha, bound);
    let mut sq = square_products(b, alpha, &m, bound);
    if ideal_sq.deg() <= bound {
        sq.extend(multiples(&ideal_sq, bound - ideal_sq.deg() + 1));
    }
    Ok(LocalData { m, sq, ideal_m: Some(pi), ideal_sq: Some(ideal_sq), bound })
}

fn local_data<F: Scalar>(a: &Subalgebra<F>, alpha: &F) -> Result<LocalData<F>> {
    let b = a.sagbi()?;
    if let Some(pi) = ideal_in_maximal(a, alpha) {
        return exact_local(b, alpha, pi);
    }
    let bound = doubling_bound(b, alpha)?.1;
    let m = maximal_ideal_basis(b, alpha, bound);
    let sq = square_products(b, alpha, &m, bound);
    Ok(LocalData { m, sq, ideal_m: None, ideal_sq: None, bound })
}

/// The bound is doubled until the value is unchanged on two consecutive
/// doublings.
fn doubling_bound<F: Scalar>(b: &SagbiBasis<F>, alpha: &F) -> Result<(usize, usize)> {
    let d0 = initial_bound(b);
    let cap = 8 * d0;
    let mut d = d0;
    let mut history = vec![k_at_bound(b, alpha, d)];
    while d < cap {
        d *= 2;
        history.push(k_at_bound(b, alpha, d));
        let n = history.len();
        if n >= 3 && history[n - 1] == history[n - 2] && history[n - 2] == history[n - 3] {
            return Ok((history[n - 1], d / 4));
        }
    }
    Err(Error::NoStabilization(cap))
}

/// `k_alpha` and the degree bound it was computed at. Exact whenever
/// [`ideal_in_maximal`] succeeds; otherwise the bound is doubled until the
/// value is unchanged on two consecutive doublings.
pub fn k_alpha_with_bound<F: Scalar>(a: &Subalgebra<F>, alpha: &F) -> Result<(usize, usize)> {
    let data = local_data(a, alpha)?;
    let sq = span_of(&data.sq, a.sagbi()?.ctx());
    Ok((data.m.len() - sq.dim(), data.bound))
}

pub fn k_alpha<F: Scalar>(a: &Subalgebra<F>, alpha: &F) -> Result<usize> {
    Ok(k_alpha_with_bound(a, alpha)?.0)
}

/// Exact points of the spectrum identified with `alpha`, starting with
/// `alpha`. A point outside the spectrum forms its own cluster.
pub fn cluster_of<F: Scalar>(a: &Subalgebra<F>, alpha: &F, spectrum: &Spectrum<F>) -> Result<Vec<F>> {
    let gens = a.sagbi()?.elements();
    let mut out = vec![alpha.clone()];
    let inside = spectrum.points.iter().any(|p| p.value.exact() == Some(alpha));
    if !inside {
        if spectrum.points.iter().any(|p| p.value.exact().is_none() && (p.value.complex() - alpha.to_complex()).norm() < spectrum.tolerance) {
            return Err(Error::InexactSpectrum);
        }
        return Ok(out);
    }
    for p in &spectrum.points {
        let same = match p.value.exact() {
            Some(beta) => beta != alpha && gens.iter().all(|g| g.eval(beta) == g.eval(alpha)),
            None => {
                let z = p.value.complex();
                let close = gens.iter().all(|g| {
                    let d = g.eval_complex(z) - g.eval(alpha).to_complex();
                    d.norm() <= spectrum.tolerance * (1.0 + g.eval(alpha).to_complex().norm())
                });
                if close {
                    return Err(Error::InexactSpectrum);
                }
                false
            }
        };
        if same {
            out.push(p.value.exact().unwrap().clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct DerivationSpace<F: Scalar> {
    pub alpha: F,
    pub k_alpha: usize,
    /// Functionals of the form `sum c_ij f^(i)(alpha_j)`, `i >= 1`, linearly
    /// independent on the algebra.
    pub combo_basis: Vec<LinearFunctional<F>>,
    /// Representatives of a basis of `M_alpha / M_alpha^2`.
    pub quotient_witnesses: Vec<Poly<F>>,
    pub degree_bound: usize,
    pub max_order: usize,
}

impl<F: Scalar> DerivationSpace<F> {
    pub fn dim(&self) -> usize {
        self.combo_basis.len()
    }
}

fn derivative_values<F: Scalar>(p: &Poly<F>, cols: &[(usize, F)], max_order: usize) -> Vec<F> {
    let mut ders = vec![p.clone()];
    for _ in 0..max_order {
        let d = ders.last().unwrap().derivative();
        ders.push(d);
    }
    cols.iter().map(|(i, pt)| ders[*i].eval(pt)).collect()
}

/// Solves for derivative combinations at the points of `cluster` (orders
/// `1..=max_order`) that vanish on `M_alpha^2`, modulo those vanishing on
/// the whole algebra.
pub fn derivation_space_with_order<F: Scalar>(
    a: &Subalgebra<F>,
    alpha: &F,
    cluster: &[F],
    max_order: usize,
) -> Result<DerivationSpace<F>> {
    let data = local_data(a, alpha)?;
    space_at(a, alpha, cluster, max_order, &data)
}

fn space_at<F: Scalar>(
    a: &Subalgebra<F>,
    alpha: &F,
    cluster: &[F],
    max_order: usize,
    data: &LocalData<F>,
) -> Result<DerivationSpace<F>> {
    let ctx = a.sagbi()?.ctx().clone();
    let cols: Vec<(usize, F)> = (1..=max_order).flat_map(|i| cluster.iter().map(move |p| (i, p.clone()))).collect();
    // Enough multiples that a combination of order <= max_order vanishing on
    // them vanishes on the whole ideal.
    let reach = cluster.len() * (max_order + 1);
    let mut sq_rows: Vec<Vec<F>> = data.sq.iter().map(|p| derivative_values(p, &cols, max_order)).collect();
    let mut m_rows: Vec<Vec<F>> = data.m.iter().map(|p| derivative_values(p, &cols, max_order)).collect();
    if let Some(q) = &data.ideal_sq {
        sq_rows.extend(multiples(q, reach).map(|p| derivative_values(&p, &cols, max_order)));
    }
    if let Some(q) = &data.ideal_m {
        m_rows.extend(multiples(q, reach).map(|p| derivative_values(&p, &cols, max_order)));
    }
    let sols = nullspace(&sq_rows, cols.len(), &ctx);
    let trivial = nullspace(&m_rows, cols.len(), &ctx);
    let mut acc = trivial.clone();
    let mut basis = Vec::new();
    for v in sols {
        acc.push(v.clone());
        if rank(&acc) == acc.len() {
            basis.push(v);
        } else {
            acc.pop();
        }
    }
    let combo_basis = basis
        .into_iter()
        .map(|v| {
            let raw = (0..cols.len()).filter(|&i| !v[i].is_zero()).map(|i| (cols[i].0, cols[i].1.clone(), v[i].clone())).collect();
            LinearFunctional::deriv(raw)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut wspan = span_of(&data.sq, &ctx);
    let quotient_witnesses: Vec<Poly<F>> = data.m.iter().filter(|p| wspan.insert(p)).cloned().collect();
    Ok(DerivationSpace {
        alpha: alpha.clone(),
        k_alpha: quotient_witnesses.len(),
        combo_basis,
        quotient_witnesses,
        degree_bound: data.bound,
        max_order,
    })
}

/// Derivation space with the default order bound `conductor + 2`, raised
/// once to twice that when fewer than `k_alpha` derivations are found.
pub fn derivation_space<F: Scalar>(a: &Subalgebra<F>, alpha: &F, cluster: &[F]) -> Result<DerivationSpace<F>> {
    let n0 = a.sagbi()?.semigroup().conductor() + 2;
    let data = local_data(a, alpha)?;
    let s = space_at(a, alpha, cluster, n0, &data)?;
    if s.dim() < s.k_alpha {
        log::info!("derivations at {}: {} < k = {}, raising order bound", alpha, s.dim(), s.k_alpha);
        return space_at(a, alpha, cluster, 2 * n0, &data);
    }
    Ok(s)
}

/// Checks `D(fg) = D(f) g(alpha) + f(alpha) D(g)` for all pairs of the given
/// elements.
pub fn leibniz_holds<F: Scalar>(d: &LinearFunctional<F>, alpha: &F, elems: &[Poly<F>]) -> Result<bool> {
    let vals: Vec<F> = elems.iter().map(|e| d.apply(e)).collect::<Result<_>>()?;
    for i in 0..elems.len() {
        for j in i..elems.len() {
            let lhs = d.apply(&elems[i].mul(&elems[j]))?;
            let rhs = vals[i].times(&elems[j].eval(alpha)).plus(&elems[i].eval(alpha).times(&vals[j]));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DimReport {
    pub alpha: String,
    pub k_alpha: usize,
    pub dim_combo: usize,
    pub equal: bool,
    /// Outside the spectrum the space must be spanned by `f'(alpha)`.
    pub trivial_case_ok: Option<bool>,
}

impl DimReport {
    pub fn to_json(&self, instance: &str) -> Value {
        json!({
            "instance": instance,
            "alpha": self.alpha,
            "k_alpha": self.k_alpha,
            "dim_combo": self.dim_combo,
            "verdict": if self.equal { "equal" } else { "unequal" },
        })
    }
}

/// Compares the dimension of the derivative-combination space at `alpha`
/// with `k_alpha`.
pub fn conjecture_dim_check<F: Scalar>(a: &Subalgebra<F>, alpha: &F, cluster: &[F], in_spectrum: bool) -> Result<DimReport> {
    let s = derivation_space(a, alpha, cluster)?;
    let trivial_case_ok = if in_spectrum {
        None
    } else {
        let fp = LinearFunctional::derivative_at(1, alpha.clone())?;
        let b = a.sagbi()?;
        let test: Vec<F> = b.elements().iter().map(|g| fp.apply(g)).collect::<Result<_>>()?;
        let ok = s.dim() == 1 && {
            let mine: Vec<F> = b.elements().iter().map(|g| s.combo_basis[0].apply(g)).collect::<Result<_>>()?;
            rank(&[mine, test]) == 1
        };
        Some(ok)
    };
    Ok(DimReport { alpha: alpha.to_string(), k_alpha: s.k_alpha, dim_combo: s.dim(), equal: s.dim() == s.k_alpha, trivial_case_ok })
}

fn binomial(m: usize, k: usize) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    r
}

/// Nonzero coefficients `C_i` of `L_n = sum_i C_i c^(n-i) D_i` for odd `n`.
pub fn ln_coefficients(n: i64) -> Result<BTreeMap<usize, BigInt>> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::EvenInput(n));
    }
    let n = n as usize;
    let zero = BigInt::from(0);
    let mut c = vec![zero.clone(); 3 * n + 1];
    c[n] = BigInt::from(1);
    for m in (0..=(n - 1) / 2).rev() {
        let mut s = zero.clone();
        for k in 1..=m {
            s += binomial(m, k) * &c[2 * m + k];
        }
        c[2 * m] = -s;
    }
    Ok(c.into_iter().enumerate().take(n + 1).filter(|(_, v)| *v != zero).collect())
}

/// Result of testing a candidate integral.
#[derive(Clone, Debug, PartialEq)]
pub enum IntegralOutcome<F: Scalar> {
    /// `f -> L(a f')` as a derivative combination.
    Derivation(LinearFunctional<F>),
    /// `a f'` lies in the big algebra but `L(a f')` vanishes identically.
    Zero,
    NotIntegral,
}

/// Rewrites `f -> L(a f')` as a combination of derivatives of `f`.
fn compose_with_integral<F: Scalar>(l: &LinearFunctional<F>, a: &Poly<F>) -> Result<Vec<(usize, F, F)>> {
    let ctx = l.ctx();
    let one = F::one(&ctx);
    let terms: Vec<(usize, F, F)> = match l {
        LinearFunctional::Difference { alpha, beta } => vec![(0, alpha.clone(), one.clone()), (0, beta.clone(), one.negated())],
        LinearFunctional::DerivCombo { terms } => terms.iter().map(|t| (t.order, t.point.clone(), t.coeff.clone())).collect(),
    };
    let mut out = Vec::new();
    for (i, pt, c) in terms {
        for k in 0..=i {
            let bin = F::from_rat(&ctx, &crate::arith::Rat::from_integer(binomial(i, k)));
            let v = c.times(&bin).times(&a.nth_derivative(i - k).eval(&pt));
            if !v.is_zero() {
                out.push((k + 1, pt.clone(), v));
            }
        }
    }
    Ok(out)
}

/// Tests whether `a f'` lies in `big` for every generator `f` of `small`
/// (the kernel of `l` on `big`) and returns `f -> L(a f')`, with the Leibniz
/// rule verified up to `bound`.
pub fn integral_derivation<F: Scalar>(
    big: &Subalgebra<F>,
    small: &Subalgebra<F>,
    l: &LinearFunctional<F>,
    alpha: &F,
    a: &Poly<F>,
    bound: usize,
) -> Result<IntegralOutcome<F>> {
    let bb = big.sagbi()?;
    let sb = small.sagbi()?;
    for f in sb.elements() {
        if !bb.contains(&a.mul(&f.derivative())) {
            return Ok(IntegralOutcome::NotIntegral);
        }
    }
    let raw = compose_with_integral(l, a)?;
    let d = match LinearFunctional::deriv(raw) {
        Ok(d) => d,
        Err(_) => return Ok(IntegralOutcome::Zero),
    };
    let elems = sb.linear_basis(bound);
    if !leibniz_holds(&d, alpha, &elems)? {
        return Err(Error::Invalid(format!("{} fails the Leibniz rule", d)));
    }
    if elems.iter().all(|e| d.apply(e).map(|v| v.is_zero()).unwrap_or(false)) {
        return Ok(IntegralOutcome::Zero);
    }
    Ok(IntegralOutcome::Derivation(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rat};
    use crate::conditions::kernel_subalgebra;

    fn q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(cs)
    }

    fn alg(gens: &[&[i64]]) -> Subalgebra<Rat> {
        Subalgebra::from_generators(gens.iter().map(|g| q(g)).collect())
    }

    #[test]
    fn k_examples() {
        assert_eq!(k_alpha(&alg(&[&[0, 1]]), &rat(5)).unwrap(), 1);
        assert_eq!(k_alpha(&alg(&[&[0, 0, 1], &[0, 0, 0, 1]]), &rat(0)).unwrap(), 2);
        let one_cluster = kernel_subalgebra(&[
            LinearFunctional::diff(rat(0), rat(1)).unwrap(),
            LinearFunctional::diff(rat(0), rat(2)).unwrap(),
        ])
        .unwrap();
        assert_eq!(k_alpha(&one_cluster, &rat(0)).unwrap(), 3);
    }

    #[test]
    fn cusp_space() {
        let a = kernel_subalgebra(&[LinearFunctional::derivative_at(1, rat(0)).unwrap()]).unwrap();
        let s = derivation_space(&a, &rat(0), &[rat(0)]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.k_alpha, 2);
        let elems = a.sagbi().unwrap().linear_basis(10);
        for d in &s.combo_basis {
            assert!(leibniz_holds(d, &rat(0), &elems).unwrap());
        }
    }

    #[test]
    fn node_space() {
        let a = kernel_subalgebra(&[LinearFunctional::diff(rat(1), rat(-1)).unwrap()]).unwrap();
        let s = derivation_space(&a, &rat(1), &[rat(1), rat(-1)]).unwrap();
        assert_eq!((s.dim(), s.k_alpha), (2, 2));
    }

    #[test]
    fn outside_spectrum_is_trivial() {
        let a = alg(&[&[0, 0, 1], &[0, 0, 0, 1]]);
        let r = conjecture_dim_check(&a, &rat(3), &[rat(3)], false).unwrap();
        assert!(r.equal);
        assert_eq!(r.k_alpha, 1);
        assert_eq!(r.trivial_case_ok, Some(true));
    }

    #[test]
    fn ln_rows() {
        let row = |n: i64| -> Vec<(usize, i64)> {
            ln_coefficients(n).unwrap().into_iter().map(|(k, v)| (k, i64::try_from(v).unwrap())).collect()
        };
        assert_eq!(row(1), vec![(1, 1)]);
        assert_eq!(row(9), vec![(4, -11), (6, 11), (8, -4), (9, 1)]);
        assert_eq!(row(13), vec![(4, -882), (6, 882), (8, -294), (10, 50), (12, -6), (13, 1)]);
        assert_eq!(ln_coefficients(4), Err(Error::EvenInput(4)));
    }

    #[test]
    fn integrals() {
        let k = alg(&[&[0, 1]]);
        let cusp = alg(&[&[0, 0, 1], &[0, 0, 0, 1]]);
        let l = LinearFunctional::derivative_at(1, rat(0)).unwrap();
        match integral_derivation(&k, &cusp, &l, &rat(0), &q(&[1]), 10).unwrap() {
            IntegralOutcome::Derivation(d) => assert_eq!(d, LinearFunctional::derivative_at(2, rat(0)).unwrap()),
            other => panic!("{:?}", other),
        }
        let b = alg(&[&[0, 0, 1], &[0, 0, 0, 1]]);
        let a = alg(&[&[0, 0, 1], &[0, 0, 0, 0, 0, 1]]);
        let l3 = LinearFunctional::derivative_at(3, rat(0)).unwrap();
        let out = integral_derivation(&b, &a, &l3, &rat(0), &q(&[0, 1]), 12).unwrap();
        assert_eq!(out, IntegralOutcome::Zero);
        let out = integral_derivation(&b, &a, &l3, &rat(0), &q(&[1]), 12).unwrap();
        assert_eq!(out, IntegralOutcome::NotIntegral);
    }
}
