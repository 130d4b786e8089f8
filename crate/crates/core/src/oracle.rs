//! Brute-force reference computations for cross-checking.
//!
//! Nothing here uses SAGBI bases or the resultant code: spans are closed
//! under multiplication by generators directly, and the joint root system of
//! divided differences is eliminated by evaluating Sylvester determinants at
//! integer points and interpolating.

use crate::arith::linalg::PolySpan;
use crate::arith::{rat, Poly, Rat, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Echelon basis of a degree-bounded span.
#[derive(Clone, Debug)]
pub struct SpanBasis<F: Scalar> {
    pub span: PolySpan<F>,
    pub bound: usize,
}

impl<F: Scalar> SpanBasis<F> {
    /// Leading degrees of the echelon rows, increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.span.pivots()
    }

    /// Degrees in `0..=bound` that no element of the span has.
    pub fn missing(&self) -> Vec<usize> {
        let p = self.pivots();
        (0..=self.bound).filter(|d| !p.contains(d)).collect()
    }
}

fn closure<F: Scalar>(gens: &[Poly<F>], bound: usize, ctx: &F::Ctx) -> PolySpan<F> {
    let mut span = PolySpan::new(ctx);
    span.insert(&Poly::one(ctx));
    let mut frontier = vec![Poly::one(ctx)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                if f.deg() + g.deg() > bound {
                    continue;
                }
                let h = f.mul(g);
                if span.insert(&h) {
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    span
}

/// Span of all products of `gens` (including 1) of degree at most
/// `degree_bound`. Products are formed up to twice the bound so that
/// cancellations of leading terms are seen, then cut back.
///
/// # Panics
/// If `gens` is empty.
pub fn oracle_span<F: Scalar>(gens: &[Poly<F>], degree_bound: usize) -> SpanBasis<F> {
    let ctx = gens.first().expect("oracle_span needs a generator").ctx().clone();
    let gens: Vec<Poly<F>> = gens.iter().filter(|g| g.deg() > 0).cloned().collect();
    let wide = closure(&gens, 2 * degree_bound, &ctx);
    let mut span = PolySpan::new(&ctx);
    for r in wide.rows() {
        if r.deg() <= degree_bound {
            span.insert(r);
        }
    }
    SpanBasis { span, bound: degree_bound }
}

/// Number of degrees missing from the span, once it no longer changes when
/// the bound is raised twice in a row by twice the largest generator degree.
pub fn oracle_codimension<F: Scalar>(gens: &[Poly<F>], degree_bound: usize) -> Result<usize> {
    let max_deg = gens.iter().map(|g| g.deg()).max().unwrap_or(0);
    let step = 2 * max_deg.max(1);
    let mut b = degree_bound.max(max_deg).max(2);
    let mut history = vec![oracle_span(gens, b).missing().len()];
    for _ in 0..8 {
        b += step;
        history.push(oracle_span(gens, b).missing().len());
        let n = history.len();
        if n >= 3 && history[n - 1] == history[n - 2] && history[n - 2] == history[n - 3] {
            return Ok(history[n - 1]);
        }
    }
    Err(Error::NoStabilization(b))
}

/// Whether `f` lies in the span of products of `gens` up to `degree_bound`.
pub fn oracle_member<F: Scalar>(f: &Poly<F>, gens: &[Poly<F>], degree_bound: usize) -> bool {
    if f.deg() == 0 {
        return true;
    }
    oracle_span(gens, degree_bound.max(f.deg())).span.contains(f)
}

/// `(p(x) - p(y)) / (x - y)` as coefficients in `x` of the powers of `y`.
fn divided_difference(p: &Poly<Rat>) -> Vec<Poly<Rat>> {
    let n = p.deg();
    let mut by_y = vec![Poly::zero(&()); n.max(1)];
    for k in 1..=n {
        let c = p.coeff(k);
        for j in 0..k {
            let term = Poly::monomial(c.clone(), k - 1 - j);
            by_y[j] = by_y[j].add(&term);
        }
    }
    by_y
}

/// `sum w_i P_i` for divided differences of possibly different lengths.
fn combine(dds: &[Vec<Poly<Rat>>], w: &[i64]) -> Vec<Poly<Rat>> {
    let len = dds.iter().map(|d| d.len()).max().unwrap_or(0);
    let mut out = vec![Poly::zero(&()); len];
    for (d, &wi) in dds.iter().zip(w) {
        for (k, c) in d.iter().enumerate() {
            out[k] = out[k].add(&c.scale(&rat(wi)));
        }
    }
    out
}

/// Bivariate polynomial with integer coefficients, indexed `[y-power][x-power]`.
type IntBivariate = Vec<Vec<BigInt>>;

fn to_integer(pxy: &[Poly<Rat>]) -> IntBivariate {
    let mut den = BigInt::one();
    for c in pxy {
        for a in c.coeffs() {
            den = den.lcm(a.denom());
        }
    }
    pxy.iter()
        .map(|c| c.coeffs().iter().map(|a| (a * Rat::from_integer(den.clone())).to_integer()).collect())
        .collect()
}

fn specialize(pxy: &IntBivariate, x0: i64) -> Vec<BigInt> {
    let x0 = BigInt::from(x0);
    let mut out: Vec<BigInt> = pxy
        .iter()
        .map(|c| c.iter().rev().fold(BigInt::zero(), |acc, a| acc * &x0 + a))
        .collect();
    while out.len() > 1 && out.last().is_some_and(|a| a.is_zero()) {
        out.pop();
    }
    out
}

/// Fraction-free Gaussian elimination.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * prev
}

fn sylvester_det(p: &[BigInt], q: &[BigInt]) -> BigInt {
    let (m, n) = (p.len() - 1, q.len() - 1);
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![BigInt::zero(); size];
        for k in 0..=m {
            r[i + k] = p[m - k].clone();
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![BigInt::zero(); size];
        for k in 0..=n {
            r[i + k] = q[n - k].clone();
        }
        rows.push(r);
    }
    bareiss(rows)
}

fn trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Content-free, positive leading coefficient.
fn primitive(a: Vec<BigInt>) -> Vec<BigInt> {
    let mut a = trim(a);
    let content = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() {
        return a;
    }
    let content = if a.last().is_some_and(|c| c.is_negative()) { -content } else { content };
    for c in a.iter_mut() {
        *c = &*c / &content;
    }
    a
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, bk) in b.iter().enumerate() {
            r[dr - db + k] -= &lr * bk;
        }
        r = trim(r);
    }
    r
}

/// Gcd of integer polynomials by the primitive remainder sequence.
fn int_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a), primitive(b));
    let shift = a.iter().take_while(|c| c.is_zero()).count().min(b.iter().take_while(|c| c.is_zero()).count());
    a.drain(..a.iter().take_while(|c| c.is_zero()).count());
    b.drain(..b.iter().take_while(|c| c.is_zero()).count());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    let mut out = vec![BigInt::zero(); shift];
    out.extend(primitive(a));
    out
}

fn squarefree_part(g: &[BigInt]) -> Vec<BigInt> {
    let zeros = g.iter().take_while(|c| c.is_zero()).count();
    let core = primitive(g[zeros..].to_vec());
    let deriv: Vec<BigInt> = core.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    let d = if deriv.is_empty() { vec![BigInt::one()] } else { int_gcd(core.clone(), deriv) };
    let mut out = exact_quotient(&core, &d);
    if zeros > 0 {
        out.insert(0, BigInt::zero());
    }
    out
}

fn exact_quotient(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &b[db];
        for (k, bk) in b.iter().enumerate() {
            r[i + k] -= &c * bk;
        }
        q[i] = c;
    }
    q
}

fn int_to_f64(a: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(a).unwrap_or(f64::NAN)
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rat], ys: &[Rat]) -> Poly<Rat> {
    let n = xs.len();
    let mut coef: Vec<Rat> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = Poly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = p.mul(&Poly::x_minus(&xs[i])).add(&Poly::constant(coef[i].clone()));
    }
    p
}

/// `Res_y(P, Q)` as a polynomial in `x`, by evaluation at integers.
fn bivariate_resultant(pxy: &[Poly<Rat>], qxy: &[Poly<Rat>]) -> Poly<Rat> {
    let dp = pxy.len() - 1;
    let dq = qxy.len() - 1;
    let total_p = pxy.iter().map(|c| c.degree().unwrap_or(0)).max().unwrap_or(0) + dp;
    let total_q = qxy.iter().map(|c| c.degree().unwrap_or(0)).max().unwrap_or(0) + dq;
    let npts = total_p * total_q + 1;
    let (pi, qi) = (to_integer(pxy), to_integer(qxy));
    let pts: Vec<i64> = (0..npts as i64).map(|i| if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 }).collect();
    let ys: Vec<Rat> = pts
        .iter()
        .map(|&x0| Rat::from_integer(sylvester_det(&specialize(&pi, x0), &specialize(&qi, x0))))
        .collect();
    let xs: Vec<Rat> = pts.into_iter().map(rat).collect();
    interpolate(&xs, &ys)
}

fn eval_bivariate(pxy: &[Poly<Rat>], x: Complex64, y: Complex64) -> (Complex64, f64) {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let mut yp = Complex64::new(1.0, 0.0);
    for c in pxy {
        let v = c.eval_complex(x) * yp;
        let mag: f64 = c.coeffs().iter().enumerate().map(|(i, a)| crate::arith::rat_to_f64(a).abs() * x.norm().powi(i as i32)).sum::<f64>()
            * yp.norm();
        acc += v;
        scale += mag;
        yp *= y;
    }
    (acc, scale)
}

/// Tolerance for deciding that a numeric pair `(x, y)` solves all
/// divided-difference equations.
pub const JOINT_TOL: f64 = 1e-7;

/// Distinct `x`-values of the solutions of `P_i(x, y) = 0` for all `i`.
pub fn oracle_multi_char_roots(gens: &[Poly<Rat>]) -> Result<Vec<Complex64>> {
    if gens.len() < 2 {
        return Err(Error::FewerThanTwoGenerators);
    }
    let dds: Vec<Vec<Poly<Rat>>> = gens.iter().map(divided_difference).collect();
    let mut systems: Vec<(Vec<Poly<Rat>>, Vec<Poly<Rat>>)> = Vec::new();
    for i in 0..dds.len() {
        for j in i + 1..dds.len() {
            systems.push((dds[i].clone(), dds[j].clone()));
        }
    }
    if dds.len() > 2 {
        for k in 0..2i64 {
            let a: Vec<i64> = (0..dds.len() as i64).map(|i| 1 + ((3 + k) * (i + 1)) % 7).collect();
            let b: Vec<i64> = (0..dds.len() as i64).map(|i| 1 + ((5 + 2 * k) * (i + 2) * (i + 1)) % 11).collect();
            systems.push((combine(&dds, &a), combine(&dds, &b)));
        }
    }
    let mut g: Option<Vec<BigInt>> = None;
    for (p, q) in &systems {
        let r = bivariate_resultant(p, q);
        if r.is_zero() {
            continue;
        }
        let den = r.coeffs().iter().fold(BigInt::one(), |d, a| d.lcm(a.denom()));
        let r = primitive(r.coeffs().iter().map(|a| (a * Rat::from_integer(den.clone())).to_integer()).collect());
        g = Some(match g {
            None => r,
            Some(prev) => int_gcd(prev, r),
        });
    }
    let g = g.ok_or(Error::InfiniteSolutionSet)?;
    if g.len() <= 1 {
        return Ok(vec![]);
    }
    let sqf = squarefree_part(&g);
    let complex: Vec<Complex64> = sqf.iter().map(|a| Complex64::new(int_to_f64(a), 0.0)).collect();
    let xs = crate::roots::aberth_unchecked(&complex);
    let mut out = Vec::new();
    for x in xs {
        let base: Vec<Complex64> = dds[0].iter().map(|c| c.eval_complex(x)).collect();
        let ys = crate::roots::aberth_unchecked(&base);
        let joint = ys.iter().any(|&y| {
            dds.iter().all(|d| {
                let (v, scale) = eval_bivariate(d, x, y);
                v.norm() <= JOINT_TOL * scale.max(1.0)
            })
        });
        if joint {
            out.push(x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parser::parse_poly;

    fn polys(src: &[&str]) -> Vec<Poly<Rat>> {
        src.iter().map(|s| parse_poly(s).unwrap()).collect()
    }

    #[test]
    fn span_pivots() {
        let s = oracle_span(&polys(&["x^3 - x", "x^2"]), 8);
        assert_eq!(s.pivots(), vec![0, 2, 3, 4, 5, 6, 7, 8]);
        let s = oracle_span(&polys(&["x^3", "x^4"]), 8);
        assert_eq!(s.pivots(), vec![0, 3, 4, 6, 7, 8]);
        let s = oracle_span(&polys(&["x"]), 5);
        assert_eq!(s.pivots(), (0..=5).collect::<Vec<_>>());
    }

    #[test]
    fn codimensions() {
        assert_eq!(oracle_codimension(&polys(&["x^3 - x", "x^2"]), 8).unwrap(), 1);
        assert_eq!(oracle_codimension(&polys(&["x^4", "x^3 - x"]), 8).unwrap(), 3);
        assert_eq!(oracle_codimension(&polys(&["x^4 - x^2", "x^3"]), 8).unwrap(), 3);
        assert!(oracle_codimension(&polys(&["x^2", "x^4"]), 8).is_err());
    }

    #[test]
    fn membership() {
        let g = polys(&["x^3 - x", "x^2"]);
        assert!(oracle_member(&parse_poly("x^7 - x").unwrap(), &g, 10));
        assert!(!oracle_member(&parse_poly("x").unwrap(), &g, 10));
        assert!(oracle_member(&parse_poly("7").unwrap(), &g, 10));
    }

    #[test]
    fn joint_roots() {
        let mut r = oracle_multi_char_roots(&polys(&["x^3 - x", "x^2"])).unwrap();
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert_eq!(r.len(), 2);
        assert!((r[0].re + 1.0).abs() < 1e-9 && (r[1].re - 1.0).abs() < 1e-9);
        assert!(matches!(oracle_multi_char_roots(&polys(&["x^2", "x^4"])), Err(Error::InfiniteSolutionSet)));
    }
}
