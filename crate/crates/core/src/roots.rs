//! Roots of characteristic polynomials: square-free decomposition, exact
//! rational or number-field roots, and Aberth–Ehrlich complex roots.

use crate::arith::{FieldElem, Poly, Rat, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Residual target of the complex iteration, relative to the size of the
/// polynomial at the root.
pub const RESIDUAL_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 200;

/// How exact roots are looked for before the remaining ones are computed
/// numerically.
#[derive(Clone, Debug)]
pub enum RootMode<F: Scalar> {
    ExactRational,
    Numeric,
    /// Trial candidates in the coefficient field, each confirmed exactly.
    Field(Vec<F>),
}

#[derive(Clone, Debug)]
pub struct NumericRoot {
    pub value: Complex64,
    pub multiplicity: usize,
    /// `|p(value)|` as evaluated in double precision.
    pub residual: f64,
}

/// All roots of `source`, split into exactly known and numeric ones.
/// Multiplicities add up to the degree.
#[derive(Clone, Debug)]
pub struct RootSet<F: Scalar> {
    pub exact_roots: Vec<(F, usize)>,
    pub numeric_roots: Vec<NumericRoot>,
    pub source: Poly<F>,
}

impl<F: Scalar> RootSet<F> {
    pub fn total_multiplicity(&self) -> usize {
        self.exact_roots.iter().map(|r| r.1).sum::<usize>()
            + self.numeric_roots.iter().map(|r| r.multiplicity).sum::<usize>()
    }
}

/// Yun's algorithm: `p = c * prod f_i^{m_i}` with monic, square-free,
/// pairwise coprime `f_i`, listed by increasing multiplicity.
pub fn squarefree_decompose<F: Scalar>(p: &Poly<F>) -> Result<Vec<(Poly<F>, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp)?;
    let mut b = p.div_exact(&a0)?;
    let mut c = dp.div_exact(&a0)?;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    loop {
        let a = b.gcd(&d)?;
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a)?;
        if b.is_constant() {
            break;
        }
        c = d.div_exact(&a)?;
        d = c.sub(&b.derivative());
        i += 1;
    }
    Ok(out)
}

/// Distinct rational roots of a polynomial over `Q`.
pub fn rational_roots(p: &Poly<Rat>) -> Vec<Rat> {
    if p.is_zero() || p.is_constant() {
        return vec![];
    }
    let mut roots = Vec::new();
    let mut q = p.clone();
    if q.coeff(0).is_zero() {
        roots.push(Rat::zero(&()));
        let k = q.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        q = Poly::new(q.coeffs()[k..].to_vec(), ());
    }
    if q.is_constant() {
        return roots;
    }
    let ints = primitive_integer_coeffs(&q);
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let small = |n: &BigInt| n.bits() <= 40;
    let cands: Vec<Rat> = if small(&a0) && small(&an) {
        let nums = divisors(a0.to_u64().unwrap());
        let dens = divisors(an.to_u64().unwrap());
        let mut v = Vec::new();
        for &n in &nums {
            for &d in &dens {
                if n.gcd(&d) == 1 {
                    v.push(Rat::new(BigInt::from(n), BigInt::from(d)));
                    v.push(Rat::new(-BigInt::from(n), BigInt::from(d)));
                }
            }
        }
        v
    } else {
        numeric_rational_candidates(&q)
    };
    for c in cands {
        if q.eval(&c).is_zero() && !roots.contains(&c) {
            roots.push(c);
        }
    }
    roots
}

fn primitive_integer_coeffs(p: &Poly<Rat>) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::from(0), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut v = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            v.push(i);
            if i * i != n {
                v.push(n / i);
            }
        }
        i += 1;
    }
    v
}

fn numeric_rational_candidates(q: &Poly<Rat>) -> Vec<Rat> {
    let sf = match q.gcd(&q.derivative()).and_then(|g| q.div_exact(&g)) {
        Ok(sf) => sf,
        Err(_) => q.clone(),
    };
    let Ok(zs) = complex_roots(&sf) else {
        return vec![];
    };
    let mut v = Vec::new();
    for z in zs {
        if z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
            continue;
        }
        v.extend(convergents(z.re, 1i128 << 40));
    }
    v
}

/// Continued-fraction convergents of `x` with denominators up to `max_den`.
fn convergents(x: f64, max_den: i128) -> Vec<Rat> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (p2, q2) = (ai * p1 + p0, ai * q1 + q0);
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        out.push(Rat::new(BigInt::from(p1), BigInt::from(q1)));
        let frac = y - a;
        if frac.abs() < 1e-300 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// accepted only when it lies within `tol` of `x`.
pub fn approx_rational(x: f64, max_den: i64, tol: f64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (p2, q2) = (ai * p1 + p0, ai * q1 + q0);
        if q2 > max_den as i128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        if (x - p1 as f64 / q1 as f64).abs() <= tol * (1.0 + x.abs()) {
            return Some(Rat::new(BigInt::from(p1), BigInt::from(q1)));
        }
        let frac = y - a;
        if frac.abs() < 1e-300 {
            break;
        }
        y = 1.0 / frac;
    }
    None
}

fn solve_complex(mut m: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].norm().partial_cmp(&m[j][col].norm()).unwrap())?;
        if m[piv][col].norm() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            for c in col..n {
                let v = m[col][c];
                m[r][c] -= f * v;
            }
            let v = b[col];
            b[r] -= f * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for r in (0..n).rev() {
        let s: Complex64 = (r + 1..n).map(|c| m[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / m[r][r];
    }
    Some(x)
}

/// Largest number of root combinations tried by [`field_roots`].
pub const FIELD_SEARCH_LIMIT: usize = 250_000;

/// Roots of `p` lying in its coefficient field.
///
/// For every embedding of the field the image of `p` is solved numerically;
/// a choice of one root per embedding determines rational coordinates in the
/// power basis through a Vandermonde system. Candidates with nearly rational
/// coordinates are confirmed exactly.
pub fn field_roots(p: &Poly<FieldElem>) -> Result<Vec<FieldElem>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = p.ctx().clone();
    if p.is_constant() {
        return Ok(vec![]);
    }
    let sf = p.div_exact(&p.gcd(&p.derivative())?)?;
    let d = field.degree();
    let embeddings = complex_roots(field.modulus())?;
    let image = |z: Complex64| -> Vec<Complex64> {
        sf.coeffs()
            .iter()
            .map(|c| c.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, r| acc * z + crate::arith::rat_to_f64(r)))
            .collect()
    };
    let mut roots_per: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    for &z in &embeddings {
        roots_per.push(aberth(&image(z))?);
    }
    let tol = 1e-7;
    // independent embeddings and, for the others, the conjugate they follow
    let mut follows: Vec<Option<usize>> = vec![None; d];
    let mut free: Vec<usize> = Vec::new();
    for i in 0..d {
        if let Some(j) = free.iter().copied().find(|&j| (embeddings[j].conj() - embeddings[i]).norm() < 1e-9 && embeddings[i].im.abs() > 1e-9) {
            follows[i] = Some(j);
        } else {
            free.push(i);
        }
    }
    let m = roots_per[0].len();
    let total = (m as f64).powi(free.len() as i32);
    if total > FIELD_SEARCH_LIMIT as f64 {
        log::debug!("field root search skipped: {} combinations", total);
        return Ok(vec![]);
    }
    let vander: Vec<Vec<Complex64>> =
        embeddings.iter().map(|&z| (0..d).map(|k| z.powu(k as u32)).collect()).collect();
    let mut out: Vec<FieldElem> = Vec::new();
    let mut idx = vec![0usize; free.len()];
    loop {
        let mut rhs = vec![Complex64::new(0.0, 0.0); d];
        for (k, &i) in free.iter().enumerate() {
            rhs[i] = roots_per[i][idx[k]];
        }
        for i in 0..d {
            if let Some(j) = follows[i] {
                rhs[i] = rhs[j].conj();
            }
        }
        if let Some(c) = solve_complex(vander.clone(), rhs) {
            let scale = 1.0 + c.iter().map(|v| v.norm()).fold(0.0, f64::max);
            if c.iter().all(|v| v.im.abs() <= 1e-6 * scale) {
                let coords: Option<Vec<Rat>> = c.iter().map(|v| approx_rational(v.re, 100_000, tol)).collect();
                if let Some(coords) = coords {
                    let cand = FieldElem::from_rep(&field, &Poly::new(coords, ()));
                    if !out.contains(&cand) && sf.eval(&cand).is_zero() {
                        out.push(cand);
                    }
                }
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < m {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// All complex roots of `p`, repeated by multiplicity.
pub fn complex_roots<F: Scalar>(p: &Poly<F>) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for (f, m) in squarefree_decompose(p)? {
        for z in aberth(&f.to_complex_coeffs())? {
            out.extend(std::iter::repeat(z).take(m));
        }
    }
    Ok(out)
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn backward_error(c: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = horner(c, z);
    let r = z.norm();
    let scale: f64 = c.iter().rev().fold(0.0, |acc, a| acc * r + a.norm());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Aberth–Ehrlich iteration on ascending complex coefficients.
pub fn aberth(c: &[Complex64]) -> Result<Vec<Complex64>> {
    let z = aberth_unchecked(c);
    for zi in &z {
        if backward_error(c, *zi) > RESIDUAL_TOL {
            return Err(Error::NonConvergence(MAX_ITERATIONS));
        }
    }
    Ok(z)
}

/// Aberth–Ehrlich iterates after at most [`MAX_ITERATIONS`] sweeps, with no
/// residual check.
pub fn aberth_unchecked(c: &[Complex64]) -> Vec<Complex64> {
    let zeros = c.iter().take_while(|a| a.norm() == 0.0).count().min(c.len().saturating_sub(1));
    if zeros > 0 {
        let mut z = vec![Complex64::new(0.0, 0.0); zeros];
        z.extend(aberth_unchecked(&c[zeros..]));
        return z;
    }
    let n = c.len().saturating_sub(1);
    match n {
        0 => return vec![],
        1 => return vec![-c[0] / c[1]],
        _ => {}
    }
    let lead = c[n];
    let radius = 1.0 + c[..n].iter().map(|a| (a / lead).norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, ang)
        })
        .collect();
    let mut converged = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        let mut all = true;
        for i in 0..n {
            if converged[i] {
                continue;
            }
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                converged[i] = true;
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                all = false;
                continue;
            }
            z[i] -= w;
            if w.norm() <= 1e-15 * (1.0 + z[i].norm()) {
                converged[i] = true;
            } else {
                all = false;
            }
        }
        if all {
            break;
        }
    }
    z
}

/// Exact roots according to `mode`, then numeric roots of what is left.
pub fn find_roots<F: Scalar>(p: &Poly<F>, mode: &RootMode<F>) -> Result<RootSet<F>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    let ctx = p.ctx().clone();
    let candidates: Vec<F> = match mode {
        RootMode::Numeric => vec![],
        RootMode::ExactRational => match p.to_rational() {
            Some(q) => rational_roots(&q).iter().map(|r| F::from_rat(&ctx, r)).collect(),
            None => vec![],
        },
        RootMode::Field(c) => {
            let mut c = c.clone();
            c.extend(F::search_roots(p));
            c
        }
    };
    let mut rest = p.clone();
    let mut exact: Vec<(F, usize)> = Vec::new();
    for c in candidates {
        if exact.iter().any(|(e, _)| *e == c) {
            continue;
        }
        let lin = Poly::x_minus(&c);
        let mut m = 0;
        while !rest.is_constant() && rest.eval(&c).is_zero() {
            rest = rest.div_exact(&lin)?;
            m += 1;
        }
        if m > 0 {
            exact.push((c, m));
        }
    }
    let mut numeric = Vec::new();
    if !rest.is_constant() {
        for (f, m) in squarefree_decompose(&rest)? {
            let cs = f.to_complex_coeffs();
            for z in aberth(&cs)? {
                numeric.push(NumericRoot { value: z, multiplicity: m, residual: horner(&cs, z).0.norm() });
            }
        }
    }
    Ok(RootSet { exact_roots: exact, numeric_roots: numeric, source: p.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac, FieldElem, NumberField};

    fn q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(cs)
    }

    #[test]
    fn aberth_with_zero_root() {
        let p = q(&[0, -128, 160, -128, 56, -12, 1]);
        let z = aberth(&p.to_complex_coeffs()).unwrap();
        assert_eq!(z.len(), 6);
        assert!(z.iter().any(|r| r.norm() == 0.0));
        assert!(z.iter().any(|r| (r.re - 4.0).abs() < 1e-9 && r.im.abs() < 1e-9));
    }

    #[test]
    fn squarefree_examples() {
        let chi = q(&[0, 0, 1, 0, -1, 0, 1]);
        assert_eq!(squarefree_decompose(&chi).unwrap(), vec![(q(&[1, 0, -1, 0, 1]), 1), (q(&[0, 1]), 2)]);
        assert_eq!(squarefree_decompose(&q(&[0, 0, 0, 1])).unwrap(), vec![(q(&[0, 1]), 3)]);
        let p = q(&[-1, 1]).pow(2).mul(&q(&[1, 1]));
        assert_eq!(squarefree_decompose(&p).unwrap(), vec![(q(&[1, 1]), 1), (q(&[-1, 1]), 2)]);
        assert_eq!(squarefree_decompose(&Poly::<Rat>::zero(&())), Err(Error::ZeroInput));
    }

    #[test]
    fn rational_roots_of_x2_minus_1() {
        let rs = find_roots(&q(&[-1, 0, 1]), &RootMode::ExactRational).unwrap();
        let vals: Vec<Rat> = rs.exact_roots.iter().map(|r| r.0.clone()).collect();
        assert!(vals.contains(&rat(1)) && vals.contains(&rat(-1)));
        assert!(rs.numeric_roots.is_empty());
    }

    #[test]
    fn unimodular_twelfth_roots() {
        let rs = find_roots(&q(&[1, 0, -1, 0, 1]), &RootMode::Numeric).unwrap();
        assert_eq!(rs.numeric_roots.len(), 4);
        for r in &rs.numeric_roots {
            assert!((r.value.norm() - 1.0).abs() < 1e-10);
            assert!((r.value.powu(12) - 1.0).norm() < 1e-9);
            assert!((r.value.powu(4) - 1.0).norm() > 1e-3);
            assert!((r.value.powu(6) - 1.0).norm() > 1e-3);
        }
    }

    #[test]
    fn field_mode_eighth_roots() {
        let k = NumberField::cyclotomic(8);
        let t = FieldElem::generator(&k);
        let p = q(&[1, 0, 0, 0, 1]).lift(&k);
        let cands = vec![t.clone(), t.pow(3), t.pow(5), t.pow(7)];
        let rs = find_roots(&p, &RootMode::Field(cands)).unwrap();
        assert_eq!(rs.exact_roots.len(), 4);
        assert!(rs.numeric_roots.is_empty());
    }

    #[test]
    fn fractional_roots() {
        let p = q(&[-1, 2]).mul(&q(&[3, 4])).mul(&q(&[1, 0, 1]));
        let mut r = rational_roots(&p);
        r.sort();
        assert_eq!(r, vec![Rat::new((-3).into(), 4.into()), Rat::new(1.into(), 2.into())]);
    }

    #[test]
    fn quadratic_field_roots() {
        let k = NumberField::new(q(&[-3, 0, 1]), "Q(sqrt3)").unwrap();
        let p = Poly::new(
            vec![FieldElem::from_rat(&k, &rat_frac(-1, 2)), FieldElem::from_i64(&k, -1), FieldElem::one(&k)],
            k.clone(),
        );
        let mut r = field_roots(&p).unwrap();
        r.sort_by(|a, b| a.to_complex().re.partial_cmp(&b.to_complex().re).unwrap());
        let half = FieldElem::from_rat(&k, &rat_frac(1, 2));
        let s3 = FieldElem::generator(&k).times(&half);
        assert_eq!(r, vec![half.minus(&s3), half.plus(&s3)]);
    }

    #[test]
    fn cyclotomic_roots_with_multiplicity() {
        let k = NumberField::cyclotomic(8);
        let t = FieldElem::generator(&k);
        let lin = |c: &FieldElem| Poly::x_minus(c);
        let p = &(&lin(&t) * &lin(&t)) * &(&lin(&t.pow(3).plus(&FieldElem::one(&k))) * &lin(&FieldElem::from_i64(&k, 2)));
        let r = field_roots(&p).unwrap();
        assert_eq!(r.len(), 3);
        let set = find_roots(&p, &RootMode::Field(vec![])).unwrap();
        assert_eq!(set.total_multiplicity(), 4);
        assert!(set.numeric_roots.is_empty());
    }

    #[test]
    fn approximations() {
        assert_eq!(approx_rational(0.3333333333333, 1000, 1e-9), Some(rat_frac(1, 3)));
        assert_eq!(approx_rational(-2.5, 10, 1e-12), Some(rat_frac(-5, 2)));
        assert_eq!(approx_rational(std::f64::consts::PI, 100, 1e-9), None);
    }
}
