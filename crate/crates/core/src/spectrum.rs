//! Spectrum of a subalgebra: points where all derivatives vanish or where
//! two points cannot be separated, together with clusters and the explicit
//! description of algebras containing a degree-two element.

use crate::arith::{FieldElem, NumberField, Poly, Rat, Scalar};
use crate::conditions::{conditions_from_subalgebra, LinearFunctional, Subalgebra};
use crate::error::{Error, Result};
use crate::resultants::{char_poly_multi, char_poly_pair};
use crate::roots::{find_roots, RootMode};
use crate::sagbi::{sagbi_complete, SagbiBasis};
use num_complex::Complex64;
use num_integer::Integer;
use serde_json::{json, Value};
use std::sync::Arc;

/// Default numeric tolerance for pairing and derivative tests.
pub const PAIRING_TOL: f64 = 1e-8;
/// Pairs combined before the candidate gcd is accepted.
pub const MAX_INITIAL_PAIRS: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub enum SpectrumValue<F: Scalar> {
    Exact(F),
    Numeric(Complex64),
}

impl<F: Scalar> SpectrumValue<F> {
    pub fn complex(&self) -> Complex64 {
        match self {
            SpectrumValue::Exact(a) => a.to_complex(),
            SpectrumValue::Numeric(z) => *z,
        }
    }

    pub fn exact(&self) -> Option<&F> {
        match self {
            SpectrumValue::Exact(a) => Some(a),
            SpectrumValue::Numeric(_) => None,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            SpectrumValue::Exact(a) => {
                let z = a.to_complex();
                json!({"exact": true, "value": a.to_string(), "approx": [z.re, z.im]})
            }
            SpectrumValue::Numeric(z) => json!({"exact": false, "approx": [z.re, z.im]}),
        }
    }
}

impl<F: Scalar> std::fmt::Display for SpectrumValue<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectrumValue::Exact(a) => write!(f, "{}", a),
            SpectrumValue::Numeric(z) => write!(f, "{:.10}{:+.10}i", z.re, z.im),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumPoint<F: Scalar> {
    pub value: SpectrumValue<F>,
    /// Every element of the algebra has vanishing derivative here.
    pub critical: bool,
    /// Indices of the other points at which every element takes the same value.
    pub partners: Vec<usize>,
    /// Multiplicity as a root of the candidate characteristic polynomial.
    pub multiplicity: usize,
}

impl<F: Scalar> SpectrumPoint<F> {
    pub fn is_paired(&self) -> bool {
        !self.partners.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Spectrum<F: Scalar> {
    pub points: Vec<SpectrumPoint<F>>,
    /// Candidate characteristic polynomial whose roots were classified.
    pub chi: Poly<F>,
    pub tolerance: f64,
    pub field_label: Option<String>,
}

impl<F: Scalar> Spectrum<F> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.points.iter().all(|p| p.value.exact().is_some())
    }

    /// Exact point values, or `None` when some point is only numeric.
    pub fn exact_points(&self) -> Option<Vec<F>> {
        self.points.iter().map(|p| p.value.exact().cloned()).collect()
    }

    pub fn complex_points(&self) -> Vec<Complex64> {
        self.points.iter().map(|p| p.value.complex()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field_label,
            "chi": self.chi.to_string(),
            "points": self.points.iter().map(|p| json!({
                "value": p.value.to_json(),
                "critical": p.critical,
                "partners": p.partners,
                "multiplicity": p.multiplicity,
            })).collect::<Vec<_>>()
        })
    }
}

/// Scale of `g` near `z`: the sum of `|c_k| |z|^k`.
fn abs_scale<F: Scalar>(g: &Poly<F>, z: Complex64) -> f64 {
    let r = z.norm();
    g.coeffs().iter().rev().fold(0.0, |acc, c| acc * r + c.to_complex().norm())
}

fn close(a: Complex64, b: Complex64, scale: f64, tol: f64) -> bool {
    (a - b).norm() <= tol * scale.max(1.0)
}

/// Every `g` takes the same value at the two points.
fn same_values<F: Scalar>(gens: &[Poly<F>], a: &SpectrumValue<F>, b: &SpectrumValue<F>, tol: f64) -> (bool, f64) {
    if let (SpectrumValue::Exact(x), SpectrumValue::Exact(y)) = (a, b) {
        return (gens.iter().all(|g| g.eval(x) == g.eval(y)), 0.0);
    }
    let (za, zb) = (a.complex(), b.complex());
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for g in gens {
        let scale = abs_scale(g, za).max(abs_scale(g, zb)).max(1.0);
        let dev = (g.eval_complex(za) - g.eval_complex(zb)).norm() / scale;
        worst = worst.max(dev);
        ok &= dev <= tol;
    }
    (ok, worst)
}

fn all_critical<F: Scalar>(gens: &[Poly<F>], a: &SpectrumValue<F>, tol: f64) -> bool {
    match a {
        SpectrumValue::Exact(x) => gens.iter().all(|g| g.derivative().eval(x).is_zero()),
        SpectrumValue::Numeric(z) => gens.iter().all(|g| {
            let d = g.derivative();
            close(d.eval_complex(*z), Complex64::new(0.0, 0.0), abs_scale(&d, *z), tol)
        }),
    }
}

/// Coprime-degree pairs of algebra elements, cheapest first. Each degree
/// pair appears once with plain products and once with lower-degree terms
/// added, the latter placed after all plain pairs.
fn candidate_pairs<F: Scalar>(b: &SagbiBasis<F>) -> Vec<(Poly<F>, Poly<F>)> {
    let sg = b.semigroup();
    let top = sg.conductor() + b.degrees().last().copied().unwrap_or(1);
    let members: Vec<usize> = sg.members_up_to(top).into_iter().filter(|&d| d >= 2).collect();
    let mut degs = Vec::new();
    for (i, &d1) in members.iter().enumerate() {
        for &d2 in &members[i + 1..] {
            if d1.gcd(&d2) == 1 {
                degs.push((d1, d2));
            }
        }
    }
    degs.sort_by_key(|&(a, c)| (a * c, a));
    let el = |d: usize| b.product_for_degree(d).unwrap();
    let mut out: Vec<(Poly<F>, Poly<F>)> = degs.iter().map(|&(a, c)| (el(a), el(c))).collect();
    let ctx = b.ctx().clone();
    for &(a, c) in &degs {
        let lower: Vec<usize> = members.iter().copied().filter(|&d| d < a).collect();
        let mut p = el(a);
        let mut q = el(c);
        for (k, &d) in lower.iter().enumerate() {
            p = p.add(&el(d).scale(&F::from_i64(&ctx, k as i64 + 2)));
            q = q.add(&el(d).scale(&F::from_i64(&ctx, 2 * k as i64 + 3)));
        }
        out.push((p, q));
    }
    out
}

/// Classifies every root of `chi`; the error carries the first root that is
/// neither critical nor paired.
fn classify_roots<F: Scalar>(
    gens: &[Poly<F>],
    chi: &Poly<F>,
    mode: &RootMode<F>,
    tol: f64,
) -> Result<Vec<SpectrumPoint<F>>> {
    let roots = find_roots(chi, mode)?;
    let mut vals: Vec<(SpectrumValue<F>, usize)> =
        roots.exact_roots.into_iter().map(|(a, m)| (SpectrumValue::Exact(a), m)).collect();
    for r in roots.numeric_roots {
        match vals.iter_mut().find(|(v, _)| (v.complex() - r.value).norm() < tol) {
            Some(v) => v.1 += r.multiplicity,
            None => vals.push((SpectrumValue::Numeric(r.value), r.multiplicity)),
        }
    }
    let mut points: Vec<SpectrumPoint<F>> = vals
        .into_iter()
        .map(|(value, multiplicity)| SpectrumPoint { critical: all_critical(gens, &value, tol), value, partners: vec![], multiplicity })
        .collect();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if same_values(gens, &points[i].value, &points[j].value, tol).0 {
                points[i].partners.push(j);
                points[j].partners.push(i);
            }
        }
    }
    if let Some(p) = points.iter().find(|p| !p.critical && p.partners.is_empty()) {
        return Err(Error::UnpairedRoot(p.value.to_string()));
    }
    Ok(points)
}

/// Computes the spectrum of `a` from the gcd of characteristic polynomials of
/// coprime-degree pairs of its elements.
pub fn compute_spectrum<F: Scalar>(a: &Subalgebra<F>, mode: &RootMode<F>, tol: f64) -> Result<Spectrum<F>> {
    let b = a.sagbi()?;
    let ctx = b.ctx().clone();
    let gens = b.elements();
    if b.genus() == 0 {
        return Ok(Spectrum { points: vec![], chi: Poly::one(&ctx), tolerance: tol, field_label: None });
    }
    let pairs = candidate_pairs(b);
    if pairs.len() < 2 {
        let chi = char_poly_multi(gens)?;
        let points = classify_roots(gens, &chi, mode, tol)?;
        return Ok(Spectrum { points, chi, tolerance: tol, field_label: None });
    }
    let mut chi = char_poly_pair(&pairs[0].0, &pairs[0].1)?;
    let mut used = 1;
    let mut unchanged = 0;
    while used < pairs.len() && used < MAX_INITIAL_PAIRS && unchanged < 2 {
        let next = chi.gcd(&char_poly_pair(&pairs[used].0, &pairs[used].1)?)?;
        unchanged = if next == chi { unchanged + 1 } else { 0 };
        chi = next;
        used += 1;
    }
    loop {
        let outcome = if chi.is_constant() { Ok(vec![]) } else { classify_roots(gens, &chi, mode, tol) };
        match outcome {
            Ok(points) => return Ok(Spectrum { points, chi, tolerance: tol, field_label: None }),
            Err(Error::UnpairedRoot(r)) if used < pairs.len() => {
                log::debug!("spectrum: root {} unpaired after {} pairs, adding more", r, used);
                chi = chi.gcd(&char_poly_pair(&pairs[used].0, &pairs[used].1)?)?;
                used += 1;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Candidate exact roots in `field`: rationals are found separately, so these
/// are the signed powers of the generator.
pub fn field_candidates(field: &Arc<NumberField>) -> Vec<FieldElem> {
    let t = FieldElem::generator(field);
    let n = 4 * field.degree().max(1) + 4;
    let mut out = Vec::new();
    let mut pw = FieldElem::one(field);
    for _ in 0..n {
        for c in [pw.clone(), pw.negated()] {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        pw = pw.times(&t);
    }
    out
}

/// Spectrum over the rationals with exact rational roots.
pub fn rational_spectrum(a: &Subalgebra<Rat>) -> Result<Spectrum<Rat>> {
    compute_spectrum(a, &RootMode::ExactRational, PAIRING_TOL)
}

/// Spectrum over a number field with roots tried among its signed generator
/// powers and the rationals.
pub fn field_spectrum(a: &Subalgebra<FieldElem>, field: &Arc<NumberField>) -> Result<Spectrum<FieldElem>> {
    let mut cands = field_candidates(field);
    let gens = a.sagbi()?.elements().to_vec();
    let chi_rat = gens.iter().filter_map(|g| g.to_rational()).count() == gens.len();
    if chi_rat {
        let pairs = candidate_pairs(a.sagbi()?);
        if let Some((p, q)) = pairs.first() {
            if let (Some(p), Some(q)) = (p.to_rational(), q.to_rational()) {
                if let Ok(c) = char_poly_pair(&p, &q) {
                    for r in crate::roots::rational_roots(&c) {
                        cands.push(FieldElem::from_rat(field, &r));
                    }
                }
            }
        }
    }
    let mut s = compute_spectrum(a, &RootMode::Field(cands), PAIRING_TOL)?;
    s.field_label = Some(field.label().to_string());
    Ok(s)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cluster {
    /// Indices into the spectrum.
    pub members: Vec<usize>,
    /// Largest relative value deviation observed inside the cluster.
    pub max_deviation: f64,
}

/// Partitions the spectrum into classes of points that every element
/// identifies; transitivity is checked inside each class.
pub fn compute_clusters<F: Scalar>(a: &Subalgebra<F>, spectrum: &Spectrum<F>) -> Result<Vec<Cluster>> {
    let gens = a.sagbi()?.elements();
    let n = spectrum.points.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for (i, pt) in spectrum.points.iter().enumerate() {
        for &j in &pt.partners {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out = Vec::new();
    for (_, members) in groups {
        let mut worst: f64 = 0.0;
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                let (ok, dev) = same_values(gens, &spectrum.points[i].value, &spectrum.points[j].value, spectrum.tolerance);
                if !ok {
                    return Err(Error::Invalid(format!(
                        "cluster relation not transitive between {} and {}",
                        spectrum.points[i].value, spectrum.points[j].value
                    )));
                }
                worst = worst.max(dev);
            }
        }
        out.push(Cluster { members, max_deviation: worst });
    }
    out.sort_by_key(|c| c.members[0]);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SizeReport {
    pub size: usize,
    pub codimension: usize,
    pub bound: usize,
    /// At `size == bound`: whether the algebra is cut out by difference
    /// conditions alone. `None` when not applicable or the spectrum is
    /// inexact.
    pub differences_only: Option<bool>,
}

/// Checks `|Sp(A)| <= 2n`.
pub fn spectrum_size_check<F: Scalar>(a: &Subalgebra<F>, spectrum: &Spectrum<F>) -> Result<SizeReport> {
    let n = a.codimension()?;
    let size = spectrum.len();
    let bound = 2 * n;
    if size > bound {
        return Err(Error::BoundViolated { size, bound });
    }
    let mut differences_only = None;
    if size == bound && n > 0 {
        if let Some(pts) = spectrum.exact_points() {
            let conds = conditions_from_subalgebra(a, &pts)?;
            differences_only = Some(conds.iter().all(|c| matches!(c, LinearFunctional::Difference { .. })));
        }
    }
    Ok(SizeReport { size, codimension: n, bound, differences_only })
}

/// One pair `alpha, beta = 2 alpha_0 - alpha` in the degree-two description,
/// with `mu = (alpha - alpha_0)^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Deg2Pair<F: Scalar> {
    pub mu: SpectrumValue<F>,
    pub alpha: SpectrumValue<F>,
    pub beta: SpectrumValue<F>,
    pub m: usize,
}

/// Algebra containing `(x - alpha_0)^2`, generated by it and
/// `(x - alpha_0)^(2 m_0 + 1) prod ((x - alpha_0)^2 - mu_i)^(m_i + 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Deg2Description<F: Scalar> {
    pub alpha0: F,
    pub m0: usize,
    pub pairs: Vec<Deg2Pair<F>>,
}

impl<F: Scalar> Deg2Description<F> {
    /// Spectrum size `2k` or `2k + 1`.
    pub fn spectrum_size(&self) -> usize {
        2 * self.pairs.len() + usize::from(self.m0 > 0)
    }

    /// The conditions of the description, when every `alpha_i` is exact.
    pub fn conditions(&self) -> Result<Vec<LinearFunctional<F>>> {
        let ctx = self.alpha0.ctx();
        let one = F::one(&ctx);
        let mut out = Vec::new();
        for p in &self.pairs {
            let (Some(a), Some(b)) = (p.alpha.exact(), p.beta.exact()) else {
                return Err(Error::SpectrumNotExact);
            };
            for j in 0..=p.m {
                if j == 0 {
                    out.push(LinearFunctional::diff(a.clone(), b.clone())?);
                } else {
                    let sign = if j % 2 == 0 { one.negated() } else { one.clone() };
                    out.push(LinearFunctional::deriv(vec![(j, a.clone(), one.clone()), (j, b.clone(), sign)])?);
                }
            }
        }
        for j in (1..2 * self.m0).step_by(2) {
            out.push(LinearFunctional::derivative_at(j, self.alpha0.clone())?);
        }
        Ok(out)
    }
}

/// Builds the two generators from `alpha_0`, `m_0` and pairs `(mu_i, m_i)`.
pub fn deg2_generators<F: Scalar>(alpha0: &F, m0: usize, pairs: &[(F, usize)]) -> [Poly<F>; 2] {
    let s = Poly::x_minus(alpha0);
    let s2 = s.mul(&s);
    let mut p = s.pow(2 * m0 as u32 + 1);
    for (mu, m) in pairs {
        p = p.mul(&s2.sub(&Poly::constant(mu.clone())).pow(*m as u32 + 1));
    }
    [s2, p]
}

/// Describes an algebra containing a degree-two element.
pub fn deg2_description<F: Scalar>(a: &Subalgebra<F>, mode: &RootMode<F>) -> Result<Deg2Description<F>> {
    let b = a.sagbi()?;
    let q = b.element_of_degree(2).ok_or(Error::NoDegreeTwoElement)?;
    if b.genus() == 0 {
        return Err(Error::Invalid("the whole polynomial ring has no such description".into()));
    }
    let ctx = b.ctx().clone();
    let alpha0 = q.coeff(1).divide(&F::from_i64(&ctx, -2))?;
    let shifted: Vec<Poly<F>> = b.elements().iter().map(|e| e.shift(&alpha0)).collect();
    let sb = sagbi_complete(&shifted)?;
    let h = sb
        .elements()
        .iter()
        .find(|e| e.deg() % 2 == 1)
        .ok_or_else(|| Error::Invalid("no odd-degree element".into()))?;
    let l = (h.deg() - 1) / 2;
    let a_coeffs: Vec<F> = (0..=l).map(|k| h.coeff(2 * k + 1)).collect();
    let a_poly = Poly::new(a_coeffs, ctx.clone()).monic();
    let mut m0 = 0;
    let mut rest = a_poly.clone();
    while !rest.is_constant() && rest.coeff(0).is_zero() {
        rest = rest.div_exact(&Poly::x(&ctx))?;
        m0 += 1;
    }
    let mut pairs = Vec::new();
    if !rest.is_constant() {
        let roots = find_roots(&rest, mode)?;
        for (mu, mult) in roots.exact_roots {
            let (alpha, beta) = match exact_sqrt(&mu) {
                Some(r) => (SpectrumValue::Exact(alpha0.plus(&r)), SpectrumValue::Exact(alpha0.minus(&r))),
                None => {
                    let r = mu.to_complex().sqrt();
                    let z0 = alpha0.to_complex();
                    (SpectrumValue::Numeric(z0 + r), SpectrumValue::Numeric(z0 - r))
                }
            };
            pairs.push(Deg2Pair { mu: SpectrumValue::Exact(mu), alpha, beta, m: mult - 1 });
        }
        for nr in roots.numeric_roots {
            let r = nr.value.sqrt();
            let z0 = alpha0.to_complex();
            pairs.push(Deg2Pair {
                mu: SpectrumValue::Numeric(nr.value),
                alpha: SpectrumValue::Numeric(z0 + r),
                beta: SpectrumValue::Numeric(z0 - r),
                m: nr.multiplicity - 1,
            });
        }
    }
    Ok(Deg2Description { alpha0, m0, pairs })
}

/// Square root in the coefficient field when `mu` is a rational square.
fn exact_sqrt<F: Scalar>(mu: &F) -> Option<F> {
    let r = mu.to_rat()?;
    if r < Rat::from_integer(0.into()) {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(F::from_rat(&mu.ctx(), &Rat::new(n, d)))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(cs)
    }

    fn alg(gens: &[&[i64]]) -> Subalgebra<Rat> {
        Subalgebra::from_generators(gens.iter().map(|g| q(g)).collect())
    }

    #[test]
    fn codim_one_pair() {
        let a = alg(&[&[0, -1, 0, 1], &[0, 0, 1]]);
        let s = rational_spectrum(&a).unwrap();
        let mut pts = s.exact_points().unwrap();
        pts.sort();
        assert_eq!(pts, vec![rat(-1), rat(1)]);
        assert!(s.points.iter().all(|p| p.is_paired() && !p.critical));
        assert_eq!(compute_clusters(&a, &s).unwrap().len(), 1);
    }

    #[test]
    fn cusp_is_critical() {
        let a = alg(&[&[0, 0, 1], &[0, 0, 0, 1]]);
        let s = rational_spectrum(&a).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.points[0].critical);
        let r = spectrum_size_check(&a, &s).unwrap();
        assert_eq!((r.size, r.bound), (1, 2));
    }

    #[test]
    fn eighth_roots_example() {
        let a = alg(&[&[0, 0, 0, 0, 1], &[0, -1, 0, 1]]);
        let s = rational_spectrum(&a).unwrap();
        assert_eq!(s.len(), 6);
        let cl = compute_clusters(&a, &s).unwrap();
        assert_eq!(cl.iter().map(|c| c.members.len()).collect::<Vec<_>>(), vec![2, 2, 2]);
        let k = NumberField::cyclotomic(8);
        let fa = a.lift(&k);
        let fs = field_spectrum(&fa, &k).unwrap();
        assert!(fs.is_exact());
        let r = spectrum_size_check(&fa, &fs).unwrap();
        assert_eq!(r.differences_only, Some(true));
    }

    #[test]
    fn twelfth_roots_example() {
        let a = alg(&[&[0, 0, -1, 0, 1], &[0, 0, 0, 1]]);
        let s = rational_spectrum(&a).unwrap();
        assert_eq!(s.len(), 5);
        let crit: Vec<_> = s.points.iter().filter(|p| p.critical).collect();
        assert_eq!(crit.len(), 1);
        assert_eq!(crit[0].value, SpectrumValue::Exact(rat(0)));
        let cl = compute_clusters(&a, &s).unwrap();
        let mut sizes: Vec<usize> = cl.iter().map(|c| c.members.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 2]);
    }

    #[test]
    fn degree_two_descriptions() {
        let d = deg2_description(&alg(&[&[0, 0, 1], &[0, -1, 0, 1]]), &RootMode::ExactRational).unwrap();
        assert_eq!(d.alpha0, rat(0));
        assert_eq!(d.m0, 0);
        assert_eq!(d.pairs.len(), 1);
        assert_eq!(d.pairs[0].m, 0);
        assert_eq!(d.pairs[0].alpha, SpectrumValue::Exact(rat(1)));

        let d = deg2_description(&alg(&[&[0, 0, 1], &[0, 0, 0, 0, 0, 1]]), &RootMode::ExactRational).unwrap();
        assert_eq!((d.m0, d.pairs.len()), (2, 0));
        let c = d.conditions().unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[1], LinearFunctional::derivative_at(3, rat(0)).unwrap());

        let d = deg2_description(&alg(&[&[0, 0, 1], &[0, 0, 0, -1, 0, 1]]), &RootMode::ExactRational).unwrap();
        assert_eq!((d.m0, d.pairs.len(), d.pairs[0].m), (1, 1, 0));
        assert_eq!(d.spectrum_size(), 3);
    }

    #[test]
    fn shifted_degree_two_round_trip() {
        let alpha0 = rat(3);
        let [s2, p] = deg2_generators(&alpha0, 1, &[(rat(4), 1)]);
        let a = Subalgebra::from_generators(vec![s2.add(&q(&[5])), p]);
        let d = deg2_description(&a, &RootMode::ExactRational).unwrap();
        assert_eq!(d.alpha0, alpha0);
        assert_eq!((d.m0, d.pairs[0].m), (1, 1));
        let k = crate::conditions::kernel_subalgebra(&d.conditions().unwrap()).unwrap();
        assert!(k.sagbi().unwrap().same_algebra(a.sagbi().unwrap()));
    }

    #[test]
    fn no_degree_two() {
        let a = alg(&[&[0, 0, 0, 1], &[0, 0, 0, 0, 1]]);
        assert_eq!(deg2_description(&a, &RootMode::ExactRational), Err(Error::NoDegreeTwoElement));
    }
}
