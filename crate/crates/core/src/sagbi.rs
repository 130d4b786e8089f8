//! Subduction, SAGBI completion, extension by one linear condition, and
//! membership.

use crate::arith::linalg::PolySpan;
use crate::arith::{Poly, Scalar};
use crate::conditions::{LinearFunctional, Subalgebra};
use crate::error::{Error, Result};
use crate::semigroup::DegreeSemigroup;
use num_integer::Integer;
use std::collections::BTreeMap;
use std::sync::RwLock;

/// One subduction step: `coeff * prod(basis elements of degrees factors)`
/// was subtracted to cancel the leading term of degree `degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubductionStep<F: Scalar> {
    pub degree: usize,
    pub coeff: F,
    pub factors: Vec<usize>,
}

/// Monic elements of distinct degrees whose degrees generate the degree
/// semigroup of the algebra they generate.
#[derive(Debug)]
pub struct SagbiBasis<F: Scalar> {
    elements: Vec<Poly<F>>,
    semigroup: DegreeSemigroup,
    normalization: Option<F>,
    products: RwLock<BTreeMap<usize, Poly<F>>>,
}

impl<F: Scalar> Clone for SagbiBasis<F> {
    fn clone(&self) -> Self {
        SagbiBasis::from_parts(self.elements.clone(), self.semigroup.clone(), self.normalization.clone())
    }
}

impl<F: Scalar> PartialEq for SagbiBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.normalization == other.normalization
    }
}

impl<F: Scalar> SagbiBasis<F> {
    fn from_parts(elements: Vec<Poly<F>>, semigroup: DegreeSemigroup, normalization: Option<F>) -> Self {
        SagbiBasis { elements, semigroup, normalization, products: RwLock::new(BTreeMap::new()) }
    }

    /// Wraps elements already known to form a SAGBI basis. Only the degrees
    /// are checked.
    pub fn from_elements(elements: Vec<Poly<F>>) -> Result<Self> {
        let mut els: Vec<Poly<F>> = elements.into_iter().filter(|e| e.deg() > 0).map(|e| e.monic()).collect();
        els.sort_by_key(|e| e.deg());
        els.dedup_by_key(|e| e.deg());
        let sg = DegreeSemigroup::from_degrees(&els.iter().map(|e| e.deg()).collect::<Vec<_>>())?;
        els.retain(|e| sg.generators().contains(&e.deg()));
        Ok(SagbiBasis::from_parts(els, sg, None))
    }

    pub fn elements(&self) -> &[Poly<F>] {
        &self.elements
    }

    pub fn semigroup(&self) -> &DegreeSemigroup {
        &self.semigroup
    }

    pub fn genus(&self) -> usize {
        self.semigroup.genus()
    }

    pub fn normalization(&self) -> Option<&F> {
        self.normalization.as_ref()
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.elements[0].ctx()
    }

    /// Type tuple: the minimal generators of the degree semigroup.
    pub fn degrees(&self) -> Vec<usize> {
        self.elements.iter().map(|e| e.deg()).collect()
    }

    pub fn element_of_degree(&self, d: usize) -> Option<&Poly<F>> {
        self.elements.iter().find(|e| e.deg() == d)
    }

    /// Elements shifted to vanish at `alpha`.
    pub fn normalized_at(&self, alpha: &F) -> Self {
        let els = self.elements.iter().map(|e| e.sub(&Poly::constant(e.eval(alpha)))).collect();
        SagbiBasis::from_parts(els, self.semigroup.clone(), Some(alpha.clone()))
    }

    /// The monic product of basis elements with leading degree `d`, following
    /// the semigroup's greedy representation.
    pub fn product_for_degree(&self, d: usize) -> Option<Poly<F>> {
        if !self.semigroup.contains(d) {
            return None;
        }
        if d == 0 {
            return Some(Poly::one(self.ctx()));
        }
        if let Some(p) = self.products.read().unwrap().get(&d) {
            return Some(p.clone());
        }
        let rep = self.semigroup.represent_degree(d)?;
        let g = rep[0];
        let rest = self.product_for_degree(d - g)?;
        let p = self.element_of_degree(g)?.mul(&rest);
        self.products.write().unwrap().insert(d, p.clone());
        Some(p)
    }

    /// A basis of the algebra's elements of degree at most `bound`, one per
    /// semigroup member.
    pub fn linear_basis(&self, bound: usize) -> Vec<Poly<F>> {
        self.semigroup
            .members_up_to(bound)
            .into_iter()
            .map(|d| self.product_for_degree(d).expect("member"))
            .collect()
    }

    /// Cancels leading terms by products of basis elements while the leading
    /// degree lies in the semigroup. Stops at a gap degree or a constant.
    pub fn subduce(&self, f: &Poly<F>) -> (Poly<F>, Vec<SubductionStep<F>>) {
        let mut r = f.clone();
        let mut steps = Vec::new();
        while let Some(d) = r.degree() {
            if d == 0 || !self.semigroup.contains(d) {
                break;
            }
            let prod = self.product_for_degree(d).expect("member degree");
            let c = r.lc().unwrap().clone();
            r = r.sub(&prod.scale(&c));
            steps.push(SubductionStep { degree: d, coeff: c, factors: self.semigroup.represent_degree(d).unwrap() });
        }
        (r, steps)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.subduce(f).0.is_constant()
    }

    /// The fully reduced echelon rows of the algebra at the generator
    /// degrees. Any two SAGBI bases of one algebra give the same list.
    pub fn canonical_elements(&self) -> Vec<Poly<F>> {
        let top = self.degrees().last().copied().unwrap_or(0);
        let mut span = PolySpan::new(self.ctx());
        for p in self.linear_basis(top) {
            span.insert(&p);
        }
        let degs = self.degrees();
        span.reduced_rows().into_iter().filter(|r| degs.contains(&r.deg())).collect()
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        self.degrees() == other.degrees() && self.canonical_elements() == other.canonical_elements()
    }
}

/// Elements of a partial basis whose degrees need not have gcd one.
struct Working<F: Scalar> {
    elements: Vec<Poly<F>>,
}

impl<F: Scalar> Working<F> {
    fn degrees(&self) -> Vec<usize> {
        self.elements.iter().map(|e| e.deg()).collect()
    }

    /// Greedy representation of `d` over the element degrees, or `None`.
    fn represent(&self, d: usize) -> Option<Vec<usize>> {
        let degs = self.degrees();
        let mut reach = vec![false; d + 1];
        reach[0] = true;
        for n in 1..=d {
            reach[n] = degs.iter().any(|&g| g <= n && reach[n - g]);
        }
        if !reach[d] {
            return None;
        }
        let mut out = Vec::new();
        let mut rest = d;
        while rest > 0 {
            let i = (0..degs.len()).rev().find(|&i| degs[i] <= rest && reach[rest - degs[i]]).unwrap();
            out.push(i);
            rest -= degs[i];
        }
        Some(out)
    }

    fn product(&self, idx: &[usize], ctx: &F::Ctx) -> Poly<F> {
        idx.iter().fold(Poly::one(ctx), |acc, &i| acc.mul(&self.elements[i]))
    }

    fn subduce(&self, f: &Poly<F>, ctx: &F::Ctx) -> Poly<F> {
        let mut r = f.clone();
        while let Some(d) = r.degree() {
            if d == 0 {
                break;
            }
            let Some(rep) = self.represent(d) else { break };
            let prod = self.product(&rep, ctx);
            let c = r.lc().unwrap().clone();
            r = r.sub(&prod.scale(&c));
        }
        r
    }

    /// Replaces every element whose degree is generated by the others with
    /// its subduction remainder, until the set is reduced.
    fn autoreduce(&mut self, ctx: &F::Ctx) {
        loop {
            self.elements.sort_by_key(|e| e.deg());
            let mut changed = false;
            for i in 0..self.elements.len() {
                let e = self.elements.remove(i);
                let r = self.subduce(&e, ctx);
                if r.deg() == e.deg() {
                    self.elements.insert(i, e);
                    continue;
                }
                changed = true;
                if r.deg() > 0 {
                    self.elements.push(r.monic());
                }
                break;
            }
            if !changed {
                return;
            }
        }
    }
}

fn all_factorizations(degs: &[usize], d: usize) -> Vec<Vec<usize>> {
    fn rec(degs: &[usize], i: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == degs.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 0;
        while k * degs[i] <= rest {
            for _ in 0..k {
                cur.push(i);
            }
            rec(degs, i + 1, rest - k * degs[i], cur, out);
            for _ in 0..k {
                cur.pop();
            }
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(degs, 0, d, &mut vec![], &mut out);
    out
}

/// Completes `gens` to a minimal SAGBI basis of the algebra they generate.
///
/// Degree coincidences between distinct products are subduced; nonconstant
/// remainders join the basis and the search restarts.
pub fn sagbi_complete<F: Scalar>(gens: &[Poly<F>]) -> Result<SagbiBasis<F>> {
    let nonconst: Vec<Poly<F>> = gens.iter().filter(|g| g.deg() > 0).map(|g| g.monic()).collect();
    if nonconst.is_empty() {
        return Err(Error::InfiniteCodimension(0));
    }
    let ctx = nonconst[0].ctx().clone();
    let mut w = Working { elements: nonconst };
    'outer: loop {
        w.autoreduce(&ctx);
        let degs = w.degrees();
        let g = degs.iter().fold(0usize, |a, &b| a.gcd(&b));
        let maxd = *degs.iter().max().unwrap();
        let bound = if g == 1 {
            DegreeSemigroup::from_degrees(&degs)?.conductor() + 2 * maxd
        } else {
            degs[0] * maxd + maxd
        };
        for d in 2..=bound {
            let Some(base) = w.represent(d) else { continue };
            let facts = all_factorizations(&degs, d);
            if facts.len() < 2 {
                continue;
            }
            let p0 = w.product(&base, &ctx);
            let mut sorted_base = base.clone();
            sorted_base.sort_unstable();
            for f in facts {
                if f == sorted_base {
                    continue;
                }
                let diff = w.product(&f, &ctx).sub(&p0);
                let r = w.subduce(&diff, &ctx);
                if r.deg() > 0 {
                    log::debug!("completion: degree {} collision adds {}", d, r);
                    w.elements.push(r.monic());
                    continue 'outer;
                }
            }
        }
        if g != 1 {
            return Err(Error::InfiniteCodimension(g as u64));
        }
        break;
    }
    let degs = w.degrees();
    let sg = DegreeSemigroup::from_degrees(&degs)?;
    w.elements.sort_by_key(|e| e.deg());
    Ok(SagbiBasis::from_parts(w.elements, sg, None))
}

/// SAGBI basis of `ker L` inside the algebra with basis `b`.
///
/// With `g` the lowest-degree basis element not killed by `L`, scaled so that
/// `L(g) = 1`, the candidates are the other elements corrected by multiples
/// of `g`, the products `g g_j - L(g g_j) g`, and `g^k - L(g^k) g` for
/// `k = 2, 3`. The candidates are completed and minimalized.
pub fn sagbi_extend<F: Scalar>(b: &SagbiBasis<F>, l: &LinearFunctional<F>, alpha: Option<&F>) -> Result<SagbiBasis<F>> {
    let base = match alpha {
        Some(a) => b.normalized_at(a),
        None => b.clone(),
    };
    let els = base.elements();
    let vals: Vec<F> = els.iter().map(|e| l.apply(e)).collect::<Result<_>>()?;
    let i = (0..els.len()).find(|&i| !vals[i].is_zero()).ok_or(Error::ConditionVanishesOnB)?;
    let g = els[i].scale(&vals[i].inverse()?);
    let corrected = |f: &Poly<F>| -> Result<Poly<F>> { Ok(f.sub(&g.scale(&l.apply(f)?))) };
    let mut cands = Vec::new();
    for (j, e) in els.iter().enumerate() {
        if j != i {
            cands.push(corrected(e)?);
        }
        cands.push(corrected(&g.mul(e))?);
    }
    cands.push(corrected(&g.pow(2))?);
    cands.push(corrected(&g.pow(3))?);
    let out = sagbi_complete(&cands)?;
    if out.genus() != b.genus() + 1 {
        return Err(Error::Invalid(format!(
            "extension has genus {} instead of {}",
            out.genus(),
            b.genus() + 1
        )));
    }
    Ok(out)
}

/// Membership by subduction, with the subduction trace as certificate.
pub fn membership<F: Scalar>(f: &Poly<F>, a: &Subalgebra<F>) -> Result<(bool, Vec<SubductionStep<F>>)> {
    let (r, steps) = a.sagbi()?.subduce(f);
    Ok((r.is_constant(), steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rat};

    fn q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(cs)
    }

    fn x3mx_x2() -> SagbiBasis<Rat> {
        sagbi_complete(&[q(&[0, -1, 0, 1]), q(&[0, 0, 1])]).unwrap()
    }

    #[test]
    fn subduction_examples() {
        let b = x3mx_x2();
        let (r, steps) = b.subduce(&q(&[0, 0, 0, 1, 0, 1]));
        assert_eq!(r, q(&[0, 2]));
        assert_eq!(steps.len(), 2);
        let (r, _) = b.subduce(&q(&[0, -1, 0, 0, 0, 0, 0, 1]));
        assert!(r.is_zero());
        let m = sagbi_complete(&[q(&[0, 0, 0, 1]), q(&[0, 0, 0, 0, 1])]).unwrap();
        assert_eq!(m.subduce(&q(&[0, 1])).0, q(&[0, 1]));
    }

    #[test]
    fn completion_examples() {
        let b = x3mx_x2();
        assert_eq!(b.elements(), &[q(&[0, 0, 1]), q(&[0, -1, 0, 1])]);
        assert_eq!(b.genus(), 1);
        let c = sagbi_complete(&[q(&[0, 0, 1]), q(&[0, 0, 0, 0, 1, 1])]).unwrap();
        assert_eq!(c.genus(), 2);
        assert_eq!(c.degrees(), vec![2, 5]);
        let m = sagbi_complete(&[q(&[0, 0, 0, 1]), q(&[0, 0, 0, 0, 1]), q(&[0, 0, 0, 0, 0, 1])]).unwrap();
        assert_eq!(m.degrees(), vec![3, 4, 5]);
        assert_eq!(m.genus(), 2);
    }

    #[test]
    fn whole_ring_detected() {
        let c = sagbi_complete(&[q(&[0, -1, 0, 1]), q(&[0, 0, 0, 0, 1]), q(&[-1, 0, 0, 0, 0, 1])]).unwrap();
        assert_eq!(c.genus(), 0);
    }

    #[test]
    fn infinite_codimension() {
        assert!(matches!(sagbi_complete(&[q(&[0, 0, 1]), q(&[0, 0, 0, 0, 1])]), Err(Error::InfiniteCodimension(2))));
        let c = sagbi_complete(&[q(&[0, 0, 0, 0, 1]), q(&[0, 1, 0, 0, 0, 0, 1])]).unwrap();
        assert!(c.genus() < 10);
    }

    #[test]
    fn extend_by_derivative() {
        let k = sagbi_complete(&[q(&[0, 1])]).unwrap();
        let alpha = rat(2);
        let l = LinearFunctional::deriv(vec![(1, alpha.clone(), rat(1))]).unwrap();
        let a = sagbi_extend(&k, &l, Some(&alpha)).unwrap();
        assert_eq!(a.degrees(), vec![2, 3]);
        assert!(a.contains(&q(&[-2, 1]).pow(2)));
        assert!(a.contains(&q(&[-2, 1]).pow(3)));
        assert!(!a.contains(&q(&[0, 1])));
    }

    #[test]
    fn extend_by_difference() {
        let k = sagbi_complete(&[q(&[0, 1])]).unwrap();
        let l = LinearFunctional::diff(rat(1), rat(-1)).unwrap();
        let a = sagbi_extend(&k, &l, Some(&rat(1))).unwrap();
        assert_eq!(a.degrees(), vec![2, 3]);
        assert!(a.contains(&q(&[-1, 0, 1])));
        assert!(a.contains(&q(&[-1, 1]).pow(2).mul(&q(&[1, 1]))));
    }

    #[test]
    fn extend_cusp_by_second_derivative() {
        let b = sagbi_complete(&[q(&[0, 0, 1]), q(&[0, 0, 0, 1])]).unwrap();
        let l = LinearFunctional::deriv(vec![(2, rat(0), rat(1))]).unwrap();
        let a = sagbi_extend(&b, &l, Some(&rat(0))).unwrap();
        assert_eq!(a.degrees(), vec![3, 4, 5]);
    }
}
