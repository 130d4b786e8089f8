//! Linear conditions on polynomials and the subalgebras they cut out.
//!
//! A condition is either `f(a) - f(b)` or a combination
//! `sum c_ij f^(i)(a_j)`. A list of conditions defines the subalgebra of
//! polynomials on which all of them vanish, provided that set is closed under
//! multiplication.

use crate::arith::linalg::{nullspace, rank, rref, PolySpan};
use crate::arith::{FieldElem, NumberField, Poly, Rat, Scalar};
use crate::error::{Error, Result};
use crate::sagbi::{sagbi_complete, SagbiBasis};
use serde_json::{json, Value};
use std::fmt;
use std::sync::{Arc, OnceLock};

#[derive(Clone, Debug, PartialEq)]
pub struct DerivTerm<F: Scalar> {
    pub order: usize,
    pub point: F,
    pub coeff: F,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LinearFunctional<F: Scalar> {
    /// `f -> f(alpha) - f(beta)`.
    Difference { alpha: F, beta: F },
    /// `f -> sum coeff * f^(order)(point)`.
    DerivCombo { terms: Vec<DerivTerm<F>> },
}

fn falling(k: usize, i: usize) -> i64 {
    (0..i).map(|j| (k - j) as i64).product()
}

impl<F: Scalar> LinearFunctional<F> {
    pub fn diff(alpha: F, beta: F) -> Result<Self> {
        if alpha == beta {
            return Err(Error::Invalid("difference condition needs two distinct points".into()));
        }
        Ok(LinearFunctional::Difference { alpha, beta })
    }

    /// Builds a combination from `(order, point, coeff)` triples, merging
    /// repeated `(order, point)` pairs and dropping zero coefficients.
    pub fn deriv(raw: Vec<(usize, F, F)>) -> Result<Self> {
        let mut terms: Vec<DerivTerm<F>> = Vec::new();
        for (order, point, coeff) in raw {
            match terms.iter_mut().find(|t| t.order == order && t.point == point) {
                Some(t) => t.coeff = t.coeff.plus(&coeff),
                None => terms.push(DerivTerm { order, point, coeff }),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        if terms.is_empty() {
            return Err(Error::Invalid("zero functional".into()));
        }
        let ctx = terms[0].coeff.ctx();
        let s0 = terms.iter().filter(|t| t.order == 0).fold(F::zero(&ctx), |a, t| a.plus(&t.coeff));
        if !s0.is_zero() {
            return Err(Error::Invalid("condition does not annihilate constants".into()));
        }
        Ok(LinearFunctional::DerivCombo { terms })
    }

    /// `f -> f^(order)(point)`.
    pub fn derivative_at(order: usize, point: F) -> Result<Self> {
        let one = F::one(&point.ctx());
        LinearFunctional::deriv(vec![(order, point, one)])
    }

    pub fn ctx(&self) -> F::Ctx {
        match self {
            LinearFunctional::Difference { alpha, .. } => alpha.ctx(),
            LinearFunctional::DerivCombo { terms } => terms[0].point.ctx(),
        }
    }

    /// Distinct points the functional looks at.
    pub fn points(&self) -> Vec<F> {
        let mut out: Vec<F> = Vec::new();
        let raw: Vec<F> = match self {
            LinearFunctional::Difference { alpha, beta } => vec![alpha.clone(), beta.clone()],
            LinearFunctional::DerivCombo { terms } => terms.iter().map(|t| t.point.clone()).collect(),
        };
        for p in raw {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    pub fn max_order(&self) -> usize {
        match self {
            LinearFunctional::Difference { .. } => 0,
            LinearFunctional::DerivCombo { terms } => terms.iter().map(|t| t.order).max().unwrap_or(0),
        }
    }

    /// Value on `f`.
    pub fn apply(&self, f: &Poly<F>) -> Result<F> {
        let ctx = self.ctx();
        if !f.is_zero() && *f.ctx() != ctx {
            return Err(Error::FieldMismatch);
        }
        Ok(match self {
            LinearFunctional::Difference { alpha, beta } => f.eval(alpha).minus(&f.eval(beta)),
            LinearFunctional::DerivCombo { terms } => {
                let mut acc = F::zero(&ctx);
                let mut ders = vec![f.clone()];
                for t in terms {
                    while ders.len() <= t.order {
                        let d = ders.last().unwrap().derivative();
                        ders.push(d);
                    }
                    acc = acc.plus(&t.coeff.times(&ders[t.order].eval(&t.point)));
                }
                acc
            }
        })
    }

    /// Values on the monomials `x^0..x^bound`.
    pub fn monomial_row(&self, bound: usize) -> Vec<F> {
        let ctx = self.ctx();
        let mut row = vec![F::zero(&ctx); bound + 1];
        let mut add = |order: usize, point: &F, coeff: &F| {
            let mut pw = F::one(&ctx);
            for k in order..=bound {
                let v = coeff.times(&pw).times(&F::from_i64(&ctx, falling(k, order)));
                row[k] = row[k].plus(&v);
                pw = pw.times(point);
            }
        };
        match self {
            LinearFunctional::Difference { alpha, beta } => {
                add(0, alpha, &F::one(&ctx));
                add(0, beta, &F::one(&ctx).negated());
            }
            LinearFunctional::DerivCombo { terms } => {
                for t in terms {
                    add(t.order, &t.point, &t.coeff);
                }
            }
        }
        row
    }

    pub fn to_json(&self) -> Value {
        match self {
            LinearFunctional::Difference { alpha, beta } => {
                json!({"kind": "diff", "alpha": alpha.to_string(), "beta": beta.to_string()})
            }
            LinearFunctional::DerivCombo { terms } => json!({
                "kind": "deriv",
                "terms": terms.iter().map(|t| json!({
                    "order": t.order, "point": t.point.to_string(), "coeff": t.coeff.to_string()
                })).collect::<Vec<_>>()
            }),
        }
    }

    /// Reads the JSON form, parsing scalars with `parse`.
    pub fn from_json(v: &Value, parse: &dyn Fn(&str) -> Result<F>) -> Result<Self> {
        let bad = |m: &str| Error::Invalid(format!("condition JSON: {}", m));
        let scalar = |v: &Value| -> Result<F> {
            match v {
                Value::String(s) => parse(s),
                Value::Number(n) => parse(&n.to_string()),
                _ => Err(bad("scalar must be a string or number")),
            }
        };
        match v.get("kind").and_then(|k| k.as_str()) {
            Some("diff") => LinearFunctional::diff(
                scalar(v.get("alpha").ok_or_else(|| bad("missing alpha"))?)?,
                scalar(v.get("beta").ok_or_else(|| bad("missing beta"))?)?,
            ),
            Some("deriv") => {
                let terms = v.get("terms").and_then(|t| t.as_array()).ok_or_else(|| bad("missing terms"))?;
                let mut raw = Vec::new();
                for t in terms {
                    let order = t.get("order").and_then(|o| o.as_u64()).ok_or_else(|| bad("missing order"))?;
                    let point = scalar(t.get("point").ok_or_else(|| bad("missing point"))?)?;
                    let coeff = match t.get("coeff") {
                        Some(c) => scalar(c)?,
                        None => F::one(&point.ctx()),
                    };
                    raw.push((order as usize, point, coeff));
                }
                LinearFunctional::deriv(raw)
            }
            _ => Err(bad("kind must be \"diff\" or \"deriv\"")),
        }
    }
}

fn order_symbol(i: usize) -> String {
    match i {
        0 => "f".into(),
        1 => "f'".into(),
        2 => "f''".into(),
        3 => "f'''".into(),
        _ => format!("f^({})", i),
    }
}

impl<F: Scalar> fmt::Display for LinearFunctional<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearFunctional::Difference { alpha, beta } => write!(f, "f({}) - f({})", alpha, beta),
            LinearFunctional::DerivCombo { terms } => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|t| {
                        let head = format!("{}({})", order_symbol(t.order), t.point);
                        if t.coeff.is_one() {
                            head
                        } else {
                            format!("{}*{}", t.coeff.atom(), head)
                        }
                    })
                    .collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

/// A subalgebra of `K[x]` given by generators, conditions or both, with a
/// lazily computed SAGBI basis.
#[derive(Debug)]
pub struct Subalgebra<F: Scalar> {
    generators: Vec<Poly<F>>,
    conditions: Option<Vec<LinearFunctional<F>>>,
    sagbi: OnceLock<Result<SagbiBasis<F>>>,
}

impl<F: Scalar> Clone for Subalgebra<F> {
    fn clone(&self) -> Self {
        let s = Subalgebra {
            generators: self.generators.clone(),
            conditions: self.conditions.clone(),
            sagbi: OnceLock::new(),
        };
        if let Some(b) = self.sagbi.get() {
            let _ = s.sagbi.set(b.clone());
        }
        s
    }
}

impl<F: Scalar> Subalgebra<F> {
    pub fn from_generators(gens: Vec<Poly<F>>) -> Self {
        Subalgebra { generators: gens, conditions: None, sagbi: OnceLock::new() }
    }

    /// Uses `basis` as the SAGBI basis without recomputing it.
    pub fn from_basis(basis: SagbiBasis<F>) -> Self {
        let s = Subalgebra { generators: basis.elements().to_vec(), conditions: None, sagbi: OnceLock::new() };
        let _ = s.sagbi.set(Ok(basis));
        s
    }

    pub fn with_conditions(mut self, conds: Vec<LinearFunctional<F>>) -> Self {
        self.conditions = Some(conds);
        self
    }

    pub fn generators(&self) -> &[Poly<F>] {
        &self.generators
    }

    pub fn conditions(&self) -> Option<&[LinearFunctional<F>]> {
        self.conditions.as_deref()
    }

    pub fn ctx(&self) -> F::Ctx {
        self.generators[0].ctx().clone()
    }

    pub fn sagbi(&self) -> Result<&SagbiBasis<F>> {
        self.sagbi.get_or_init(|| sagbi_complete(&self.generators)).as_ref().map_err(|e| e.clone())
    }

    pub fn codimension(&self) -> Result<usize> {
        Ok(self.sagbi()?.genus())
    }

    pub fn type_tuple(&self) -> Result<Vec<usize>> {
        Ok(self.sagbi()?.degrees())
    }

    pub fn contains(&self, f: &Poly<F>) -> Result<bool> {
        Ok(self.sagbi()?.contains(f))
    }
}

impl Subalgebra<Rat> {
    /// The same algebra with coefficients viewed in a number field.
    pub fn lift(&self, field: &Arc<NumberField>) -> Subalgebra<FieldElem> {
        let gens = self.sagbi().map(|b| b.elements().to_vec()).unwrap_or_else(|_| self.generators.clone());
        Subalgebra::from_generators(gens.iter().map(|g| g.lift(field)).collect())
    }
}

impl Subalgebra<FieldElem> {
    /// The algebra over `Q`, when its SAGBI basis has rational coefficients.
    pub fn to_rational(&self) -> Option<Subalgebra<Rat>> {
        let els = self.sagbi().ok()?.elements();
        let gens: Option<Vec<Poly<Rat>>> = els.iter().map(|e| e.to_rational()).collect();
        Some(Subalgebra::from_generators(gens?))
    }
}

/// Polynomials of degree at most `bound` annihilated by every condition.
pub fn kernel_span<F: Scalar>(conds: &[LinearFunctional<F>], bound: usize, ctx: &F::Ctx) -> PolySpan<F> {
    let rows: Vec<Vec<F>> = conds.iter().map(|c| c.monomial_row(bound)).collect();
    let mut span = PolySpan::new(ctx);
    for v in nullspace(&rows, bound + 1, ctx) {
        span.insert(&Poly::new(v, ctx.clone()));
    }
    span
}

/// Checks closure under multiplication on the kernel up to `degree_bound`.
pub fn is_subalgebra_condition_set<F: Scalar>(conds: &[LinearFunctional<F>], degree_bound: usize) -> Result<bool> {
    if conds.is_empty() {
        return Ok(true);
    }
    let ctx = conds[0].ctx();
    let one = Poly::one(&ctx);
    for c in conds {
        if !c.apply(&one)?.is_zero() {
            return Ok(false);
        }
    }
    let span = kernel_span(conds, degree_bound, &ctx);
    let basis: Vec<Poly<F>> = span.rows().cloned().collect();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let p = basis[i].mul(&basis[j]);
            for c in conds {
                if !c.apply(&p)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn distinct_points<F: Scalar>(conds: &[LinearFunctional<F>]) -> Vec<F> {
    let mut pts: Vec<F> = Vec::new();
    for c in conds {
        for p in c.points() {
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    pts
}

/// Degree bound `N s + 2 n + 2` used for kernel computations.
pub fn kernel_degree_bound<F: Scalar>(conds: &[LinearFunctional<F>]) -> usize {
    let n = conds.len();
    let big_n = conds.iter().map(|c| c.max_order()).max().unwrap_or(0) + 1;
    let s = distinct_points(conds).len();
    big_n * s + 2 * n + 2
}

/// The subalgebra of polynomials satisfying every condition.
pub fn kernel_subalgebra<F: Scalar>(conds: &[LinearFunctional<F>]) -> Result<Subalgebra<F>> {
    if conds.is_empty() {
        return Err(Error::Invalid("no conditions given".into()));
    }
    let ctx = conds[0].ctx();
    let n = conds.len();
    let bound = kernel_degree_bound(conds);
    let rows: Vec<Vec<F>> = conds.iter().map(|c| c.monomial_row(bound)).collect();
    let r = rank(&rows);
    if r < n {
        return Err(Error::DegenerateConditions { given: n, independent: r });
    }
    if !is_subalgebra_condition_set(conds, bound)? {
        return Err(Error::NotSubalgebraConditions);
    }
    let span = kernel_span(conds, bound, &ctx);
    let elems = span.reduced_rows();
    let degs: Vec<usize> = elems.iter().map(|e| e.deg()).filter(|&d| d > 0).collect();
    let sg = crate::semigroup::DegreeSemigroup::from_degrees(&degs)?;
    let gens: Vec<Poly<F>> = elems.into_iter().filter(|e| sg.generators().contains(&e.deg())).collect();
    let basis = sagbi_complete(&gens)?;
    if basis.genus() != n {
        return Err(Error::NotSubalgebraConditions);
    }
    let gens = basis.elements().to_vec();
    let a = Subalgebra { generators: gens, conditions: Some(conds.to_vec()), sagbi: OnceLock::new() };
    let _ = a.sagbi.set(Ok(basis));
    Ok(a)
}

/// Smallest `N <= 2n + 2` such that `x^i pi^N` lies in `a` for all small `i`,
/// where `pi` is the monic polynomial with the given roots.
pub fn power_bound<F: Scalar>(a: &Subalgebra<F>, points: &[F]) -> Result<usize> {
    let basis = a.sagbi()?;
    let n = basis.genus();
    let ctx = a.ctx();
    let pi = points.iter().fold(Poly::one(&ctx), |acc, p| acc.mul(&Poly::x_minus(p)));
    let top = basis.semigroup().conductor() + basis.degrees().last().copied().unwrap_or(1);
    for big_n in 1..=2 * n + 2 {
        let pn = pi.pow(big_n as u32);
        if (0..=top).all(|i| basis.contains(&pn.shift_up(i))) {
            return Ok(big_n);
        }
    }
    Err(Error::PowerBoundExceeded(2 * n + 2))
}

/// A basis of the conditions cutting out `a`, built from derivative values at
/// the exact spectrum `points`. Pure differences are returned as
/// [`LinearFunctional::Difference`].
pub fn conditions_from_subalgebra<F: Scalar>(a: &Subalgebra<F>, points: &[F]) -> Result<Vec<LinearFunctional<F>>> {
    let basis = a.sagbi()?;
    let n = basis.genus();
    if n == 0 {
        return Ok(vec![]);
    }
    if points.is_empty() {
        return Err(Error::SpectrumNotExact);
    }
    let ctx = a.ctx();
    let big_n = power_bound(a, points)?;
    let s = points.len();
    let bound = (big_n * s).max(basis.semigroup().conductor()) + 2 * n + 2;
    // Columns ordered by derivative order, then point.
    let cols: Vec<(usize, F)> = (0..big_n).flat_map(|i| points.iter().map(move |p| (i, p.clone()))).collect();
    let elems = basis.linear_basis(bound);
    let mut mat: Vec<Vec<F>> = Vec::with_capacity(elems.len());
    for e in &elems {
        let mut ders = vec![e.clone()];
        for _ in 1..big_n {
            let d = ders.last().unwrap().derivative();
            ders.push(d);
        }
        mat.push(cols.iter().map(|(i, p)| ders[*i].eval(p)).collect());
    }
    let mut w = nullspace(&mat, cols.len(), &ctx);
    if w.len() != n {
        return Err(Error::Invalid(format!("found {} conditions for codimension {}", w.len(), n)));
    }
    rref(&mut w);
    let one = F::one(&ctx);
    let mut out = Vec::new();
    for v in w {
        let nz: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
        if nz.len() == 2 && nz.iter().all(|&k| cols[k].0 == 0) && v[nz[0]] == one && v[nz[1]] == one.negated() {
            out.push(LinearFunctional::diff(cols[nz[0]].1.clone(), cols[nz[1]].1.clone())?);
        } else {
            let raw = nz.iter().map(|&k| (cols[k].0, cols[k].1.clone(), v[k].clone())).collect();
            out.push(LinearFunctional::deriv(raw)?);
        }
    }
    Ok(out)
}

/// Keeps a maximal linearly independent prefix-greedy subset of `conds`.
pub fn independent_subset<F: Scalar>(conds: &[LinearFunctional<F>]) -> Vec<LinearFunctional<F>> {
    if conds.is_empty() {
        return vec![];
    }
    let bound = kernel_degree_bound(conds);
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut out = Vec::new();
    for c in conds {
        rows.push(c.monomial_row(bound));
        if rank(&rows) == rows.len() {
            out.push(c.clone());
        } else {
            rows.pop();
        }
    }
    out
}

/// The attached conditions, or conditions read off an exact spectrum.
fn condition_list<F: Scalar>(a: &Subalgebra<F>) -> Result<Vec<LinearFunctional<F>>> {
    if let Some(c) = a.conditions() {
        return Ok(c.to_vec());
    }
    if a.codimension()? == 0 {
        return Ok(Vec::new());
    }
    let sp = crate::spectrum::compute_spectrum(a, &crate::roots::RootMode::Field(Vec::new()), crate::spectrum::PAIRING_TOL)?;
    let pts = sp.exact_points().ok_or(Error::SpectrumNotExact)?;
    conditions_from_subalgebra(a, &pts)
}

/// Intersection as the kernel of both condition lists, join as the algebra
/// generated by both generator lists. Algebras given by generators alone
/// need an exact spectrum.
pub fn intersect_and_join<F: Scalar>(a1: &Subalgebra<F>, a2: &Subalgebra<F>) -> Result<(Subalgebra<F>, Subalgebra<F>)> {
    let c1 = condition_list(a1)?;
    let c2 = condition_list(a2)?;
    let all: Vec<LinearFunctional<F>> = c1.iter().chain(c2.iter()).cloned().collect();
    let inter = if all.is_empty() {
        Subalgebra::from_generators(vec![Poly::x(&a1.ctx())])
    } else {
        kernel_subalgebra(&independent_subset(&all))?
    };
    let mut gens = a1.sagbi()?.elements().to_vec();
    gens.extend(a2.sagbi()?.elements().iter().cloned());
    let join = Subalgebra::from_basis(sagbi_complete(&gens)?);
    Ok((inter, join))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rat};

    fn q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(cs)
    }

    fn d(order: usize, p: i64) -> (usize, Rat, Rat) {
        (order, rat(p), rat(1))
    }

    #[test]
    fn apply_examples() {
        let l = LinearFunctional::diff(rat(1), rat(-1)).unwrap();
        assert_eq!(l.apply(&q(&[0, -1, 0, 1])).unwrap(), rat(0));
        let l = LinearFunctional::derivative_at(1, rat(0)).unwrap();
        assert_eq!(l.apply(&q(&[0, 0, 1])).unwrap(), rat(0));
    }

    #[test]
    fn monomial_row_matches_apply() {
        let l = LinearFunctional::deriv(vec![(2, rat(3), rat(2)), (1, rat(-1), rat(5))]).unwrap();
        let row = l.monomial_row(6);
        for k in 0..=6 {
            assert_eq!(row[k], l.apply(&Poly::monomial(rat(1), k)).unwrap());
        }
    }

    #[test]
    fn condition_set_recognition() {
        let a = rat(2);
        let b = rat(-3);
        let single = vec![LinearFunctional::deriv(vec![(1, a.clone(), rat(1)), (1, b.clone(), rat(1))]).unwrap()];
        assert!(!is_subalgebra_condition_set(&single, 8).unwrap());
        let pair = vec![LinearFunctional::diff(a.clone(), b.clone()).unwrap(), single[0].clone()];
        assert!(is_subalgebra_condition_set(&pair, 8).unwrap());
        let spectacular = vec![
            LinearFunctional::deriv(vec![d(1, 0)]).unwrap(),
            LinearFunctional::deriv(vec![d(3, 0), (2, rat(0), rat(-3))]).unwrap(),
            LinearFunctional::deriv(vec![d(5, 0), (4, rat(0), rat(-10))]).unwrap(),
        ];
        assert!(is_subalgebra_condition_set(&spectacular, 12).unwrap());
    }

    #[test]
    fn monomial_kernel() {
        let conds: Vec<_> = [1, 2, 5].iter().map(|&i| LinearFunctional::derivative_at(i, rat(0)).unwrap()).collect();
        let a = kernel_subalgebra(&conds).unwrap();
        let b = a.sagbi().unwrap();
        assert_eq!(b.elements(), &[q(&[0, 0, 0, 1]), q(&[0, 0, 0, 0, 1])]);
    }

    #[test]
    fn dependent_conditions_reported() {
        let c = LinearFunctional::diff(rat(1), rat(-1)).unwrap();
        let err = kernel_subalgebra(&[c.clone(), c]).unwrap_err();
        assert_eq!(err, Error::DegenerateConditions { given: 2, independent: 1 });
    }

    #[test]
    fn conditions_of_codim_one() {
        let a = Subalgebra::from_generators(vec![q(&[0, -1, 0, 1]), q(&[0, 0, 1])]);
        let c = conditions_from_subalgebra(&a, &[rat(1), rat(-1)]).unwrap();
        assert_eq!(c, vec![LinearFunctional::diff(rat(1), rat(-1)).unwrap()]);
    }

    #[test]
    fn conditions_of_monomial_algebra() {
        let a = Subalgebra::from_generators(vec![q(&[0, 0, 0, 1]), q(&[0, 0, 0, 0, 1])]);
        let c = conditions_from_subalgebra(&a, &[rat(0)]).unwrap();
        assert_eq!(c.len(), 3);
        let k = kernel_subalgebra(&c).unwrap();
        assert_eq!(k.sagbi().unwrap().elements(), a.sagbi().unwrap().elements());
    }

    #[test]
    fn json_round_trip() {
        let l = LinearFunctional::deriv(vec![(1, rat(0), rat(1)), (3, rat(2), Rat::new(1.into(), 2.into()))]).unwrap();
        let v = l.to_json();
        let parse = |s: &str| crate::cli::parser::parse_rational(s);
        assert_eq!(LinearFunctional::from_json(&v, &parse).unwrap(), l);
        let dd = LinearFunctional::diff(rat(1), rat(-1)).unwrap();
        assert_eq!(LinearFunctional::from_json(&dd.to_json(), &parse).unwrap(), dd);
    }

    #[test]
    fn join_to_whole_ring() {
        let a1 = kernel_subalgebra(&[1, 2, 3].map(|i| LinearFunctional::derivative_at(i, rat(0)).unwrap())).unwrap();
        let a2 = kernel_subalgebra(&[
            LinearFunctional::diff(rat(1), rat(-1)).unwrap(),
        ])
        .unwrap();
        let (_, join) = intersect_and_join(&a1, &a2).unwrap();
        assert_eq!(join.codimension().unwrap(), 0);
    }
}
