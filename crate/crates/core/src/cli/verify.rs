//! The `verify` suite: worked examples with known answers, followed by the
//! randomized acceptance checks. Every check yields one table row.

use super::{Outcome, EXIT_OK, EXIT_VERIFY};
use crate::arith::{rat, FieldElem, NumberField, Poly, Rat, Scalar};
use crate::classify::{check_case, classify, construct_case, rational_or_field_sample, realizable_labels, SampledCase};
use crate::conditions::{
    conditions_from_subalgebra, intersect_and_join, is_subalgebra_condition_set, kernel_span, kernel_subalgebra, LinearFunctional,
    Subalgebra,
};
use crate::derivations::{
    conjecture_dim_check, derivation_space, integral_derivation, k_alpha, leibniz_holds, ln_coefficients, IntegralOutcome,
};
use crate::error::{Error, Result};
use crate::oracle::{oracle_codimension, oracle_member, oracle_multi_char_roots, oracle_span};
use crate::resultants::{char_poly_multi, char_poly_pair, divided_difference, resultant_relation, resultant_y};
use crate::roots::{complex_roots, find_roots, squarefree_decompose, RootMode};
use crate::sagbi::{membership, sagbi_complete, sagbi_extend};
use crate::semigroup::{semigroups_of_genus, DegreeSemigroup};
use crate::spectrum::{
    compute_clusters, compute_spectrum, deg2_description, field_spectrum, rational_spectrum, spectrum_size_check, SpectrumValue,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

/// Root matching tolerance for the numeric checks.
pub const ROOT_TOL: f64 = 1e-8;
/// Per-example budget for the characteristic polynomial goldens, seconds.
pub const CHI_TIME_LIMIT: f64 = 1.0;
pub const MULTI_TIME_LIMIT: f64 = 60.0;
pub const INTRO_TIME_LIMIT: f64 = 30.0;
pub const ROUND_TRIP_TIME_LIMIT: f64 = 300.0;
const SEED: u64 = 0x5eed;

#[derive(Clone, Debug)]
pub struct Check {
    pub group: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Default)]
struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn run(&mut self, group: &str, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let t0 = Instant::now();
        let (passed, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        let seconds = t0.elapsed().as_secs_f64();
        log::info!("verify {group}/{name}: {} ({seconds:.2}s)", if passed { "pass" } else { "FAIL" });
        self.checks.push(Check { group: group.into(), name: name.into(), passed, detail, seconds });
    }

    fn ex(&mut self, name: &str, f: impl FnOnce() -> Result<bool>) {
        self.run("example", name, || f().map(|b| (b, String::new())));
    }
}

fn q(cs: &[i64]) -> Poly<Rat> {
    Poly::from_ints(cs)
}

fn xn(n: usize) -> Poly<Rat> {
    Poly::monomial(rat(1), n)
}

fn alg(gens: &[Poly<Rat>]) -> Subalgebra<Rat> {
    Subalgebra::from_generators(gens.to_vec())
}

fn d0(order: usize, p: i64) -> LinearFunctional<Rat> {
    LinearFunctional::derivative_at(order, rat(p)).unwrap()
}

fn same_span<F: Scalar>(a: &[LinearFunctional<F>], b: &[LinearFunctional<F>], bound: usize, ctx: &F::Ctx) -> bool {
    let ka = kernel_span(a, bound, ctx);
    let kb = kernel_span(b, bound, ctx);
    ka.dim() == kb.dim() && ka.rows().all(|r| kb.contains(r))
}

fn is_cyclic_order(e: &FieldElem, n: u32) -> bool {
    e.pow(n).is_one()
}

/// The algebras of the four introductory condition sets, each as
/// (conditions, expected generators, points).
type Intro = (Vec<LinearFunctional<FieldElem>>, Vec<Poly<FieldElem>>, Vec<FieldElem>);

fn intro_examples() -> Result<Vec<(String, Intro)>> {
    let mut out = Vec::new();
    let k1 = NumberField::cyclotomic(1);
    let z = |k: &Arc<NumberField>, n: i64| FieldElem::from_i64(k, n);
    let one = |k: &Arc<NumberField>| FieldElem::one(k);
    let d = |k: &Arc<NumberField>, o: usize, p: FieldElem| -> Result<LinearFunctional<FieldElem>> {
        let c = one(k);
        LinearFunctional::deriv(vec![(o, p, c)])
    };
    out.push((
        "<x^3, x^4>".to_string(),
        (
            vec![d(&k1, 1, z(&k1, 0))?, d(&k1, 2, z(&k1, 0))?, d(&k1, 5, z(&k1, 0))?],
            vec![xn(3).lift(&k1), xn(4).lift(&k1)],
            vec![z(&k1, 0)],
        ),
    ));
    let k8 = NumberField::cyclotomic(8);
    let e = FieldElem::generator(&k8);
    out.push((
        "<x^4, x^3 - x>".to_string(),
        (
            vec![
                LinearFunctional::diff(one(&k8), one(&k8).negated())?,
                LinearFunctional::diff(e.clone(), e.pow(7))?,
                LinearFunctional::diff(e.pow(3), e.pow(5))?,
            ],
            vec![xn(4).lift(&k8), q(&[0, -1, 0, 1]).lift(&k8)],
            vec![one(&k8), one(&k8).negated(), e.clone(), e.pow(3), e.pow(5), e.pow(7)],
        ),
    ));
    let k12 = NumberField::cyclotomic(12);
    let e = FieldElem::generator(&k12);
    out.push((
        "<x^4 - x^2, x^3>".to_string(),
        (
            vec![d(&k12, 1, z(&k12, 0))?, LinearFunctional::diff(e.clone(), e.pow(5))?, LinearFunctional::diff(e.pow(7), e.pow(11))?],
            vec![q(&[0, 0, -1, 0, 1]).lift(&k12), xn(3).lift(&k12)],
            vec![z(&k12, 0), e.clone(), e.pow(5), e.pow(7), e.pow(11)],
        ),
    ));
    let k3 = NumberField::cyclotomic(3);
    let e = FieldElem::generator(&k3);
    let e2 = e.pow(2);
    out.push((
        "<x^4 - x, x^3>".to_string(),
        (
            vec![
                LinearFunctional::diff(one(&k3), e.clone())?,
                LinearFunctional::diff(one(&k3), e2.clone())?,
                LinearFunctional::deriv(vec![(1, one(&k3), one(&k3)), (1, e.clone(), e2.clone()), (1, e2.clone(), e.clone())])?,
            ],
            vec![q(&[0, -1, 0, 0, 1]).lift(&k3), xn(3).lift(&k3)],
            vec![one(&k3), e, e2],
        ),
    ));
    Ok(out)
}

fn intro_round_trip(conds: &[LinearFunctional<FieldElem>], gens: &[Poly<FieldElem>], pts: &[FieldElem]) -> Result<bool> {
    let expected = Subalgebra::from_generators(gens.to_vec());
    let ctx = gens[0].ctx().clone();
    let kernel = kernel_subalgebra(conds)?;
    if !kernel.sagbi()?.same_algebra(expected.sagbi()?) {
        return Ok(false);
    }
    let bound = expected.sagbi()?.semigroup().conductor() + 12;
    let back = conditions_from_subalgebra(&expected, pts)?;
    Ok(same_span(conds, &back, bound, &ctx))
}

fn examples(s: &mut Suite) {
    s.ex("x^3 - x vanishes at 1 and -1", || {
        let p = q(&[0, -1, 0, 1]);
        Ok(p.eval(&rat(1)).is_zero() && p.eval(&rat(-1)).is_zero())
    });
    s.ex("x^5 / (x^2 - 1)", || {
        let (qq, r) = xn(5).div_rem(&q(&[-1, 0, 1]))?;
        Ok(qq == q(&[0, 1, 0, 1]) && r == xn(1))
    });
    s.ex("gcd(x^2, x^3 - x) = x", || Ok(xn(2).gcd(&q(&[0, -1, 0, 1]))? == xn(1)));
    s.ex("t^4 = -1, t^8 = 1 in Q(zeta_8)", || {
        let k = NumberField::cyclotomic(8);
        let t = FieldElem::generator(&k);
        Ok(t.pow(4) == FieldElem::from_i64(&k, -1) && t.pow(8).is_one())
    });
    s.ex("1/t = t/2 in Q[t]/(t^2 - 2)", || {
        let k = NumberField::new(q(&[-2, 0, 1]), "Q(sqrt 2)")?;
        let t = FieldElem::generator(&k);
        Ok(t.inverse()? == t.times(&FieldElem::from_rat(&k, &Rat::new(1.into(), 2.into()))))
    });
    s.ex("divided difference of x^3 - x", || {
        Ok(divided_difference(&q(&[0, -1, 0, 1]))?.table == vec![q(&[-1, 0, 1]), q(&[0, 1]), q(&[1])])
    });
    s.ex("divided difference of x^2", || Ok(divided_difference(&xn(2))?.table == vec![xn(1), q(&[1])]));
    s.ex("divided difference of x^7", || {
        let t = divided_difference(&xn(7))?.table;
        Ok((0..7).all(|i| t[i] == xn(6 - i)))
    });
    s.ex("Res_y(y^2 + xy + x^2 - 1, y + x) = x^2 - 1", || {
        let r = resultant_y(&[q(&[-1, 0, 1]), q(&[0, 1]), q(&[1])], &[q(&[0, 1]), q(&[1])], &())?;
        Ok(r == q(&[-1, 0, 1]))
    });
    s.ex("chi(x^3 - x, x^2) = x^2 - 1", || Ok(char_poly_pair(&q(&[0, -1, 0, 1]), &xn(2))? == q(&[-1, 0, 1])));
    s.ex("chi(x^4 - x^2, x^3) = x^2(x^4 - x^2 + 1)", || {
        Ok(char_poly_pair(&q(&[0, 0, -1, 0, 1]), &xn(3))? == q(&[0, 0, 1, 0, -1, 0, 1]))
    });
    s.ex("chi(x^m, x^n) = x^((m-1)(n-1))", || {
        Ok((2..=5).all(|m| (m + 1..=7).filter(|n| num_integer::gcd(m, *n) == 1).all(|n| {
            char_poly_pair(&xn(m), &xn(n)).map(|c| c == xn((m - 1) * (n - 1))).unwrap_or(false)
        })))
    });
    s.ex("chi_A of <x^4, x^6, x^9> is nonzero", || Ok(!char_poly_multi(&[xn(4), xn(6), xn(9)])?.is_zero()));
    s.ex("resultant relation of (x^3 - x, x^2) vanishes at (p, q)", || {
        let (p, qq) = (q(&[0, -1, 0, 1]), xn(2));
        Ok(resultant_relation(&p, &qq)?.substitute(&[p, qq]).is_zero())
    });
    s.ex("squarefree x^2(x^4 - x^2 + 1)", || {
        Ok(squarefree_decompose(&q(&[0, 0, 1, 0, -1, 0, 1]))? == vec![(q(&[1, 0, -1, 0, 1]), 1), (xn(1), 2)]
            || squarefree_decompose(&q(&[0, 0, 1, 0, -1, 0, 1]))? == vec![(xn(1), 2), (q(&[1, 0, -1, 0, 1]), 1)])
    });
    s.ex("roots of x^2 - 1 are 1, -1", || {
        let r = find_roots(&q(&[-1, 0, 1]), &RootMode::ExactRational)?;
        let mut v: Vec<Rat> = r.exact_roots.into_iter().map(|(a, _)| a).collect();
        v.sort();
        Ok(v == vec![rat(-1), rat(1)])
    });
    s.ex("roots of x^4 - x^2 + 1 are primitive 12th roots", || {
        let r = complex_roots(&q(&[1, 0, -1, 0, 1]))?;
        Ok(r.len() == 4 && r.iter().all(|z| (z.norm() - 1.0).abs() < 1e-10 && (z.powu(12) - 1.0).norm() < 1e-9 && (z.powu(6) + 1.0).norm() < 1e-9))
    });
    s.ex("roots of x^4 + 1 in Q(zeta_8)", || {
        let k = NumberField::cyclotomic(8);
        let t = FieldElem::generator(&k);
        let cands: Vec<FieldElem> = [1u32, 3, 5, 7].iter().map(|&i| t.pow(i)).collect();
        let r = find_roots(&q(&[1, 0, 0, 0, 1]).lift(&k), &RootMode::Field(cands.clone()))?;
        Ok(r.exact_roots.len() == 4 && r.numeric_roots.is_empty() && cands.iter().all(|c| r.exact_roots.iter().any(|(a, _)| a == c)))
    });
    s.ex("semigroup <3,4>: gaps 1,2,5, genus 3", || {
        let s = DegreeSemigroup::from_degrees(&[3, 4])?;
        Ok(s.gaps() == [1, 2, 5] && s.genus() == 3)
    });
    s.ex("semigroup <2,5>: gaps 1,3", || Ok(DegreeSemigroup::from_degrees(&[2, 5])?.gaps() == [1, 3]));
    s.ex("genus of <m,n> is (m-1)(n-1)/2", || {
        Ok((2..=6).all(|m| (m + 1..=9).filter(|n| num_integer::gcd(m, *n) == 1).all(|n| {
            DegreeSemigroup::from_degrees(&[m, n]).map(|s| s.genus() == (m - 1) * (n - 1) / 2).unwrap_or(false)
        })))
    });
    s.ex("semigroups of genus 1, 2, 3", || {
        Ok(semigroups_of_genus(1) == vec![vec![2, 3]]
            && semigroups_of_genus(2).len() == 2
            && semigroups_of_genus(2).contains(&vec![2, 5])
            && semigroups_of_genus(2).contains(&vec![3, 4, 5])
            && semigroups_of_genus(3).len() == 4)
    });
    s.ex("5 is not in <3,4>", || Ok(DegreeSemigroup::from_degrees(&[3, 4])?.represent_degree(5).is_none()));
    s.ex("x^7 - x in <x^3 - x, x^2>", || Ok(membership(&q(&[0, -1, 0, 0, 0, 0, 0, 1]), &alg(&[q(&[0, -1, 0, 1]), xn(2)]))?.0));
    s.ex("x not in <x^3 - x, x^2>", || Ok(!membership(&xn(1), &alg(&[q(&[0, -1, 0, 1]), xn(2)]))?.0));
    s.ex("x^5 + x^3 subduces to 2x", || {
        let b = sagbi_complete(&[q(&[0, -1, 0, 1]), xn(2)])?;
        Ok(b.subduce(&q(&[0, 0, 0, 1, 0, 1])).0 == q(&[0, 2]))
    });
    s.ex("<x^3 - x, x^2> is already SAGBI", || {
        let b = sagbi_complete(&[q(&[0, -1, 0, 1]), xn(2)])?;
        Ok(b.degrees() == vec![2, 3] && b.genus() == 1)
    });
    s.ex("<x^2, x^5 + x^4> has type (2,5)", || {
        let b = sagbi_complete(&[xn(2), q(&[0, 0, 0, 0, 1, 1])])?;
        Ok(b.degrees() == vec![2, 5] && b.genus() == 2)
    });
    s.ex("<x^3, x^4, x^5> is minimal", || {
        let b = sagbi_complete(&[xn(3), xn(4), xn(5)])?;
        Ok(b.degrees() == vec![3, 4, 5] && b.elements() == [xn(3), xn(4), xn(5)] && b.genus() == 2)
    });
    s.ex("<x^3 - x, x^4, x^5 - 1> = K[x]", || Ok(sagbi_complete(&[q(&[0, -1, 0, 1]), xn(4), q(&[-1, 0, 0, 0, 0, 1])])?.genus() == 0));
    s.ex("extension of K[x] by f'(2)", || {
        let b = sagbi_complete(&[xn(1)])?;
        let e = sagbi_extend(&b, &d0(1, 2), Some(&rat(2)))?;
        let h = q(&[-2, 1]);
        Ok(e.same_algebra(&sagbi_complete(&[h.pow(2), h.pow(3)])?))
    });
    s.ex("extension of K[x] by f(1) - f(-1)", || {
        let b = sagbi_complete(&[xn(1)])?;
        let e = sagbi_extend(&b, &LinearFunctional::diff(rat(1), rat(-1))?, Some(&rat(1)))?;
        let p = q(&[-1, 0, 1]);
        Ok(e.same_algebra(&sagbi_complete(&[p.clone(), p.mul(&q(&[-1, 1]))])?))
    });
    s.ex("extension of <x^2, x^3> by f''(0)", || {
        let b = sagbi_complete(&[xn(2), xn(3)])?;
        let e = sagbi_extend(&b, &d0(2, 0), Some(&rat(0)))?;
        Ok(e.degrees() == vec![3, 4, 5] && e.same_algebra(&sagbi_complete(&[xn(3), xn(4), xn(5)])?))
    });
    s.ex("f(1) - f(-1) kills x^3 - x", || Ok(LinearFunctional::diff(rat(1), rat(-1))?.apply(&q(&[0, -1, 0, 1]))?.is_zero()));
    s.ex("cube-root combination kills x^4 - x", || {
        let k = NumberField::cyclotomic(3);
        let e = FieldElem::generator(&k);
        let one = FieldElem::one(&k);
        let l = LinearFunctional::deriv(vec![(1, one.clone(), one), (1, e.clone(), e.pow(2)), (1, e.pow(2), e)])?;
        Ok(l.apply(&q(&[0, -1, 0, 0, 1]).lift(&k))?.is_zero())
    });
    s.ex("f'(a) + f'(b) = 0 alone is not a subalgebra condition", || {
        Ok(!is_subalgebra_condition_set(&[LinearFunctional::deriv(vec![(1, rat(2), rat(1)), (1, rat(-3), rat(1))])?], 10)?)
    });
    s.ex("f(a) = f(b), f'(a) + f'(b) = 0 is", || {
        let c = vec![LinearFunctional::diff(rat(2), rat(-3))?, LinearFunctional::deriv(vec![(1, rat(2), rat(1)), (1, rat(-3), rat(1))])?];
        is_subalgebra_condition_set(&c, 10)
    });
    s.ex("f'(0), f'''(0) - 3f''(0), f^(5)(0) - 10f^(4)(0)", || {
        let c = vec![
            d0(1, 0),
            LinearFunctional::deriv(vec![(3, rat(0), rat(1)), (2, rat(0), rat(-3))])?,
            LinearFunctional::deriv(vec![(5, rat(0), rat(1)), (4, rat(0), rat(-10))])?,
        ];
        is_subalgebra_condition_set(&c, 14)
    });
    if let Ok(intro) = intro_examples() {
        for (name, (conds, gens, pts)) in intro {
            s.ex(&format!("conditions <-> {name}"), || intro_round_trip(&conds, &gens, &pts));
        }
    }
    s.ex("conditions of <x^3 - x, x^2> are f(1) - f(-1)", || {
        let c = conditions_from_subalgebra(&alg(&[q(&[0, -1, 0, 1]), xn(2)]), &[rat(1), rat(-1)])?;
        Ok(same_span(&c, &[LinearFunctional::diff(rat(1), rat(-1))?], 10, &()))
    });
    s.ex("<x^4, x^5> joined with <x^4, x^3 - x> is K[x]", || {
        let k = NumberField::cyclotomic(8);
        let (_, j) = intersect_and_join(&alg(&[xn(4), xn(5)]).lift(&k), &alg(&[xn(4), q(&[0, -1, 0, 1])]).lift(&k))?;
        Ok(j.codimension()? == 0)
    });
    s.ex("<x^2, x^3> meet <x^2, x^5>", || {
        let (i, _) = intersect_and_join(&alg(&[xn(2), xn(3)]), &alg(&[xn(2), xn(5)]))?;
        Ok(i.codimension()? >= 2 && i.contains(&xn(2))? && i.contains(&xn(5))? && !i.contains(&xn(3))?)
    });
    s.ex("spectrum of <x^3 - x, x^2>", || {
        let sp = rational_spectrum(&alg(&[q(&[0, -1, 0, 1]), xn(2)]))?;
        let mut pts = sp.exact_points().unwrap_or_default();
        pts.sort();
        Ok(pts == vec![rat(-1), rat(1)] && sp.points.iter().all(|p| p.is_paired()))
    });
    s.ex("spectrum of <x^4 - x^2, x^3>", || {
        let k = NumberField::cyclotomic(12);
        let e = FieldElem::generator(&k);
        let a = alg(&[q(&[0, 0, -1, 0, 1]), xn(3)]).lift(&k);
        let sp = field_spectrum(&a, &k)?;
        let pts = sp.exact_points().unwrap_or_default();
        let crit: Vec<_> = sp.points.iter().filter(|p| p.critical).collect();
        let cl = compute_clusters(&a, &sp)?;
        let pairs: Vec<Vec<FieldElem>> = cl.iter().filter(|c| c.members.len() == 2).map(|c| c.members.iter().map(|&i| pts[i].clone()).collect()).collect();
        let has = |x: &FieldElem, y: &FieldElem| pairs.iter().any(|p| p.contains(x) && p.contains(y));
        Ok(pts.len() == 5
            && crit.len() == 1
            && crit[0].value == SpectrumValue::Exact(FieldElem::zero(&k))
            && has(&e, &e.pow(5))
            && has(&e.pow(7), &e.pow(11)))
    });
    s.ex("spectrum of <x^4, x^3 - x>", || {
        let k = NumberField::cyclotomic(8);
        let e = FieldElem::generator(&k);
        let a = alg(&[xn(4), q(&[0, -1, 0, 1])]).lift(&k);
        let sp = field_spectrum(&a, &k)?;
        let pts = sp.exact_points().unwrap_or_default();
        let cl = compute_clusters(&a, &sp)?;
        let one = FieldElem::one(&k);
        let has = |x: &FieldElem, y: &FieldElem| cl.iter().any(|c| c.members.len() == 2 && c.members.iter().any(|&i| &pts[i] == x) && c.members.iter().any(|&i| &pts[i] == y));
        Ok(pts.len() == 6 && cl.len() == 3 && has(&one, &one.negated()) && has(&e, &e.pow(7)) && has(&e.pow(3), &e.pow(5)) && is_cyclic_order(&e, 8))
    });
    s.ex("f(0) = f(1) = f(2) gives one cluster of size 3", || {
        let a = kernel_subalgebra(&[LinearFunctional::diff(rat(0), rat(1))?, LinearFunctional::diff(rat(0), rat(2))?])?;
        let sp = rational_spectrum(&a)?;
        let cl = compute_clusters(&a, &sp)?;
        Ok(cl.len() == 1 && cl[0].members.len() == 3)
    });
    s.ex("|Sp<x^2, x^3>| = 1 <= 2", || {
        let a = alg(&[xn(2), xn(3)]);
        let r = spectrum_size_check(&a, &rational_spectrum(&a)?)?;
        Ok(r.size == 1 && r.bound == 2)
    });
    s.ex("|Sp<x^4, x^3 - x>| = 6 = 2n", || {
        let a = alg(&[xn(4), q(&[0, -1, 0, 1])]);
        let r = spectrum_size_check(&a, &rational_spectrum(&a)?)?;
        Ok(r.size == 6 && r.bound == 6)
    });
    s.ex("|Sp<x^4 - x^2, x^3>| <= 2n", || {
        let a = alg(&[q(&[0, 0, -1, 0, 1]), xn(3)]);
        let r = spectrum_size_check(&a, &compute_spectrum(&a, &RootMode::Numeric, ROOT_TOL)?)?;
        Ok(r.size <= r.bound)
    });
    s.ex("degree-two description of <x^2, x^3 - x>", || {
        let d = deg2_description(&alg(&[xn(2), q(&[0, -1, 0, 1])]), &RootMode::ExactRational)?;
        Ok(d.alpha0 == rat(0) && d.m0 == 0 && d.pairs.len() == 1 && d.pairs[0].m == 0)
    });
    s.ex("degree-two description of <x^2, x^5>", || {
        let d = deg2_description(&alg(&[xn(2), xn(5)]), &RootMode::ExactRational)?;
        Ok(d.m0 == 2 && d.pairs.is_empty() && same_span(&d.conditions()?, &[d0(1, 0), d0(3, 0)], 10, &()))
    });
    s.ex("degree-two description of <x^2, x^5 - x^3>", || {
        let a = alg(&[xn(2), q(&[0, 0, 0, -1, 0, 1])]);
        let d = deg2_description(&a, &RootMode::ExactRational)?;
        let c = vec![LinearFunctional::diff(rat(1), rat(-1))?, d0(1, 0)];
        Ok(d.m0 == 1 && d.pairs.len() == 1 && d.pairs[0].m == 0 && same_span(&d.conditions()?, &c, 10, &()))
    });
    s.ex("k_alpha of K[x] is 1", || Ok(k_alpha(&alg(&[xn(1)]), &rat(3))? == 1));
    s.ex("k_0 of A({0,1,2}) is 3", || {
        let a = kernel_subalgebra(&[LinearFunctional::diff(rat(0), rat(1))?, LinearFunctional::diff(rat(0), rat(2))?])?;
        Ok(k_alpha(&a, &rat(0))? == 3)
    });
    s.ex("k_0 of <x^2, x^3> is 2", || Ok(k_alpha(&alg(&[xn(2), xn(3)]), &rat(0))? == 2));
    s.ex("derivations of f'(0) = 0 at 0", || {
        let a = kernel_subalgebra(&[d0(1, 0)])?;
        let sp = derivation_space(&a, &rat(0), &[rat(0)])?;
        let elems = a.sagbi()?.linear_basis(12);
        Ok(sp.dim() == 2 && leibniz_holds(&d0(2, 0), &rat(0), &elems)? && leibniz_holds(&d0(3, 0), &rat(0), &elems)?)
    });
    s.ex("derivations of f(1) = f(-1) at 1", || {
        let a = kernel_subalgebra(&[LinearFunctional::diff(rat(1), rat(-1))?])?;
        let sp = derivation_space(&a, &rat(1), &[rat(1), rat(-1)])?;
        let elems = a.sagbi()?.linear_basis(12);
        Ok(sp.dim() == 2 && leibniz_holds(&d0(1, 1), &rat(1), &elems)? && leibniz_holds(&d0(1, -1), &rat(1), &elems)?)
    });
    s.ex("derivations of f'(1) = f'(3) = 0 at 1", || {
        let a = kernel_subalgebra(&[d0(1, 1), d0(1, 3)])?;
        let sp = derivation_space(&a, &rat(1), &[rat(1)])?;
        let elems = a.sagbi()?.linear_basis(14);
        Ok(sp.dim() == 2 && leibniz_holds(&d0(2, 1), &rat(1), &elems)? && leibniz_holds(&d0(3, 1), &rat(1), &elems)?)
    });
    s.ex("two clusters: dimensions agree", || {
        let a = kernel_subalgebra(&[LinearFunctional::diff(rat(0), rat(1))?, LinearFunctional::diff(rat(2), rat(3))?])?;
        let r = conjecture_dim_check(&a, &rat(0), &[rat(0), rat(1)], true)?;
        Ok(r.equal && r.k_alpha == 2)
    });
    s.ex("f(0) = f(1), f'(0) = -f'(1): f''(0) - f''(1) is a derivation", || {
        let a = kernel_subalgebra(&[LinearFunctional::diff(rat(0), rat(1))?, LinearFunctional::deriv(vec![(1, rat(0), rat(1)), (1, rat(1), rat(1))])?])?;
        let dd = LinearFunctional::deriv(vec![(2, rat(0), rat(1)), (2, rat(1), rat(-1))])?;
        let elems = a.sagbi()?.linear_basis(14);
        let nonzero = elems.iter().any(|e| dd.apply(e).map(|v| !v.is_zero()).unwrap_or(false));
        let r = conjecture_dim_check(&a, &rat(0), &[rat(0), rat(1)], true)?;
        Ok(leibniz_holds(&dd, &rat(0), &elems)? && nonzero && r.equal)
    });
    s.ex("L_9 and L_13", || {
        let l9 = ln_coefficients(9)?;
        let l13 = ln_coefficients(13)?;
        Ok(l9 == golden_ln(&[(9, 1), (8, -4), (6, 11), (4, -11)]) && l13 == golden_ln(&[(13, 1), (12, -6), (10, 50), (8, -294), (6, 882), (4, -882)]))
    });
    s.ex("integral a = 1 from K[x] to <x^2, x^3>", || {
        let big = alg(&[xn(1)]);
        let small = kernel_subalgebra(&[d0(1, 0)])?;
        Ok(integral_derivation(&big, &small, &d0(1, 0), &rat(0), &q(&[1]), 12)? == IntegralOutcome::Derivation(d0(2, 0)))
    });
    s.ex("x is an integral from <x^2, x^3> to <x^2, x^5>", || {
        let big = alg(&[xn(2), xn(3)]);
        let small = alg(&[xn(2), xn(5)]);
        Ok(integral_derivation(&big, &small, &d0(3, 0), &rat(0), &xn(1), 12)? != IntegralOutcome::NotIntegral)
    });
    s.ex("x^7 as an integral agrees with membership", || {
        let big = alg(&[xn(2), xn(3)]);
        let small = alg(&[xn(2), xn(5)]);
        let a = xn(7);
        let expect = small.sagbi()?.elements().iter().all(|f| big.sagbi().map(|b| b.contains(&a.mul(&f.derivative()))).unwrap_or(false));
        let got = integral_derivation(&big, &small, &d0(3, 0), &rat(0), &a, 14)? != IntegralOutcome::NotIntegral;
        Ok(expect == got)
    });
    s.ex("f(0) = f(2), f'(1) = 0 classifies as codim2/s=3, T = (2,5)", || {
        let a = kernel_subalgebra(&[LinearFunctional::diff(rat(0), rat(2))?, d0(1, 1)])?;
        let c = classify(&a)?;
        Ok(c.label().starts_with("codim2/s=3") && c.type_tuple == vec![2, 5])
    });
    s.ex("<x^4, x^3 - x> classifies as s=6 case B", || {
        let k = NumberField::cyclotomic(8);
        let c = classify(&alg(&[xn(4), q(&[0, -1, 0, 1])]).lift(&k))?;
        Ok(c.label() == "codim3/s=6/three-pairs/B" && c.codimension == 3 && c.type_tuple == vec![3, 4])
    });
    s.ex("f'(0) = f'(1) = f'(3) = 0 classifies as s=3 case 1", || {
        let c = classify(&kernel_subalgebra(&[d0(1, 0), d0(1, 1), d0(1, 3)])?)?;
        Ok(c.label().starts_with("codim3/s=3/case1") && c.type_tuple == vec![4, 5, 6, 7])
    });
    s.ex("codim1 pair case at 1, -1", || {
        let a = construct_case("codim1/s=2/pair/T23", &[("alpha".into(), rat(1)), ("beta".into(), rat(-1))])?;
        let p = q(&[-1, 0, 1]);
        Ok(a.sagbi()?.same_algebra(&sagbi_complete(&[p.clone(), p.mul(&q(&[-1, 1]))])?))
    });
    s.ex("codim2/s=1 with a = 3, b = 1", || {
        let a = construct_case("codim2/s=1/deriv/T345", &[("alpha".into(), rat(0)), ("a".into(), rat(3)), ("b".into(), rat(1))])?;
        let conds = vec![d0(1, 0), LinearFunctional::deriv(vec![(2, rat(0), rat(3)), (3, rat(0), rat(1))])?];
        Ok(a.type_tuple()? == vec![3, 4, 5] && a.sagbi()?.same_algebra(kernel_subalgebra(&conds)?.sagbi()?))
    });
    s.ex("codim3/s=1 case 2 with d = 0 has type (3,5,7)", || {
        let a = construct_case("codim3/s=1/case2/T357", &[("alpha".into(), rat(2)), ("a".into(), rat(5)), ("d".into(), rat(0))])?;
        let conds = vec![
            d0(1, 2),
            LinearFunctional::deriv(vec![(3, rat(2), rat(1)), (2, rat(2), rat(15))])?,
            LinearFunctional::deriv(vec![(5, rat(2), rat(1)), (4, rat(2), rat(50))])?,
        ];
        let b = a.sagbi()?;
        let sat = b.elements().iter().all(|e| conds.iter().all(|c| c.apply(e).map(|v| v.is_zero()).unwrap_or(false)));
        Ok(a.type_tuple()? == vec![3, 5, 7] && sat)
    });
    s.ex("type of <x^3 - x, x^2> is (2,3)", || Ok(alg(&[q(&[0, -1, 0, 1]), xn(2)]).type_tuple()? == vec![2, 3]));
    s.ex("type of <x^4 - x^2, x^3> is (3,4)", || Ok(alg(&[q(&[0, 0, -1, 0, 1]), xn(3)]).type_tuple()? == vec![3, 4]));
    s.ex("oracle span of <x^3 - x, x^2> to degree 8", || {
        Ok(oracle_span(&[q(&[0, -1, 0, 1]), xn(2)], 8).pivots() == vec![0, 2, 3, 4, 5, 6, 7, 8])
    });
    s.ex("oracle codimensions 1, 3, 3", || {
        Ok(oracle_codimension(&[q(&[0, -1, 0, 1]), xn(2)], 8)? == 1
            && oracle_codimension(&[xn(4), q(&[0, -1, 0, 1])], 12)? == 3
            && oracle_codimension(&[q(&[0, 0, -1, 0, 1]), xn(3)], 12)? == 3)
    });
    s.ex("oracle membership of x^7 - x and x", || {
        let g = [q(&[0, -1, 0, 1]), xn(2)];
        Ok(oracle_member(&q(&[0, -1, 0, 0, 0, 0, 0, 1]), &g, 10) && !oracle_member(&xn(1), &g, 10))
    });
    s.ex("oracle roots of <x^3 - x, x^2>", || {
        let r = oracle_multi_char_roots(&[q(&[0, -1, 0, 1]), xn(2)])?;
        Ok(same_root_set(&r, &[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)], ROOT_TOL))
    });
}

fn golden_ln(rows: &[(usize, i64)]) -> BTreeMap<usize, num_bigint::BigInt> {
    rows.iter().map(|&(k, v)| (k, v.into())).collect()
}

fn same_root_set(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    a.iter().all(|x| b.iter().any(|y| (x - y).norm() <= tol)) && b.iter().all(|y| a.iter().any(|x| (x - y).norm() <= tol))
}

fn random_monic<R: Rng>(deg: usize, rng: &mut R) -> Poly<Rat> {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-3..=3)).collect();
    c.push(1);
    q(&c)
}

fn coprime_degrees<R: Rng>(max: usize, rng: &mut R) -> (usize, usize) {
    loop {
        let m = rng.gen_range(2..max);
        let n = rng.gen_range(m + 1..=max);
        if num_integer::gcd(m, n) == 1 {
            return (m, n);
        }
    }
}

fn criterion_1() -> Result<(bool, String)> {
    let mut cases = vec![
        (q(&[0, -1, 0, 1]), xn(2), q(&[-1, 0, 1])),
        (q(&[0, 0, -1, 0, 1]), xn(3), q(&[0, 0, 1, 0, -1, 0, 1])),
    ];
    for m in 2..=8 {
        for n in m + 1..=9 {
            if num_integer::gcd(m, n) == 1 {
                cases.push((xn(m), xn(n), xn((m - 1) * (n - 1))));
            }
        }
    }
    let mut slowest = 0.0f64;
    for (p, qq, want) in &cases {
        let t0 = Instant::now();
        let got = char_poly_pair(p, qq)?;
        slowest = slowest.max(t0.elapsed().as_secs_f64());
        if &got != want {
            return Ok((false, format!("chi({p}, {qq}) = {got}")));
        }
    }
    Ok((slowest < CHI_TIME_LIMIT, format!("{} cases, slowest {slowest:.3}s", cases.len())))
}

/// The multi-generator example; its root set is compared with the oracle.
pub fn multi_example_gens() -> Vec<Poly<Rat>> {
    let mut p = vec![0i64; 13];
    p[12] = 1;
    p[6] = 3;
    vec![q(&p), xn(15), xn(10)]
}

fn criterion_2() -> Result<(bool, String)> {
    let gens = multi_example_gens();
    let t0 = Instant::now();
    let chi = char_poly_multi(&gens)?;
    let b = q(&[81, 0, 0, 0, 0, 0, 81, 0, 0, 0, 0, 0, 36, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 1]);
    let golden = chi == xn(50).mul(&b);
    let mut ours = complex_roots(&b)?;
    ours.push(Complex64::new(0.0, 0.0));
    let theirs = oracle_multi_char_roots(&gens)?;
    let agree = same_root_set(&ours, &theirs, ROOT_TOL);
    let secs = t0.elapsed().as_secs_f64();
    Ok((golden && agree && secs < MULTI_TIME_LIMIT, format!("golden {golden}, oracle roots {} agree {agree}, {secs:.1}s", theirs.len())))
}

fn criterion_3(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    for i in 0..20 {
        let (m, n) = coprime_degrees(6, rng);
        let (p, qq) = (random_monic(m, rng), random_monic(n, rng));
        let f = resultant_relation(&p, &qq)?;
        let fp = f.partial(0).substitute(&[p.clone(), qq.clone()]);
        let fq = f.partial(1).substitute(&[p.clone(), qq.clone()]);
        let chi = char_poly_pair(&p, &qq)?;
        let a = chi.mul(&qq.derivative());
        let b = chi.mul(&p.derivative());
        let ok = (fp == a && fq == b.neg()) || (fp == a.neg() && fq == b);
        if !ok {
            return Ok((false, format!("pair {i}: p = {p}, q = {qq}")));
        }
    }
    Ok((true, "20 pairs".into()))
}

fn criterion_4() -> Result<(bool, String)> {
    let t0 = Instant::now();
    let mut failed = Vec::new();
    for (name, (conds, gens, pts)) in intro_examples()? {
        if !intro_round_trip(&conds, &gens, &pts)? {
            failed.push(name);
        }
    }
    let secs = t0.elapsed().as_secs_f64();
    Ok((failed.is_empty() && secs < INTRO_TIME_LIMIT, format!("failed {failed:?}, {secs:.1}s")))
}

fn criterion_5(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    for _ in 0..20 {
        let (m, n) = coprime_degrees(7, rng);
        let (p, qq) = (random_monic(m, rng), random_monic(n, rng));
        let c = oracle_codimension(&[p.clone(), qq.clone()], (m - 1) * (n - 1) + n)?;
        if c != (m - 1) * (n - 1) / 2 {
            return Ok((false, format!("<{p}, {qq}> has oracle codimension {c}")));
        }
    }
    Ok((true, "20 pairs".into()))
}

fn labels_up_to_codim3() -> Vec<String> {
    realizable_labels().into_iter().filter(|l| ["codim1/", "codim2/", "codim3/"].iter().any(|p| l.starts_with(p))).collect()
}

fn numeric_size<F: Scalar>(a: &Subalgebra<F>) -> Result<(usize, usize)> {
    let sp = compute_spectrum(a, &RootMode::Numeric, ROOT_TOL)?;
    let r = spectrum_size_check(a, &sp)?;
    Ok((r.size, r.bound))
}

fn criterion_6(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let labels = labels_up_to_codim3();
    let mut max_ratio = 0.0f64;
    for _ in 0..50 {
        let label = &labels[rng.gen_range(0..labels.len())];
        let r = match rational_or_field_sample(label, rng)? {
            SampledCase::Rational(_, a) => numeric_size(&a),
            SampledCase::Field(_, _, a) => numeric_size(&a),
        };
        match r {
            Ok((size, bound)) => max_ratio = max_ratio.max(size as f64 / bound as f64),
            Err(e) => return Ok((false, format!("{label}: {e}"))),
        }
    }
    Ok((true, format!("50 instances, max |Sp|/2n = {max_ratio:.2}")))
}

fn random_base<R: Rng>(rng: &mut R) -> Result<Subalgebra<Rat>> {
    let labels: Vec<String> = realizable_labels().into_iter().filter(|l| l.starts_with("codim1/") || l.starts_with("codim2/")).collect();
    loop {
        if rng.gen_bool(0.2) {
            return Ok(alg(&[xn(1)]));
        }
        let label = &labels[rng.gen_range(0..labels.len())];
        if let SampledCase::Rational(_, a) = rational_or_field_sample(label, rng)? {
            return Ok(a);
        }
    }
}

fn criterion_7(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut done = 0;
    let mut attempts = 0;
    while done < 30 {
        attempts += 1;
        if attempts > 300 {
            return Ok((false, format!("only {done} extensions after {attempts} attempts")));
        }
        let b = random_base(rng)?;
        let alpha = Rat::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=3).into());
        let beta = Rat::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=3).into());
        let diff = rng.gen_bool(0.5);
        if diff && alpha == beta {
            continue;
        }
        let l = if diff { LinearFunctional::diff(alpha.clone(), beta.clone())? } else { LinearFunctional::derivative_at(1, alpha.clone())? };
        let ext = match sagbi_extend(b.sagbi()?, &l, Some(&alpha)) {
            Ok(e) => e,
            Err(Error::ConditionVanishesOnB) => continue,
            Err(e) => return Ok((false, format!("extension failed: {e}"))),
        };
        let a = Subalgebra::from_basis(ext);
        let sb = compute_spectrum(&b, &RootMode::Numeric, ROOT_TOL)?;
        let sa = compute_spectrum(&a, &RootMode::Numeric, ROOT_TOL)?;
        let mut allowed = sb.complex_points();
        allowed.push(alpha.to_complex());
        if diff {
            allowed.push(beta.to_complex());
        }
        for z in sa.complex_points() {
            if !allowed.iter().any(|w| (z - w).norm() <= ROOT_TOL) {
                return Ok((false, format!("ghost point {z} for {l} on {:?}", b.sagbi()?.elements().iter().map(|e| e.to_string()).collect::<Vec<_>>())));
            }
        }
        done += 1;
    }
    Ok((true, format!("30 extensions in {attempts} attempts")))
}

fn criterion_8(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut instances = 0;
    let mut points = 0;
    let mut failures = Vec::new();
    for label in labels_up_to_codim3() {
        let c = check_case(&label, 5, true, rng);
        instances += c.draws;
        points += c.dim_checks;
        if c.draws < 5 || !c.failures.is_empty() {
            failures.push(format!("{label}: {:?}", c.failures));
        }
    }
    Ok((failures.is_empty(), format!("{instances} instances, {points} points; {}", failures.join("; "))))
}

fn criterion_9() -> Result<(bool, String)> {
    let golden: Vec<(i64, Vec<(usize, i64)>)> = vec![
        (1, vec![(1, 1)]),
        (3, vec![(3, 1), (2, -1)]),
        (5, vec![(5, 1), (4, -2)]),
        (7, vec![(7, 1), (6, -3), (4, 3)]),
        (9, vec![(9, 1), (8, -4), (6, 11), (4, -11)]),
        (11, vec![(11, 1), (10, -5), (8, 26), (6, -78), (4, 78)]),
        (13, vec![(13, 1), (12, -6), (10, 50), (8, -294), (6, 882), (4, -882)]),
        (15, vec![(15, 1), (14, -7), (12, 85), (10, -816), (8, 4811), (6, -14433), (4, 14433)]),
        (17, vec![(17, 1), (16, -8), (14, 133), (12, -1881), (10, 18145), (8, -106989), (6, 320967), (4, -320967)]),
        (19, vec![(19, 1), (18, -9), (16, 196), (14, -3822), (12, 54399), (10, -524880), (8, 3094881), (6, -9284643), (4, 9284643)]),
    ];
    for (n, row) in golden {
        if ln_coefficients(n)? != golden_ln(&row) {
            return Ok((false, format!("row {n}")));
        }
    }
    Ok((true, "n = 1..19".into()))
}

fn check_round_trip<F: Scalar>(label: &str, a: &Subalgebra<F>) -> Result<Option<String>> {
    let c = classify(a)?;
    if c.label() != label {
        return Ok(Some(format!("{label} classified as {}", c.label())));
    }
    if a.type_tuple()? != c.claimed_type {
        return Ok(Some(format!("{label}: type {:?}, claimed {:?}", a.type_tuple()?, c.claimed_type)));
    }
    for e in a.sagbi()?.elements() {
        for l in &c.conditions {
            if !l.apply(e)?.is_zero() {
                return Ok(Some(format!("{label}: {l} does not vanish on {e}")));
            }
        }
    }
    if !construct_case(label, &c.parameters)?.sagbi()?.same_algebra(a.sagbi()?) {
        return Ok(Some(format!("{label}: recovered parameters give another algebra")));
    }
    Ok(None)
}

fn criterion_10(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let t0 = Instant::now();
    let labels = labels_up_to_codim3();
    let mut failures = Vec::new();
    for label in &labels {
        for _ in 0..3 {
            let r = match rational_or_field_sample(label, rng) {
                Ok(SampledCase::Rational(_, a)) => check_round_trip(label, &a),
                Ok(SampledCase::Field(_, _, a)) => check_round_trip(label, &a),
                Err(e) => Err(e),
            };
            match r {
                Ok(None) => {}
                Ok(Some(f)) => failures.push(f),
                Err(e) => failures.push(format!("{label}: {e}")),
            }
        }
    }
    let secs = t0.elapsed().as_secs_f64();
    Ok((failures.is_empty() && secs < ROUND_TRIP_TIME_LIMIT, format!("{} labels, {secs:.1}s; {}", labels.len(), failures.join("; "))))
}

fn criterion_11(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut members = 0;
    for i in 0..20 {
        let (m, n) = coprime_degrees(5, rng);
        let mut gens = vec![random_monic(m, rng), random_monic(n, rng)];
        if rng.gen_bool(0.3) {
            gens.push(random_monic(m + n - 1, rng));
        }
        let a = Subalgebra::from_generators(gens.clone());
        let b = a.sagbi()?;
        let cond = (m - 1) * (n - 1);
        for j in 0..10 {
            let f = if j % 2 == 0 {
                let mut f = Poly::constant(rat(rng.gen_range(-3..=3)));
                for _ in 0..3 {
                    let mut t = Poly::constant(rat(rng.gen_range(-3..=3)));
                    for _ in 0..rng.gen_range(1..=2) {
                        t = t.mul(&gens[rng.gen_range(0..gens.len())]);
                    }
                    f = f.add(&t);
                }
                if rng.gen_bool(0.3) {
                    f = f.add(&xn(rng.gen_range(1..=cond.max(2))));
                }
                f
            } else {
                random_monic(rng.gen_range(1..=10), rng)
            };
            let bound = f.deg() + cond + gens.iter().map(|g| g.deg()).sum::<usize>() + m * n;
            let s = b.contains(&f);
            let o = oracle_member(&f, &gens, bound);
            if s != o {
                return Ok((false, format!("algebra {i}: {f} sagbi {s} oracle {o}")));
            }
            members += s as usize;
        }
    }
    Ok((true, format!("200 probes, {members} members")))
}

/// Runs the suite. `quick` skips the slow criteria (2, 8 and 10).
pub fn run_checks(quick: bool) -> Vec<Check> {
    let mut s = Suite::default();
    examples(&mut s);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    s.run("criterion", "1 chi golden values", criterion_1);
    if !quick {
        s.run("criterion", "2 multi-generator chi", criterion_2);
    }
    s.run("criterion", "3 partial-derivative identity", || criterion_3(&mut rng));
    s.run("criterion", "4 introductory examples", criterion_4);
    s.run("criterion", "5 codimension law", || criterion_5(&mut rng));
    s.run("criterion", "6 spectrum size bound", || criterion_6(&mut rng));
    s.run("criterion", "7 no ghost points", || criterion_7(&mut rng));
    if !quick {
        s.run("criterion", "8 derivation dimensions", || criterion_8(&mut rng));
    }
    s.run("criterion", "9 L_n table", criterion_9);
    if !quick {
        s.run("criterion", "10 classification round trip", || criterion_10(&mut rng));
    }
    s.run("criterion", "11 membership equivalence", || criterion_11(&mut rng));
    s.checks
}

pub fn run_suite(quick: bool) -> Outcome {
    let t0 = Instant::now();
    let checks = run_checks(quick);
    let total = t0.elapsed().as_secs_f64();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut text = String::new();
    for c in &checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{mark}  {:<9} {:<width$} {:>7.2}s", c.group, c.name, c.seconds));
        if !c.detail.is_empty() {
            text.push_str(&format!("  {}", c.detail));
        }
        text.push('\n');
    }
    text.push_str(&format!("{} checks, {} failed, {total:.1}s", checks.len(), failed));
    let json = json!({
        "passed": failed == 0,
        "total_seconds": total,
        "checks": checks.iter().map(|c| json!({
            "group": c.group, "name": c.name, "passed": c.passed, "detail": c.detail, "seconds": c.seconds,
        })).collect::<Vec<_>>(),
    });
    Outcome { code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY }, text, json }
}
