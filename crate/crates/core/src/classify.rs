//! Classification of subalgebras of codimension at most three.
//!
//! Every case is a row of the table in `data/cases.json`: a family fixes the
//! shape of the conditions (which points carry differences or derivatives,
//! and which coefficients are free), and its branches split the parameter
//! space by the semigroup type. Templates are written in the parser's
//! template syntax, see [`crate::cli::parser`].
//!
//! Classifying an algebra means finding its exact spectrum, trying each
//! labelling of the spectrum by the family's point roles, solving for the
//! free coefficients from the space of conditions vanishing on the algebra,
//! and evaluating branch predicates.

use crate::arith::linalg::{nullspace, rank, rref};
use crate::arith::{FieldElem, NumberField, Poly, Rat, Scalar};
use crate::cli::parser::{parse_modulus, parse_template, Expr};
use crate::conditions::{kernel_subalgebra, power_bound, LinearFunctional, Subalgebra};
use crate::error::{Error, Result};
use crate::roots::RootMode;
use crate::semigroup::DegreeSemigroup;
use crate::spectrum::{compute_spectrum, PAIRING_TOL};
use rand::Rng;
use serde::Deserialize;
use serde_json::{json, Value as Json};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

const CASES_JSON: &str = include_str!("../data/cases.json");

#[derive(Deserialize, Clone, Debug)]
struct RawTable {
    version: u32,
    families: Vec<RawFamily>,
}

#[derive(Deserialize, Clone, Debug)]
struct RawFamily {
    family: String,
    codim: usize,
    points: Vec<String>,
    unknowns: Vec<String>,
    conditions: Vec<String>,
    side: Vec<String>,
    lets: Vec<(String, String)>,
    symmetries: Vec<String>,
    branches: Vec<RawBranch>,
}

#[derive(Deserialize, Clone, Debug)]
struct RawBranch {
    id: String,
    when: Vec<String>,
    #[serde(rename = "type")]
    type_tuple: Vec<usize>,
    basis: Option<Vec<String>>,
    sample: Option<RawSample>,
    #[serde(default = "yes")]
    realizable: bool,
}

fn yes() -> bool {
    true
}

#[derive(Deserialize, Clone, Debug)]
struct RawSample {
    field: Option<String>,
    #[serde(default)]
    free: Vec<String>,
    #[serde(default)]
    set: Vec<(String, String)>,
}

/// `lhs == rhs` or `lhs != rhs`, stored as `lhs - rhs`.
#[derive(Clone, Debug)]
struct Predicate {
    diff: Expr,
    equal: bool,
}

impl Predicate {
    fn parse(src: &str) -> Result<Self> {
        let (op, equal) = if src.contains("==") { ("==", true) } else if src.contains("!=") { ("!=", false) } else {
            return Err(Error::Invalid(format!("predicate without comparison: {src}")));
        };
        let (l, r) = src.split_once(op).unwrap();
        let diff = Expr::Sub(Box::new(parse_template(l)?), Box::new(parse_template(r)?));
        Ok(Predicate { diff, equal })
    }
}

/// One branch of a family: predicates, predicted type and, when known, a
/// basis of the algebra.
#[derive(Clone, Debug)]
pub struct Branch {
    pub id: String,
    pub when: Vec<String>,
    pub type_tuple: Vec<usize>,
    pub basis: Option<Vec<String>>,
    /// `false` marks a branch whose predicates cannot all hold.
    pub realizable: bool,
    pub sample_field: Option<String>,
    preds: Vec<Predicate>,
    basis_exprs: Option<Vec<Expr>>,
    sample: Option<(Vec<String>, Vec<(String, Expr)>)>,
}

/// A family of condition shapes sharing point roles and unknowns.
#[derive(Clone, Debug)]
pub struct Family {
    pub name: String,
    pub codim: usize,
    pub points: Vec<String>,
    pub unknowns: Vec<String>,
    pub conditions: Vec<String>,
    pub symmetries: Vec<String>,
    pub branches: Vec<Branch>,
    cond_exprs: Vec<Expr>,
    cond_unknowns: Vec<Vec<String>>,
    side: Vec<Expr>,
    lets: Vec<(String, Expr)>,
}

impl Family {
    pub fn branch(&self, id: &str) -> Option<&Branch> {
        self.branches.iter().find(|b| b.id == id)
    }

    pub fn labels(&self) -> Vec<String> {
        self.branches.iter().map(|b| format!("{}/{}", self.name, b.id)).collect()
    }
}

/// The parsed case table.
#[derive(Clone, Debug)]
pub struct CaseTable {
    pub version: u32,
    pub families: Vec<Family>,
}

impl CaseTable {
    /// Looks up `family/branch`.
    pub fn lookup(&self, label: &str) -> Result<(&Family, &Branch)> {
        let (fam, br) = label.rsplit_once('/').ok_or_else(|| Error::NoMatchingCase(label.to_string()))?;
        let f = self.families.iter().find(|f| f.name == fam).ok_or_else(|| Error::NoMatchingCase(label.to_string()))?;
        let b = f.branch(br).ok_or_else(|| Error::NoMatchingCase(label.to_string()))?;
        Ok((f, b))
    }

    pub fn labels(&self) -> Vec<String> {
        self.families.iter().flat_map(|f| f.labels()).collect()
    }
}

fn compile(raw: RawTable) -> Result<CaseTable> {
    let mut families = Vec::new();
    for f in raw.families {
        let cond_exprs = f.conditions.iter().map(|c| parse_template(c)).collect::<Result<Vec<_>>>()?;
        let cond_unknowns = cond_exprs
            .iter()
            .map(|e| {
                let mut s = BTreeSet::new();
                e.symbols(&mut s);
                f.unknowns.iter().filter(|u| s.contains(*u)).cloned().collect()
            })
            .collect();
        let side = f.side.iter().map(|c| parse_template(c)).collect::<Result<Vec<_>>>()?;
        let lets = f.lets.iter().map(|(n, e)| Ok((n.clone(), parse_template(e)?))).collect::<Result<Vec<_>>>()?;
        let mut branches = Vec::new();
        for b in f.branches {
            let preds = b.when.iter().map(|w| Predicate::parse(w)).collect::<Result<Vec<_>>>()?;
            let basis_exprs = match &b.basis {
                Some(v) => Some(v.iter().map(|e| parse_template(e)).collect::<Result<Vec<_>>>()?),
                None => None,
            };
            let sample = match &b.sample {
                Some(s) => Some((
                    s.free.clone(),
                    s.set.iter().map(|(n, e)| Ok((n.clone(), parse_template(e)?))).collect::<Result<Vec<_>>>()?,
                )),
                None => None,
            };
            branches.push(Branch {
                id: b.id,
                when: b.when,
                type_tuple: b.type_tuple,
                basis: b.basis,
                realizable: b.realizable,
                sample_field: b.sample.and_then(|s| s.field),
                preds,
                basis_exprs,
                sample,
            });
        }
        families.push(Family {
            name: f.family,
            codim: f.codim,
            points: f.points,
            unknowns: f.unknowns,
            conditions: f.conditions,
            symmetries: f.symmetries,
            branches,
            cond_exprs,
            cond_unknowns,
            side,
            lets,
        });
    }
    Ok(CaseTable { version: raw.version, families })
}

/// The built-in case table.
pub fn case_table() -> &'static CaseTable {
    static TABLE: OnceLock<CaseTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let raw: RawTable = serde_json::from_str(CASES_JSON).expect("case table is valid JSON");
        compile(raw).expect("case table templates parse")
    })
}

/// Values of template expressions.
#[derive(Clone, Debug)]
enum Val<F: Scalar> {
    Poly(Poly<F>),
    /// Terms `coeff * f^(order)(point)`.
    Lin(Vec<(usize, F, F)>),
    Undefined(String),
}

struct Env<F: Scalar> {
    ctx: F::Ctx,
    t: Option<F>,
    vars: HashMap<String, Val<F>>,
}

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}

fn as_const<F: Scalar>(p: &Poly<F>) -> Option<F> {
    if p.is_constant() {
        Some(p.coeff(0))
    } else {
        None
    }
}

fn scale_lin<F: Scalar>(l: &[(usize, F, F)], c: &F) -> Vec<(usize, F, F)> {
    l.iter().map(|(o, p, k)| (*o, p.clone(), k.times(c))).collect()
}

impl<F: Scalar> Env<F> {
    fn new(ctx: F::Ctx, t: Option<F>) -> Self {
        Env { ctx, t, vars: HashMap::new() }
    }

    fn set(&mut self, name: &str, v: F) {
        self.vars.insert(name.to_string(), Val::Poly(Poly::constant(v)));
    }

    fn scalar(&self, name: &str) -> Option<F> {
        match self.vars.get(name) {
            Some(Val::Poly(p)) => as_const(p),
            _ => None,
        }
    }

    fn eval(&self, e: &Expr) -> Result<Val<F>> {
        use Val::*;
        Ok(match e {
            Expr::Num(r) => Poly(crate::arith::Poly::constant(F::from_rat(&self.ctx, r))),
            Expr::X => Poly(crate::arith::Poly::x(&self.ctx)),
            Expr::T => match &self.t {
                Some(t) => Poly(crate::arith::Poly::constant(t.clone())),
                None => return Err(Error::UnknownSymbol('t')),
            },
            Expr::Ident(n) => match self.vars.get(n) {
                Some(Undefined(why)) => return bad(format!("{n} is undefined: {why}")),
                Some(v) => v.clone(),
                None => return bad(format!("unknown name {n}")),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                let sub = matches!(e, Expr::Sub(..));
                match (x, y) {
                    (Poly(p), Poly(q)) => Poly(if sub { p.sub(&q) } else { p.add(&q) }),
                    (Lin(mut l), Lin(m)) => {
                        let sign = if sub { F::one(&self.ctx).negated() } else { F::one(&self.ctx) };
                        l.extend(scale_lin(&m, &sign));
                        Lin(l)
                    }
                    (Lin(l), Poly(p)) if p.is_zero() => Lin(l),
                    (Poly(p), Lin(l)) if p.is_zero() => {
                        if sub {
                            Lin(scale_lin(&l, &F::one(&self.ctx).negated()))
                        } else {
                            Lin(l)
                        }
                    }
                    _ => return bad("cannot add a polynomial to a functional"),
                }
            }
            Expr::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Poly(p), Poly(q)) => Poly(p.mul(&q)),
                (Poly(p), Lin(l)) | (Lin(l), Poly(p)) => match as_const(&p) {
                    Some(c) => Lin(scale_lin(&l, &c)),
                    None => return bad("functional times a non-constant"),
                },
                _ => return bad("product of functionals"),
            },
            Expr::Neg(a) => match self.eval(a)? {
                Poly(p) => Poly(p.neg()),
                Lin(l) => Lin(scale_lin(&l, &F::one(&self.ctx).negated())),
                Undefined(w) => Undefined(w),
            },
            Expr::Pow(a, k) => match self.eval(a)? {
                Poly(p) => Poly(p.pow(*k)),
                _ => return bad("power of a functional"),
            },
            Expr::Div(a, b) => {
                let d = match self.eval(b)? {
                    Poly(q) => as_const(&q).ok_or_else(|| Error::Invalid("division by a non-constant".into()))?,
                    _ => return bad("division by a functional"),
                };
                let inv = d.inverse().map_err(|_| Error::Invalid("division by zero".into()))?;
                match self.eval(a)? {
                    Poly(p) => Poly(p.scale(&inv)),
                    Lin(l) => Lin(scale_lin(&l, &inv)),
                    Undefined(w) => Undefined(w),
                }
            }
            Expr::Call(name, arg) => {
                let target = match self.vars.get(name) {
                    Some(Undefined(why)) => return bad(format!("{name} is undefined: {why}")),
                    Some(v) => v.clone(),
                    None => return bad(format!("unknown name {name}")),
                };
                let arg = match self.eval(arg)? {
                    Poly(p) => p,
                    _ => return bad("call argument must be a polynomial"),
                };
                match target {
                    Poly(p) => {
                        let c = as_const(&arg).ok_or_else(|| Error::Invalid("evaluation at a non-constant".into()))?;
                        Poly(crate::arith::Poly::constant(p.eval(&c)))
                    }
                    Lin(l) => Poly(crate::arith::Poly::constant(apply_lin(&l, &arg, &self.ctx))),
                    Undefined(_) => unreachable!(),
                }
            }
            Expr::Deriv(k, p) => match self.eval(p)? {
                Poly(q) => {
                    let c = as_const(&q).ok_or_else(|| Error::Invalid("derivative at a non-constant".into()))?;
                    Lin(vec![(*k, c, F::one(&self.ctx))])
                }
                _ => return bad("derivative point must be a scalar"),
            },
        })
    }

    fn eval_scalar(&self, e: &Expr) -> Result<F> {
        match self.eval(e)? {
            Val::Poly(p) => as_const(&p).ok_or_else(|| Error::Invalid("expected a constant".into())),
            _ => bad("expected a constant"),
        }
    }

    fn eval_poly(&self, e: &Expr) -> Result<Poly<F>> {
        match self.eval(e)? {
            Val::Poly(p) => Ok(p),
            _ => bad("expected a polynomial"),
        }
    }

    fn eval_lin(&self, e: &Expr) -> Result<Vec<(usize, F, F)>> {
        match self.eval(e)? {
            Val::Lin(l) => Ok(merge_lin(l)),
            Val::Poly(p) if p.is_zero() => Ok(vec![]),
            _ => bad("expected a functional"),
        }
    }

    fn holds(&self, p: &Predicate) -> Result<bool> {
        Ok(self.eval_scalar(&p.diff)?.is_zero() == p.equal)
    }

    fn bind_lets(&mut self, lets: &[(String, Expr)]) {
        for (n, e) in lets {
            let v = self.eval(e).unwrap_or_else(|err| Val::Undefined(err.to_string()));
            self.vars.insert(n.clone(), v);
        }
    }
}

fn apply_lin<F: Scalar>(l: &[(usize, F, F)], p: &Poly<F>, ctx: &F::Ctx) -> F {
    l.iter().fold(F::zero(ctx), |acc, (o, pt, c)| acc.plus(&c.times(&p.nth_derivative(*o).eval(pt))))
}

fn merge_lin<F: Scalar>(l: Vec<(usize, F, F)>) -> Vec<(usize, F, F)> {
    let mut out: Vec<(usize, F, F)> = Vec::new();
    for (o, p, c) in l {
        match out.iter_mut().find(|(o2, p2, _)| *o2 == o && *p2 == p) {
            Some(t) => t.2 = t.2.plus(&c),
            None => out.push((o, p, c)),
        }
    }
    out.retain(|t| !t.2.is_zero());
    out
}

fn to_functional<F: Scalar>(l: &[(usize, F, F)]) -> Result<LinearFunctional<F>> {
    let l = merge_lin(l.to_vec());
    if l.len() == 2 && l.iter().all(|t| t.0 == 0) {
        let one = F::one(&l[0].2.ctx());
        if l[0].2 == one && l[1].2 == one.negated() {
            return LinearFunctional::diff(l[0].1.clone(), l[1].1.clone());
        }
        if l[1].2 == one && l[0].2 == one.negated() {
            return LinearFunctional::diff(l[1].1.clone(), l[0].1.clone());
        }
    }
    LinearFunctional::deriv(l)
}

/// Binds condition functionals `C1..Cn`, side checks and lets for a family.
fn bind_family<F: Scalar>(fam: &Family, env: &mut Env<F>) -> Result<Vec<LinearFunctional<F>>> {
    let mut conds = Vec::new();
    for (i, e) in fam.cond_exprs.iter().enumerate() {
        let l = env.eval_lin(e)?;
        env.vars.insert(format!("C{}", i + 1), Val::Lin(l.clone()));
        conds.push(to_functional(&l)?);
    }
    env.bind_lets(&fam.lets);
    Ok(conds)
}

fn side_ok<F: Scalar>(fam: &Family, env: &Env<F>) -> bool {
    fam.side.iter().all(|e| env.eval_scalar(e).map(|v| !v.is_zero()).unwrap_or(false))
}

fn conditions_rank<F: Scalar>(conds: &[LinearFunctional<F>]) -> usize {
    let bound = conds.iter().map(|c| c.max_order()).max().unwrap_or(0) + 2 * conds.len() + 8;
    let rows: Vec<Vec<F>> = conds.iter().map(|c| c.monomial_row(bound)).collect();
    rank(&rows)
}

/// Result of [`classify`].
#[derive(Clone, Debug)]
pub struct Classification<F: Scalar> {
    pub codimension: usize,
    /// Minimal generator degrees of the algebra itself.
    pub type_tuple: Vec<usize>,
    /// Type predicted by the matched branch.
    pub claimed_type: Vec<usize>,
    pub spectrum_size: usize,
    pub family: String,
    pub branch: String,
    /// Point roles followed by solved unknowns.
    pub parameters: Vec<(String, F)>,
    pub conditions: Vec<LinearFunctional<F>>,
    pub basis: Vec<Poly<F>>,
    /// Whether `basis` comes from the case table rather than the SAGBI basis.
    pub basis_from_table: bool,
}

impl<F: Scalar> Classification<F> {
    pub fn label(&self) -> String {
        if self.branch.is_empty() {
            self.family.clone()
        } else {
            format!("{}/{}", self.family, self.branch)
        }
    }

    pub fn parameter(&self, name: &str) -> Option<&F> {
        self.parameters.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Json {
        json!({
            "label": self.label(),
            "family": self.family,
            "branch": self.branch,
            "codimension": self.codimension,
            "type": self.type_tuple,
            "claimed_type": self.claimed_type,
            "spectrum_size": self.spectrum_size,
            "parameters": self.parameters.iter().map(|(n, v)| json!({"name": n, "value": v.to_string()})).collect::<Vec<_>>(),
            "conditions": self.conditions.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "basis": self.basis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "basis_from_table": self.basis_from_table,
        })
    }
}

/// Minimal generator degrees of the degree semigroup of `a`.
pub fn type_of<F: Scalar>(a: &Subalgebra<F>) -> Result<Vec<usize>> {
    a.type_tuple()
}

/// Values of derivatives at spectrum points on a fixed linear basis of `A`.
struct Evaluator<'a, F: Scalar> {
    basis: &'a [Poly<F>],
    derivs: Vec<Vec<Poly<F>>>,
    cache: HashMap<(usize, usize), Vec<F>>,
    points: &'a [F],
    ctx: F::Ctx,
}

impl<'a, F: Scalar> Evaluator<'a, F> {
    fn new(basis: &'a [Poly<F>], points: &'a [F], ctx: F::Ctx) -> Self {
        Evaluator { basis, derivs: basis.iter().map(|p| vec![p.clone()]).collect(), cache: HashMap::new(), points, ctx }
    }

    fn column(&mut self, order: usize, point: &F) -> Vec<F> {
        let idx = self.points.iter().position(|p| p == point);
        if let Some(i) = idx {
            if let Some(v) = self.cache.get(&(order, i)) {
                return v.clone();
            }
        }
        for d in self.derivs.iter_mut() {
            while d.len() <= order {
                let next = d.last().unwrap().derivative();
                d.push(next);
            }
        }
        let v: Vec<F> = self.derivs.iter().map(|d| d[order].eval(point)).collect();
        if let Some(i) = idx {
            self.cache.insert((order, i), v.clone());
        }
        v
    }

    fn vector(&mut self, l: &[(usize, F, F)]) -> Vec<F> {
        let mut acc = vec![F::zero(&self.ctx); self.basis.len()];
        for (o, p, c) in l {
            let col = self.column(*o, p);
            for (a, v) in acc.iter_mut().zip(col) {
                *a = a.plus(&c.times(&v));
            }
        }
        acc
    }
}

fn probe_values<F: Scalar>(ctx: &F::Ctx, n: usize) -> Vec<F> {
    [2i64, 3, 5, 7, 11, 13].iter().take(n).map(|v| F::from_i64(ctx, *v)).collect()
}

/// Solves the family's unknowns for one labelling. Returns `None` when the
/// labelling is inconsistent with `A`.
fn solve_labelling<F: Scalar>(fam: &Family, env: &mut Env<F>, ev: &mut Evaluator<F>) -> Result<Option<()>> {
    let ctx = env.ctx.clone();
    let zero = F::zero(&ctx);
    for (ci, e) in fam.cond_exprs.iter().enumerate() {
        let unk: Vec<String> = fam.cond_unknowns[ci].iter().filter(|u| env.scalar(u).is_none()).cloned().collect();
        if unk.is_empty() {
            let l = env.eval_lin(e)?;
            if l.is_empty() || ev.vector(&l).iter().any(|v| !v.is_zero()) {
                return Ok(None);
            }
            continue;
        }
        let at = |env: &mut Env<F>, vals: &[F]| -> Result<Vec<(usize, F, F)>> {
            for (u, v) in unk.iter().zip(vals) {
                env.set(u, v.clone());
            }
            env.eval_lin(e)
        };
        let k = unk.len();
        let f0 = at(env, &vec![zero.clone(); k])?;
        let mut cols = Vec::new();
        let mut dls = Vec::new();
        for j in 0..k {
            let mut vals = vec![zero.clone(); k];
            vals[j] = F::one(&ctx);
            let fj = at(env, &vals)?;
            let mut d = fj;
            d.extend(scale_lin(&f0, &F::one(&ctx).negated()));
            let d = merge_lin(d);
            cols.push(ev.vector(&d));
            dls.push(d);
        }
        let probe = probe_values(&ctx, k);
        let fp = at(env, &probe)?;
        let mut expect = f0.clone();
        for (d, r) in dls.iter().zip(&probe) {
            expect.extend(scale_lin(d, r));
        }
        expect.extend(scale_lin(&fp, &F::one(&ctx).negated()));
        if !merge_lin(expect).is_empty() {
            return bad(format!("condition {} of {} is not affine in its unknowns", ci + 1, fam.name));
        }
        let nrows = ev.basis.len();
        let sol = if f0.is_empty() {
            let m: Vec<Vec<F>> = (0..nrows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
            let ns = nullspace(&m, k, &ctx);
            if ns.len() != 1 {
                return Ok(None);
            }
            let v = &ns[0];
            let lead = match v.iter().find(|c| !c.is_zero()) {
                Some(l) => l.inverse()?,
                None => return Ok(None),
            };
            v.iter().map(|c| c.times(&lead)).collect::<Vec<F>>()
        } else {
            let v0 = ev.vector(&f0);
            let mut m: Vec<Vec<F>> =
                (0..nrows).map(|r| cols.iter().map(|c| c[r].clone()).chain([v0[r].negated()]).collect()).collect();
            let piv = rref(&mut m);
            if piv.contains(&k) || piv.len() != k {
                return Ok(None);
            }
            (0..k).map(|j| m[j][k].clone()).collect()
        };
        for (u, v) in unk.iter().zip(sol) {
            env.set(u, v);
        }
    }
    Ok(Some(()))
}

fn permutations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, k, &mut cur, &mut out);
    out
}

struct Candidate<F: Scalar> {
    env: Env<F>,
    conds: Vec<LinearFunctional<F>>,
}

/// Classifies `a` against the case table: codimension, type, exact
/// spectrum, the matching branch and its parameters.
pub fn classify<F: Scalar>(a: &Subalgebra<F>) -> Result<Classification<F>> {
    let ctx = a.ctx();
    let basis = a.sagbi()?;
    let n = basis.genus();
    let type_tuple = a.type_tuple()?;
    if n == 0 {
        return Ok(Classification {
            codimension: 0,
            type_tuple: type_tuple.clone(),
            claimed_type: vec![1],
            spectrum_size: 0,
            family: "codim0".into(),
            branch: String::new(),
            parameters: vec![],
            conditions: vec![],
            basis: vec![Poly::x(&ctx)],
            basis_from_table: false,
        });
    }
    if n > 3 {
        return Err(Error::UnsupportedCodimension(n));
    }
    let spec = compute_spectrum(a, &RootMode::Field(Vec::new()), PAIRING_TOL)?;
    let points = spec.exact_points().ok_or(Error::InexactSpectrum)?;
    let s = points.len();
    let big_n = power_bound(a, &points)?;
    let bound = s * (big_n + 6) + 2;
    let lin_basis = basis.linear_basis(bound);
    let mut ev = Evaluator::new(&lin_basis, &points, ctx.clone());
    let table = case_table();
    for fam in table.families.iter().filter(|f| f.codim == n && f.points.len() == s) {
        let mut cands: Vec<Candidate<F>> = Vec::new();
        for perm in permutations(s, s) {
            let mut env = Env::new(ctx.clone(), None);
            for (role, &i) in fam.points.iter().zip(&perm) {
                env.set(role, points[i].clone());
            }
            if solve_labelling(fam, &mut env, &mut ev)?.is_none() {
                continue;
            }
            let conds = match bind_family(fam, &mut env) {
                Ok(c) => c,
                Err(_) => continue,
            };
            if conditions_rank(&conds) != n || !side_ok(fam, &env) {
                continue;
            }
            cands.push(Candidate { env, conds });
        }
        for br in &fam.branches {
            for c in &cands {
                if !br.preds.iter().all(|p| c.env.holds(p).unwrap_or(false)) {
                    continue;
                }
                let mut parameters = Vec::new();
                for name in fam.points.iter().chain(&fam.unknowns) {
                    if let Some(v) = c.env.scalar(name) {
                        parameters.push((name.clone(), v));
                    }
                }
                let table_basis = match &br.basis_exprs {
                    Some(es) => es.iter().map(|e| c.env.eval_poly(e)).collect::<Result<Vec<_>>>().ok(),
                    None => None,
                };
                let basis_from_table = table_basis.is_some();
                return Ok(Classification {
                    codimension: n,
                    type_tuple,
                    claimed_type: br.type_tuple.clone(),
                    spectrum_size: s,
                    family: fam.name.clone(),
                    branch: br.id.clone(),
                    parameters,
                    conditions: c.conds.clone(),
                    basis: table_basis.unwrap_or_else(|| basis.canonical_elements()),
                    basis_from_table,
                });
            }
        }
    }
    Err(Error::NoMatchingCase(format!("codimension {n}, spectrum of size {s}, type {type_tuple:?}")))
}

/// Builds the algebra of case `label` (`family/branch`) from parameter
/// values. Fails with [`Error::ParameterDegeneracy`] when the values do not
/// select that branch.
pub fn construct_case<F: Scalar>(label: &str, params: &[(String, F)]) -> Result<Subalgebra<F>> {
    let (fam, br) = case_table().lookup(label)?;
    let ctx = params.first().map(|(_, v)| v.ctx()).ok_or_else(|| Error::Invalid("no parameters".into()))?;
    let mut env = Env::new(ctx, None);
    for (n, v) in params {
        env.set(n, v.clone());
    }
    let mut pts = Vec::new();
    for name in fam.points.iter().chain(&fam.unknowns) {
        match env.scalar(name) {
            Some(v) if fam.points.contains(name) => pts.push(v),
            Some(_) => {}
            None => return bad(format!("missing parameter {name} for {label}")),
        }
    }
    for i in 0..pts.len() {
        for j in 0..i {
            if pts[i] == pts[j] {
                return Err(Error::ParameterDegeneracy(format!("points {} and {} coincide", fam.points[j], fam.points[i])));
            }
        }
    }
    let conds = bind_family(fam, &mut env).map_err(|e| Error::ParameterDegeneracy(e.to_string()))?;
    if !side_ok(fam, &env) {
        return Err(Error::ParameterDegeneracy("a side condition vanishes".into()));
    }
    let independent = conditions_rank(&conds);
    if independent != fam.codim {
        return Err(Error::DegenerateConditions { given: conds.len(), independent });
    }
    let first = fam.branches.iter().find(|b| b.preds.iter().all(|p| env.holds(p).unwrap_or(false)));
    match first {
        Some(b) if b.id == br.id => {}
        Some(b) => return Err(Error::ParameterDegeneracy(format!("parameters select branch {} rather than {}", b.id, br.id))),
        None => return Err(Error::ParameterDegeneracy(format!("no branch of {} matches", fam.name))),
    }
    match &br.basis_exprs {
        Some(es) => {
            let gens = es.iter().map(|e| env.eval_poly(e)).collect::<Result<Vec<_>>>()?;
            for (g, src) in gens.iter().zip(br.basis.as_ref().unwrap()) {
                for (k, c) in conds.iter().enumerate() {
                    if !c.apply(g)?.is_zero() {
                        return bad(format!("{label}: basis element {src} violates condition {}", k + 1));
                    }
                }
            }
            let degs: Vec<usize> = gens.iter().map(|g| g.deg()).collect();
            if degs != br.type_tuple {
                return bad(format!("{label}: basis degrees {degs:?} differ from type {:?}", br.type_tuple));
            }
            if DegreeSemigroup::from_degrees(&degs)?.genus() != fam.codim {
                return bad(format!("{label}: type {degs:?} has the wrong genus"));
            }
            Ok(Subalgebra::from_generators(gens).with_conditions(conds))
        }
        None => kernel_subalgebra(&conds),
    }
}

/// The number field a branch's sampler needs, if any.
pub fn sample_field(label: &str) -> Result<Option<Arc<NumberField>>> {
    let (_, br) = case_table().lookup(label)?;
    match br.sample_field.as_deref() {
        None => Ok(None),
        Some(spec) => {
            if let Some(n) = spec.strip_prefix("cyclotomic:") {
                let n: usize = n.parse().map_err(|_| Error::Invalid(format!("bad field {spec}")))?;
                Ok(Some(NumberField::cyclotomic(n)))
            } else if let Some(m) = spec.strip_prefix("modulus:") {
                Ok(Some(NumberField::new(parse_modulus(m)?, m)?))
            } else {
                bad(format!("bad field {spec}"))
            }
        }
    }
}

/// A random small nonzero rational.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rat {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-9i64..=9);
    }
    crate::arith::rat_frac(n, rng.gen_range(1i64..=4))
}

/// Draws parameters for `label` from its sampler: free names get random
/// small nonzero rationals, the rest are computed. `t` is the field
/// generator when the sampler needs one.
pub fn sample_parameters<F: Scalar, R: Rng>(label: &str, ctx: &F::Ctx, t: Option<F>, rng: &mut R) -> Result<Vec<(String, F)>> {
    let (fam, br) = case_table().lookup(label)?;
    let mut env = Env::new(ctx.clone(), t);
    let (free, set) = match &br.sample {
        Some((free, set)) => (free.clone(), set.clone()),
        None => (fam.points.iter().chain(&fam.unknowns).cloned().collect(), vec![]),
    };
    for n in &free {
        env.set(n, F::from_rat(ctx, &random_rational(rng)));
    }
    for (n, e) in &set {
        let v = env.eval_scalar(e)?;
        env.set(n, v);
    }
    fam.points
        .iter()
        .chain(&fam.unknowns)
        .map(|n| env.scalar(n).map(|v| (n.clone(), v)).ok_or_else(|| Error::Invalid(format!("sampler leaves {n} unset"))))
        .collect()
}

/// Samples parameters for `label` and builds the algebra, retrying on
/// degenerate draws.
pub fn sample_case<F: Scalar, R: Rng>(
    label: &str,
    ctx: &F::Ctx,
    t: Option<F>,
    rng: &mut R,
) -> Result<(Vec<(String, F)>, Subalgebra<F>)> {
    let mut last = Error::Invalid("no draws".into());
    for _ in 0..50 {
        let params = match sample_parameters(label, ctx, t.clone(), rng) {
            Ok(p) => p,
            Err(e) => {
                last = e;
                continue;
            }
        };
        match construct_case(label, &params) {
            Ok(a) => return Ok((params, a)),
            Err(e @ (Error::ParameterDegeneracy(_) | Error::DegenerateConditions { .. })) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// Samples a rational or number-field instance of `label` and classifies it;
/// returns the sampled label's classification summary.
pub fn rational_or_field_sample<R: Rng>(label: &str, rng: &mut R) -> Result<SampledCase> {
    match sample_field(label)? {
        None => {
            let (params, a) = sample_case::<Rat, R>(label, &(), None, rng)?;
            Ok(SampledCase::Rational(params, a))
        }
        Some(field) => {
            let t = FieldElem::generator(&field);
            let (params, a) = sample_case::<FieldElem, R>(label, &field, Some(t), rng)?;
            Ok(SampledCase::Field(field, params, a))
        }
    }
}

/// A sampled case instance.
pub enum SampledCase {
    Rational(Vec<(String, Rat)>, Subalgebra<Rat>),
    Field(Arc<NumberField>, Vec<(String, FieldElem)>, Subalgebra<FieldElem>),
}

/// Outcome of checking one case-table branch on random draws.
#[derive(Clone, Debug, Default)]
pub struct CaseCheck {
    pub label: String,
    pub draws: usize,
    /// Spectrum points at which derivation dimensions were compared.
    pub dim_checks: usize,
    pub failures: Vec<String>,
}

impl CaseCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.draws > 0
    }
}

fn check_instance<F: Scalar>(label: &str, a: &Subalgebra<F>, dims: bool, out: &mut CaseCheck) -> Result<()> {
    let (_, br) = case_table().lookup(label)?;
    let ty = a.type_tuple()?;
    if ty != br.type_tuple {
        out.failures.push(format!("type {ty:?}, expected {:?}", br.type_tuple));
    }
    let c = classify(a)?;
    if c.label() != label {
        out.failures.push(format!("classified as {}", c.label()));
        return Ok(());
    }
    if c.type_tuple != c.claimed_type {
        out.failures.push(format!("claimed type {:?} but computed {:?}", c.claimed_type, c.type_tuple));
    }
    let back = construct_case(label, &c.parameters)?;
    if !back.sagbi()?.same_algebra(a.sagbi()?) {
        out.failures.push("recovered parameters build a different algebra".into());
    }
    if dims {
        let spec = compute_spectrum(a, &RootMode::Field(Vec::new()), PAIRING_TOL)?;
        for p in spec.exact_points().ok_or(Error::InexactSpectrum)? {
            let cluster = crate::derivations::cluster_of(a, &p, &spec)?;
            let r = crate::derivations::conjecture_dim_check(a, &p, &cluster, true)?;
            out.dim_checks += 1;
            if !r.equal {
                out.failures.push(format!("at {}: k_alpha {} but {} derivative combinations", r.alpha, r.k_alpha, r.dim_combo));
            }
        }
    }
    Ok(())
}

/// Samples `draws` instances of `label` and checks the claimed type, the
/// classification round trip and, if `dims` is set, equality of derivation
/// dimensions at every spectrum point.
pub fn check_case<R: Rng>(label: &str, draws: usize, dims: bool, rng: &mut R) -> CaseCheck {
    let mut out = CaseCheck { label: label.to_string(), ..Default::default() };
    for _ in 0..draws {
        let r = match rational_or_field_sample(label, rng) {
            Ok(SampledCase::Rational(_, a)) => check_instance(label, &a, dims, &mut out),
            Ok(SampledCase::Field(_, _, a)) => check_instance(label, &a, dims, &mut out),
            Err(e) => Err(e),
        };
        match r {
            Ok(()) => out.draws += 1,
            Err(e) => out.failures.push(e.to_string()),
        }
    }
    out
}

/// Labels of all branches whose predicates can hold.
pub fn realizable_labels() -> Vec<String> {
    let t = case_table();
    t.families
        .iter()
        .flat_map(|f| f.branches.iter().filter(|b| b.realizable).map(move |b| format!("{}/{}", f.name, b.id)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn table_loads() {
        let t = case_table();
        assert_eq!(t.version, 1);
        assert!(t.labels().contains(&"codim2/s=3/deriv/T345".to_string()));
        for f in &t.families {
            assert_eq!(f.conditions.len(), f.codim, "{}", f.name);
        }
    }

    #[test]
    fn codim2_deriv_example() {
        let params = vec![("alpha".to_string(), rat(0)), ("beta".to_string(), rat(2)), ("gamma".to_string(), rat(5))];
        let a = construct_case("codim2/s=3/deriv/T345", &params).unwrap();
        assert_eq!(a.type_tuple().unwrap(), vec![3, 4, 5]);
        let c = classify(&a).unwrap();
        assert_eq!(c.label(), "codim2/s=3/deriv/T345");
        assert_eq!(c.parameter("gamma"), Some(&rat(5)));
    }

    #[test]
    fn degenerate_parameters_rejected() {
        let params = vec![("alpha".to_string(), rat(0)), ("beta".to_string(), rat(2)), ("gamma".to_string(), rat(1))];
        assert!(matches!(construct_case("codim2/s=3/deriv/T345", &params), Err(Error::ParameterDegeneracy(_))));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_case::<Rat, _>("codim2/s=3/deriv/T25", &(), None, &mut rng).is_ok());
    }
}
