//! Acceptance criteria 1-12. Each criterion prints one PASS/FAIL line; the
//! test fails if any criterion fails.

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;
use subalg::arith::{rat, FieldElem, NumberField, Poly, Rat, Scalar};
use subalg::classify::{check_case, classify, construct_case, rational_or_field_sample, realizable_labels, SampledCase};
use subalg::conditions::{conditions_from_subalgebra, kernel_span, kernel_subalgebra, LinearFunctional, Subalgebra};
use subalg::derivations::ln_coefficients;
use subalg::error::Error;
use subalg::oracle::{oracle_codimension, oracle_member, oracle_multi_char_roots};
use subalg::resultants::{char_poly_multi, char_poly_pair, resultant_relation};
use subalg::roots::{complex_roots, RootMode};
use subalg::sagbi::sagbi_extend;
use subalg::spectrum::{compute_spectrum, spectrum_size_check};

const ROOT_TOL: f64 = 1e-8;
const CHI_SECONDS: f64 = 1.0;
const MULTI_SECONDS: f64 = 60.0;
const INTRO_SECONDS: f64 = 30.0;
const ROUND_TRIP_SECONDS: f64 = 300.0;
const SUITE_SECONDS: f64 = 600.0;
const SEED: u64 = 20261016;

type Verdict = Result<String, String>;

fn q(cs: &[i64]) -> Poly<Rat> {
    Poly::from_ints(cs)
}

fn xn(n: usize) -> Poly<Rat> {
    Poly::monomial(rat(1), n)
}

fn monic<R: Rng>(deg: usize, rng: &mut R) -> Poly<Rat> {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-4..=4)).collect();
    c.push(1);
    q(&c)
}

fn coprime<R: Rng>(max: usize, rng: &mut R) -> (usize, usize) {
    loop {
        let m = rng.gen_range(2..max);
        let n = rng.gen_range(m + 1..=max);
        if num_integer::gcd(m, n) == 1 {
            return (m, n);
        }
    }
}

fn report(out: &mut Vec<(usize, bool)>, n: usize, name: &str, t0: Instant, v: Verdict) {
    let secs = t0.elapsed().as_secs_f64();
    let (ok, detail) = match v {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let line = format!("criterion {n:>2} {}: {name} ({secs:.1}s) {detail}\n", if ok { "PASS" } else { "FAIL" });
    let _ = std::io::stdout().write_all(line.as_bytes());
    out.push((n, ok));
}

fn c1() -> Verdict {
    let mut cases = vec![(q(&[0, -1, 0, 1]), xn(2), q(&[-1, 0, 1])), (q(&[0, 0, -1, 0, 1]), xn(3), q(&[0, 0, 1, 0, -1, 0, 1]))];
    for m in 2..=8 {
        for n in m + 1..=9 {
            if num_integer::gcd(m, n) == 1 {
                cases.push((xn(m), xn(n), xn((m - 1) * (n - 1))));
            }
        }
    }
    for (p, qq, want) in &cases {
        let t = Instant::now();
        let got = char_poly_pair(p, qq).map_err(|e| e.to_string())?;
        let s = t.elapsed().as_secs_f64();
        if &got != want || s >= CHI_SECONDS {
            return Err(format!("chi({p}, {qq}) = {got} in {s:.2}s"));
        }
    }
    Ok(format!("{} cases", cases.len()))
}

fn same_roots(a: &[Complex64], b: &[Complex64]) -> bool {
    a.iter().all(|x| b.iter().any(|y| (x - y).norm() <= ROOT_TOL)) && b.iter().all(|y| a.iter().any(|x| (x - y).norm() <= ROOT_TOL))
}

fn c2() -> Verdict {
    let t = Instant::now();
    let gens = [q(&[0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 1]), xn(15), xn(10)];
    let chi = char_poly_multi(&gens).map_err(|e| e.to_string())?;
    let b = q(&[81, 0, 0, 0, 0, 0, 81, 0, 0, 0, 0, 0, 36, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 1]);
    if chi != xn(50).mul(&b) {
        return Err(format!("chi = {chi}"));
    }
    let mut ours = complex_roots(&b).map_err(|e| e.to_string())?;
    ours.push(Complex64::new(0.0, 0.0));
    let oracle = oracle_multi_char_roots(&gens).map_err(|e| e.to_string())?;
    if !same_roots(&ours, &oracle) {
        return Err(format!("root sets differ: {} vs {}", ours.len(), oracle.len()));
    }
    let s = t.elapsed().as_secs_f64();
    if s >= MULTI_SECONDS {
        return Err(format!("{s:.1}s"));
    }
    Ok(format!("x^50 b(x), {} oracle roots", oracle.len()))
}

fn c3(rng: &mut ChaCha8Rng) -> Verdict {
    for _ in 0..20 {
        let (m, n) = coprime(6, rng);
        let (p, qq) = (monic(m, rng), monic(n, rng));
        let f = resultant_relation(&p, &qq).map_err(|e| e.to_string())?;
        let fp = f.partial(0).substitute(&[p.clone(), qq.clone()]);
        let fq = f.partial(1).substitute(&[p.clone(), qq.clone()]);
        let chi = char_poly_pair(&p, &qq).map_err(|e| e.to_string())?;
        let a = chi.mul(&qq.derivative());
        let b = chi.mul(&p.derivative());
        if !((fp == a && fq == b.neg()) || (fp == a.neg() && fq == b)) {
            return Err(format!("p = {p}, q = {qq}"));
        }
    }
    Ok("20 pairs, opposite signs".into())
}

fn c4() -> Verdict {
    let t = Instant::now();
    let run = || -> subalg::Result<Vec<String>> {
        let mut failed = Vec::new();
        let mut check = |name: &str, k: &std::sync::Arc<NumberField>, conds: Vec<LinearFunctional<FieldElem>>, gens: Vec<Poly<Rat>>, pts: Vec<FieldElem>| -> subalg::Result<()> {
            let want = Subalgebra::from_generators(gens.iter().map(|g| g.lift(k)).collect());
            let got = kernel_subalgebra(&conds)?;
            let back = conditions_from_subalgebra(&want, &pts)?;
            let bound = 16;
            let s1 = kernel_span(&conds, bound, k);
            let s2 = kernel_span(&back, bound, k);
            let spans_equal = s1.dim() == s2.dim() && s1.rows().all(|r| s2.contains(r));
            if !got.sagbi()?.same_algebra(want.sagbi()?) || !spans_equal {
                failed.push(name.to_string());
            }
            Ok(())
        };
        let k = NumberField::cyclotomic(1);
        let zero = FieldElem::zero(&k);
        let d = |o: usize, p: &FieldElem| LinearFunctional::derivative_at(o, p.clone());
        check("monomial", &k, vec![d(1, &zero)?, d(2, &zero)?, d(5, &zero)?], vec![xn(3), xn(4)], vec![zero.clone()])?;
        let k = NumberField::cyclotomic(8);
        let e = FieldElem::generator(&k);
        let one = FieldElem::one(&k);
        check(
            "eighth roots",
            &k,
            vec![LinearFunctional::diff(one.clone(), one.negated())?, LinearFunctional::diff(e.clone(), e.pow(7))?, LinearFunctional::diff(e.pow(3), e.pow(5))?],
            vec![xn(4), q(&[0, -1, 0, 1])],
            vec![one.clone(), one.negated(), e.clone(), e.pow(3), e.pow(5), e.pow(7)],
        )?;
        let k = NumberField::cyclotomic(12);
        let e = FieldElem::generator(&k);
        let zero = FieldElem::zero(&k);
        check(
            "twelfth roots",
            &k,
            vec![d(1, &zero)?, LinearFunctional::diff(e.clone(), e.pow(5))?, LinearFunctional::diff(e.pow(7), e.pow(11))?],
            vec![q(&[0, 0, -1, 0, 1]), xn(3)],
            vec![zero, e.clone(), e.pow(5), e.pow(7), e.pow(11)],
        )?;
        let k = NumberField::cyclotomic(3);
        let e = FieldElem::generator(&k);
        let one = FieldElem::one(&k);
        check(
            "cube roots",
            &k,
            vec![
                LinearFunctional::diff(one.clone(), e.clone())?,
                LinearFunctional::diff(one.clone(), e.pow(2))?,
                LinearFunctional::deriv(vec![(1, one.clone(), one.clone()), (1, e.clone(), e.pow(2)), (1, e.pow(2), e.clone())])?,
            ],
            vec![q(&[0, -1, 0, 0, 1]), xn(3)],
            vec![one, e.clone(), e.pow(2)],
        )?;
        Ok(failed)
    };
    let failed = run().map_err(|e| e.to_string())?;
    let s = t.elapsed().as_secs_f64();
    if !failed.is_empty() || s >= INTRO_SECONDS {
        return Err(format!("failed {failed:?} in {s:.1}s"));
    }
    Ok("4 examples".into())
}

fn c5(rng: &mut ChaCha8Rng) -> Verdict {
    for _ in 0..20 {
        let (m, n) = coprime(7, rng);
        let (p, qq) = (monic(m, rng), monic(n, rng));
        let c = oracle_codimension(&[p.clone(), qq.clone()], (m - 1) * (n - 1) + n).map_err(|e| e.to_string())?;
        if c != (m - 1) * (n - 1) / 2 {
            return Err(format!("<{p}, {qq}>: {c}"));
        }
    }
    Ok("20 pairs".into())
}

fn labels() -> Vec<String> {
    realizable_labels().into_iter().filter(|l| l.starts_with("codim1/") || l.starts_with("codim2/") || l.starts_with("codim3/")).collect()
}

fn size_ok<F: Scalar>(a: &Subalgebra<F>) -> Result<(), String> {
    let sp = compute_spectrum(a, &RootMode::Numeric, ROOT_TOL).map_err(|e| e.to_string())?;
    let r = spectrum_size_check(a, &sp).map_err(|e| e.to_string())?;
    if r.size > 2 * r.codimension {
        return Err(format!("|Sp| = {} > {}", r.size, 2 * r.codimension));
    }
    Ok(())
}

fn c6(rng: &mut ChaCha8Rng) -> Verdict {
    let ls = labels();
    for _ in 0..50 {
        let label = &ls[rng.gen_range(0..ls.len())];
        let r = match rational_or_field_sample(label, rng).map_err(|e| e.to_string())? {
            SampledCase::Rational(_, a) => size_ok(&a),
            SampledCase::Field(_, _, a) => size_ok(&a),
        };
        r.map_err(|e| format!("{label}: {e}"))?;
    }
    Ok("50 instances".into())
}

fn c7(rng: &mut ChaCha8Rng) -> Verdict {
    let bases: Vec<String> = labels().into_iter().filter(|l| !l.starts_with("codim3/")).collect();
    let mut done = 0;
    let mut tries = 0;
    while done < 30 {
        tries += 1;
        if tries > 500 {
            return Err(format!("{done} extensions"));
        }
        let b = if rng.gen_bool(0.2) {
            Subalgebra::from_generators(vec![xn(1)])
        } else {
            match rational_or_field_sample(&bases[rng.gen_range(0..bases.len())], rng).map_err(|e| e.to_string())? {
                SampledCase::Rational(_, a) => a,
                SampledCase::Field(..) => continue,
            }
        };
        let alpha = Rat::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=4).into());
        let beta = Rat::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=4).into());
        let pair = rng.gen_bool(0.5);
        if pair && alpha == beta {
            continue;
        }
        let l = if pair { LinearFunctional::diff(alpha.clone(), beta.clone()) } else { LinearFunctional::derivative_at(1, alpha.clone()) }
            .map_err(|e| e.to_string())?;
        let ext = match sagbi_extend(b.sagbi().map_err(|e| e.to_string())?, &l, Some(&alpha)) {
            Ok(e) => e,
            Err(Error::ConditionVanishesOnB) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let a = Subalgebra::from_basis(ext);
        let sb = compute_spectrum(&b, &RootMode::Numeric, ROOT_TOL).map_err(|e| e.to_string())?;
        let sa = compute_spectrum(&a, &RootMode::Numeric, ROOT_TOL).map_err(|e| e.to_string())?;
        let mut allowed = sb.complex_points();
        allowed.push(alpha.to_complex());
        if pair {
            allowed.push(beta.to_complex());
        }
        if let Some(z) = sa.complex_points().into_iter().find(|z| !allowed.iter().any(|w| (z - w).norm() <= ROOT_TOL)) {
            return Err(format!("ghost {z} from {l}"));
        }
        done += 1;
    }
    Ok(format!("30 extensions ({tries} draws)"))
}

fn c8(rng: &mut ChaCha8Rng) -> Verdict {
    let mut points = 0;
    let mut instances = 0;
    for label in labels() {
        let c = check_case(&label, 5, true, rng);
        if c.draws < 5 || !c.failures.is_empty() {
            return Err(format!("{label}: {:?}", c.failures));
        }
        instances += c.draws;
        points += c.dim_checks;
    }
    Ok(format!("{instances} instances, {points} spectrum points, all equal"))
}

fn c9() -> Verdict {
    let rows: [(i64, &[(usize, i64)]); 10] = [
        (1, &[(1, 1)]),
        (3, &[(3, 1), (2, -1)]),
        (5, &[(5, 1), (4, -2)]),
        (7, &[(7, 1), (6, -3), (4, 3)]),
        (9, &[(9, 1), (8, -4), (6, 11), (4, -11)]),
        (11, &[(11, 1), (10, -5), (8, 26), (6, -78), (4, 78)]),
        (13, &[(13, 1), (12, -6), (10, 50), (8, -294), (6, 882), (4, -882)]),
        (15, &[(15, 1), (14, -7), (12, 85), (10, -816), (8, 4811), (6, -14433), (4, 14433)]),
        (17, &[(17, 1), (16, -8), (14, 133), (12, -1881), (10, 18145), (8, -106989), (6, 320967), (4, -320967)]),
        (19, &[(19, 1), (18, -9), (16, 196), (14, -3822), (12, 54399), (10, -524880), (8, 3094881), (6, -9284643), (4, 9284643)]),
    ];
    for (n, row) in rows {
        let want: BTreeMap<usize, BigInt> = row.iter().map(|&(k, v)| (k, BigInt::from(v))).collect();
        let got = ln_coefficients(n).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("n = {n}: {got:?}"));
        }
    }
    Ok("10 rows".into())
}

fn round_trip<F: Scalar>(label: &str, a: &Subalgebra<F>) -> subalg::Result<Option<String>> {
    let c = classify(a)?;
    if c.label() != label {
        return Ok(Some(format!("classified as {}", c.label())));
    }
    let ty = a.type_tuple()?;
    if ty != c.claimed_type {
        return Ok(Some(format!("type {ty:?} vs {:?}", c.claimed_type)));
    }
    for e in a.sagbi()?.elements() {
        if c.conditions.iter().any(|l| !l.apply(e).map(|v| v.is_zero()).unwrap_or(false)) {
            return Ok(Some(format!("conditions fail on {e}")));
        }
    }
    if !construct_case(label, &c.parameters)?.sagbi()?.same_algebra(a.sagbi()?) {
        return Ok(Some("parameters not recovered".into()));
    }
    Ok(None)
}

fn c10(rng: &mut ChaCha8Rng) -> Verdict {
    let t = Instant::now();
    let ls = labels();
    for label in &ls {
        for _ in 0..3 {
            let r = match rational_or_field_sample(label, rng).map_err(|e| e.to_string())? {
                SampledCase::Rational(_, a) => round_trip(label, &a),
                SampledCase::Field(_, _, a) => round_trip(label, &a),
            };
            match r {
                Ok(None) => {}
                Ok(Some(f)) => return Err(format!("{label}: {f}")),
                Err(e) => return Err(format!("{label}: {e}")),
            }
        }
    }
    let s = t.elapsed().as_secs_f64();
    if s >= ROUND_TRIP_SECONDS {
        return Err(format!("{s:.1}s"));
    }
    Ok(format!("{} cases x 3", ls.len()))
}

fn c11(rng: &mut ChaCha8Rng) -> Verdict {
    let mut members = 0;
    for _ in 0..20 {
        let (m, n) = coprime(5, rng);
        let mut gens = vec![monic(m, rng), monic(n, rng)];
        if rng.gen_bool(0.3) {
            gens.push(monic(rng.gen_range(n..=m + n), rng));
        }
        let a = Subalgebra::from_generators(gens.clone());
        let b = a.sagbi().map_err(|e| e.to_string())?;
        for j in 0..10 {
            let f = if j % 2 == 0 {
                let mut f = Poly::constant(rat(rng.gen_range(-5..=5)));
                for _ in 0..3 {
                    let mut t = Poly::constant(rat(rng.gen_range(-3..=3)));
                    for _ in 0..rng.gen_range(1..=2) {
                        t = t.mul(&gens[rng.gen_range(0..gens.len())]);
                    }
                    f = f.add(&t);
                }
                f
            } else {
                monic(rng.gen_range(1..=9), rng)
            };
            let bound = f.deg() + (m - 1) * (n - 1) + gens.iter().map(|g| g.deg()).sum::<usize>() + m * n;
            let (s, o) = (b.contains(&f), oracle_member(&f, &gens, bound));
            if s != o {
                return Err(format!("{f}: sagbi {s}, oracle {o}"));
            }
            members += s as usize;
        }
    }
    Ok(format!("200 probes, {members} members"))
}

#[test]
fn acceptance() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut results = Vec::new();
    let suite = Instant::now();
    let t = Instant::now();
    report(&mut results, 1, "chi golden values", t, c1());
    let t = Instant::now();
    report(&mut results, 2, "multi-generator chi against the oracle", t, c2());
    let t = Instant::now();
    report(&mut results, 3, "partial-derivative identity", t, c3(&mut rng));
    let t = Instant::now();
    report(&mut results, 4, "introductory examples round trip", t, c4());
    let t = Instant::now();
    report(&mut results, 5, "codimension law", t, c5(&mut rng));
    let t = Instant::now();
    report(&mut results, 6, "spectrum size bound", t, c6(&mut rng));
    let t = Instant::now();
    report(&mut results, 7, "no ghost points", t, c7(&mut rng));
    let t = Instant::now();
    report(&mut results, 8, "derivation dimensions", t, c8(&mut rng));
    let t = Instant::now();
    report(&mut results, 9, "L_n table", t, c9());
    let t = Instant::now();
    report(&mut results, 10, "classification round trip", t, c10(&mut rng));
    let t = Instant::now();
    report(&mut results, 11, "membership equivalence", t, c11(&mut rng));
    let total = suite.elapsed().as_secs_f64();
    let v = if total < SUITE_SECONDS { Ok(format!("items 1-11 in {total:.0}s")) } else { Err(format!("{total:.0}s")) };
    report(&mut results, 12, "suite runtime", Instant::now(), v);
    let failed: Vec<usize> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
