//! Property tests for the algebraic invariants.

use proptest::prelude::*;
use subalg::arith::{rat, FieldElem, NumberField, Poly, Rat, Scalar};
use subalg::cli::parser::{parse_poly, parse_poly_in};
use subalg::conditions::{conditions_from_subalgebra, kernel_subalgebra, LinearFunctional, Subalgebra};
use subalg::derivations::{derivation_space, leibniz_holds, ln_coefficients};
use subalg::oracle::{oracle_codimension, oracle_member};
use subalg::resultants::{char_poly_pair, divided_difference, resultant_relation};
use subalg::sagbi::sagbi_complete;
use subalg::semigroup::DegreeSemigroup;
use subalg::spectrum::rational_spectrum;

fn ratio() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    prop::collection::vec(ratio(), 1..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn monic(deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    prop::collection::vec(-3i64..=3, deg).prop_map(move |mut c| {
        c.push(1);
        Poly::from_ints(&c)
    })
}

fn coprime_pair(max: usize) -> impl Strategy<Value = (Poly<Rat>, Poly<Rat>)> {
    (2..max)
        .prop_flat_map(move |m| (Just(m), m + 1..=max))
        .prop_filter("coprime degrees", |(m, n)| num_integer::gcd(*m, *n) == 1)
        .prop_flat_map(|(m, n)| (monic(m), monic(n)))
}

fn point() -> impl Strategy<Value = Rat> {
    (-5i64..=5).prop_map(rat)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_print_round_trip(p in poly(8)) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn divided_difference_identity(p in poly(7), a in ratio(), b in ratio()) {
        prop_assume!(p.deg() >= 1 && a != b);
        let dd = divided_difference(&p).unwrap();
        let lhs = dd.at_x(&a).eval(&b).times(&a.minus(&b));
        prop_assert_eq!(lhs, p.eval(&a).minus(&p.eval(&b)));
    }

    #[test]
    fn semigroup_counts(m in 2usize..9, n in 3usize..12) {
        prop_assume!(m < n && num_integer::gcd(m, n) == 1);
        let s = DegreeSemigroup::from_degrees(&[m, n]).unwrap();
        prop_assert_eq!(s.genus(), (m - 1) * (n - 1) / 2);
        prop_assert_eq!(s.conductor(), (m - 1) * (n - 1));
        prop_assert_eq!(s.frobenius(), (m * n - m - n) as i64);
        prop_assert!(s.gaps().iter().all(|&g| !s.contains(g)));
    }

    #[test]
    fn functional_json_round_trip(pts in prop::collection::vec((1usize..5, point(), ratio()), 1..4)) {
        prop_assume!(pts.iter().any(|t| !t.2.is_zero()));
        let l = LinearFunctional::deriv(pts).unwrap();
        let parse = |s: &str| subalg::cli::parser::parse_rational(s);
        prop_assert_eq!(LinearFunctional::from_json(&l.to_json(), &parse).unwrap(), l.clone());
        let text = serde_json::to_string(&l.to_json()).unwrap();
        prop_assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn field_parse_print_round_trip(cs in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 1..5)) {
        let k = NumberField::cyclotomic(8);
        let coeffs: Vec<FieldElem> = cs.iter().map(|c| FieldElem::from_rep(&k, &Poly::from_ints(c))).collect();
        let p = Poly::new(coeffs, k.clone());
        prop_assert_eq!(parse_poly_in(&p.to_string(), &k).unwrap(), p);
    }

    #[test]
    fn chi_vanishes_on_relation((p, q) in coprime_pair(5)) {
        let f = resultant_relation(&p, &q).unwrap();
        prop_assert!(f.substitute(&[p.clone(), q.clone()]).is_zero());
    }

    #[test]
    fn chi_is_translation_covariant((p, q) in coprime_pair(5), a in -3i64..=3) {
        let shift = Poly::from_ints(&[a, 1]);
        let chi = char_poly_pair(&p, &q).unwrap();
        let moved = char_poly_pair(&p.compose(&shift), &q.compose(&shift)).unwrap();
        prop_assert_eq!(moved.monic(), chi.compose(&shift).monic());
    }

    #[test]
    fn partial_derivative_signs((p, q) in coprime_pair(5)) {
        let f = resultant_relation(&p, &q).unwrap();
        let fp = f.partial(0).substitute(&[p.clone(), q.clone()]);
        let fq = f.partial(1).substitute(&[p.clone(), q.clone()]);
        let chi = char_poly_pair(&p, &q).unwrap();
        let a = chi.mul(&q.derivative());
        let b = chi.mul(&p.derivative());
        prop_assert!((fp == a && fq == b.neg()) || (fp == a.neg() && fq == b));
    }

    #[test]
    fn sagbi_membership_matches_oracle((p, q) in coprime_pair(4), probe in poly(9)) {
        let b = sagbi_complete(&[p.clone(), q.clone()]).unwrap();
        let bound = probe.deg() + p.deg() * q.deg() + 4;
        prop_assert_eq!(b.contains(&probe), oracle_member(&probe, &[p.clone(), q.clone()], bound));
        let member = p.mul(&q).add(&q.pow(2).scale(&rat(3))).add(&p);
        prop_assert!(b.contains(&member));
    }

    #[test]
    fn pair_conditions_round_trip(a in point(), b in point()) {
        prop_assume!(a != b);
        let l = LinearFunctional::diff(a.clone(), b.clone()).unwrap();
        let alg = kernel_subalgebra(&[l]).unwrap();
        let sp = rational_spectrum(&alg).unwrap();
        let mut pts = sp.exact_points().unwrap();
        pts.sort();
        let mut want = vec![a.clone(), b.clone()];
        want.sort();
        prop_assert_eq!(&pts, &want);
        let bare = Subalgebra::from_generators(alg.sagbi().unwrap().elements().to_vec());
        let back = kernel_subalgebra(&conditions_from_subalgebra(&bare, &pts).unwrap()).unwrap();
        prop_assert!(back.sagbi().unwrap().same_algebra(alg.sagbi().unwrap()));
    }

    #[test]
    fn derivation_basis_satisfies_leibniz(a in point(), b in point()) {
        prop_assume!(a != b);
        let alg = kernel_subalgebra(&[LinearFunctional::derivative_at(1, a.clone()).unwrap(), LinearFunctional::derivative_at(1, b.clone()).unwrap()]).unwrap();
        let sp = derivation_space(&alg, &a, &[a.clone()]).unwrap();
        let elems = alg.sagbi().unwrap().linear_basis(12);
        prop_assert_eq!(sp.dim(), sp.k_alpha);
        for d in &sp.combo_basis {
            prop_assert!(leibniz_holds(d, &a, &elems).unwrap());
        }
    }

    #[test]
    fn ln_shape(k in 0i64..12) {
        let n = 2 * k + 1;
        let c = ln_coefficients(n).unwrap();
        prop_assert_eq!(c.get(&(n as usize)).cloned(), Some(1.into()));
        prop_assert!(ln_coefficients(n + 1).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_codimension_is_genus((p, q) in coprime_pair(4), extra in monic(5)) {
        let gens = vec![p, q, extra];
        let b = sagbi_complete(&gens).unwrap();
        prop_assert_eq!(oracle_codimension(&gens, 2 * b.genus() + 6).unwrap(), b.genus());
    }
}
