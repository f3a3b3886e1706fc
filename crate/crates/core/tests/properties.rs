use proptest::prelude::*;

use qmink::algebra::{NCPoly, Word};
use qmink::cli::{parse, Atom, Expr};
use qmink::grassmann::{Convention, Frac, Ring, SuperPoly, Vars};
use qmink::scalar::{Gauss, Scalar};
use qmink::supergroup::{build_slq41, QMatrixAlgebra};

use std::sync::OnceLock;

fn slq41() -> &'static QMatrixAlgebra {
    static ALG: OnceLock<QMatrixAlgebra> = OnceLock::new();
    ALG.get_or_init(build_slq41)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -2i32..=2).prop_map(|(c, k)| Scalar::monomial(Gauss::from_int(c), k))
}

fn poly(max_len: usize, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec(
        (prop::collection::vec(0u16..25, 0..=max_len), scalar()),
        1..=max_terms,
    )
    .prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(Word::from_slice(&w), c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(p in poly(4, 4)) {
        let alg = slq41();
        let nf = alg.normal_form(&p).unwrap();
        prop_assert_eq!(alg.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(nf.terms().all(|(w, _)| alg.presentation().is_normal_word(w)));
    }

    #[test]
    fn normal_form_is_linear(p in poly(3, 3), r in poly(3, 3), c in scalar()) {
        let alg = slq41();
        let lhs = alg.normal_form(&(&p + &r.scale(&c))).unwrap();
        let rhs = &alg.normal_form(&p).unwrap() + &alg.normal_form(&r).unwrap().scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative(a in poly(2, 2), b in poly(2, 2), c in poly(2, 2)) {
        let pres = slq41().presentation();
        let left = pres.mul(&pres.mul(&a, &b).unwrap(), &c).unwrap();
        let right = pres.mul(&a, &pres.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn comultiplication_is_multiplicative(a in poly(2, 2), b in poly(1, 2)) {
        let alg = slq41();
        let pres = alg.presentation();
        let lhs = alg.comultiply(&pres.mul(&a, &b).unwrap()).unwrap();
        let rhs = alg
            .comultiply(&a)
            .unwrap()
            .mul(&alg.comultiply(&b).unwrap(), pres)
            .normal_form(pres)
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_product_is_associative(a in poly(1, 2), b in poly(1, 2), c in poly(1, 2)) {
        let alg = slq41();
        let pres = alg.presentation();
        let (x, y, z) = (
            alg.comultiply(&a).unwrap(),
            alg.comultiply(&b).unwrap(),
            alg.comultiply(&c).unwrap(),
        );
        let left = x.mul(&y, pres).normal_form(pres).unwrap().mul(&z, pres).normal_form(pres).unwrap();
        let right = x.mul(&y.mul(&z, pres).normal_form(pres).unwrap(), pres).normal_form(pres).unwrap();
        prop_assert_eq!(left, right);
    }
}

struct Registry {
    vars: Vars,
    ids: Vec<SuperPoly>,
}

fn registry() -> Registry {
    let mut vars = Vars::new(Convention::Automorphism);
    let mut ids = Vec::new();
    for name in ["u", "v"] {
        let (a, b) = vars.pair(name, qmink::algebra::Parity::Even);
        ids.extend([a, b]);
    }
    for name in ["e", "f"] {
        let (a, b) = vars.pair(name, qmink::algebra::Parity::Odd);
        ids.extend([a, b]);
    }
    ids.push(vars.real("r"));
    Registry { vars, ids }
}

fn super_poly() -> impl Strategy<Value = Vec<(Vec<usize>, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0usize..9, 0..4), -3i64..=3, -3i64..=3), 1..4)
}

fn build(reg: &Registry, spec: &[(Vec<usize>, i64, i64)]) -> SuperPoly {
    spec.iter().fold(SuperPoly::zero(), |acc, (vars, re, im)| {
        let term = vars
            .iter()
            .fold(SuperPoly::constant(Gauss::gaussian(*re, *im)), |t, &v| &t * &reg.ids[v]);
        &acc + &term
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugation_is_an_involution(spec in super_poly()) {
        let reg = registry();
        let p = build(&reg, &spec);
        prop_assert_eq!(reg.vars.conj(&reg.vars.conj(&p)), p);
    }

    #[test]
    fn conjugation_is_multiplicative(a in super_poly(), b in super_poly()) {
        let reg = registry();
        let (x, y) = (build(&reg, &a), build(&reg, &b));
        let lhs = reg.vars.conj(&(&x * &y));
        prop_assert_eq!(lhs, &reg.vars.conj(&x) * &reg.vars.conj(&y));
    }

    #[test]
    fn fractions_cancel(a in super_poly(), b in super_poly()) {
        let reg = registry();
        let num = Frac::from_poly(build(&reg, &a));
        let den = Frac::from_poly(build(&reg, &b).body());
        prop_assume!(den.inv().is_some());
        let q = num.div(&den).unwrap();
        prop_assert_eq!(q.mul(&den), num.clone());
        prop_assert_eq!(q.add(&q).sub(&q), q);
    }
}

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (1u8..=5, 1u8..=5).prop_map(|(i, j)| Atom::A(i, j)),
        (1u8..=4, 0u8..4).prop_map(|(i, k)| Atom::D(i, (i + 1 + k).min(5))),
        Just(Atom::D(5, 5)),
        (1u8..=4, 1u8..=4).prop_map(|(r, c)| Atom::Dc((r, 5), (c, 5))),
        (3u8..=4, 1u8..=2).prop_map(|(i, j)| Atom::T(i, j)),
        (1u8..=2).prop_map(Atom::Tau),
        Just(Atom::D12Inv),
        (0u8..4).prop_map(Atom::X),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..50, 1i64..5).prop_map(|(n, d)| {
            Expr::Num(num_rational::BigRational::new(n.into(), d.into()))
        }),
        Just(Expr::I),
        (-4i32..=4).prop_map(Expr::Q),
        atom().prop_map(Expr::Atom),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Expr::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.add(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.sub(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.mul(b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn parser_round_trip(e in expr()) {
        let text = e.to_string();
        let back = parse(&text);
        prop_assert_eq!(back.as_ref().ok(), Some(&e), "{}", text);
        prop_assert_eq!(back.unwrap().to_string(), text);
    }
}
