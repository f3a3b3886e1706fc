use num_rational::BigRational;

use qmink::classical::conformal::{conformal_basis, METRIC};
use qmink::classical::{bracket_closure_table, special_conformal_map, specialize_q1, ConformalKind};
use qmink::cli::{parse, AlgebraName, Evaluator};
use qmink::grassmann::SuperPoly;
use qmink::scalar::Gauss;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn dot(u: &[BigRational; 4], v: &[BigRational; 4]) -> BigRational {
    (0..4).fold(rat(0, 1), |acc, mu| acc + &u[mu] * &v[mu] * rat(METRIC[mu], 1))
}

/// `x -> I(I(x) + b)` computed pointwise over the rationals.
fn inverted_translation(b: &[BigRational; 4], x: &[BigRational; 4]) -> [BigRational; 4] {
    let x2 = dot(x, x);
    let y: [BigRational; 4] = std::array::from_fn(|mu| &x[mu] / &x2 + &b[mu]);
    let y2 = dot(&y, &y);
    std::array::from_fn(|mu| &y[mu] / &y2)
}

fn evaluate(p: &SuperPoly, x: &[BigRational; 4]) -> Gauss {
    p.substitute(
        &|v| Gauss::new(x[v as usize].clone(), rat(0, 1)),
        |c| c.clone(),
    )
}

#[test]
fn special_conformal_map_agrees_with_pointwise_oracle() {
    let b = [rat(1, 2), rat(-1, 3), rat(0, 1), rat(2, 1)];
    let bp: [SuperPoly; 4] =
        std::array::from_fn(|mu| SuperPoly::constant(Gauss::new(b[mu].clone(), rat(0, 1))));
    let map = special_conformal_map(&bp, false);
    let literal = special_conformal_map(&bp, true);
    let points = [
        [rat(3, 1), rat(1, 1), rat(0, 1), rat(1, 2)],
        [rat(1, 1), rat(2, 1), rat(-1, 1), rat(5, 1)],
        [rat(7, 3), rat(0, 1), rat(1, 1), rat(1, 1)],
    ];
    let mut literal_disagrees = false;
    for x in &points {
        let expected = inverted_translation(&b, x);
        let den = evaluate(&map.den, x);
        for mu in 0..4 {
            let got = evaluate(&map.num[mu], x) * den.inv().unwrap();
            assert_eq!(got, Gauss::new(expected[mu].clone(), rat(0, 1)), "{x:?}");
            let lit = evaluate(&literal.num[mu], x) * evaluate(&literal.den, x).inv().unwrap();
            literal_disagrees |= lit != got;
        }
    }
    assert!(literal_disagrees);
}

#[test]
fn conformal_brackets_satisfy_jacobi() {
    let table = bracket_closure_table().unwrap();
    let basis = conformal_basis();
    let n = basis.len();
    let bracket = |u: &[Gauss], v: &[Gauss]| -> Vec<Gauss> {
        let mut out = vec![Gauss::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if u[i].is_zero() || v[j].is_zero() || i == j {
                    continue;
                }
                for (k, c) in table.get(basis[i], basis[j]).unwrap() {
                    let idx = basis.iter().position(|&b| b == k).unwrap();
                    out[idx] = &out[idx] + &(&(&u[i] * &v[j]) * &c);
                }
            }
        }
        out
    };
    let unit = |i: usize| -> Vec<Gauss> {
        (0..n).map(|k| if k == i { Gauss::one() } else { Gauss::zero() }).collect()
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x, y, z) = (unit(a), unit(b), unit(c));
                let terms = [
                    bracket(&x, &bracket(&y, &z)),
                    bracket(&y, &bracket(&z, &x)),
                    bracket(&z, &bracket(&x, &y)),
                ];
                let sum = (0..n).map(|k| &(&terms[0][k] + &terms[1][k]) + &terms[2][k]);
                assert!(sum.into_iter().all(|g| g.is_zero()), "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn translations_and_special_conformal_generators_pair_to_dilation() {
    use ConformalKind::*;
    let table = bracket_closure_table().unwrap();
    for mu in 0..4u8 {
        let br = table.get(P(mu), K(mu)).unwrap();
        assert_eq!(br, vec![(D, Gauss::from_int(2 * METRIC[mu as usize]))]);
        assert_eq!(table.get(D, K(mu)).unwrap(), vec![(K(mu), Gauss::one())]);
        assert_eq!(table.get(D, P(mu)).unwrap(), vec![(P(mu), Gauss::from_int(-1))]);
    }
    for mu in 0..4u8 {
        for nu in (0..4u8).filter(|&nu| nu != mu) {
            assert!(table.get(P(mu), P(nu)).unwrap().is_empty());
            assert!(table.get(K(mu), K(nu)).unwrap().is_empty());
        }
    }
}

#[test]
fn matrix_entries_commute_or_anticommute_at_q_one() {
    let ev = Evaluator::new(AlgebraName::Slq41).unwrap();
    let pres = ev.presentation();
    let at_one = |text: &str| specialize_q1(pres, &ev.eval(&parse(text).unwrap()).unwrap());
    assert_eq!(at_one("a[1,2]*a[1,1]"), at_one("a[1,1]*a[1,2]"));
    assert_eq!(at_one("a[3,2]*a[1,4]"), at_one("a[1,4]*a[3,2]"));
    assert!(at_one("a[1,5]*a[2,5] + a[2,5]*a[1,5]").is_zero());
    assert!(at_one("a[1,5]*a[1,5]").is_zero());
    assert!(!at_one("a[1,1]*a[1,2]").is_zero());
}
