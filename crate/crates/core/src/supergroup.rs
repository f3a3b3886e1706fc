//! The quantum matrix superalgebra on 25 generators `a[i,j]`, `1 <= i,j <= 5`,
//! with index parity `p(1..4) = 0`, `p(5) = 1`; its matrix comultiplication
//! and its quantum 2x2 minors.

use crate::algebra::{
    koszul_sign, AlgebraPresentation, NCPoly, Parity, RewriteRule, TensorPoly, Word,
};
use crate::error::{Error, Result};
use crate::scalar::{Gauss, Scalar};

pub const SIZE: u8 = 5;

/// Parity of an index.
pub fn index_parity(i: u8) -> Parity {
    if i == 5 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Parity of `a[i,j]`.
pub fn entry_parity(i: u8, j: u8) -> Parity {
    index_parity(i).sum(index_parity(j))
}

/// Rank of `a[i,j]` in the row-major generator order.
pub fn entry_rank(i: u8, j: u8) -> u16 {
    ((i - 1) as u16) * SIZE as u16 + (j - 1) as u16
}

/// The Manin presentation of the quantum matrix superalgebra.
#[derive(Clone, Debug)]
pub struct QMatrixAlgebra {
    presentation: AlgebraPresentation,
}

/// `(-1)^{π(a)π(b)}` as a scalar.
fn parity_sign(a: (u8, u8), b: (u8, u8)) -> i64 {
    koszul_sign(entry_parity(a.0, a.1), entry_parity(b.0, b.1))
}

/// `q^{(-1)^{p(i)+1}}` exponent.
fn q_exponent(i: u8) -> i32 {
    if index_parity(i).is_odd() {
        1
    } else {
        -1
    }
}

fn signed_q(sign: i64, k: i32) -> Scalar {
    Scalar::monomial(Gauss::from_int(sign), k)
}

/// The rewrite rule for the pair `g = a[i,j] < h = a[k,l]` (row-major), with
/// left-hand side `h g`.
fn manin_rule(g: (u8, u8), h: (u8, u8)) -> RewriteRule {
    let (i, j) = g;
    let (k, l) = h;
    let s = parity_sign(g, h);
    let gr = entry_rank(i, j);
    let hr = entry_rank(k, l);
    let gh = Word::from_slice(&[gr, hr]);
    if i == k {
        // a_ij a_il = s q^e a_il a_ij  (j < l)
        let e = q_exponent(i);
        RewriteRule::new([hr, gr], NCPoly::term(signed_q(s, -e), gh), "row")
    } else if j == l {
        // a_ij a_kj = s q^e a_kj a_ij  (i < k)
        let e = q_exponent(j);
        RewriteRule::new([hr, gr], NCPoly::term(signed_q(s, -e), gh), "column")
    } else if j > l {
        // a_ij a_kl = s a_kl a_ij  (i < k, j > l)
        RewriteRule::new([hr, gr], NCPoly::term(Scalar::from_int(s), gh), "cross")
    } else {
        // a_ij a_kl - s a_kl a_ij = s (q^-1 - q) a_kj a_il  (i < k, j < l)
        let mut rhs = NCPoly::term(Scalar::from_int(s), gh);
        rhs.add_term(
            Word::from_slice(&[entry_rank(k, j), entry_rank(i, l)]),
            -Scalar::q_inv_minus_q(),
        );
        RewriteRule::new([hr, gr], rhs, "correction")
    }
}

/// Builds the presentation with a possibly altered rule, used to exercise
/// the confluence checker on corrupted inputs.
pub(crate) fn build_with(
    alter: impl Fn((u8, u8), (u8, u8), RewriteRule) -> RewriteRule,
) -> Result<QMatrixAlgebra> {
    let mut b = AlgebraPresentation::builder("slq41");
    let mut entries = Vec::new();
    for i in 1..=SIZE {
        for j in 1..=SIZE {
            b.generator("a", Some((i, j)), entry_parity(i, j));
            entries.push((i, j));
        }
    }
    for (x, &g) in entries.iter().enumerate() {
        for &h in &entries[x + 1..] {
            b.rule(alter(g, h, manin_rule(g, h)));
        }
    }
    Ok(QMatrixAlgebra {
        presentation: b.build(true)?,
    })
}

/// The quantum matrix superalgebra with all four Manin relation families and
/// vanishing odd squares.
pub fn build_slq41() -> QMatrixAlgebra {
    build_with(|_, _, r| r).expect("Manin rules are order-decreasing")
}

/// A 2x2 quantum minor with its row and column pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumMinor {
    pub rows: (u8, u8),
    pub cols: (u8, u8),
    pub value: NCPoly,
}

impl QuantumMinor {
    /// Name in the expression grammar: `D[i,j]` for Grassmannian minors,
    /// `Dc[r1r2;c1c2]` otherwise.
    pub fn label(&self) -> String {
        if self.cols == (1, 2) {
            format!("D[{},{}]", self.rows.0, self.rows.1)
        } else {
            format!(
                "Dc[{}{};{}{}]",
                self.rows.0, self.rows.1, self.cols.0, self.cols.1
            )
        }
    }

    pub fn parity(&self) -> Parity {
        index_parity(self.rows.0).sum(index_parity(self.rows.1))
    }
}

impl QMatrixAlgebra {
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    /// The generator `a[i,j]` as a polynomial.
    pub fn a(&self, i: u8, j: u8) -> NCPoly {
        NCPoly::generator(entry_rank(i, j))
    }

    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        self.presentation.normal_form(p)
    }

    /// Matrix comultiplication `Δ(a_ij) = Σ_k a_ik ⊗ a_kj`, extended
    /// multiplicatively with Koszul signs; both slots in normal form.
    pub fn comultiply(&self, p: &NCPoly) -> Result<TensorPoly> {
        let alg = &self.presentation;
        let mut total = TensorPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = TensorPoly::one();
            for &g in w.letters() {
                let gen = alg.generator(g);
                let (i, j) = gen.index.expect("matrix generators are indexed");
                let mut delta = TensorPoly::zero();
                for k in 1..=SIZE {
                    delta.add_term(
                        Word::from_slice(&[entry_rank(i, k)]),
                        Word::from_slice(&[entry_rank(k, j)]),
                        Scalar::one(),
                    );
                }
                acc = acc.mul(&delta, alg);
            }
            total = total.add(&acc.scale(c));
        }
        total.normal_form(alg)
    }

    /// Printed left-hand sides of the defining rules whose relation
    /// `lhs - rhs` is not sent to zero by the comultiplication.
    pub fn comultiplication_failures(&self) -> Result<Vec<String>> {
        use rayon::prelude::*;
        let alg = &self.presentation;
        let failing = alg
            .rules()
            .par_iter()
            .map(|r| {
                let rel = &NCPoly::word(&r.lhs) - &r.rhs;
                Ok((!self.comultiply(&rel)?.is_zero()).then(|| alg.display_word(&r.lhs_word())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(failing.into_iter().flatten().collect())
    }

    /// `a_{r1 c1} a_{r2 c2} - q^-1 a_{r1 c2} a_{r2 c1}` in normal form.
    pub fn general_minor(&self, rows: (u8, u8), cols: (u8, u8)) -> Result<QuantumMinor> {
        let valid = |(x, y): (u8, u8)| 1 <= x && x < y && y <= SIZE;
        if !valid(rows) {
            return Err(Error::InvalidIndex(rows.0 as usize, rows.1 as usize));
        }
        if !valid(cols) {
            return Err(Error::InvalidIndex(cols.0 as usize, cols.1 as usize));
        }
        let (r1, r2) = rows;
        let (c1, c2) = cols;
        let mut v = NCPoly::word(&[entry_rank(r1, c1), entry_rank(r2, c2)]);
        v.add_term(
            Word::from_slice(&[entry_rank(r1, c2), entry_rank(r2, c1)]),
            -Scalar::q_pow(-1),
        );
        Ok(QuantumMinor {
            rows,
            cols,
            value: self.normal_form(&v)?,
        })
    }

    /// The Grassmannian minor `D[i,j]` on columns 1, 2, including the odd
    /// minors `D[i,5]` and the special `D[5,5] = a51 a52`.
    pub fn minor(&self, i: u8, j: u8) -> Result<QuantumMinor> {
        match (i, j) {
            (5, 5) => Ok(QuantumMinor {
                rows: (5, 5),
                cols: (1, 2),
                value: self.normal_form(&NCPoly::word(&[entry_rank(5, 1), entry_rank(5, 2)]))?,
            }),
            (i, j) if 1 <= i && i < j && j <= SIZE => self.general_minor((i, j), (1, 2)),
            _ => Err(Error::InvalidIndex(i as usize, j as usize)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cq;

    fn rule_rhs(alg: &QMatrixAlgebra, a: (u8, u8), b: (u8, u8)) -> NCPoly {
        alg.presentation()
            .rule_for(entry_rank(a.0, a.1), entry_rank(b.0, b.1))
            .unwrap()
            .rhs
            .clone()
    }

    #[test]
    fn corrupted_correction_term_breaks_confluence() {
        // drop the (q^-1 - q) term of a[2,2] a[1,1]
        let alg = build_with(|g, h, r| {
            if (g, h) == ((1, 1), (2, 2)) {
                RewriteRule::new(r.lhs, NCPoly::word(&[entry_rank(1, 1), entry_rank(2, 2)]), r.family)
            } else {
                r
            }
        })
        .unwrap();
        let rep = crate::algebra::check_confluence(alg.presentation()).unwrap();
        assert!(!rep.confluent());
        assert!(rep.unresolved().all(|o| o.word.letters().contains(&entry_rank(2, 2))
            || o.word.letters().contains(&entry_rank(1, 1))));
    }

    #[test]
    fn counts() {
        let alg = build_slq41();
        let p = alg.presentation();
        assert_eq!(p.num_generators(), 25);
        let odd = p.generators().iter().filter(|g| g.parity.is_odd()).count();
        assert_eq!(odd, 8);
        assert_eq!(p.rules().len(), 300 + 8);
    }

    #[test]
    fn documented_rule_lookups() {
        let alg = build_slq41();
        assert_eq!(
            rule_rhs(&alg, (1, 2), (1, 1)),
            NCPoly::term(cq(1, 1), Word::from_slice(&[entry_rank(1, 1), entry_rank(1, 2)]))
        );
        assert_eq!(
            rule_rhs(&alg, (5, 2), (5, 1)),
            NCPoly::term(cq(-1, -1), Word::from_slice(&[entry_rank(5, 1), entry_rank(5, 2)]))
        );
        assert_eq!(
            rule_rhs(&alg, (2, 1), (1, 2)),
            NCPoly::word(&[entry_rank(1, 2), entry_rank(2, 1)])
        );
    }

    #[test]
    fn normal_form_examples() {
        let alg = build_slq41();
        let nf = alg.normal_form(&(&alg.a(1, 2) * &alg.a(1, 1))).unwrap();
        assert_eq!(nf, (&alg.a(1, 1) * &alg.a(1, 2)).scale(&cq(1, 1)));

        let nf = alg.normal_form(&(&alg.a(5, 1) * &alg.a(5, 1))).unwrap();
        assert!(nf.is_zero());

        let nf = alg.normal_form(&(&alg.a(2, 2) * &alg.a(1, 1))).unwrap();
        let expected = &(&alg.a(1, 1) * &alg.a(2, 2))
            - &(&alg.a(1, 2) * &alg.a(2, 1)).scale(&Scalar::q_inv_minus_q());
        assert_eq!(nf, expected);
    }

    #[test]
    fn minors_match_definition() {
        let alg = build_slq41();
        let d12 = alg.minor(1, 2).unwrap();
        let expected = &(&alg.a(1, 1) * &alg.a(2, 2)) - &(&alg.a(1, 2) * &alg.a(2, 1)).scale(&cq(1, -1));
        assert_eq!(d12.value, expected);
        assert_eq!(alg.minor(5, 5).unwrap().value, &alg.a(5, 1) * &alg.a(5, 2));
        let d15 = alg.minor(1, 5).unwrap();
        let expected = &(&alg.a(1, 1) * &alg.a(5, 2)) - &(&alg.a(1, 2) * &alg.a(5, 1)).scale(&cq(1, -1));
        assert_eq!(d15.value, alg.normal_form(&expected).unwrap());
        assert_eq!(d15.parity(), Parity::Odd);
        assert_eq!(alg.minor(5, 5).unwrap().parity(), Parity::Even);
        assert_eq!(alg.general_minor((1, 2), (1, 2)).unwrap(), d12);
    }

    #[test]
    fn general_minor_examples() {
        let alg = build_slq41();
        let m = alg.general_minor((3, 4), (3, 4)).unwrap();
        let expected = &(&alg.a(3, 3) * &alg.a(4, 4)) - &(&alg.a(3, 4) * &alg.a(4, 3)).scale(&cq(1, -1));
        assert_eq!(m.value, alg.normal_form(&expected).unwrap());
        let m = alg.general_minor((3, 4), (4, 5)).unwrap();
        let expected = &(&alg.a(3, 4) * &alg.a(4, 5)) - &(&alg.a(3, 5) * &alg.a(4, 4)).scale(&cq(1, -1));
        assert_eq!(m.value, alg.normal_form(&expected).unwrap());
        assert_eq!(m.label(), "Dc[34;45]");
    }

    #[test]
    fn invalid_minor_indices() {
        let alg = build_slq41();
        assert!(alg.minor(2, 1).is_err());
        assert!(alg.minor(0, 1).is_err());
        assert!(alg.minor(5, 6).is_err());
        assert!(alg.general_minor((3, 3), (1, 2)).is_err());
        assert!(alg.general_minor((1, 2), (2, 6)).is_err());
    }

    #[test]
    fn comultiplication_on_unit_and_generator() {
        let alg = build_slq41();
        assert_eq!(alg.comultiply(&NCPoly::one()).unwrap(), TensorPoly::one());
        let d = alg.comultiply(&alg.a(1, 1)).unwrap();
        let mut expected = TensorPoly::zero();
        for k in 1..=5 {
            expected.add_term(
                Word::from_slice(&[entry_rank(1, k)]),
                Word::from_slice(&[entry_rank(k, 1)]),
                Scalar::one(),
            );
        }
        assert_eq!(d, expected);
    }
}
