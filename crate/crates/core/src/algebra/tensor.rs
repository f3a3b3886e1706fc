use std::collections::BTreeMap;

use super::{koszul_sign, AlgebraPresentation, NCPoly, Word};
use crate::error::Result;
use crate::scalar::Scalar;

/// An element of `A ⊗ A`, a finite map from word pairs to scalars.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    pub fn one() -> Self {
        let mut t = TensorPoly::zero();
        t.add_term(Word::empty(), Word::empty(), Scalar::one());
        t
    }

    /// `a ⊗ b` for polynomials `a`, `b`.
    pub fn pure(a: &NCPoly, b: &NCPoly) -> Self {
        let mut t = TensorPoly::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), ca * cb);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let sum = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c * s);
        }
        out
    }

    /// Product with the Koszul sign rule
    /// `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd`; words are concatenated
    /// without reduction.
    pub fn mul(&self, other: &TensorPoly, alg: &AlgebraPresentation) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((a, b), x) in &self.terms {
            let pb = alg.word_parity(b);
            for ((c, d), y) in &other.terms {
                let sign = koszul_sign(pb, alg.word_parity(c));
                let coeff = (x * y).scale(&crate::scalar::Gauss::from_int(sign));
                out.add_term(a.concat(c), b.concat(d), coeff);
            }
        }
        out
    }

    /// Reduces each tensor slot independently.
    pub fn normal_form(&self, alg: &AlgebraPresentation) -> Result<TensorPoly> {
        // Group by left word so the right slot is reduced once per left word,
        // then reduce the left slot per resulting right word.
        let mut by_left: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            by_left
                .entry(a.clone())
                .or_default()
                .add_term(b.clone(), c.clone());
        }
        let mut by_right: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for (a, rights) in by_left {
            let nf = alg.normal_form(&rights)?;
            for (b, c) in nf.terms() {
                by_right
                    .entry(b.clone())
                    .or_default()
                    .add_term(a.clone(), c.clone());
            }
        }
        let mut out = TensorPoly::zero();
        for (b, lefts) in by_right {
            let nf = alg.normal_form(&lefts)?;
            for (a, c) in nf.terms() {
                out.add_term(a.clone(), b.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Splits `sum c (a ⊗ b)` by left word: returns `a -> sum c b`.
    pub fn right_slots(&self) -> BTreeMap<Word, NCPoly> {
        let mut out: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry(a.clone())
                .or_default()
                .add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn display(&self, alg: &AlgebraPresentation) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((a, b), c)| {
                let show = |w: &Word| {
                    if w.is_empty() {
                        "1".to_string()
                    } else {
                        alg.display_word(w)
                    }
                };
                format!("({c})*{} ⊗ {}", show(a), show(b))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Parity;

    #[test]
    fn koszul_sign_on_odd_generators() {
        let mut b = AlgebraPresentation::builder("ext");
        let x = b.generator("x", None, Parity::Odd);
        let y = b.generator("y", None, Parity::Odd);
        let alg = b.build(false).unwrap();
        let t1 = TensorPoly::pure(&NCPoly::one(), &NCPoly::generator(x));
        let t2 = TensorPoly::pure(&NCPoly::generator(y), &NCPoly::one());
        let prod = t1.mul(&t2, &alg);
        let expected = TensorPoly::pure(&NCPoly::generator(y), &NCPoly::generator(x))
            .scale(&Scalar::from_int(-1));
        assert_eq!(prod, expected);
    }
}
