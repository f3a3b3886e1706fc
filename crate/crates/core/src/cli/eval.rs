//! Evaluation of expressions in the named algebras.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraPresentation, NCPoly};
use crate::error::{Error, Result};
use crate::minkowski::{build_chiral_abstract, QuantumMinkowski};
use crate::scalar::{Gauss, Scalar};
use crate::supergroup::{build_slq41, entry_rank, QMatrixAlgebra};

use super::expr::{parse, Atom, Expr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraName {
    /// The quantum matrix superalgebra on `a[i,j]`.
    Slq41,
    /// Minors `D[i,j]`, `Dc[..]` expanded inside `slq41`.
    Grq,
    /// The localization at `D[1,2]`, with `t`, `tau` standing for the chiral
    /// coordinates.
    Minkq,
    /// The abstract chiral presentation on `t`, `tau`.
    ChiralAbstract,
}

pub const ALGEBRA_NAMES: [&str; 4] = ["slq41", "grq", "minkq", "chiral-abstract"];

impl FromStr for AlgebraName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "slq41" => Ok(AlgebraName::Slq41),
            "grq" => Ok(AlgebraName::Grq),
            "minkq" => Ok(AlgebraName::Minkq),
            "chiral-abstract" => Ok(AlgebraName::ChiralAbstract),
            other => Err(Error::UnknownAlgebra(other.to_string())),
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            AlgebraName::Slq41 => 0,
            AlgebraName::Grq => 1,
            AlgebraName::Minkq => 2,
            AlgebraName::ChiralAbstract => 3,
        };
        f.write_str(ALGEBRA_NAMES[i])
    }
}

/// The scalar of a purely numeric subexpression, if it is one.
fn scalar_of(e: &Expr) -> Option<Scalar> {
    match e {
        Expr::Num(r) => Some(Scalar::constant(Gauss::new(r.clone(), num_traits::Zero::zero()))),
        Expr::I => Some(Scalar::i()),
        Expr::Q(k) => Some(Scalar::q_pow(*k)),
        Expr::Neg(x) => scalar_of(x).map(|s| -s),
        Expr::Add(a, b) => Some(&scalar_of(a)? + &scalar_of(b)?),
        Expr::Sub(a, b) => Some(&scalar_of(a)? - &scalar_of(b)?),
        Expr::Mul(a, b) => Some(&scalar_of(a)? * &scalar_of(b)?),
        Expr::Atom(_) => None,
    }
}

enum Backend {
    Matrix(QMatrixAlgebra),
    Minkowski(Box<QuantumMinkowski>),
    Chiral(AlgebraPresentation),
}

/// An algebra ready to evaluate expressions.
pub struct Evaluator {
    name: AlgebraName,
    backend: Backend,
}

impl Evaluator {
    pub fn new(name: AlgebraName) -> Result<Self> {
        let backend = match name {
            AlgebraName::Slq41 | AlgebraName::Grq => Backend::Matrix(build_slq41()),
            AlgebraName::Minkq => Backend::Minkowski(Box::new(QuantumMinkowski::build()?)),
            AlgebraName::ChiralAbstract => Backend::Chiral(build_chiral_abstract()),
        };
        Ok(Evaluator { name, backend })
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        match &self.backend {
            Backend::Matrix(m) => m.presentation(),
            Backend::Minkowski(qm) => qm.localized.presentation(),
            Backend::Chiral(p) => p,
        }
    }

    fn missing(&self, a: &Atom) -> Error {
        Error::AtomNotInAlgebra {
            atom: a.to_string(),
            algebra: self.name.to_string(),
        }
    }

    fn atom(&self, a: &Atom) -> Result<NCPoly> {
        match (&self.backend, self.name, a) {
            (Backend::Matrix(_), AlgebraName::Slq41, Atom::A(i, j)) => {
                Ok(NCPoly::generator(entry_rank(*i, *j)))
            }
            (Backend::Matrix(m), AlgebraName::Grq, Atom::D(i, j)) => Ok(m.minor(*i, *j)?.value),
            (Backend::Matrix(m), AlgebraName::Grq, Atom::Dc(r, c)) => {
                Ok(m.general_minor(*r, *c)?.value)
            }
            (Backend::Minkowski(qm), _, Atom::D(i, j)) => {
                qm.localized.minor((*i, *j)).ok_or_else(|| self.missing(a))
            }
            (Backend::Minkowski(qm), _, Atom::D12Inv) => Ok(qm.localized.d12inv()),
            (Backend::Minkowski(qm), _, Atom::T(i, j)) => {
                Ok(qm.chiral.t[(*i - 3) as usize][(*j - 1) as usize].clone())
            }
            (Backend::Minkowski(qm), _, Atom::Tau(j)) => {
                Ok(qm.chiral.tau[(*j - 1) as usize].clone())
            }
            (Backend::Chiral(p), _, Atom::T(i, j)) => p.gen("t", Some((*i, *j))),
            (Backend::Chiral(p), _, Atom::Tau(j)) => p.gen("tau", Some((5, *j))),
            _ => Err(self.missing(a)),
        }
    }

    /// Evaluates to the normal form in this algebra.
    pub fn eval(&self, e: &Expr) -> Result<NCPoly> {
        if let Some(s) = scalar_of(e) {
            return Ok(NCPoly::constant(s));
        }
        let pres = self.presentation();
        match e {
            Expr::Atom(a) => pres.normal_form(&self.atom(a)?),
            Expr::Neg(x) => Ok(self.eval(x)?.scale(&-Scalar::one())),
            Expr::Add(a, b) => Ok(&self.eval(a)? + &self.eval(b)?),
            Expr::Sub(a, b) => Ok(&self.eval(a)? - &self.eval(b)?),
            Expr::Mul(a, b) => pres.mul(&self.eval(a)?, &self.eval(b)?),
            _ => unreachable!("scalars handled above"),
        }
    }

    /// Normal form printed in the expression grammar. In `minkq` an element
    /// that vanishes in the ambient algebra prints as `0`.
    pub fn normal_form_text(&self, e: &Expr) -> Result<String> {
        let nf = self.eval(e)?;
        if let Backend::Minkowski(qm) = &self.backend {
            if qm.localized.is_zero(&nf, &qm.alg, &qm.minors)? {
                return Ok("0".into());
            }
        }
        Ok(self.presentation().display(&nf))
    }
}

/// Parses `text` and prints its normal form in the named algebra.
pub fn normal_form_command(text: &str, algebra: &str) -> Result<String> {
    let name: AlgebraName = algebra.parse()?;
    let expr = parse(text)?;
    Evaluator::new(name)?.normal_form_text(&expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples() {
        assert_eq!(
            normal_form_command("a[1,2]*a[1,1]", "slq41").unwrap(),
            "q*a[1,1]*a[1,2]"
        );
        assert_eq!(
            normal_form_command("tau[5,1]*tau[5,1]", "chiral-abstract").unwrap(),
            "0"
        );
        assert_eq!(normal_form_command("D[1,2]*D12inv", "minkq").unwrap(), "1");
    }

    #[test]
    fn scalar_expressions() {
        assert_eq!(normal_form_command("q*q^-1 + i*i", "slq41").unwrap(), "0");
        assert_eq!(normal_form_command("(q - q^-1)", "slq41").unwrap(), "-q^-1 + q");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            normal_form_command("a[1,1]", "nope"),
            Err(Error::UnknownAlgebra(_))
        ));
        assert!(matches!(
            normal_form_command("t[3,1]", "slq41"),
            Err(Error::AtomNotInAlgebra { .. })
        ));
        assert!(matches!(
            normal_form_command("x0", "minkq"),
            Err(Error::AtomNotInAlgebra { .. })
        ));
        assert!(matches!(
            normal_form_command("a[6,1]", "slq41"),
            Err(Error::UnknownAtom { .. })
        ));
    }

    #[test]
    fn grassmannian_minors_expand() {
        let e = Evaluator::new(AlgebraName::Grq).unwrap();
        let d = e.eval(&parse("D[1,2]").unwrap()).unwrap();
        let dc = e.eval(&parse("Dc[12;12]").unwrap()).unwrap();
        assert_eq!(d, dc);
        assert_eq!(
            e.presentation().display(&d),
            "-q^-1*a[1,2]*a[2,1] + a[1,1]*a[2,2]"
        );
    }

    #[test]
    fn chiral_relation_vanishes_in_both_algebras() {
        let text = "t[3,2]*t[4,1] - t[4,1]*t[3,2] - (q^-1 - q)*t[4,2]*t[3,1]";
        assert_eq!(normal_form_command(text, "chiral-abstract").unwrap(), "0");
        assert_eq!(normal_form_command(text, "minkq").unwrap(), "0");
    }
}
