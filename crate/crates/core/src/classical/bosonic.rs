//! The big cell of Gr(2,4): Pauli coordinates, the Poincaré action and
//! reduction of a 4×2 frame to its chart matrix.

use crate::error::{Error, Result};
use crate::grassmann::{Frac, Ring};
use crate::matrix::Mat;
use crate::scalar::Gauss;

pub type FMat = Mat<Frac>;

fn c(re: i64, im: i64) -> Frac {
    Frac::constant(Gauss::gaussian(re, im))
}

/// The Pauli matrices `sigma_0..sigma_3`.
pub fn pauli_matrices() -> [FMat; 4] {
    [
        Mat::from_rows(vec![vec![c(1, 0), c(0, 0)], vec![c(0, 0), c(1, 0)]]),
        Mat::from_rows(vec![vec![c(0, 0), c(1, 0)], vec![c(1, 0), c(0, 0)]]),
        Mat::from_rows(vec![vec![c(0, 0), c(0, -1)], vec![c(0, 1), c(0, 0)]]),
        Mat::from_rows(vec![vec![c(1, 0), c(0, 0)], vec![c(0, 0), c(-1, 0)]]),
    ]
}

/// `A = x^mu sigma_mu`.
pub fn pauli_map(x: &[Frac; 4]) -> FMat {
    let s = pauli_matrices();
    (0..4).fold(Mat::zeros(2, 2), |acc, mu| acc.add(&s[mu].scale(&x[mu])))
}

/// `(x^0)^2 - (x^1)^2 - (x^2)^2 - (x^3)^2`.
pub fn minkowski_form(x: &[Frac; 4]) -> Frac {
    (0..4).fold(<Frac as Ring>::zero(), |acc, mu| {
        let sq = x[mu].mul(&x[mu]);
        if mu == 0 {
            acc.add(&sq)
        } else {
            acc.sub(&sq)
        }
    })
}

/// An element of the Poincaré group of the big cell, written as the block
/// matrix `[[L, 0], [N L, R]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoincareElement {
    pub l: FMat,
    pub r: FMat,
    pub n: FMat,
}

impl PoincareElement {
    pub fn identity() -> Self {
        PoincareElement {
            l: Mat::identity(2),
            r: Mat::identity(2),
            n: Mat::zeros(2, 2),
        }
    }

    pub fn to_block(&self) -> FMat {
        let zero = Mat::zeros(2, 2);
        let nl = self.n.mul(&self.l);
        Mat::from_blocks(&[vec![&self.l, &zero], vec![&nl, &self.r]])
    }

    /// Reads `L`, `R` and `N = M L^-1` off a block lower-triangular matrix.
    pub fn from_block(g: &FMat) -> Result<Self> {
        let l = g.block(0, 2, 0, 2);
        let m = g.block(2, 4, 0, 2);
        let r = g.block(2, 4, 2, 4);
        if !g.block(0, 2, 2, 4).is_zero() {
            return Err(Error::Singular("not block lower-triangular".into()));
        }
        let n = m.mul(&l.inverse2()?);
        Ok(PoincareElement { l, r, n })
    }

    /// Group law induced by the block matrix product `self * other`.
    pub fn compose(&self, other: &PoincareElement) -> Result<Self> {
        PoincareElement::from_block(&self.to_block().mul(&other.to_block()))
    }
}

/// `A -> N + R A L^-1`.
pub fn poincare_action(g: &PoincareElement, a: &FMat) -> Result<FMat> {
    Ok(g.n.add(&g.r.mul(a).mul(&g.l.inverse2()?)))
}

/// Bottom block of `P1 * (top block)^-1`.
pub fn big_cell_reduce(p1: &FMat) -> Result<FMat> {
    if (p1.rows(), p1.cols()) != (4, 2) {
        return Err(Error::Singular("expected a 4x2 frame".into()));
    }
    let top = p1.block(0, 2, 0, 2);
    if top.det2().inv().is_none() {
        return Err(Error::Singular("top block of the frame".into()));
    }
    let inv = top.inverse()?;
    Ok(p1.block(2, 4, 0, 2).mul(&inv))
}
