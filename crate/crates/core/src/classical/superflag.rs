//! Big cell of the flag supermanifold Fl(2|0, 2|1; 4|1) and the twistor
//! relation.

use crate::algebra::Parity;
use crate::error::{Error, Result};
use crate::grassmann::{Frac, Ring, Vars};
use crate::matrix::Mat;

use super::symbols::{real_matrix, FMat};

/// Standard-form coordinates of a point of the big cell: `P1 ~ [1; A; alpha]`
/// and `P2 ~ [[1, 0], [B, beta], [0, 1]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagChart {
    pub a: FMat,
    pub alpha: FMat,
    pub b: FMat,
    pub beta: FMat,
}

#[derive(Clone, Debug)]
pub struct SuperflagReduction {
    pub chart: FlagChart,
    /// `B - (A - beta alpha)`.
    pub residual: FMat,
}

impl SuperflagReduction {
    pub fn twistor_holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Normalizes the 5×2 frame of `P1` and the 5×3 frame of `P2` by the right
/// actions of GL(2) and GL(2|1).
pub fn superflag_reduce(p1: &FMat, p2: &FMat) -> Result<SuperflagReduction> {
    if (p1.rows(), p1.cols(), p2.rows(), p2.cols()) != (5, 2, 5, 3) {
        return Err(Error::Singular("expected 5x2 and 5x3 frames".into()));
    }
    let top1 = p1.block(0, 2, 0, 2);
    let top2 = p2.block(0, 2, 0, 2);
    if top1.det2().inv().is_none() {
        return Err(Error::Singular("top 2x2 block of P1".into()));
    }
    if top2.det2().inv().is_none() {
        return Err(Error::Singular("top 2x2 block of P2".into()));
    }
    if p2.get(4, 2).inv().is_none() {
        return Err(Error::Singular("entry b53 of P2".into()));
    }
    let q1 = p1.mul(&top1.inverse()?);
    let q2 = p2.mul(&p2.select_rows(&[0, 1, 4]).inverse()?);
    let chart = FlagChart {
        a: q1.block(2, 4, 0, 2),
        alpha: q1.block(4, 5, 0, 2),
        b: q2.block(2, 4, 0, 2),
        beta: q2.block(2, 4, 2, 3),
    };
    let residual = chart.b.sub(&chart.a.sub(&chart.beta.mul(&chart.alpha)));
    Ok(SuperflagReduction { chart, residual })
}

/// A generic flag: `P2` has independent entries (odd where the grading
/// requires) and `P1 = P2 K` for a generic 3×2 `K`, which imposes
/// `P1 ⊂ P2`. With `even_only` all odd entries are zero.
pub fn generic_superflag(vars: &mut Vars, even_only: bool) -> (FMat, FMat) {
    let b = real_matrix(vars, "b", 5, 3, Parity::Even);
    let delta = real_matrix(vars, "e", 5, 3, Parity::Odd);
    let k = real_matrix(vars, "k", 3, 2, Parity::Even);
    let kappa = real_matrix(vars, "h", 1, 2, Parity::Odd);
    let odd_slot = |i: usize, j: usize| (i == 4) != (j == 2);
    let p2 = Mat::from_fn(5, 3, |i, j| {
        if !odd_slot(i, j) {
            b.get(i, j).clone()
        } else if even_only {
            <Frac as Ring>::zero()
        } else {
            delta.get(i, j).clone()
        }
    });
    let kmat = Mat::from_fn(3, 2, |i, j| {
        if i < 2 {
            k.get(i, j).clone()
        } else if even_only {
            <Frac as Ring>::zero()
        } else {
            kappa.get(0, j).clone()
        }
    });
    (p2.mul(&kmat), p2)
}
