//! The super Poincaré group of the chiral big cell and its action on the
//! coordinates `(C, theta, theta_bar)`.

use crate::algebra::Parity;
use crate::error::{Error, Result};
use crate::grassmann::{Frac, Ring, Vars};
use crate::matrix::Mat;
use crate::scalar::Gauss;

use super::superflag::superflag_reduce;
use super::symbols::{complex_matrix, complex_scalar, conj_entries, hermitian2, FMat};

fn half() -> Frac {
    Frac::constant(Gauss::from_ratio(1, 2))
}

/// Group element `[[L, 0, 0], [M, R, R phi], [d chi, 0, d]]` with `L`, `R`
/// even 2×2, `phi` an odd column, `chi` an odd row and `d` even.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperPoincare {
    pub l: FMat,
    pub m: FMat,
    pub r: FMat,
    pub phi: FMat,
    pub chi: FMat,
    pub d: Frac,
}

impl SuperPoincare {
    pub fn identity() -> Self {
        SuperPoincare {
            l: Mat::identity(2),
            m: Mat::zeros(2, 2),
            r: Mat::identity(2),
            phi: Mat::zeros(2, 1),
            chi: Mat::zeros(1, 2),
            d: <Frac as Ring>::one(),
        }
    }

    pub fn to_block(&self) -> FMat {
        let z22 = Mat::zeros(2, 2);
        let z21 = Mat::zeros(2, 1);
        let z12 = Mat::zeros(1, 2);
        let rphi = self.r.mul(&self.phi);
        let dchi = self.chi.scale(&self.d);
        let d = Mat::from_rows(vec![vec![self.d.clone()]]);
        Mat::from_blocks(&[
            vec![&self.l, &z22, &z21],
            vec![&self.m, &self.r, &rphi],
            vec![&dchi, &z12, &d],
        ])
    }

    pub fn from_block(g: &FMat) -> Result<Self> {
        let l = g.block(0, 2, 0, 2);
        let m = g.block(2, 4, 0, 2);
        let r = g.block(2, 4, 2, 4);
        let d = g.get(4, 4).clone();
        let dinv = d
            .inv()
            .ok_or_else(|| Error::Singular("d is not invertible".into()))?;
        let phi = r.inverse2()?.mul(&g.block(2, 4, 4, 5));
        let chi = g.block(4, 5, 0, 2).scale(&dinv);
        Ok(SuperPoincare { l, m, r, phi, chi, d })
    }

    /// Group law of the block matrix product `self * other`.
    pub fn compose(&self, other: &SuperPoincare) -> Result<Self> {
        SuperPoincare::from_block(&self.to_block().mul(&other.to_block()))
    }

    /// `N = M L^-1`.
    pub fn n(&self) -> Result<FMat> {
        Ok(self.m.mul(&self.l.inverse2()?))
    }

    /// `T = N - 1/2 R phi chi L^-1`, which reduces to
    /// `N - 1/2 (L^dagger)^-1 chi^dagger chi L^-1` on the real form.
    pub fn t(&self) -> Result<FMat> {
        let linv = self.l.inverse2()?;
        let corr = self.r.mul(&self.phi).mul(&self.chi).mul(&linv).scale(&half());
        Ok(self.n()?.sub(&corr))
    }
}

/// A point `(C, theta, theta_bar)` of the chiral big cell; `theta` and
/// `theta_bar` are odd 2×1 columns. In flag coordinates `beta = theta`,
/// `alpha = theta_bar^t` and `C = A - 1/2 beta alpha`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiralPoint {
    pub c: FMat,
    pub theta: FMat,
    pub theta_bar: FMat,
}

impl ChiralPoint {
    /// The frames `P1 = [1; A; alpha]` and `P2 = [[1, 0], [B, beta], [0, 1]]`
    /// with `A = C + 1/2 beta alpha` and `B = C - 1/2 beta alpha`.
    pub fn frames(&self) -> (FMat, FMat) {
        let alpha = self.theta_bar.transpose();
        let ba = self.theta.mul(&alpha).scale(&half());
        let a = self.c.add(&ba);
        let b = self.c.sub(&ba);
        let i2 = Mat::identity(2);
        let z12 = Mat::zeros(1, 2);
        let z21 = Mat::zeros(2, 1);
        let one = Mat::from_rows(vec![vec![<Frac as Ring>::one()]]);
        let p1 = Mat::from_blocks(&[vec![&i2], vec![&a], vec![&alpha]]);
        let p2 = Mat::from_blocks(&[vec![&i2, &z21], vec![&b, &self.theta], vec![&z12, &one]]);
        (p1, p2)
    }
}

/// Closed-form action
/// `C -> R (C + 1/2 phi theta_bar^t - 1/2 theta chi) L^-1 + T`,
/// `theta -> d^-1 R (theta + phi)`, `theta_bar -> d L^-1^t (theta_bar + chi^t)`.
pub fn super_poincare_chiral_action(g: &SuperPoincare, p: &ChiralPoint) -> Result<ChiralPoint> {
    let linv = g.l.inverse2()?;
    let dinv = g
        .d
        .inv()
        .ok_or_else(|| Error::Singular("d is not invertible".into()))?;
    let alpha = p.theta_bar.transpose();
    let inner = p
        .c
        .add(&g.phi.mul(&alpha).scale(&half()))
        .sub(&p.theta.mul(&g.chi).scale(&half()));
    let c = g.r.mul(&inner).mul(&linv).add(&g.t()?);
    let theta = g.r.mul(&p.theta.add(&g.phi)).scale(&dinv);
    let theta_bar = linv
        .transpose()
        .mul(&p.theta_bar.add(&g.chi.transpose()))
        .scale(&g.d);
    Ok(ChiralPoint {
        c,
        theta,
        theta_bar,
    })
}

/// The action read off from the block matrix acting on both flag frames,
/// followed by renormalization to standard form.
pub fn act_on_flag(g: &SuperPoincare, p: &ChiralPoint) -> Result<ChiralPoint> {
    let (p1, p2) = p.frames();
    let block = g.to_block();
    let red = superflag_reduce(&block.mul(&p1), &block.mul(&p2))?;
    if !red.twistor_holds() {
        return Err(Error::Singular("transformed flag left the big cell".into()));
    }
    let ch = red.chart;
    let c = ch.a.sub(&ch.beta.mul(&ch.alpha).scale(&half()));
    Ok(ChiralPoint {
        c,
        theta: ch.beta,
        theta_bar: ch.alpha.transpose(),
    })
}

/// The action in its real-form presentation, using `R^dagger` and the
/// conjugate `phi_bar`: `C -> R (C + 1/2 phi theta_bar^t - 1/2 theta
/// phi_bar^t) R^dagger + T`, `theta_bar -> d L^-1^t (theta_bar + phi_bar)`.
pub fn real_form_action(g: &SuperPoincare, p: &ChiralPoint, vars: &Vars) -> Result<ChiralPoint> {
    let phi_bar = conj_entries(&g.phi, vars);
    let dinv = g
        .d
        .inv()
        .ok_or_else(|| Error::Singular("d is not invertible".into()))?;
    let inner = p
        .c
        .add(&g.phi.mul(&p.theta_bar.transpose()).scale(&half()))
        .sub(&p.theta.mul(&phi_bar.transpose()).scale(&half()));
    let c = g.r.mul(&inner).mul(&g.r.dagger(vars)).add(&g.t()?);
    let theta = g.r.mul(&p.theta.add(&g.phi)).scale(&dinv);
    let theta_bar = g
        .l
        .inverse2()?
        .transpose()
        .mul(&p.theta_bar.add(&phi_bar))
        .scale(&g.d);
    Ok(ChiralPoint {
        c,
        theta,
        theta_bar,
    })
}

/// A generic complex group element with fresh variables prefixed by `tag`.
pub fn generic_element(vars: &mut Vars, tag: &str) -> SuperPoincare {
    SuperPoincare {
        l: complex_matrix(vars, &format!("{tag}l"), 2, 2, Parity::Even),
        m: complex_matrix(vars, &format!("{tag}m"), 2, 2, Parity::Even),
        r: complex_matrix(vars, &format!("{tag}r"), 2, 2, Parity::Even),
        phi: complex_matrix(vars, &format!("{tag}f"), 2, 1, Parity::Odd),
        chi: complex_matrix(vars, &format!("{tag}x"), 1, 2, Parity::Odd),
        d: complex_scalar(vars, &format!("{tag}d")).0,
    }
}

/// A generic element satisfying the reality conditions
/// `R = (L^dagger)^-1`, `phi = chi^dagger`, `T = T^dagger`, `d dbar = 1`.
pub fn generic_real_element(vars: &mut Vars, tag: &str) -> Result<SuperPoincare> {
    let l = complex_matrix(vars, &format!("{tag}l"), 2, 2, Parity::Even);
    let chi = complex_matrix(vars, &format!("{tag}x"), 1, 2, Parity::Odd);
    let t = hermitian2(vars, &format!("{tag}t"));
    let (u, ubar) = complex_scalar(vars, &format!("{tag}u"));
    let r = l.dagger(vars).inverse2()?;
    let phi = chi.dagger(vars);
    let linv = l.inverse2()?;
    let n = t.add(&r.mul(&phi).mul(&chi).mul(&linv).scale(&half()));
    let d = u.div(&ubar).expect("conjugate scalar is invertible");
    Ok(SuperPoincare {
        m: n.mul(&l),
        l,
        r,
        phi,
        chi,
        d,
    })
}

/// A generic complex point.
pub fn generic_point(vars: &mut Vars, tag: &str) -> ChiralPoint {
    ChiralPoint {
        c: complex_matrix(vars, &format!("{tag}c"), 2, 2, Parity::Even),
        theta: complex_matrix(vars, &format!("{tag}th"), 2, 1, Parity::Odd),
        theta_bar: complex_matrix(vars, &format!("{tag}tb"), 2, 1, Parity::Odd),
    }
}

/// A generic point with `C = C^dagger` and `theta_bar = conj(theta)`.
pub fn generic_real_point(vars: &mut Vars, tag: &str) -> ChiralPoint {
    let c = hermitian2(vars, &format!("{tag}c"));
    let theta = complex_matrix(vars, &format!("{tag}th"), 2, 1, Parity::Odd);
    let theta_bar = conj_entries(&theta, vars);
    ChiralPoint {
        c,
        theta,
        theta_bar,
    }
}

/// `C = C^dagger` and `theta_bar = conj(theta)`.
pub fn is_real_point(p: &ChiralPoint, vars: &Vars) -> bool {
    p.c == p.c.dagger(vars) && p.theta_bar == conj_entries(&p.theta, vars)
}
