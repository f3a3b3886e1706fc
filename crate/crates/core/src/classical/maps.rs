//! Rational maps of Minkowski space: translations, inversion and special
//! conformal transformations, with symbolic composition.

use crate::classical::conformal::METRIC;
use crate::grassmann::{Convention, SuperPoly, Vars};
use crate::scalar::Gauss;

/// Number of coordinate variables; ids `0..4` are `x0..x3`, larger ids are
/// parameters.
const DIM: u16 = 4;

/// `x -> num(x) / den(x)` with a shared denominator. Components may involve
/// symbolic parameters besides `x0..x3`.
#[derive(Clone, Debug)]
pub struct RationalMap {
    pub num: [SuperPoly; 4],
    pub den: SuperPoly,
}

impl PartialEq for RationalMap {
    /// Cross-multiplied equality of each component.
    fn eq(&self, other: &RationalMap) -> bool {
        (0..4).all(|mu| &self.num[mu] * &other.den == &other.num[mu] * &self.den)
    }
}

/// Registry with `x0..x3` (ids 0..3) followed by two symbolic vectors
/// `b0..b3` and `c0..c3`.
pub struct MapSpace {
    pub vars: Vars,
    pub x: [SuperPoly; 4],
    pub b: [SuperPoly; 4],
    pub c: [SuperPoly; 4],
}

impl MapSpace {
    pub fn new() -> Self {
        let mut vars = Vars::new(Convention::Automorphism);
        let x = std::array::from_fn(|mu| vars.real(&format!("x{mu}")));
        let b = std::array::from_fn(|mu| vars.real(&format!("b{mu}")));
        let c = std::array::from_fn(|mu| vars.real(&format!("c{mu}")));
        MapSpace { vars, x, b, c }
    }
}

impl Default for MapSpace {
    fn default() -> Self {
        MapSpace::new()
    }
}

pub fn minkowski_dot(u: &[SuperPoly; 4], v: &[SuperPoly; 4]) -> SuperPoly {
    (0..4).fold(SuperPoly::zero(), |acc, mu| {
        &acc + &(&u[mu] * &v[mu]).scale(&Gauss::from_int(METRIC[mu]))
    })
}

fn coords() -> [SuperPoly; 4] {
    std::array::from_fn(|mu| SuperPoly::even_var(mu as u16))
}

fn x_degree(p: &SuperPoly) -> u32 {
    p.terms()
        .map(|(m, _)| {
            m.even_part()
                .iter()
                .filter(|(v, _)| *v < DIM)
                .map(|&(_, e)| e)
                .sum()
        })
        .max()
        .unwrap_or(0)
}

impl RationalMap {
    pub fn identity() -> Self {
        RationalMap {
            num: coords(),
            den: SuperPoly::one(),
        }
    }

    /// `x -> x + b`.
    pub fn translation(b: &[SuperPoly; 4]) -> Self {
        let x = coords();
        RationalMap {
            num: std::array::from_fn(|mu| &x[mu] + &b[mu]),
            den: SuperPoly::one(),
        }
    }

    /// `x^mu -> x^mu / x^2`.
    pub fn inversion() -> Self {
        let x = coords();
        RationalMap {
            den: minkowski_dot(&x, &x),
            num: x,
        }
    }

    /// `f ∘ g`. Each polynomial of `f` is homogenized to the common degree
    /// `D` in `x` before substituting `x = g.num / g.den`, so the factors
    /// `g.den^-D` cancel between numerator and denominator.
    pub fn compose(&self, g: &RationalMap) -> RationalMap {
        let d = self
            .num
            .iter()
            .chain(std::iter::once(&self.den))
            .map(x_degree)
            .max()
            .unwrap_or(0);
        let den_powers: Vec<SuperPoly> = (0..=d).map(|k| g.den.pow(k)).collect();
        let eval = |p: &SuperPoly| -> SuperPoly {
            let mut out = SuperPoly::zero();
            for (m, c) in p.terms() {
                let mut term = SuperPoly::constant(c.clone());
                let mut k = 0;
                for &(v, e) in m.even_part() {
                    let factor = if v < DIM {
                        k += e;
                        g.num[v as usize].clone()
                    } else {
                        SuperPoly::even_var(v)
                    };
                    term = &term * &factor.pow(e);
                }
                out = &out + &(&term * &den_powers[(d - k) as usize]);
            }
            out
        };
        RationalMap {
            num: std::array::from_fn(|mu| eval(&self.num[mu])),
            den: eval(&self.den),
        }
    }
}

/// `x -> (x + b x^2) / (1 + 2 b.x + b^2 x^2)`. With `literal_variant` the
/// denominator is `1 + 2 b.x + 2 b^2 x^2` instead.
pub fn special_conformal_map(b: &[SuperPoly; 4], literal_variant: bool) -> RationalMap {
    let x = coords();
    let x2 = minkowski_dot(&x, &x);
    let bx = minkowski_dot(b, &x);
    let b2 = minkowski_dot(b, b);
    let k = if literal_variant { 2 } else { 1 };
    let den = &(&SuperPoly::one() + &bx.scale(&Gauss::from_int(2)))
        + &(&b2 * &x2).scale(&Gauss::from_int(k));
    RationalMap {
        num: std::array::from_fn(|mu| &x[mu] + &(&b[mu] * &x2)),
        den,
    }
}

/// `I ∘ T_b ∘ I`.
pub fn conjugated_translation(b: &[SuperPoly; 4]) -> RationalMap {
    let inv = RationalMap::inversion();
    inv.compose(&RationalMap::translation(b)).compose(&inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_parameter_is_identity() {
        let zero: [SuperPoly; 4] = std::array::from_fn(|_| SuperPoly::zero());
        assert_eq!(special_conformal_map(&zero, false), RationalMap::identity());
    }

    #[test]
    fn inversion_is_an_involution() {
        let inv = RationalMap::inversion();
        assert_eq!(inv.compose(&inv), RationalMap::identity());
    }

    #[test]
    fn numeric_parameter_matches_conjugated_translation() {
        let b = [1, 0, 2, -1].map(SuperPoly::from_int);
        assert_eq!(special_conformal_map(&b, false), conjugated_translation(&b));
        assert_ne!(special_conformal_map(&b, true), conjugated_translation(&b));
    }
}
