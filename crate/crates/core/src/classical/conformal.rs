//! The fifteen polynomial vector fields generating conformal transformations
//! of Minkowski space, and their structure constants.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::algebra::linalg;
use crate::error::{Error, Result};
use crate::grassmann::{Convention, Monomial, SuperPoly, Vars};
use crate::scalar::{Gauss, Scalar};

/// Diagonal of the Minkowski metric, signature (+,-,-,-).
pub const METRIC: [i64; 4] = [1, -1, -1, -1];

/// A vector field `sum_mu V^mu d_mu` with polynomial coefficients in the
/// coordinates `x^0..x^3` (variable ids 0..3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    pub components: [SuperPoly; 4],
}

/// Registry holding `x0..x3` as real variables with ids 0..3.
pub fn coordinates() -> (Vars, [SuperPoly; 4]) {
    let mut vars = Vars::new(Convention::Automorphism);
    let x = std::array::from_fn(|mu| vars.real(&format!("x{mu}")));
    (vars, x)
}

fn x(mu: usize) -> SuperPoly {
    SuperPoly::even_var(mu as u16)
}

/// `x_mu = eta_{mu nu} x^nu`.
fn x_lower(mu: usize) -> SuperPoly {
    x(mu).scale(&Gauss::from_int(METRIC[mu]))
}

/// `x^2 = eta_{mu nu} x^mu x^nu`.
pub fn x_squared() -> SuperPoly {
    (0..4).fold(SuperPoly::zero(), |acc, mu| &acc + &(&x(mu) * &x_lower(mu)))
}

impl PolyVectorField {
    pub fn zero() -> Self {
        PolyVectorField {
            components: std::array::from_fn(|_| SuperPoly::zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SuperPoly::is_zero)
    }

    /// `V(f) = V^mu d_mu f`.
    pub fn apply(&self, f: &SuperPoly) -> SuperPoly {
        (0..4).fold(SuperPoly::zero(), |acc, mu| {
            &acc + &(&self.components[mu] * &f.diff_even(mu as u16))
        })
    }

    /// `[V, W]^mu = V(W^mu) - W(V^mu)`.
    pub fn bracket(&self, other: &PolyVectorField) -> PolyVectorField {
        PolyVectorField {
            components: std::array::from_fn(|mu| {
                &self.apply(&other.components[mu]) - &other.apply(&self.components[mu])
            }),
        }
    }

    pub fn scale(&self, c: &Gauss) -> PolyVectorField {
        PolyVectorField {
            components: std::array::from_fn(|mu| self.components[mu].scale(c)),
        }
    }

    pub fn add(&self, other: &PolyVectorField) -> PolyVectorField {
        PolyVectorField {
            components: std::array::from_fn(|mu| &self.components[mu] + &other.components[mu]),
        }
    }

    pub fn display(&self, vars: &Vars) -> String {
        let parts: Vec<String> = (0..4)
            .filter(|&mu| !self.components[mu].is_zero())
            .map(|mu| format!("({})*d{mu}", vars.display(&self.components[mu])))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Which conformal generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConformalKind {
    P(u8),
    D,
    L(u8, u8),
    K(u8),
}

impl fmt::Display for ConformalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConformalKind::P(m) => write!(f, "P{m}"),
            ConformalKind::D => write!(f, "D"),
            ConformalKind::L(m, n) => write!(f, "L{m}{n}"),
            ConformalKind::K(m) => write!(f, "K{m}"),
        }
    }
}

/// `P_mu = d_mu`, `D = x^mu d_mu`, `L_{mu nu} = x_nu d_mu - x_mu d_nu`,
/// `K_mu = 2 x_mu x^nu d_nu - x^2 d_mu`.
pub fn conformal_generator(kind: ConformalKind) -> Result<PolyVectorField> {
    let check = |m: u8| {
        if m < 4 {
            Ok(m as usize)
        } else {
            Err(Error::InvalidIndex(m as usize, 0))
        }
    };
    let mut v = PolyVectorField::zero();
    match kind {
        ConformalKind::P(m) => v.components[check(m)?] = SuperPoly::one(),
        ConformalKind::D => v.components = std::array::from_fn(x),
        ConformalKind::L(m, n) => {
            let (m, n) = (check(m)?, check(n)?);
            if m == n {
                return Err(Error::InvalidIndex(m, n));
            }
            v.components[m] = x_lower(n);
            v.components[n] = -&x_lower(m);
        }
        ConformalKind::K(m) => {
            let m = check(m)?;
            let two_xm = x_lower(m).scale(&Gauss::from_int(2));
            v.components = std::array::from_fn(|nu| &two_xm * &x(nu));
            v.components[m] = &v.components[m] - &x_squared();
        }
    }
    Ok(v)
}

/// The basis in table order: `P0..P3, D, L01, L02, L03, L12, L13, L23,
/// K0..K3`.
pub fn conformal_basis() -> Vec<ConformalKind> {
    let mut out: Vec<ConformalKind> = (0..4).map(ConformalKind::P).collect();
    out.push(ConformalKind::D);
    for m in 0..4 {
        for n in m + 1..4 {
            out.push(ConformalKind::L(m, n));
        }
    }
    out.extend((0..4).map(ConformalKind::K));
    out
}

/// `[V_i, V_j] = sum_k c_k V_k` for one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<(usize, Gauss)>,
}

#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub basis: Vec<ConformalKind>,
    pub entries: Vec<BracketEntry>,
}

impl StructureConstants {
    pub fn get(&self, a: ConformalKind, b: ConformalKind) -> Option<Vec<(ConformalKind, Gauss)>> {
        let i = self.basis.iter().position(|&k| k == a)?;
        let j = self.basis.iter().position(|&k| k == b)?;
        let (lo, hi, sign) = if i <= j { (i, j, 1) } else { (j, i, -1) };
        let e = self.entries.iter().find(|e| e.i == lo && e.j == hi)?;
        Some(
            e.coefficients
                .iter()
                .map(|(k, c)| (self.basis[*k], c.scale_int(sign)))
                .collect(),
        )
    }

    pub fn display_entry(&self, e: &BracketEntry) -> String {
        let rhs = if e.coefficients.is_empty() {
            "0".to_string()
        } else {
            e.coefficients
                .iter()
                .map(|(k, c)| {
                    if c.is_one() {
                        self.basis[*k].to_string()
                    } else if (-c.clone()).is_one() {
                        format!("-{}", self.basis[*k])
                    } else {
                        format!("{c}*{}", self.basis[*k])
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
                .replace("+ -", "- ")
        };
        format!("[{}, {}] = {rhs}", self.basis[e.i], self.basis[e.j])
    }
}

/// Coordinates of vector fields over `(component, monomial)`.
fn field_coordinates(fields: &[&PolyVectorField]) -> Vec<Vec<Scalar>> {
    let mut index: BTreeMap<(usize, &Monomial), usize> = BTreeMap::new();
    for f in fields {
        for (mu, comp) in f.components.iter().enumerate() {
            for (m, _) in comp.terms() {
                let next = index.len();
                index.entry((mu, m)).or_insert(next);
            }
        }
    }
    fields
        .iter()
        .map(|f| {
            let mut v = vec![Scalar::zero(); index.len()];
            for (mu, comp) in f.components.iter().enumerate() {
                for (m, c) in comp.terms() {
                    v[index[&(mu, m)]] = Scalar::constant(c.clone());
                }
            }
            v
        })
        .collect()
}

/// Expresses every bracket `[V_i, V_j]`, `i < j`, in the 15-element basis.
pub fn bracket_closure_table() -> Result<StructureConstants> {
    let basis = conformal_basis();
    let fields = basis
        .iter()
        .map(|&k| conformal_generator(k))
        .collect::<Result<Vec<_>>>()?;
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let entries = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<BracketEntry> {
            let br = fields[i].bracket(&fields[j]);
            let mut all: Vec<&PolyVectorField> = fields.iter().collect();
            all.push(&br);
            let mut coords = field_coordinates(&all);
            let rhs = coords.pop().expect("target row");
            let x = linalg::solve(&coords, &rhs).ok_or_else(|| {
                Error::NotInSpan(format!("[{}, {}]", basis[i], basis[j]))
            })?;
            let coefficients = x
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let g = c
                        .as_scalar()
                        .and_then(Scalar::as_constant)
                        .expect("constant structure constant");
                    (k, g)
                })
                .collect();
            Ok(BracketEntry { i, j, coefficients })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StructureConstants { basis, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConformalKind::*;

    #[test]
    fn displayed_fields() {
        let (vars, _) = coordinates();
        assert_eq!(conformal_generator(P(0)).unwrap().display(&vars), "(1)*d0");
        let k1 = conformal_generator(K(1)).unwrap();
        // K1 = -2 x^1 x^nu d_nu - x^2 d_1
        assert_eq!(
            vars.display(&k1.components[1]),
            "-x0^2 - x1^2 + x2^2 + x3^2"
        );
        assert_eq!(vars.display(&k1.components[0]), "-2*x0*x1");
    }

    #[test]
    fn invalid_indices() {
        assert!(conformal_generator(P(4)).is_err());
        assert!(conformal_generator(L(2, 2)).is_err());
    }

    #[test]
    fn dilation_scales_translations() {
        let d = conformal_generator(D).unwrap();
        for mu in 0..4 {
            let p = conformal_generator(P(mu)).unwrap();
            assert_eq!(d.bracket(&p), p.scale(&Gauss::from_int(-1)));
        }
    }
}
