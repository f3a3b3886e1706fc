//! Real forms: the conjugation `sigma` of sl(4|1) whose fixed points are
//! su(2,2|1), and the conjugation of the super Poincaré group.

use rayon::prelude::*;

use crate::algebra::linalg::nullspace;
use crate::classical::superpoincare::SuperPoincare;
use crate::error::Result;
use crate::grassmann::{Frac, Ring, Vars};
use crate::matrix::Mat;
use crate::scalar::Gauss;

pub type GMat = Mat<Gauss>;

fn g(re: i64, im: i64) -> Gauss {
    Gauss::gaussian(re, im)
}

/// `F = i [[0, -1], [1, 0]]` in 2×2 blocks.
pub fn f_matrix() -> GMat {
    Mat::from_fn(4, 4, |i, j| match (i, j) {
        (0, 2) | (1, 3) => g(0, -1),
        (2, 0) | (3, 1) => g(0, 1),
        _ => g(0, 0),
    })
}

/// The unit matrix `E_ij` (zero-based indices) in gl(4|1).
pub fn unit(i: usize, j: usize) -> GMat {
    Mat::from_fn(5, 5, |a, b| if (a, b) == (i, j) { g(1, 0) } else { g(0, 0) })
}

/// An element of sl(4|1) with its parity.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisElement {
    pub name: String,
    pub matrix: GMat,
    pub odd: bool,
}

/// The 24-element basis: the twelve off-diagonal `E_ij` of the even block,
/// `E_kk + E_55`, then the odd `E_i5` and `E_5i`.
pub fn sl41_basis() -> Vec<BasisElement> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                out.push(BasisElement {
                    name: format!("E{}{}", i + 1, j + 1),
                    matrix: unit(i, j),
                    odd: false,
                });
            }
        }
    }
    for k in 0..4 {
        out.push(BasisElement {
            name: format!("E{0}{0}+E55", k + 1),
            matrix: unit(k, k).add(&unit(4, 4)),
            odd: false,
        });
    }
    for i in 0..4 {
        out.push(BasisElement {
            name: format!("E{}5", i + 1),
            matrix: unit(i, 4),
            odd: true,
        });
        out.push(BasisElement {
            name: format!("E5{}", i + 1),
            matrix: unit(4, i),
            odd: true,
        });
    }
    out
}

/// Blocks `(p, alpha, beta, c)` of a 5×5 matrix.
pub fn blocks(x: &GMat) -> (GMat, GMat, GMat, Gauss) {
    (
        x.block(0, 4, 0, 4),
        x.block(0, 4, 4, 5),
        x.block(4, 5, 0, 4),
        x.get(4, 4).clone(),
    )
}

fn assemble(p: &GMat, alpha: &GMat, beta: &GMat, c: Gauss) -> GMat {
    let c = Mat::from_rows(vec![vec![c]]);
    Mat::from_blocks(&[vec![p, alpha], vec![beta, &c]])
}

/// `sigma(p, alpha, beta, c) = (-F p^dagger F, i F beta^dagger,
/// i alpha^dagger F, -conj(c))`.
pub fn sigma(x: &GMat) -> GMat {
    let f = f_matrix();
    let (p, alpha, beta, c) = blocks(x);
    let i = g(0, 1);
    assemble(
        &f.mul(&p.dagger()).mul(&f).scale_gauss(&g(-1, 0)),
        &f.mul(&beta.dagger()).scale_gauss(&i),
        &alpha.dagger().mul(&f).scale_gauss(&i),
        -c.conj(),
    )
}

/// Supertrace under the convention `str = tr p - c`.
pub fn supertrace(x: &GMat) -> Gauss {
    let (p, _, _, c) = blocks(x);
    &p.trace() - &c
}

/// `[X, Y] = XY - (-1)^{|X||Y|} YX`.
pub fn supercommutator(x: &GMat, x_odd: bool, y: &GMat, y_odd: bool) -> GMat {
    let xy = x.mul(y);
    let yx = y.mul(x);
    if x_odd && y_odd {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    }
}

/// A failed identity on a pair of basis elements.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub pair: (String, String),
    pub detail: String,
}

/// `sigma(sigma(X)) = X` and `sigma(iX) = -i sigma(X)` on every basis
/// element; returns the failures.
pub fn check_involution() -> Vec<Violation> {
    let i = g(0, 1);
    sl41_basis()
        .into_iter()
        .filter_map(|b| {
            let twice = sigma(&sigma(&b.matrix));
            let anti = sigma(&b.matrix.scale_gauss(&i)) == sigma(&b.matrix).scale_gauss(&-i.clone());
            (twice != b.matrix || !anti).then(|| Violation {
                pair: (b.name.clone(), b.name.clone()),
                detail: format!("sigma^2 = {twice}"),
            })
        })
        .collect()
}

/// `sigma [X, Y] = [sigma X, sigma Y]` for every ordered pair of basis
/// elements.
pub fn check_bracket_compatibility() -> Vec<Violation> {
    let basis = sl41_basis();
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|a| (0..basis.len()).map(move |b| (a, b)))
        .collect();
    let mut out: Vec<Violation> = pairs
        .par_iter()
        .filter_map(|&(a, b)| {
            let (x, y) = (&basis[a], &basis[b]);
            let lhs = sigma(&supercommutator(&x.matrix, x.odd, &y.matrix, y.odd));
            let rhs = supercommutator(&sigma(&x.matrix), x.odd, &sigma(&y.matrix), y.odd);
            (lhs != rhs).then(|| Violation {
                pair: (x.name.clone(), y.name.clone()),
                detail: format!("{lhs} != {rhs}"),
            })
        })
        .collect();
    out.sort_by(|a, b| a.pair.cmp(&b.pair));
    out
}

/// The real fixed-point subspace of `sigma` inside one parity part.
#[derive(Clone, Debug)]
pub struct FixedPoints {
    pub even: Vec<GMat>,
    pub odd: Vec<GMat>,
}

impl FixedPoints {
    pub fn dimensions(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }
}

/// Coordinates of a 5×5 matrix as 50 rationals (real and imaginary parts).
fn real_coordinates(x: &GMat) -> Vec<Gauss> {
    x.entries()
        .flat_map(|z| {
            [
                Gauss::new(z.re.clone(), num_traits::Zero::zero()),
                Gauss::new(z.im.clone(), num_traits::Zero::zero()),
            ]
        })
        .collect()
}

/// Solves `sigma(X) = X` over the reals, separately on the even and odd
/// parts of sl(4|1), each viewed as a real vector space with basis
/// `{b, i b}`.
pub fn fixed_points() -> FixedPoints {
    let basis = sl41_basis();
    let solve = |odd: bool| -> Vec<GMat> {
        let real_basis: Vec<GMat> = basis
            .iter()
            .filter(|b| b.odd == odd)
            .flat_map(|b| [b.matrix.clone(), b.matrix.scale_gauss(&g(0, 1))])
            .collect();
        let images: Vec<Vec<Gauss>> = real_basis
            .iter()
            .map(|v| real_coordinates(&sigma(v).sub(v)))
            .collect();
        let rows: Vec<Vec<Gauss>> = (0..50)
            .map(|r| images.iter().map(|col| col[r].clone()).collect())
            .collect();
        nullspace(&rows, real_basis.len())
            .into_iter()
            .map(|coeffs| {
                coeffs
                    .iter()
                    .zip(&real_basis)
                    .fold(Mat::zeros(5, 5), |acc, (c, v)| acc.add(&v.scale_gauss(c)))
            })
            .collect()
    };
    FixedPoints {
        even: solve(false),
        odd: solve(true),
    }
}

/// Whether `X` satisfies `F p + p^dagger F = 0`, `tr p = c`, `c + conj(c) = 0`
/// and `alpha = i F beta^dagger`.
pub fn satisfies_su221(x: &GMat) -> bool {
    let f = f_matrix();
    let (p, alpha, beta, c) = blocks(x);
    f.mul(&p).add(&p.dagger().mul(&f)).is_zero()
        && p.trace() == c
        && (&c + &c.conj()).is_zero()
        && alpha == f.mul(&beta.dagger()).scale_gauss(&g(0, 1))
}

/// The conjugation of the super Poincaré group:
/// `L' = (R^dagger)^-1`, `M' = (L^dagger)^-1 M^dagger (R^dagger)^-1 +
/// (L^dagger)^-1 chi^dagger phi^dagger`, `R' = (L^dagger)^-1`,
/// `phi' = chi^dagger`, `chi' = phi^dagger`, `d' = conj(d)^-1`.
pub fn rho(g: &SuperPoincare, vars: &Vars) -> Result<SuperPoincare> {
    let ldi = g.l.dagger(vars).inverse2()?;
    let rdi = g.r.dagger(vars).inverse2()?;
    let chi_d = g.chi.dagger(vars);
    let phi_d = g.phi.dagger(vars);
    let m = ldi
        .mul(&g.m.dagger(vars))
        .mul(&rdi)
        .add(&ldi.mul(&chi_d).mul(&phi_d));
    let d = g
        .d
        .conj(vars)
        .inv()
        .ok_or_else(|| crate::Error::Singular("conj(d)".into()))?;
    Ok(SuperPoincare {
        l: rdi,
        m,
        r: ldi,
        phi: chi_d,
        chi: phi_d,
        d,
    })
}

/// Outcome of reducing the reality conditions of a group element.
#[derive(Clone, Debug)]
pub struct RealityReduction {
    pub n: Mat<Frac>,
    pub t: Mat<Frac>,
    /// `L = (R^dagger)^-1`.
    pub l_condition: bool,
    /// `phi = chi^dagger`.
    pub phi_condition: bool,
    /// `T = T^dagger`.
    pub t_condition: bool,
    /// `N = N^dagger + (L^dagger)^-1 chi^dagger chi L^-1`.
    pub raw_condition: bool,
    /// `d conj(d) = 1`.
    pub d_condition: bool,
    /// `rho(g) = g`.
    pub fixed: bool,
}

impl RealityReduction {
    /// The displayed conditions in T-form.
    pub fn real(&self) -> bool {
        self.l_condition && self.phi_condition && self.t_condition && self.d_condition
    }
}

/// `(L^dagger)^-1 chi^dagger chi L^-1`.
pub fn odd_correction(g: &SuperPoincare, vars: &Vars) -> Result<Mat<Frac>> {
    Ok(g
        .l
        .dagger(vars)
        .inverse2()?
        .mul(&g.chi.dagger(vars))
        .mul(&g.chi)
        .mul(&g.l.inverse2()?))
}

pub fn poincare_reality_reduce(g: &SuperPoincare, vars: &Vars) -> Result<RealityReduction> {
    let n = g.n()?;
    let t = g.t()?;
    let h = odd_correction(g, vars)?;
    let one = <Frac as Ring>::one();
    Ok(RealityReduction {
        l_condition: g.l == g.r.dagger(vars).inverse2()?,
        phi_condition: g.phi == g.chi.dagger(vars),
        t_condition: t == t.dagger(vars),
        raw_condition: n == n.dagger(vars).add(&h),
        d_condition: g.d.mul(&g.d.conj(vars)) == one,
        fixed: rho(g, vars)? == *g,
        n,
        t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_is_hermitian_involution() {
        let f = f_matrix();
        assert_eq!(f.dagger(), f);
        assert_eq!(f.mul(&f), Mat::identity(4));
    }

    #[test]
    fn sigma_on_diagonal_element() {
        // E11 + E55: p = E11, c = 1.
        let x = unit(0, 0).add(&unit(4, 4));
        let s = sigma(&x);
        // -F E11 F = -E33 since F e1 = i e3 and e1^T F = -i e3^T.
        let expected = unit(2, 2).scale_gauss(&g(-1, 0)).sub(&unit(4, 4));
        assert_eq!(s, expected);
    }

    #[test]
    fn basis_has_zero_supertrace() {
        for b in sl41_basis() {
            assert!(supertrace(&b.matrix).is_zero(), "{}", b.name);
        }
    }
}
