//! Exact linear algebra over Q(i)(q).
//!
//! Matrices hold Laurent-polynomial entries and are brought to row echelon
//! form by fraction-free (Bareiss) elimination; only back substitution works
//! in the fraction field.

use std::collections::BTreeMap;

use super::{AlgebraPresentation, NCPoly, Word};
use crate::error::{Error, Result};
use crate::scalar::{Gauss, RatFunc, Scalar};

/// Fraction-free row reduction in place. Returns the pivot positions
/// `(row, column)` in order.
pub fn bareiss_echelon(m: &mut [Vec<Scalar>]) -> Vec<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = Scalar::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let num = &(pivot * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
            row[c] = Scalar::zero();
        }
        prev = pivot.clone();
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

/// Rank of a list of vectors (all the same length).
pub fn rank(vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut m = vectors.to_vec();
    bareiss_echelon(&mut m).len()
}

/// Solves `sum_i x_i columns[i] = rhs`. Free unknowns are set to zero.
/// Returns `None` when the system is inconsistent.
pub fn solve(columns: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<RatFunc>> {
    let n = columns.len();
    let rows = rhs.len();
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Scalar> = columns.iter().map(|col| col[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let pivots = bareiss_echelon(&mut m);
    if pivots.iter().any(|&(_, c)| c == n) {
        return None;
    }
    let mut x = vec![RatFunc::zero(); n];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = RatFunc::from_scalar(m[r][n].clone());
        for &(_, c2) in pivots.iter().filter(|&&(_, c2)| c2 > c) {
            if !m[r][c2].is_zero() {
                acc = &acc - &(&RatFunc::from_scalar(m[r][c2].clone()) * &x[c2]);
            }
        }
        x[c] = acc
            .div(&RatFunc::from_scalar(m[r][c].clone()))
            .expect("pivot is nonzero");
    }
    Some(x)
}

/// Coordinates of several polynomials over the union of their supports.
pub fn coordinates(polys: &[&NCPoly]) -> Vec<Vec<Scalar>> {
    let mut index: BTreeMap<&Word, usize> = BTreeMap::new();
    for p in polys {
        for (w, _) in p.terms() {
            let next = index.len();
            index.entry(w).or_insert(next);
        }
    }
    polys
        .iter()
        .map(|p| {
            let mut v = vec![Scalar::zero(); index.len()];
            for (w, c) in p.terms() {
                v[index[w]] = c.clone();
            }
            v
        })
        .collect()
}

/// Finds scalars `c_i` in Q(i)(q) with `p = sum c_i basis_i` in the algebra.
///
/// Both sides are reduced to normal form first. When the basis is linearly
/// dependent the solution chosen sets the later, dependent elements to zero.
/// Returns `Ok(None)` if `p` is not in the span.
pub fn express_in_basis(
    p: &NCPoly,
    basis: &[NCPoly],
    alg: &AlgebraPresentation,
) -> Result<Option<Vec<RatFunc>>> {
    let target = alg.normal_form(p)?;
    let mut reduced = Vec::with_capacity(basis.len());
    for (index, b) in basis.iter().enumerate() {
        let nf = alg.normal_form(b)?;
        if nf.is_zero() {
            return Err(Error::DegenerateBasis { index });
        }
        reduced.push(nf);
    }
    Ok(solve_reduced(&target, &reduced))
}

/// As [`express_in_basis`] for polynomials that are already reduced.
pub fn solve_reduced(target: &NCPoly, basis: &[NCPoly]) -> Option<Vec<RatFunc>> {
    let mut all: Vec<&NCPoly> = basis.iter().collect();
    all.push(target);
    let mut coords = coordinates(&all);
    let rhs = coords.pop().unwrap();
    solve(&coords, &rhs)
}

/// Dimension of the span of the given polynomials in the algebra.
pub fn span_rank(polys: &[NCPoly], alg: &AlgebraPresentation) -> Result<usize> {
    let reduced = polys
        .iter()
        .map(|p| alg.normal_form(p))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&NCPoly> = reduced.iter().collect();
    Ok(rank(&coordinates(&refs)))
}

/// Basis of the nullspace of the matrix with the given rows, over Q(i),
/// by reduced row echelon form.
pub fn nullspace(rows: &[Vec<Gauss>], cols: usize) -> Vec<Vec<Gauss>> {
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[i][j] - &(&f * &m[r][j]);
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Gauss::zero(); cols];
            v[free] = Gauss::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][free];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cq;

    fn c(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_of_dependent_rows() {
        let v = vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(0), c(1), cq(1, 1)],
        ];
        assert_eq!(rank(&v), 2);
    }

    #[test]
    fn solve_with_laurent_entries() {
        // columns (1, q) and (q, 1); rhs = q * col0 - q^-1 * col1
        let col0 = vec![c(1), cq(1, 1)];
        let col1 = vec![cq(1, 1), c(1)];
        let rhs: Vec<Scalar> = (0..2)
            .map(|i| &(&cq(1, 1) * &col0[i]) - &(&cq(1, -1) * &col1[i]))
            .collect();
        let x = solve(&[col0, col1], &rhs).unwrap();
        assert_eq!(x[0], RatFunc::from_scalar(cq(1, 1)));
        assert_eq!(x[1], RatFunc::from_scalar(cq(-1, -1)));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let g = Gauss::from_int;
        let ns = nullspace(&[vec![g(1), g(2), g(3)]], 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!((&v[0] + &(&g(2) * &v[1]) + &g(3) * &v[2]).is_zero());
        }
    }

    #[test]
    fn inconsistent_system() {
        let col0 = vec![c(1), c(1)];
        assert!(solve(&[col0], &[c(1), c(2)]).is_none());
    }

    #[test]
    fn fractional_solution() {
        // (1 + q) x = 1
        let col = vec![Scalar::from_terms(vec![(0, Gauss::one()), (1, Gauss::one())])];
        let x = solve(&[col], &[c(1)]).unwrap();
        assert_eq!(x[0].denom(), &Scalar::from_terms(vec![(0, Gauss::one()), (1, Gauss::one())]));
    }
}
