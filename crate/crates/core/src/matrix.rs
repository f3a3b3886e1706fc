//! Small dense matrices over a [`Ring`].

use std::fmt;

use crate::error::{Error, Result};
use crate::grassmann::{Frac, Ring, Vars};
use crate::scalar::Gauss;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(o.get(i, j)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(o.get(i, j)))
    }

    pub fn neg(&self) -> Self {
        self.map(T::neg)
    }

    /// Matrix product; entries are multiplied in order `a_ik * b_kj`.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        Mat::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc.add(&self.get(i, k).mul(o.get(k, j))))
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.mul(x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    /// Submatrix of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Mat::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Submatrix on the listed rows, all columns.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Mat::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Assembles a matrix from a grid of blocks with compatible shapes.
    pub fn from_blocks(blocks: &[Vec<&Mat<T>>]) -> Self {
        let heights: Vec<usize> = blocks.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let rows: usize = heights.iter().sum();
        let cols: usize = widths.iter().sum();
        let mut out = Mat::zeros(rows, cols);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                assert_eq!((b.rows, b.cols), (heights[bi], widths[bj]), "block shape");
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        out
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Determinant of a 2×2 matrix with even entries.
    pub fn det2(&self) -> T {
        assert_eq!((self.rows, self.cols), (2, 2));
        self.get(0, 0)
            .mul(self.get(1, 1))
            .sub(&self.get(0, 1).mul(self.get(1, 0)))
    }

    /// Adjugate of a 2×2 matrix with even entries.
    pub fn adj2(&self) -> Self {
        assert_eq!((self.rows, self.cols), (2, 2));
        Mat::from_rows(vec![
            vec![self.get(1, 1).clone(), self.get(0, 1).neg()],
            vec![self.get(1, 0).neg(), self.get(0, 0).clone()],
        ])
    }
}

impl Mat<Frac> {
    /// Inverse by Gauss-Jordan elimination using left row operations only,
    /// which is valid for supermatrices whose pivots are even and invertible.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::Singular("non-square matrix".into()));
        }
        let mut a = self.clone();
        let mut inv = Mat::<Frac>::identity(n);
        for c in 0..n {
            let p = (c..n)
                .find(|&r| a.get(r, c).inv().is_some())
                .ok_or_else(|| Error::Singular(format!("no invertible pivot in column {c}")))?;
            if p != c {
                for m in [&mut a, &mut inv] {
                    for j in 0..n {
                        let x = m.get(p, j).clone();
                        let y = m.get(c, j).clone();
                        m.set(p, j, y);
                        m.set(c, j, x);
                    }
                }
            }
            let pinv = a.get(c, c).inv().expect("pivot checked");
            for m in [&mut a, &mut inv] {
                for j in 0..n {
                    let v = pinv.mul(m.get(c, j));
                    m.set(c, j, v);
                }
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for m in [&mut a, &mut inv] {
                    for j in 0..n {
                        let v = m.get(r, j).sub(&f.mul(m.get(c, j)));
                        m.set(r, j, v);
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Inverse of an even 2×2 matrix through the adjugate.
    pub fn inverse2(&self) -> Result<Self> {
        let det = self.det2();
        let dinv = det
            .inv()
            .ok_or_else(|| Error::Singular("2x2 determinant not invertible".into()))?;
        Ok(self.adj2().scale(&dinv))
    }

    /// Conjugate transpose under the registry's conjugation.
    pub fn dagger(&self, vars: &Vars) -> Self {
        self.map(|x| x.conj(vars)).transpose()
    }

    pub fn display(&self, vars: &Vars) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> =
                    (0..self.cols).map(|j| self.get(i, j).display(vars)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl Mat<Gauss> {
    pub fn dagger(&self) -> Self {
        self.map(Gauss::conj).transpose()
    }

    pub fn scale_gauss(&self, c: &Gauss) -> Self {
        self.map(|x| c * x)
    }
}

impl fmt::Display for Mat<Gauss> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Parity;
    use crate::grassmann::{Convention, SuperPoly};

    fn g(n: i64) -> Gauss {
        Gauss::from_int(n)
    }

    #[test]
    fn product_and_transpose() {
        let a = Mat::from_rows(vec![vec![g(1), g(2)], vec![g(3), g(4)]]);
        let b = Mat::from_rows(vec![vec![g(0), g(1)], vec![g(1), g(0)]]);
        assert_eq!(a.mul(&b), Mat::from_rows(vec![vec![g(2), g(1)], vec![g(4), g(3)]]));
        assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        assert_eq!(a.det2(), g(-2));
    }

    #[test]
    fn supermatrix_inverse() {
        let mut v = Vars::new(Convention::Automorphism);
        let b11 = v.real("b11");
        let b22 = v.real("b22");
        let b33 = v.real("b33");
        let d1 = v.var("d1", Parity::Odd);
        let d2 = v.var("d2", Parity::Odd);
        let e = |p: &SuperPoly| Frac::from_poly(p.clone());
        let zero = <Frac as Ring>::zero();
        let m = Mat::from_rows(vec![
            vec![e(&b11), zero.clone(), e(&d1)],
            vec![zero.clone(), e(&b22), zero.clone()],
            vec![e(&d2), zero, e(&b33)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(3));
        assert_eq!(inv.mul(&m), Mat::identity(3));
    }
}
