//! Builders for symbolic matrices with conjugate-partner variables.

use crate::algebra::Parity;
use crate::grassmann::{Frac, Vars};
use crate::matrix::Mat;

pub type FMat = Mat<Frac>;

/// Matrix of fresh complex variables `name_ij`, each with a conjugate.
pub fn complex_matrix(vars: &mut Vars, name: &str, rows: usize, cols: usize, parity: Parity) -> FMat {
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let (v, _) = vars.pair(&format!("{name}{}{}", i + 1, j + 1), parity);
            entries.push(Frac::from_poly(v));
        }
    }
    Mat::from_fn(rows, cols, |i, j| entries[i * cols + j].clone())
}

/// Matrix of fresh self-conjugate variables.
pub fn real_matrix(vars: &mut Vars, name: &str, rows: usize, cols: usize, parity: Parity) -> FMat {
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            entries.push(Frac::from_poly(
                vars.var(&format!("{name}{}{}", i + 1, j + 1), parity),
            ));
        }
    }
    Mat::from_fn(rows, cols, |i, j| entries[i * cols + j].clone())
}

/// Generic hermitian 2×2 matrix `[[h11, h12], [h12~, h22]]` with real
/// diagonal.
pub fn hermitian2(vars: &mut Vars, name: &str) -> FMat {
    let h11 = Frac::from_poly(vars.real(&format!("{name}11")));
    let h22 = Frac::from_poly(vars.real(&format!("{name}22")));
    let (h12, h21) = vars.pair(&format!("{name}12"), Parity::Even);
    Mat::from_rows(vec![
        vec![h11, Frac::from_poly(h12)],
        vec![Frac::from_poly(h21), h22],
    ])
}

/// A fresh complex even scalar and its conjugate.
pub fn complex_scalar(vars: &mut Vars, name: &str) -> (Frac, Frac) {
    let (a, b) = vars.pair(name, Parity::Even);
    (Frac::from_poly(a), Frac::from_poly(b))
}

/// Entrywise conjugate, no transpose.
pub fn conj_entries(m: &FMat, vars: &Vars) -> FMat {
    m.map(|x| x.conj(vars))
}
