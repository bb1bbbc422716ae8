//! Thin wrappers around `faer` dense decompositions.

use faer::{c64, Mat, Side};

use crate::error::{Error, Result};

pub type CMat = Mat<c64>;

pub const C_ZERO: c64 = c64 { re: 0.0, im: 0.0 };
pub const C_ONE: c64 = c64 { re: 1.0, im: 0.0 };
pub const C_I: c64 = c64 { re: 0.0, im: 1.0 };

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending, columns of
/// the returned matrix are the matching orthonormal eigenvectors.
pub fn hermitian_eigen(h: &CMat) -> Result<(Vec<f64>, CMat)> {
    let evd = h
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::NumericalFailure(format!("hermitian eigendecomposition: {e:?}")))?;
    let n = h.nrows();
    let s = evd.S();
    let vals = (0..n).map(|i| s[i].re).collect();
    Ok((vals, evd.U().to_owned()))
}

/// Eigenvalues of a Hermitian matrix only, ascending.
pub fn hermitian_eigenvalues(h: &CMat) -> Result<Vec<f64>> {
    let vals = h
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::NumericalFailure(format!("hermitian eigenvalues: {e:?}")))?;
    Ok(vals.into_iter().collect())
}

/// Eigendecomposition of a general complex matrix (used for small systems:
/// Hessenberg matrices from Arnoldi, quartic companions, test oracles).
pub fn general_eigen(a: &CMat) -> Result<(Vec<c64>, CMat)> {
    let evd = a
        .eigen()
        .map_err(|e| Error::NumericalFailure(format!("general eigendecomposition: {e:?}")))?;
    let n = a.nrows();
    let s = evd.S();
    let vals = (0..n).map(|i| s.column_vector()[i]).collect();
    Ok((vals, evd.U().to_owned()))
}

/// Largest entrywise deviation from Hermiticity, `max |A - A^H|`.
pub fn hermiticity_error(a: &CMat) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for j in 0..n {
        for i in 0..=j {
            let d = (a[(i, j)] - a[(j, i)].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Largest entry magnitude.
pub fn max_abs(a: &CMat) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            let v = a[(i, j)].norm();
            if v > worst {
                worst = v;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_eigen_recovers_diagonal() {
        let mut h = CMat::zeros(4, 4);
        for i in 0..4 {
            h[(i, i)] = c64::new(i as f64, 0.0);
        }
        let (vals, _) = hermitian_eigen(&h).unwrap();
        for (i, v) in vals.iter().enumerate() {
            assert!((v - i as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn general_eigen_matches_triangular() {
        let mut a = CMat::zeros(3, 3);
        a[(0, 0)] = c64::new(1.0, 2.0);
        a[(1, 1)] = c64::new(-0.5, 0.0);
        a[(2, 2)] = c64::new(0.0, -1.0);
        a[(0, 1)] = c64::new(0.7, 0.0);
        a[(1, 2)] = c64::new(0.0, 0.3);
        let (vals, _) = general_eigen(&a).unwrap();
        let mut got: Vec<(f64, f64)> = vals.iter().map(|z| (z.re, z.im)).collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut want = [(1.0, 2.0), (-0.5, 0.0), (0.0, -1.0)];
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (g, w) in got.iter().zip(want.iter()) {
            assert!((g.0 - w.0).abs() < 1e-10 && (g.1 - w.1).abs() < 1e-10);
        }
    }
}
