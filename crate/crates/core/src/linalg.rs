//! Small dense linear-algebra helpers on top of nalgebra.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn, SymmetricEigen};

use crate::error::{DepthError, Result};

/// Relative eigenvalue floor for treating a symmetric PSD matrix as definite.
pub const DEFINITENESS_TOL: f64 = 1e-10;

/// Mean and covariance (divisor `n`) of row-major `rows` of width `d`.
pub fn mean_and_covariance<'a, I>(rows: I, d: usize) -> (Vec<f64>, Vec<f64>)
where
    I: Iterator<Item = &'a [f64]> + Clone,
{
    let mut mean = vec![0.0; d];
    let mut n = 0usize;
    for r in rows.clone() {
        for k in 0..d {
            mean[k] += r[k];
        }
        n += 1;
    }
    for m in &mut mean {
        *m /= n as f64;
    }
    let mut cov = vec![0.0; d * d];
    let mut c = vec![0.0; d];
    for r in rows {
        for k in 0..d {
            c[k] = r[k] - mean[k];
        }
        for a in 0..d {
            for b in a..d {
                cov[a * d + b] += c[a] * c[b];
            }
        }
    }
    for a in 0..d {
        for b in a..d {
            cov[a * d + b] /= n as f64;
            cov[b * d + a] = cov[a * d + b];
        }
    }
    (mean, cov)
}

/// Smallest eigenvalue and trace of a symmetric matrix.
pub fn min_eigenvalue_and_trace(sym: &[f64], d: usize) -> (f64, f64) {
    let m = DMatrix::from_row_slice(d, d, sym);
    let trace = m.trace();
    let eig = SymmetricEigen::new(m);
    (eig.eigenvalues.min(), trace)
}

/// Cholesky factor of a symmetric positive-definite matrix, accepted only
/// when its smallest eigenvalue exceeds `DEFINITENESS_TOL * trace`.
#[derive(Debug, Clone)]
pub struct SpdFactor {
    chol: Cholesky<f64, Dyn>,
    lower: DMatrix<f64>,
    d: usize,
}

impl SpdFactor {
    pub fn new(sym: &[f64], d: usize) -> Result<Self> {
        let (min_eigenvalue, trace) = min_eigenvalue_and_trace(sym, d);
        if !(trace > 0.0) || !(min_eigenvalue > DEFINITENESS_TOL * trace) {
            return Err(DepthError::SingularCovariance {
                min_eigenvalue,
                trace,
            });
        }
        let chol = Cholesky::new(DMatrix::from_row_slice(d, d, sym)).ok_or(
            DepthError::SingularCovariance {
                min_eigenvalue,
                trace,
            },
        )?;
        let lower = chol.l();
        Ok(Self { chol, lower, d })
    }

    pub fn solve(&self, v: &[f64]) -> Vec<f64> {
        let b = DVector::from_column_slice(v);
        self.chol.solve(&b).as_slice().to_vec()
    }

    /// `v^T M^{-1} v` computed as `|L^{-1} v|^2`.
    pub fn inverse_quadratic(&self, v: &[f64]) -> f64 {
        let mut y = DVector::from_column_slice(v);
        self.lower.solve_lower_triangular_mut(&mut y);
        y.norm_squared()
    }

    pub fn dim(&self) -> usize {
        self.d
    }
}

/// Solves the square system `a x = b` by LU with partial pivoting.
pub fn solve_square(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    let m = DMatrix::from_row_slice(n, n, a);
    let rhs = DVector::from_column_slice(b);
    m.lu().solve(&rhs).map(|x| x.as_slice().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_n_covariance() {
        let rows = [[0.0], [2.0]];
        let (m, c) = mean_and_covariance(rows.iter().map(|r| &r[..]), 1);
        assert_eq!(m, vec![1.0]);
        assert_eq!(c, vec![1.0]);
    }

    #[test]
    fn spd_factor_rejects_singular() {
        assert!(SpdFactor::new(&[1.0, 1.0, 1.0, 1.0], 2).is_err());
        let f = SpdFactor::new(&[4.0, 0.0, 0.0, 1.0], 2).unwrap();
        assert!((f.inverse_quadratic(&[2.0, 1.0]) - 2.0).abs() < 1e-14);
        assert_eq!(f.solve(&[4.0, 1.0]), vec![1.0, 1.0]);
    }
}
