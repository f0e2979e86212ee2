//! Lifted design, residuals and the transformed cloud `r_i(theta) * (1, x_i)`.
//!
//! Every regression depth in this crate is a location depth of the origin
//! with respect to the transformed cloud built here.

use crate::data::{Coefficient, PointCloud, RegressionDataset};
use crate::error::{DepthError, Result};

/// Rows `(1, x_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedDesign {
    w: Vec<f64>,
    n: usize,
    cols: usize,
}

impl LiftedDesign {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `d + 1`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.w[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[f64]> + Clone + '_ {
        self.w.chunks_exact(self.cols)
    }
}

/// Residuals of a fit together with the cloud `z_i = r_i * w_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedCloud {
    pub residuals: Vec<f64>,
    pub z: PointCloud,
    pub theta: Coefficient,
}

pub fn lift(ds: &RegressionDataset) -> LiftedDesign {
    let cols = ds.d() + 1;
    let mut w = Vec::with_capacity(ds.n() * cols);
    for i in 0..ds.n() {
        w.push(1.0);
        w.extend_from_slice(ds.x_row(i));
    }
    LiftedDesign { w, n: ds.n(), cols }
}

fn check_theta(ds: &RegressionDataset, theta: &Coefficient) -> Result<()> {
    if theta.len() != ds.d() + 1 {
        return Err(DepthError::DimensionMismatch {
            expected: ds.d() + 1,
            got: theta.len(),
        });
    }
    Ok(())
}

/// `r_i = y_i - beta0 - beta1^T x_i`.
pub fn residuals(ds: &RegressionDataset, theta: &Coefficient) -> Result<Vec<f64>> {
    check_theta(ds, theta)?;
    Ok(residuals_unchecked(ds, theta))
}

pub(crate) fn residuals_unchecked(ds: &RegressionDataset, theta: &Coefficient) -> Vec<f64> {
    let beta1 = theta.beta1();
    ds.y()
        .iter()
        .enumerate()
        .map(|(i, &y)| {
            let mut fit = theta.beta0();
            for (b, x) in beta1.iter().zip(ds.x_row(i)) {
                fit += b * x;
            }
            y - fit
        })
        .collect()
}

pub fn transform_cloud(ds: &RegressionDataset, theta: &Coefficient) -> Result<TransformedCloud> {
    check_theta(ds, theta)?;
    let residuals = residuals_unchecked(ds, theta);
    let cols = ds.d() + 1;
    let mut z = Vec::with_capacity(ds.n() * cols);
    for (i, &r) in residuals.iter().enumerate() {
        z.push(r * 1.0);
        z.extend(ds.x_row(i).iter().map(|x| r * x));
    }
    Ok(TransformedCloud {
        z: PointCloud::new(z, ds.n(), cols)?,
        residuals,
        theta: theta.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(x: &[f64], y: &[f64]) -> RegressionDataset {
        RegressionDataset::from_xy(x, y).unwrap()
    }

    #[test]
    fn lift_prepends_one() {
        let w = lift(&ds(&[2.0, 3.0], &[0.0, 0.0]));
        assert_eq!(w.row(0), &[1.0, 2.0]);
        assert_eq!(w.row(1), &[1.0, 3.0]);

        let two = RegressionDataset::from_rows(&[[0.0, 0.0]], &[1.0]).unwrap();
        assert_eq!(lift(&two).row(0), &[1.0, 0.0, 0.0]);
    }

    #[test]
    fn zero_dimensional_covariates_rejected() {
        assert!(RegressionDataset::new(vec![], vec![1.0], 0).is_err());
    }

    #[test]
    fn residual_examples() {
        let theta = Coefficient::new(0.0, &[1.0]).unwrap();
        let r = residuals(&ds(&[0.0, 1.0, 2.0], &[0.0, 1.0, 2.0]), &theta).unwrap();
        assert_eq!(r, vec![0.0, 0.0, 0.0]);

        let r = residuals(&ds(&[0.0], &[5.0]), &Coefficient::new(0.0, &[0.0]).unwrap()).unwrap();
        assert_eq!(r, vec![5.0]);

        let r = residuals(
            &ds(&[1.0, 2.0], &[1.0, 2.0]),
            &Coefficient::new(1.0, &[0.5]).unwrap(),
        )
        .unwrap();
        assert_eq!(r, vec![-0.5, 0.0]);
    }

    #[test]
    fn theta_dimension_checked() {
        let theta = Coefficient::new(0.0, &[1.0, 2.0]).unwrap();
        assert!(matches!(
            residuals(&ds(&[1.0], &[1.0]), &theta),
            Err(DepthError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn transformed_cloud_examples() {
        let t =
            transform_cloud(&ds(&[2.0], &[5.0]), &Coefficient::new(1.0, &[1.0]).unwrap()).unwrap();
        assert_eq!(t.residuals, vec![2.0]);
        assert_eq!(t.z.row(0), &[2.0, 4.0]);

        let exact = ds(&[0.0, 1.0, 3.0], &[1.0, 3.0, 7.0]);
        let t = transform_cloud(&exact, &Coefficient::new(1.0, &[2.0]).unwrap()).unwrap();
        assert!(t.z.as_slice().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn response_scaling_scales_cloud_exactly() {
        let base = ds(&[0.3, -1.7, 2.2, 0.9], &[1.1, -0.4, 3.3, 0.25]);
        let theta = Coefficient::new(0.37, &[-1.3]).unwrap();
        let t = transform_cloud(&base, &theta).unwrap();
        for b in [-2.0, 0.5, 4.0] {
            let scaled =
                transform_cloud(&base.scale_response(b).unwrap(), &theta.scaled(b)).unwrap();
            for (s, o) in scaled.z.as_slice().iter().zip(t.z.as_slice()) {
                assert_eq!(*s, b * o);
            }
        }
    }
}
