//! Projection depth `1 / (1 + O)` with the median/MAD outlyingness
//! `O = sup_u |u^T x - Med(u^T X)| / MAD(u^T X)`.

use crate::data::{Direction, PointCloud};
use crate::directions::{DirectionPlan, MethodSpec};
use crate::error::{DepthError, Result};
use crate::result::{depth_from_outlyingness, DepthResult, Notion};
use crate::stats::{mad_in_place, median_in_place, outlyingness_ratio};

use super::check_query;

/// Median and MAD of the projections onto `u`.
fn center_scale(cloud: &PointCloud, u: &Direction, buf: &mut Vec<f64>) -> (f64, f64) {
    buf.clear();
    buf.extend(cloud.rows().map(|p| u.dot(p)));
    let med = median_in_place(buf);
    (med, mad_in_place(buf, med))
}

/// Outlyingness of `x` along a single direction.
pub fn projection_outlyingness_at(cloud: &PointCloud, x: &[f64], u: &Direction) -> Result<f64> {
    check_query(cloud, x)?;
    if u.dim() != cloud.d() {
        return Err(DepthError::DimensionMismatch {
            expected: cloud.d(),
            got: u.dim(),
        });
    }
    let (med, mad) = center_scale(cloud, u, &mut Vec::new());
    Ok(outlyingness_ratio((u.dot(x) - med).abs(), mad))
}

/// Projection depth evaluator with the per-direction median and MAD of the
/// cloud precomputed, for repeated queries against one cloud.
#[derive(Debug, Clone)]
pub struct ProjectionDepth<'a> {
    cloud: &'a PointCloud,
    plan: DirectionPlan,
    centers: Vec<(f64, f64)>,
}

impl<'a> ProjectionDepth<'a> {
    pub fn new(cloud: &'a PointCloud, m: &MethodSpec) -> Result<Self> {
        let plan = DirectionPlan::for_even_objective(cloud.d(), m)?;
        let mut buf = Vec::with_capacity(cloud.n());
        let centers = plan
            .dirs
            .iter()
            .map(|u| center_scale(cloud, u, &mut buf))
            .collect();
        Ok(Self {
            cloud,
            plan,
            centers,
        })
    }

    pub fn depth(&self, x: &[f64]) -> Result<DepthResult> {
        check_query(self.cloud, x)?;
        let mut buf = Vec::with_capacity(self.cloud.n());
        let (o, u) = self.plan.maximize_cached(
            |k| {
                let (med, mad) = self.centers[k];
                outlyingness_ratio((self.plan.dirs[k].dot(x) - med).abs(), mad)
            },
            |u| {
                let (med, mad) = center_scale(self.cloud, u, &mut buf);
                outlyingness_ratio((u.dot(x) - med).abs(), mad)
            },
        );
        Ok(DepthResult::new(
            depth_from_outlyingness(o),
            Notion::Projection,
            self.plan.method,
        )
        .with_direction(u)
        .with_sampling(self.plan.sampling))
    }
}

pub fn projection_depth(cloud: &PointCloud, x: &[f64], m: &MethodSpec) -> Result<DepthResult> {
    ProjectionDepth::new(cloud, m)?.depth(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::result::Method;

    #[test]
    fn univariate_examples() {
        let c = PointCloud::from_values(&[1.0, 2.0, 3.0]).unwrap();
        let m = MethodSpec::auto();
        let r = projection_depth(&c, &[2.0], &m).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.method, Method::Exact1d);
        assert_eq!(projection_depth(&c, &[3.0], &m).unwrap().value, 0.5);

        let flat = PointCloud::from_values(&[4.0, 4.0, 4.0]).unwrap();
        assert_eq!(projection_depth(&flat, &[5.0], &m).unwrap().value, 0.0);
        assert_eq!(projection_depth(&flat, &[4.0], &m).unwrap().value, 1.0);
    }

    #[test]
    fn planar_grid_witness() {
        let c = PointCloud::from_rows(&[
            [0.0, 0.0],
            [1.0, 0.3],
            [-0.4, 1.1],
            [0.7, -0.8],
            [-1.2, -0.3],
            [0.2, 0.9],
        ])
        .unwrap();
        let x = [1.5, 1.0];
        let r = projection_depth(&c, &x, &MethodSpec::auto()).unwrap();
        assert_eq!(r.method, Method::Grid);
        let o = projection_outlyingness_at(&c, &x, r.direction().unwrap()).unwrap();
        assert!((depth_from_outlyingness(o) - r.value).abs() < 1e-12);
        assert!(r.value > 0.0 && r.value < 1.0);
    }
}
