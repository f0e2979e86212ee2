//! Projection regression depth `1 / (1 + O)` with
//! `O = sup_u |Med(u^T z_i)| / MAD(u^T y_i w_i)`. The scale in the
//! denominator does not depend on the coefficient and is cached per dataset.

use crate::data::{Coefficient, Direction, PointCloud, RegressionDataset};
use crate::directions::{DirectionPlan, MethodSpec};
use crate::error::{DepthError, Result};
use crate::result::{depth_from_outlyingness, DepthResult, Notion};
use crate::stats::{mad_in_place, median_in_place, outlyingness_ratio};
use crate::transform::{lift, transform_cloud};

/// Rows `y_i (1, x_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrdDenominatorCache {
    yw: PointCloud,
}

impl PrdDenominatorCache {
    pub fn new(ds: &RegressionDataset) -> Result<Self> {
        let w = lift(ds);
        let mut data = Vec::with_capacity(w.n() * w.cols());
        for (row, &y) in w.rows().zip(ds.y()) {
            data.extend(row.iter().map(|v| y * v));
        }
        Ok(Self {
            yw: PointCloud::new(data, w.n(), w.cols())?,
        })
    }

    pub fn yw(&self) -> &PointCloud {
        &self.yw
    }

    /// `MAD(u^T y_i w_i)`.
    pub fn scale(&self, u: &Direction) -> f64 {
        let mut buf: Vec<f64> = self.yw.rows().map(|p| u.dot(p)).collect();
        let med = median_in_place(&mut buf);
        mad_in_place(&mut buf, med)
    }
}

fn centre(z: &PointCloud, u: &Direction, buf: &mut Vec<f64>) -> f64 {
    buf.clear();
    buf.extend(z.rows().map(|p| u.dot(p)));
    median_in_place(buf).abs()
}

/// The ratio `|Med(u^T z_i)| / MAD(u^T y_i w_i)` at a single direction in
/// the lifted space.
pub fn prd_objective(ds: &RegressionDataset, theta: &Coefficient, u: &Direction) -> Result<f64> {
    if u.dim() != ds.d() + 1 {
        return Err(DepthError::DimensionMismatch {
            expected: ds.d() + 1,
            got: u.dim(),
        });
    }
    let tc = transform_cloud(ds, theta)?;
    let cache = PrdDenominatorCache::new(ds)?;
    let num = centre(&tc.z, u, &mut Vec::new());
    Ok(outlyingness_ratio(num, cache.scale(u)))
}

/// Per-dataset evaluator: direction plan plus the denominator at every
/// planned direction.
#[derive(Debug, Clone)]
pub struct PrdEvaluator<'a> {
    ds: &'a RegressionDataset,
    cache: PrdDenominatorCache,
    plan: DirectionPlan,
    scales: Vec<f64>,
}

impl<'a> PrdEvaluator<'a> {
    pub fn new(ds: &'a RegressionDataset, m: &MethodSpec) -> Result<Self> {
        let plan = DirectionPlan::for_even_objective(ds.d() + 1, m)?;
        let cache = PrdDenominatorCache::new(ds)?;
        let scales = plan.dirs.iter().map(|u| cache.scale(u)).collect();
        Ok(Self {
            ds,
            cache,
            plan,
            scales,
        })
    }

    pub fn depth(&self, theta: &Coefficient) -> Result<DepthResult> {
        let tc = transform_cloud(self.ds, theta)?;
        let z = &tc.z;
        let mut buf = Vec::with_capacity(z.n());
        let (o, u) = self.plan.maximize_cached(
            |k| outlyingness_ratio(centre(z, &self.plan.dirs[k], &mut buf), self.scales[k]),
            |u| {
                let num = centre(z, u, &mut Vec::with_capacity(z.n()));
                outlyingness_ratio(num, self.cache.scale(u))
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

pub fn prd(ds: &RegressionDataset, theta: &Coefficient, m: &MethodSpec) -> Result<DepthResult> {
    PrdEvaluator::new(ds, m)?.depth(theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> RegressionDataset {
        RegressionDataset::from_xy(&[0.0, 1.0, 2.0, 3.0], &[1.0, 0.0, 2.0, 5.0]).unwrap()
    }

    #[test]
    fn hand_evaluated_ratio() {
        // theta = (0, 1): residuals (1, -1, 0, 2), z = (1,0), (-1,-1), (0,0), (2,6)
        // u = e1: Med(1, -1, 0, 2) = 0.5; y w first coords (1, 0, 2, 5):
        // median 1.5, deviations (0.5, 1.5, 0.5, 3.5), MAD 1
        let t = Coefficient::new(0.0, &[1.0]).unwrap();
        let u = Direction::new(vec![1.0, 0.0]).unwrap();
        assert_eq!(prd_objective(&toy(), &t, &u).unwrap(), 0.5);
        assert_eq!(prd_objective(&toy(), &t, &u.negated()).unwrap(), 0.5);
    }

    #[test]
    fn exact_fit_has_full_depth() {
        let ds = RegressionDataset::from_xy(&[0.0, 1.0, 2.0], &[1.0, 3.0, 5.0]).unwrap();
        let t = Coefficient::new(1.0, &[2.0]).unwrap();
        assert_eq!(prd(&ds, &t, &MethodSpec::auto()).unwrap().value, 1.0);
        let u = Direction::from_angle(0.4);
        assert_eq!(prd_objective(&ds, &t, &u).unwrap(), 0.0);
    }

    #[test]
    fn witness_reproduces_value() {
        let t = Coefficient::new(0.3, &[0.8]).unwrap();
        let r = prd(&toy(), &t, &MethodSpec::auto()).unwrap();
        let o = prd_objective(&toy(), &t, r.direction().unwrap()).unwrap();
        assert!((depth_from_outlyingness(o) - r.value).abs() < 1e-12);
    }

    #[test]
    fn finer_grid_never_lowers_the_supremum() {
        let t = Coefficient::new(0.3, &[0.8]).unwrap();
        let coarse = prd(&toy(), &t, &MethodSpec::grid(64).without_refinement()).unwrap();
        let fine = prd(&toy(), &t, &MethodSpec::grid(128).without_refinement()).unwrap();
        assert!(fine.value <= coarse.value);
    }
}
