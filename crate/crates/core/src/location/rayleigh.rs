//! Rayleigh depth: projection-type depth with mean and standard deviation,
//! whose supremum over directions is the Mahalanobis distance to the mean.

use serde::{Deserialize, Serialize};

use crate::data::{Direction, PointCloud};
use crate::directions::{DirectionPlan, MethodSpec};
use crate::error::{DepthError, Result};
use crate::linalg::{mean_and_covariance, SpdFactor};
use crate::result::{depth_from_outlyingness, DepthResult, Method, Notion, SamplingInfo};
use crate::stats::{dot, outlyingness_ratio};

use super::check_query;

/// Sample mean and covariance (divisor `n`), covariance row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RayleighSummary {
    pub mean: Vec<f64>,
    pub cov: Vec<f64>,
}

pub fn rayleigh_summary(cloud: &PointCloud) -> Result<RayleighSummary> {
    if cloud.n() < 2 {
        return Err(DepthError::TooFew {
            need: 2,
            got: cloud.n(),
        });
    }
    let (mean, cov) = mean_and_covariance(cloud.rows(), cloud.d());
    Ok(RayleighSummary { mean, cov })
}

/// `|u^T v| / sqrt(u^T S u)` with the zero-denominator convention.
fn quotient_at(v: &[f64], cov: &[f64], u: &[f64]) -> f64 {
    let d = u.len();
    let mut q = 0.0;
    for a in 0..d {
        q += u[a] * dot(&cov[a * d..(a + 1) * d], u);
    }
    outlyingness_ratio(dot(u, v).abs(), q.max(0.0).sqrt())
}

/// Outcome of `sup_u |u^T v| / sqrt(u^T S u)`.
struct QuotientSup {
    pub value: f64,
    pub direction: Option<Direction>,
    pub method: Method,
    pub sampling: Option<SamplingInfo>,
}

/// Closed form `sqrt(v^T S^{-1} v)` when `S` is definite; otherwise the
/// maximum over the direction set of `fallback`, or an error without one.
fn quotient_sup(v: &[f64], cov: &[f64], fallback: Option<&MethodSpec>) -> Result<QuotientSup> {
    let d = v.len();
    match SpdFactor::new(cov, d) {
        Ok(f) => {
            let value = f.inverse_quadratic(v).sqrt();
            let direction = if v.iter().any(|&c| c != 0.0) {
                Direction::normalize(&f.solve(v)).ok()
            } else {
                None
            };
            Ok(QuotientSup {
                value,
                direction,
                method: Method::Closedform,
                sampling: None,
            })
        }
        Err(e) => {
            let Some(spec) = fallback else {
                return Err(e);
            };
            let plan = DirectionPlan::for_even_objective(d, spec)?;
            let (value, u) = plan.maximize(|u| quotient_at(v, cov, u.as_slice()));
            Ok(QuotientSup {
                value,
                direction: Some(u),
                method: plan.method,
                sampling: plan.sampling,
            })
        }
    }
}

fn finish(notion: Notion, q: QuotientSup) -> DepthResult {
    let r = DepthResult::new(depth_from_outlyingness(q.value), notion, q.method)
        .with_sampling(q.sampling);
    match q.direction {
        Some(u) => r.with_direction(u),
        None => r,
    }
}

pub(crate) fn quotient_depth(
    notion: Notion,
    v: &[f64],
    cov: &[f64],
    fallback: Option<&MethodSpec>,
) -> Result<DepthResult> {
    Ok(finish(notion, quotient_sup(v, cov, fallback)?))
}

fn offset(s: &RayleighSummary, x: &[f64]) -> Vec<f64> {
    x.iter().zip(&s.mean).map(|(a, b)| a - b).collect()
}

/// Closed-form Rayleigh depth; errors on a singular covariance.
pub fn rayleigh_depth(cloud: &PointCloud, x: &[f64]) -> Result<DepthResult> {
    check_query(cloud, x)?;
    let s = rayleigh_summary(cloud)?;
    quotient_depth(Notion::Rayleigh, &offset(&s, x), &s.cov, None)
}

/// Rayleigh depth that maximises over the direction set of `m` when the
/// covariance is singular.
pub fn rayleigh_depth_with_fallback(
    cloud: &PointCloud,
    x: &[f64],
    m: &MethodSpec,
) -> Result<DepthResult> {
    check_query(cloud, x)?;
    m.validate()?;
    let s = rayleigh_summary(cloud)?;
    quotient_depth(Notion::Rayleigh, &offset(&s, x), &s.cov, Some(m))
}

/// `|u^T (x - mean)| / sqrt(u^T cov u)` for a single direction.
pub fn rayleigh_outlyingness_at(cloud: &PointCloud, x: &[f64], u: &Direction) -> Result<f64> {
    check_query(cloud, x)?;
    if u.dim() != cloud.d() {
        return Err(DepthError::DimensionMismatch {
            expected: cloud.d(),
            got: u.dim(),
        });
    }
    let s = rayleigh_summary(cloud)?;
    Ok(quotient_at(&offset(&s, x), &s.cov, u.as_slice()))
}
