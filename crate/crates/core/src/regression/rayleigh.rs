//! Rayleigh regression depth in closed form,
//! `O(theta) = sqrt(m^T S^{-1} m)` with `m(theta) = g - G theta`.

use serde::{Deserialize, Serialize};

use crate::data::{Coefficient, RegressionDataset};
use crate::directions::MethodSpec;
use crate::error::{DepthError, Result};
use crate::linalg::mean_and_covariance;
use crate::location::quotient_depth;
use crate::result::{DepthResult, Notion};
use crate::transform::lift;

/// `g = mean(y_i w_i)`, `gbar = mean(w_i w_i^T)` and `s = cov(y_i w_i)`
/// (divisor `n`), matrices row-major of size `(d + 1) x (d + 1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionRayleighSummary {
    pub g: Vec<f64>,
    pub gbar: Vec<f64>,
    pub s: Vec<f64>,
}

impl RegressionRayleighSummary {
    pub fn dim(&self) -> usize {
        self.g.len()
    }

    /// `g - gbar theta`.
    pub fn moment_gap(&self, theta: &Coefficient) -> Result<Vec<f64>> {
        let p = self.dim();
        if theta.len() != p {
            return Err(DepthError::DimensionMismatch {
                expected: p,
                got: theta.len(),
            });
        }
        let t = theta.as_slice();
        Ok((0..p)
            .map(|a| self.g[a] - (0..p).map(|b| self.gbar[a * p + b] * t[b]).sum::<f64>())
            .collect())
    }
}

pub fn regression_rayleigh_summary(ds: &RegressionDataset) -> Result<RegressionRayleighSummary> {
    let n = ds.n();
    if n < 2 {
        return Err(DepthError::TooFew { need: 2, got: n });
    }
    let w = lift(ds);
    let p = w.cols();
    let yw: Vec<f64> = w
        .rows()
        .zip(ds.y())
        .flat_map(|(row, &y)| row.iter().map(move |v| y * v))
        .collect();
    let (g, s) = mean_and_covariance(yw.chunks_exact(p), p);
    let mut gbar = vec![0.0; p * p];
    for row in w.rows() {
        for a in 0..p {
            for b in a..p {
                gbar[a * p + b] += row[a] * row[b];
            }
        }
    }
    for a in 0..p {
        for b in a..p {
            gbar[a * p + b] /= n as f64;
            gbar[b * p + a] = gbar[a * p + b];
        }
    }
    Ok(RegressionRayleighSummary { g, gbar, s })
}

pub(crate) fn rrd_from_summary(
    summary: &RegressionRayleighSummary,
    theta: &Coefficient,
    fallback: Option<&MethodSpec>,
) -> Result<DepthResult> {
    let m = summary.moment_gap(theta)?;
    quotient_depth(Notion::Rayleigh, &m, &summary.s, fallback)
}

/// Closed-form Rayleigh regression depth; errors when `S` is singular.
pub fn rrd(ds: &RegressionDataset, theta: &Coefficient) -> Result<DepthResult> {
    rrd_from_summary(&regression_rayleigh_summary(ds)?, theta, None)
}

/// As [`rrd`], maximising over the direction set of `m` when `S` is singular.
pub fn rrd_with_fallback(
    ds: &RegressionDataset,
    theta: &Coefficient,
    m: &MethodSpec,
) -> Result<DepthResult> {
    m.validate()?;
    rrd_from_summary(&regression_rayleigh_summary(ds)?, theta, Some(m))
}
