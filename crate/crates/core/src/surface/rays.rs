//! Checks whether depth decreases along rays leaving a centre coefficient.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::data::{Coefficient, RegressionDataset};
use crate::directions::{sample_directions, MethodSpec};
use crate::error::{DepthError, Result};
use crate::regression::RegressionEvaluator;
use crate::result::Notion;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RaySpec {
    pub num_rays: usize,
    /// Distance from the centre to the last step.
    pub radius: f64,
    /// Points per ray, including the centre; at least 2.
    pub steps: usize,
    pub seed: u64,
    /// Increases up to this size are not reported.
    pub tolerance: f64,
}

impl Default for RaySpec {
    fn default() -> Self {
        Self {
            num_rays: 16,
            radius: 1.0,
            steps: 50,
            seed: 0,
            tolerance: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RayViolation {
    pub ray: usize,
    /// The depth rises from step `step` to step `step + 1`.
    pub step: usize,
    pub direction: Vec<f64>,
    pub from: f64,
    pub to: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RayReport {
    pub notion: Notion,
    pub center: Coefficient,
    pub spec: RaySpec,
    pub pairs_checked: usize,
    pub violations: usize,
    /// Largest increase among the violations, 0 when there are none.
    pub worst: f64,
    pub records: Vec<RayViolation>,
}

/// Evaluates depth at `steps` equally spaced points on each of `num_rays`
/// seeded uniform rays from `center` (step `k` at distance
/// `radius k / (steps - 1)`) and records every adjacent pair where depth
/// increases by more than the tolerance. A diagnostic, not a test.
pub fn ray_monotonicity(
    ds: &RegressionDataset,
    notion: Notion,
    m: &MethodSpec,
    center: &Coefficient,
    spec: &RaySpec,
) -> Result<RayReport> {
    if spec.steps < 2 {
        return Err(DepthError::InvalidArgument(
            "rays need at least 2 steps".into(),
        ));
    }
    if !(spec.radius.is_finite() && spec.radius > 0.0) || !(spec.tolerance >= 0.0) {
        return Err(DepthError::InvalidArgument(
            "radius must be positive and tolerance non-negative".into(),
        ));
    }
    if center.len() != ds.d() + 1 {
        return Err(DepthError::DimensionMismatch {
            expected: ds.d() + 1,
            got: center.len(),
        });
    }
    let ev = RegressionEvaluator::new(ds, notion, m)?;
    let dirs = sample_directions(center.len(), spec.num_rays, spec.seed);
    let per_ray = dirs
        .par_iter()
        .enumerate()
        .map(|(ray, u)| {
            let depths = (0..spec.steps)
                .map(|k| {
                    let t = spec.radius * k as f64 / (spec.steps - 1) as f64;
                    let theta: Vec<f64> = center
                        .as_slice()
                        .iter()
                        .zip(u.as_slice())
                        .map(|(c, v)| c + t * v)
                        .collect();
                    ev.depth(&Coefficient::from_slice(&theta)?).map(|r| r.value)
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok(depths
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[1] - w[0] > spec.tolerance)
                .map(|(step, w)| RayViolation {
                    ray,
                    step,
                    direction: u.as_slice().to_vec(),
                    from: w[0],
                    to: w[1],
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let records: Vec<RayViolation> = per_ray.into_iter().flatten().collect();
    let worst = records.iter().map(|r| r.to - r.from).fold(0.0, f64::max);
    Ok(RayReport {
        notion,
        center: center.clone(),
        spec: *spec,
        pairs_checked: spec.num_rays * (spec.steps - 1),
        violations: records.len(),
        worst,
        records,
    })
}
