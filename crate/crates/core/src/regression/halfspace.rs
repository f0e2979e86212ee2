//! Halfspace regression depth: through the transformed cloud, and directly
//! from residual signs for simple regression.

use std::cmp::Ordering;

use crate::data::{Coefficient, Direction, RegressionDataset};
use crate::directions::MethodSpec;
use crate::error::{DepthError, Result};
use crate::location::halfspace_depth;
use crate::result::{DepthResult, HyperplaneWitness, Method, Notion, Witness};
use crate::transform::{residuals, transform_cloud};

/// Halfspace depth of the origin in the transformed cloud.
pub fn hrd(ds: &RegressionDataset, theta: &Coefficient, m: &MethodSpec) -> Result<DepthResult> {
    let tc = transform_cloud(ds, theta)?;
    halfspace_depth(&tc.z, &vec![0.0; tc.z.d()], m)
}

fn sign(v: f64) -> i8 {
    match v.partial_cmp(&0.0) {
        Some(Ordering::Greater) => 1,
        Some(Ordering::Less) => -1,
        _ => 0,
    }
}

/// Counts of `r_i s_i <= 0` and `r_i s_i >= 0` for residual signs `r` and
/// covariate-side signs `s`.
fn one_sided(r: &[i8], s: impl Iterator<Item = i8>) -> (usize, usize) {
    let (mut le, mut ge) = (0, 0);
    for (&a, b) in r.iter().zip(s) {
        let p = a * b;
        if p <= 0 {
            le += 1;
        }
        if p >= 0 {
            ge += 1;
        }
    }
    (le, ge)
}

/// Simple-regression depth from residual signs alone: the minimum over
/// `v0` and `v1 = +-1` of the number of observations with
/// `r_i (v1 x_i - v0) <= 0`. `v0` ranges over every distinct covariate value,
/// a point inside every gap between consecutive values, and one point beyond
/// each end. O(n^2).
pub fn hrd_direct(ds: &RegressionDataset, theta: &Coefficient) -> Result<DepthResult> {
    if ds.d() != 1 {
        return Err(DepthError::MethodMismatch {
            method: "direct".into(),
            reason: format!("needs a single covariate, got {}", ds.d()),
        });
    }
    let r: Vec<i8> = residuals(ds, theta)?.into_iter().map(sign).collect();
    let x = ds.x();
    let mut xs = x.to_vec();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let k = xs.len();

    // (count, v0, v1)
    let mut best = (usize::MAX, 0.0, 1.0);
    let mut consider = |(le, ge): (usize, usize), v0: f64| {
        if le < best.0 {
            best = (le, v0, 1.0);
        }
        if ge < best.0 {
            best = (ge, -v0, -1.0);
        }
    };
    // below the smallest and above the largest value
    consider(one_sided(&r, x.iter().map(|_| 1)), xs[0] - 1.0);
    consider(one_sided(&r, x.iter().map(|_| -1)), xs[k - 1] + 1.0);
    for j in 0..k {
        let at = xs[j];
        consider(one_sided(&r, x.iter().map(|&v| sign(v - at))), at);
        if j + 1 < k {
            let next = xs[j + 1];
            let gap = x.iter().map(|&v| if v >= next { 1 } else { -1 });
            consider(one_sided(&r, gap), at + (next - at) / 2.0);
        }
    }
    let (count, v0, v1) = best;
    Ok(DepthResult::new(
        count as f64 / ds.n() as f64,
        Notion::Halfspace,
        Method::Exact1d,
    )
    .with_witness(Witness::Hyperplane(HyperplaneWitness {
        v0,
        v1: Direction::new(vec![v1])?,
    })))
}

/// Fraction of observations with `r_i (v1^T x_i - v0) <= 0`.
pub fn hyperplane_fraction(
    ds: &RegressionDataset,
    theta: &Coefficient,
    w: &HyperplaneWitness,
) -> Result<f64> {
    if w.v1.dim() != ds.d() {
        return Err(DepthError::DimensionMismatch {
            expected: ds.d(),
            got: w.v1.dim(),
        });
    }
    let r = residuals(ds, theta)?;
    let count = r
        .iter()
        .enumerate()
        .filter(|&(i, &ri)| sign(ri) * sign(w.v1.dot(ds.x_row(i)) - w.v0) <= 0)
        .count();
    Ok(count as f64 / ds.n() as f64)
}
