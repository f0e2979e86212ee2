//! Univariate order statistics.

use crate::data::{Direction, PointCloud};
use crate::error::{DepthError, Result};

/// Median as the average of the order statistics `⌊(m+1)/2⌋` and
/// `⌊(m+2)/2⌋` (1-based). The input is left untouched.
pub fn median1d(v: &[f64]) -> Result<f64> {
    if v.is_empty() {
        return Err(DepthError::Empty("median input"));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err(DepthError::NonFinite("median input"));
    }
    let mut buf = v.to_vec();
    Ok(median_in_place(&mut buf))
}

/// Median absolute deviation from the median, without a consistency factor.
pub fn mad1d(v: &[f64]) -> Result<f64> {
    let mut buf = v.to_vec();
    let med = median1d(v)?;
    Ok(mad_in_place(&mut buf, med))
}

/// Median of a non-empty finite buffer; reorders the buffer.
pub(crate) fn median_in_place(buf: &mut [f64]) -> f64 {
    let m = buf.len();
    debug_assert!(m > 0);
    let lo = m.div_ceil(2) - 1;
    let hi = (m + 2) / 2 - 1;
    let (below, upper, _) = buf.select_nth_unstable_by(hi, f64::total_cmp);
    let upper = *upper;
    let lower = if lo < hi {
        below.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    } else {
        upper
    };
    (lower + upper) / 2.0
}

/// MAD about a known median; overwrites the buffer with absolute deviations.
pub(crate) fn mad_in_place(buf: &mut [f64], median: f64) -> f64 {
    for v in buf.iter_mut() {
        *v = (*v - median).abs();
    }
    median_in_place(buf)
}

/// Projections `u^T X_i` of every point.
pub fn project(cloud: &PointCloud, u: &Direction) -> Result<Vec<f64>> {
    if u.dim() != cloud.d() {
        return Err(DepthError::DimensionMismatch {
            expected: cloud.d(),
            got: u.dim(),
        });
    }
    Ok(cloud.rows().map(|p| u.dot(p)).collect())
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Outlyingness ratio with the `0/0 = 0`, `c/0 = inf` convention.
pub(crate) fn outlyingness_ratio(numerator: f64, denominator: f64) -> f64 {
    if numerator == 0.0 {
        0.0
    } else if denominator == 0.0 {
        f64::INFINITY
    } else {
        numerator / denominator
    }
}
