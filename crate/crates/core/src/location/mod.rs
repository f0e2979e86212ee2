//! Location depths of a query point with respect to a point cloud.

mod halfspace;
mod projection;
mod rayleigh;
mod simplicial;
mod zonoid;

pub use halfspace::{halfspace_depth, halfspace_fraction_at};
pub use projection::{projection_depth, projection_outlyingness_at, ProjectionDepth};
pub(crate) use rayleigh::quotient_depth;
pub use rayleigh::{
    rayleigh_depth, rayleigh_depth_with_fallback, rayleigh_outlyingness_at, rayleigh_summary,
    RayleighSummary,
};
pub use simplicial::{binomial, simplicial_depth};
pub use zonoid::zonoid_depth;

use crate::data::PointCloud;
use crate::directions::MethodSpec;
use crate::error::{DepthError, Result};
use crate::result::{DepthResult, Notion};

fn check_query(cloud: &PointCloud, x: &[f64]) -> Result<()> {
    if x.len() != cloud.d() {
        return Err(DepthError::DimensionMismatch {
            expected: cloud.d(),
            got: x.len(),
        });
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(DepthError::NonFinite("query point"));
    }
    Ok(())
}

/// Location depth of `x` under any notion. Rayleigh depth uses the closed
/// form and falls back to the direction set of `m` for a singular covariance;
/// zonoid depth ignores `m`.
pub fn depth(notion: Notion, cloud: &PointCloud, x: &[f64], m: &MethodSpec) -> Result<DepthResult> {
    match notion {
        Notion::Halfspace => halfspace_depth(cloud, x, m),
        Notion::Simplicial => simplicial_depth(cloud, x, m),
        Notion::Projection => projection_depth(cloud, x, m),
        Notion::Rayleigh => rayleigh_depth_with_fallback(cloud, x, m),
        Notion::Zonoid => zonoid_depth(cloud, x),
    }
}
