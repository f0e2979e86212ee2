//! Zonoid depth `1 / (n t*)`, with `t*` the smallest achievable largest
//! weight among convex combinations of the points equal to `x`.

use crate::data::PointCloud;
use crate::error::Result;
use crate::lp::{solve_zonoid_lp, ZonoidLpOutcome, ZonoidLpProblem};
use crate::result::{DepthResult, Method, Notion, Witness};

use super::check_query;

/// Zero outside the convex hull (no witness); otherwise carries the optimal
/// weights as a certificate.
pub fn zonoid_depth(cloud: &PointCloud, x: &[f64]) -> Result<DepthResult> {
    check_query(cloud, x)?;
    let problem = ZonoidLpProblem::new(cloud, x)?;
    Ok(match solve_zonoid_lp(&problem)? {
        ZonoidLpOutcome::Infeasible { .. } => DepthResult::new(0.0, Notion::Zonoid, Method::Lp),
        ZonoidLpOutcome::Feasible(cert) => {
            let value = (1.0 / (cloud.n() as f64 * cert.t_star)).min(1.0);
            DepthResult::new(value, Notion::Zonoid, Method::Lp).with_witness(Witness::Zonoid(cert))
        }
    })
}
