//! Zonoid depth with its LP certificate, and a separating direction for a
//! point outside the hull.

use regdepth::location::zonoid_depth;
use regdepth::lp::{solve_zonoid_lp, ZonoidLpOutcome, ZonoidLpProblem};
use regdepth::PointCloud;

fn main() -> regdepth::Result<()> {
    let cloud =
        PointCloud::from_rows(&[[0.0, 0.0], [4.0, 0.0], [0.0, 4.0], [4.0, 4.0], [1.0, 3.0]])?;
    let x = [1.0, 1.0];
    let r = zonoid_depth(&cloud, &x)?;
    let cert = r.zonoid_certificate().expect("inside the hull");
    println!("depth {:.6}, t* = {:.6}", r.value, cert.t_star);
    let mut recon = [0.0; 2];
    for (l, p) in cert.lambda.iter().zip(cloud.rows()) {
        recon[0] += l * p[0];
        recon[1] += l * p[1];
    }
    println!("weights {:?}", cert.lambda);
    println!("reconstructed point ({:.12}, {:.12})", recon[0], recon[1]);

    let outside = [5.0, -1.0];
    match solve_zonoid_lp(&ZonoidLpProblem::new(&cloud, &outside)?)? {
        ZonoidLpOutcome::Infeasible { separator, margin } => {
            println!(
                "({}, {}) is separated by w = {:?} with margin {:.3e}",
                outside[0], outside[1], separator, margin
            )
        }
        ZonoidLpOutcome::Feasible(_) => unreachable!("point lies outside the hull"),
    }
    Ok(())
}
