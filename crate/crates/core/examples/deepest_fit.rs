//! Deepest fit for every notion on the default synthetic dataset.

use regdepth::estimate::{deepest_fit, ols, SearchSpec};
use regdepth::io::{gen_synthetic, SyntheticConfig};
use regdepth::Notion;

fn main() -> regdepth::Result<()> {
    let ds = gen_synthetic(&SyntheticConfig::default())?;
    println!("least squares {:?}", ols(&ds)?.as_slice());
    for notion in Notion::ALL {
        // simplicial depth is the slowest; a coarser grid keeps this quick
        let coarse = if notion == Notion::Simplicial { 21 } else { 41 };
        let fit = deepest_fit(&ds, &SearchSpec::new(notion).with_resolution(coarse, 3))?;
        println!(
            "{:>10}: theta* = ({:.4}, {:.4}) depth {:.4}{}",
            notion.as_str(),
            fit.theta_star.beta0(),
            fit.theta_star.beta1()[0],
            fit.depth.value,
            if fit.on_boundary {
                " (on the box edge)"
            } else {
                ""
            }
        );
    }
    Ok(())
}
