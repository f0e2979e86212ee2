//! Does depth fall monotonically along rays leaving the least squares fit?

use regdepth::estimate::ols;
use regdepth::io::{gen_synthetic, SyntheticConfig};
use regdepth::surface::{ray_monotonicity, RaySpec};
use regdepth::{MethodSpec, Notion};

fn main() -> regdepth::Result<()> {
    let ds = gen_synthetic(&SyntheticConfig::default())?;
    let center = ols(&ds)?;
    let spec = RaySpec {
        tolerance: 1e-12,
        ..RaySpec::default()
    };
    for notion in Notion::ALL {
        let r = ray_monotonicity(&ds, notion, &MethodSpec::auto(), &center, &spec)?;
        println!(
            "{:>10}: {} of {} steps increase, worst rise {:.3e}",
            notion.as_str(),
            r.violations,
            r.pairs_checked,
            r.worst
        );
    }
    Ok(())
}
