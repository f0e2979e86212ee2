//! Regression depths of the least squares fit and of a poor fit.

use regdepth::estimate::ols;
use regdepth::io::{gen_synthetic, SyntheticConfig};
use regdepth::regression::{hrd_direct, rdepth};
use regdepth::{Coefficient, MethodSpec, Notion};

fn main() -> regdepth::Result<()> {
    let ds = gen_synthetic(&SyntheticConfig::default())?;
    let fits = [
        ("least squares", ols(&ds)?),
        ("true line", Coefficient::new(0.5, &[0.5])?),
        ("flat at 2", Coefficient::new(2.0, &[0.0])?),
    ];
    let m = MethodSpec::auto();
    for (name, theta) in &fits {
        print!("{name:>14} {:?}:", theta.as_slice());
        for notion in Notion::ALL {
            print!(
                " {}={:.4}",
                notion.as_str(),
                rdepth(notion, &ds, theta, &m)?.value
            );
        }
        println!();
    }

    // the direct count also names the hyperplane that attains it
    let r = hrd_direct(&ds, &fits[2].1)?;
    println!("halfspace witness for the flat fit: {:?}", r.witness);
    Ok(())
}
