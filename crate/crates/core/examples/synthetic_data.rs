//! Seeded synthetic data: the same seed always gives the same sample.

use regdepth::estimate::ols;
use regdepth::io::{gen_synthetic, SyntheticConfig};

fn main() -> regdepth::Result<()> {
    let config = SyntheticConfig::default();
    let a = gen_synthetic(&config)?;
    let b = gen_synthetic(&config)?;
    assert_eq!(a, b);
    println!("n = {}, seed = {}", a.n(), config.seed);
    for i in 0..5 {
        println!("x = {:>8.4}  y = {:>8.4}", a.x()[i], a.y()[i]);
    }
    println!("least squares fit {:?}", ols(&a)?.as_slice());

    let other = gen_synthetic(&SyntheticConfig { seed: 7, ..config })?;
    println!("seed 7 least squares fit {:?}", ols(&other)?.as_slice());
    Ok(())
}
