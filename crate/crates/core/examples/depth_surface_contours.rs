//! Regression depth surface on [0,1]^2 with nested contour lines, written
//! as JSON to the path given on the command line (stdout summary otherwise).

use regdepth::io::{gen_synthetic, surface_json, SyntheticConfig};
use regdepth::surface::{contour_lines, eval_surface, ContourSet, GridSpec};
use regdepth::{MethodSpec, Notion};

fn levels(notion: Notion) -> [f64; 7] {
    match notion {
        Notion::Halfspace => [0.1500, 0.1956, 0.2411, 0.2867, 0.3323, 0.3779, 0.4234],
        Notion::Simplicial => [0.0800, 0.1046, 0.1292, 0.1538, 0.1784, 0.2030, 0.2276],
        Notion::Projection => [0.6000, 0.6546, 0.7092, 0.7637, 0.8183, 0.8729, 0.9275],
        Notion::Rayleigh => [0.6000, 0.6561, 0.7123, 0.7684, 0.8245, 0.8807, 0.9368],
        Notion::Zonoid => [0.3000, 0.3992, 0.4985, 0.5977, 0.6970, 0.7962, 0.8954],
    }
}

fn main() -> regdepth::Result<()> {
    let out = std::env::args().nth(1);
    let ds = gen_synthetic(&SyntheticConfig::default())?;
    let grid = GridSpec::square(0.0, 1.0, 41)?;
    for notion in Notion::ALL {
        let s = eval_surface(&ds, notion, &MethodSpec::auto(), &grid)?;
        let c = contour_lines(&s, &levels(notion))?;
        let (best, i, j) = s.argmax();
        println!(
            "{:>10}: max {:.4} at ({:.3}, {:.3})",
            notion.as_str(),
            best,
            grid.beta0_at(i),
            grid.beta1_at(j)
        );
        for (level, lines) in c.levels.iter().zip(&c.polylines) {
            let closed = lines.iter().filter(|l| ContourSet::is_closed(l)).count();
            println!(
                "    level {level:.4}: {} lines, {closed} closed",
                lines.len()
            );
        }
        if let Some(dir) = &out {
            std::fs::create_dir_all(dir)?;
            std::fs::write(
                format!("{dir}/{}.json", notion.as_str()),
                surface_json(&s, &c)?,
            )?;
        }
    }
    Ok(())
}
