//! All five location depths of a few query points in a small planar cloud.

use regdepth::location::depth;
use regdepth::{MethodSpec, Notion, PointCloud};

fn main() -> regdepth::Result<()> {
    let cloud = PointCloud::from_rows(&[
        [0.0, 0.0],
        [2.0, 0.1],
        [1.1, 1.9],
        [0.4, 1.2],
        [1.6, 0.9],
        [0.9, 0.5],
        [-0.3, 0.8],
    ])?;
    let queries = [[0.9, 0.7], [0.0, 0.0], [3.0, 3.0]];
    let m = MethodSpec::auto();
    println!(
        "{:>12} {:>12} {:>10} {:>8}",
        "point", "notion", "method", "depth"
    );
    for q in &queries {
        for notion in Notion::ALL {
            let r = depth(notion, &cloud, q, &m)?;
            println!(
                "{:>12} {:>12} {:>10} {:>8.4}",
                format!("({}, {})", q[0], q[1]),
                notion.as_str(),
                r.method.as_str(),
                r.value
            );
        }
    }
    Ok(())
}
