//! Independent oracles shared by the integration tests. Planar predicates use
//! exact orientation tests on the original coordinates.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use regdepth::PointCloud;
use robust::{orient2d, Coord};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

fn c(p: &[f64]) -> Coord<f64> {
    Coord { x: p[0], y: p[1] }
}

/// Sign of the orientation of `(a, b, p)`: positive when counterclockwise.
pub fn orient(a: &[f64], b: &[f64], p: &[f64]) -> i32 {
    let o = orient2d(c(a), c(b), c(p));
    if o > 0.0 {
        1
    } else if o < 0.0 {
        -1
    } else {
        0
    }
}

/// Sign of `(q - x) . (p - x)` for collinear `x`, `p`, `q` with `p, q != x`.
fn same_side(x: &[f64], q: &[f64], p: &[f64]) -> i32 {
    // on a line through x and q, every other point differs from x wherever q does
    let k = if q[0] != x[0] { 0 } else { 1 };
    let a = if q[k] > x[k] { 1 } else { -1 };
    let b = if p[k] > x[k] { 1 } else { -1 };
    a * b
}

/// Planar halfspace depth by evaluating the closed-halfspace count just off
/// every critical direction, i.e. on every open arc of directions.
pub fn halfspace_oracle(cloud: &PointCloud, x: &[f64]) -> f64 {
    let n = cloud.n();
    let pts: Vec<&[f64]> = cloud.rows().collect();
    let at_x = pts.iter().filter(|p| p[0] == x[0] && p[1] == x[1]).count();
    if at_x == n {
        return 1.0;
    }
    let mut best = n;
    for q in pts.iter().filter(|p| !(p[0] == x[0] && p[1] == x[1])) {
        // critical direction p = ±perp(q - x), nudged towards ±(q - x)
        for perp_sign in [1, -1] {
            for nudge in [1, -1] {
                let mut count = at_x;
                for p in &pts {
                    if p[0] == x[0] && p[1] == x[1] {
                        continue;
                    }
                    // perp(v) . w = cross(v, w) = orientation of (x, q, p)
                    let cross = perp_sign * orient(x, q, p);
                    let s = if cross != 0 {
                        cross
                    } else {
                        nudge * same_side(x, q, p)
                    };
                    if s > 0 {
                        count += 1;
                    }
                }
                best = best.min(count);
            }
        }
    }
    best as f64 / n as f64
}

/// Closed containment of `x` in the convex hull of the triangle `a, b, c`,
/// including degenerate triangles.
pub fn triangle_contains(a: &[f64], b: &[f64], cc: &[f64], x: &[f64]) -> bool {
    if orient(a, b, cc) != 0 {
        let o = [orient(a, b, x), orient(b, cc, x), orient(cc, a, x)];
        return o.iter().all(|&s| s >= 0) || o.iter().all(|&s| s <= 0);
    }
    if orient(a, b, x) != 0 || orient(b, cc, x) != 0 || orient(a, cc, x) != 0 {
        return false;
    }
    (0..2).all(|k| {
        let lo = a[k].min(b[k]).min(cc[k]);
        let hi = a[k].max(b[k]).max(cc[k]);
        lo <= x[k] && x[k] <= hi
    })
}

/// Planar simplicial depth by enumerating every triangle.
pub fn simplicial_oracle(cloud: &PointCloud, x: &[f64]) -> f64 {
    let pts: Vec<&[f64]> = cloud.rows().collect();
    let n = pts.len();
    if n < 3 {
        return 0.0;
    }
    let mut hits = 0u64;
    let mut total = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                total += 1;
                if triangle_contains(pts[i], pts[j], pts[k], x) {
                    hits += 1;
                }
            }
        }
    }
    hits as f64 / total as f64
}

/// Closed convex hull membership in the plane (Caratheodory: some triangle
/// of the points contains `x`).
pub fn in_hull_2d(cloud: &PointCloud, x: &[f64]) -> bool {
    let pts: Vec<&[f64]> = cloud.rows().collect();
    let n = pts.len();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                if triangle_contains(pts[i], pts[j], pts[k], x) {
                    return true;
                }
            }
        }
    }
    false
}

/// Euclidean distance from `x` to the segment `ab`.
pub fn segment_distance(a: &[f64], b: &[f64], x: &[f64]) -> f64 {
    let (vx, vy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = vx * vx + vy * vy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((x[0] - a[0]) * vx + (x[1] - a[1]) * vy) / len2).clamp(0.0, 1.0)
    };
    ((a[0] + t * vx - x[0]).powi(2) + (a[1] + t * vy - x[1]).powi(2)).sqrt()
}

/// A cloud of `n` standard normal points, or integer points in `[-3, 3]^d`
/// when `grid` is set (many ties and collinear triples).
pub fn random_cloud(rng: &mut ChaCha8Rng, n: usize, d: usize, grid: bool) -> PointCloud {
    let data: Vec<f64> = (0..n * d)
        .map(|_| {
            if grid {
                rng.random_range(-3i32..=3) as f64
            } else {
                normal(rng)
            }
        })
        .collect();
    PointCloud::new(data, n, d).unwrap()
}
