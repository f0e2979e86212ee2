//! Tukey halfspace depth: the smallest fraction of points in a closed
//! halfspace whose boundary passes through the query point.

use std::cmp::Ordering;

use crate::data::{Direction, PointCloud};
use crate::directions::{sample_directions, MethodKind, MethodSpec};
use crate::error::{DepthError, Result};
use crate::geom::{orient, point2, AngularFrame};
use crate::result::{DepthResult, Method, Notion, SamplingInfo};
use crate::stats::dot;

use super::check_query;

/// Fraction of points with `u^T X_i <= u^T x`, evaluated as `u^T (X_i - x) <= 0`.
pub fn halfspace_fraction_at(cloud: &PointCloud, x: &[f64], u: &Direction) -> Result<f64> {
    check_query(cloud, x)?;
    if u.dim() != cloud.d() {
        return Err(DepthError::DimensionMismatch {
            expected: cloud.d(),
            got: u.dim(),
        });
    }
    Ok(count_closed(cloud, x, u.as_slice()) as f64 / cloud.n() as f64)
}

fn count_closed(cloud: &PointCloud, x: &[f64], u: &[f64]) -> usize {
    let mut diff = vec![0.0; x.len()];
    cloud
        .rows()
        .filter(|p| {
            for k in 0..x.len() {
                diff[k] = p[k] - x[k];
            }
            dot(u, &diff) <= 0.0
        })
        .count()
}

pub fn halfspace_depth(cloud: &PointCloud, x: &[f64], m: &MethodSpec) -> Result<DepthResult> {
    check_query(cloud, x)?;
    m.validate()?;
    let d = cloud.d();
    let mismatch = |reason: &str| DepthError::MethodMismatch {
        method: format!("{:?}", m.kind).to_lowercase(),
        reason: reason.into(),
    };
    match (m.kind, d) {
        (MethodKind::Auto | MethodKind::Exact1d, 1) => Ok(exact1d(cloud, x[0])),
        (MethodKind::Bruteforce, 1) => Ok(exact1d(cloud, x[0]).relabel(Method::Bruteforce)),
        (MethodKind::Exact1d, _) => Err(mismatch("exact1d requires d = 1")),
        (MethodKind::Auto | MethodKind::Exact2d, 2) => Ok(exact2d(cloud, point2(x))),
        (MethodKind::Exact2d, _) => Err(mismatch("exact2d requires d = 2")),
        (MethodKind::Bruteforce, 2) => Ok(bruteforce2d(cloud, point2(x))),
        (MethodKind::Bruteforce, _) => Err(mismatch(
            "exhaustive critical directions are implemented for d <= 2",
        )),
        (MethodKind::Auto | MethodKind::Sampled, _) => Ok(sampled(cloud, x, m)),
    }
}

trait Relabel {
    fn relabel(self, method: Method) -> Self;
}

impl Relabel for DepthResult {
    fn relabel(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
}

fn exact1d(cloud: &PointCloud, x: f64) -> DepthResult {
    let le = cloud.as_slice().iter().filter(|&&v| v <= x).count();
    let ge = cloud.as_slice().iter().filter(|&&v| v >= x).count();
    let (count, u) = if le <= ge { (le, 1.0) } else { (ge, -1.0) };
    DepthResult::new(
        count as f64 / cloud.n() as f64,
        Notion::Halfspace,
        Method::Exact1d,
    )
    .with_direction(Direction::new(vec![u]).expect("unit"))
}

/// Planar points split into those coinciding with the centre and the rest,
/// the latter sorted counterclockwise by angle.
struct AngularSample {
    frame: AngularFrame,
    coincident: usize,
    sorted: Vec<[f64; 2]>,
}

impl AngularSample {
    fn new(cloud: &PointCloud, center: [f64; 2]) -> Self {
        let frame = AngularFrame::new(center);
        let mut coincident = 0;
        let mut sorted = Vec::with_capacity(cloud.n());
        for p in cloud.rows() {
            let p = point2(p);
            if frame.coincides(p) {
                coincident += 1;
            } else {
                sorted.push(p);
            }
        }
        sorted.sort_by(|a, b| frame.cmp(*a, *b));
        Self {
            frame,
            coincident,
            sorted,
        }
    }
}

/// Rotational sweep. For a generic direction the closed halfspace count
/// equals the number of points in an open half-plane through the centre
/// plus the points at the centre. Between two critical angles the open
/// half-plane `(phi, phi + pi)` starting just after a point direction `phi`
/// holds the points with angle in `(phi, phi + pi]`; the complementary
/// half-plane holds the rest. A two-pointer pass over the angular order
/// counts both sides for every critical angle in O(n log n).
fn exact2d(cloud: &PointCloud, center: [f64; 2]) -> DepthResult {
    let sample = AngularSample::new(cloud, center);
    let n = cloud.n();
    let m = sample.sorted.len();
    if m == 0 {
        return DepthResult::new(1.0, Notion::Halfspace, Method::Exact2d)
            .with_direction(Direction::new(vec![1.0, 0.0]).expect("unit"));
    }
    let pts = &sample.sorted;
    let frame = &sample.frame;
    let in_window = |e: [f64; 2], v: [f64; 2]| frame.strictly_ccw(e, v) || frame.opposite_ray(e, v);

    let mut best = (usize::MAX, 0usize, false);
    let mut start = 0;
    let mut end = 0;
    while start < m {
        let mut group_end = start + 1;
        while group_end < m && frame.same_ray(pts[start], pts[group_end]) {
            group_end += 1;
        }
        let e = pts[start];
        end = end.max(group_end);
        while end < start + m && in_window(e, pts[end % m]) {
            end += 1;
        }
        let c = end - group_end;
        if c < best.0 {
            best = (c, start, false);
        }
        if m - c < best.0 {
            best = (m - c, start, true);
        }
        start = group_end;
    }

    let (count, idx, opposite) = best;
    let e = pts[idx];
    let e = if opposite {
        [2.0 * center[0] - e[0], 2.0 * center[1] - e[1]]
    } else {
        e
    };
    let u = generic_direction_after(&sample, e);
    DepthResult::new(
        (count + sample.coincident) as f64 / n as f64,
        Notion::Halfspace,
        Method::Exact2d,
    )
    .with_direction(u)
}

/// A direction whose open "negative" half-plane starts strictly between the
/// critical angle of `e` and the next critical angle counterclockwise.
fn generic_direction_after(sample: &AngularSample, e: [f64; 2]) -> Direction {
    let c = sample.frame.center;
    let frame = &sample.frame;
    let rel = |p: [f64; 2]| [p[0] - c[0], p[1] - c[1]];
    // next event direction strictly counterclockwise of e among all points
    // and their reflections through the centre
    let mut next: Option<[f64; 2]> = None;
    for p in &sample.sorted {
        for q in [*p, [2.0 * c[0] - p[0], 2.0 * c[1] - p[1]]] {
            if !frame.strictly_ccw(e, q) {
                continue;
            }
            next = match next {
                Some(cur) if !frame.strictly_ccw(q, cur) => Some(cur),
                _ => Some(q),
            };
        }
    }
    let unit = |v: [f64; 2]| {
        let n = (v[0] * v[0] + v[1] * v[1]).sqrt();
        [v[0] / n, v[1] / n]
    };
    let a = unit(rel(e));
    let bisector = match next {
        Some(q) => {
            let b = unit(rel(q));
            if a[0] * b[0] + a[1] * b[1] >= 0.0 {
                [a[0] + b[0], a[1] + b[1]]
            } else {
                // a + b cancels when q is a rounded reflection of e; the
                // quarter turn of a - b is the same bisector, well conditioned
                [b[1] - a[1], a[0] - b[0]]
            }
        }
        None => [-a[1], a[0]],
    };
    // rotate by -pi/2 so that {v : u.v < 0} opens at the bisector
    Direction::normalize(&[bisector[1], -bisector[0]]).expect("nonzero bisector")
}

/// Exhaustive evaluation at every critical direction `u = +-perp(v_j)`:
/// closed count at `u` minus the boundary points that leave when `u` is
/// rotated slightly either way. O(n^2).
fn bruteforce2d(cloud: &PointCloud, center: [f64; 2]) -> DepthResult {
    let n = cloud.n();
    let pts: Vec<[f64; 2]> = cloud.rows().map(point2).collect();
    let coincident = pts.iter().filter(|&&p| p == center).count();
    let nonzero: Vec<[f64; 2]> = pts.into_iter().filter(|&p| p != center).collect();
    if nonzero.is_empty() {
        return DepthResult::new(1.0, Notion::Halfspace, Method::Bruteforce);
    }
    let mut best = usize::MAX;
    for &vj in &nonzero {
        for s in [Ordering::Greater, Ordering::Less] {
            // u = s * perp(vj); sign(u . vi) = s * orient(c, vj, vi)
            let mut negative = 0;
            let mut boundary_pos = 0;
            let mut boundary_neg = 0;
            for &vi in &nonzero {
                let o = orient(center, vj, vi);
                if o == Ordering::Equal {
                    // rotating u counterclockwise by delta adds
                    // -s * delta * (vj . vi) to u . vi
                    let same_dir = (vi[0] - center[0]) * (vj[0] - center[0]) > 0.0
                        || (vi[1] - center[1]) * (vj[1] - center[1]) > 0.0;
                    if same_dir == (s == Ordering::Greater) {
                        boundary_neg += 1;
                    } else {
                        boundary_pos += 1;
                    }
                } else if o != s {
                    negative += 1;
                }
            }
            best = best.min(negative + boundary_neg.min(boundary_pos));
        }
    }
    DepthResult::new(
        (best + coincident) as f64 / n as f64,
        Notion::Halfspace,
        Method::Bruteforce,
    )
}

fn sampled(cloud: &PointCloud, x: &[f64], m: &MethodSpec) -> DepthResult {
    let mut best = usize::MAX;
    let mut best_u = None;
    for u in sample_directions(cloud.d(), m.num_directions, m.seed) {
        let c = count_closed(cloud, x, u.as_slice());
        if c < best {
            best = c;
            best_u = Some(u);
        }
    }
    DepthResult::new(
        best as f64 / cloud.n() as f64,
        Notion::Halfspace,
        Method::Sampled,
    )
    .with_direction(best_u.expect("at least one direction"))
    .with_sampling(Some(SamplingInfo {
        directions: m.num_directions,
        seed: Some(m.seed),
    }))
}
