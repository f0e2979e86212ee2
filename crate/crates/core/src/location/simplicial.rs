//! Simplicial depth: the fraction of closed simplices spanned by `d + 1`
//! sample points that contain the query point.

use std::cmp::Ordering;

use crate::data::PointCloud;
use crate::directions::{MethodKind, MethodSpec};
use crate::error::{DepthError, Result};
use crate::geom::{orient, point2, AngularFrame};
use crate::lp::{solve_zonoid_lp, ZonoidLpOutcome, ZonoidLpProblem};
use crate::result::{DepthResult, Method, Notion};

use super::check_query;

/// `C(n, k)` as an exact integer.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn simplicial_depth(cloud: &PointCloud, x: &[f64], m: &MethodSpec) -> Result<DepthResult> {
    check_query(cloud, x)?;
    let d = cloud.d();
    let n = cloud.n();
    let mismatch = |reason: &str| DepthError::MethodMismatch {
        method: format!("{:?}", m.kind).to_lowercase(),
        reason: reason.into(),
    };
    let method = match (m.kind, d) {
        (MethodKind::Auto | MethodKind::Exact1d, 1) => Method::Exact1d,
        (MethodKind::Exact1d, _) => return Err(mismatch("exact1d requires d = 1")),
        (MethodKind::Auto | MethodKind::Exact2d, 2) => Method::Exact2d,
        (MethodKind::Exact2d, _) => return Err(mismatch("exact2d requires d = 2")),
        (MethodKind::Auto | MethodKind::Bruteforce, _) => Method::Bruteforce,
        (MethodKind::Sampled, _) => {
            return Err(mismatch(
                "simplicial depth is computed exactly or by enumeration",
            ))
        }
    };
    // no simplex can be formed
    if n < d + 1 {
        return Ok(DepthResult::new(0.0, Notion::Simplicial, method));
    }
    let total = binomial(n, d + 1);
    let contained = match method {
        Method::Exact1d => exact1d(cloud, x[0]),
        Method::Exact2d => exact2d(cloud, point2(x)),
        _ => bruteforce(cloud, x)?,
    };
    Ok(DepthResult::new(
        contained as f64 / total as f64,
        Notion::Simplicial,
        method,
    ))
}

fn exact1d(cloud: &PointCloud, x: f64) -> u128 {
    let below = cloud.as_slice().iter().filter(|&&v| v < x).count();
    let above = cloud.as_slice().iter().filter(|&&v| v > x).count();
    binomial(cloud.n(), 2) - binomial(below, 2) - binomial(above, 2)
}

/// Angular gap counting. A closed triangle misses the centre exactly when its
/// vertices fit in an open half-plane through the centre. Every such triple
/// is counted once, at its first vertex in counterclockwise order (ties on a
/// common ray broken by sort position): `sum_p C(h_p, 2)` with `h_p` the
/// number of later points within an angle in `[0, pi)`. Points equal to the
/// centre belong to every triangle that uses them.
fn exact2d(cloud: &PointCloud, center: [f64; 2]) -> u128 {
    let frame = AngularFrame::new(center);
    let mut pts: Vec<[f64; 2]> = cloud
        .rows()
        .map(point2)
        .filter(|&p| !frame.coincides(p))
        .collect();
    pts.sort_by(|a, b| frame.cmp(*a, *b));
    let m = pts.len();

    let mut missing: u128 = 0;
    let mut group_end = 0;
    let mut end = 0;
    for p in 0..m {
        if p >= group_end {
            group_end = p + 1;
            while group_end < m && frame.same_ray(pts[p], pts[group_end]) {
                group_end += 1;
            }
        }
        end = end.max(group_end).max(p + 1);
        while end < p + m && frame.strictly_ccw(pts[p], pts[end % m]) {
            end += 1;
        }
        let h = end - (p + 1);
        missing += binomial(h, 2);
    }
    binomial(cloud.n(), 3) - missing
}

fn bruteforce(cloud: &PointCloud, x: &[f64]) -> Result<u128> {
    let d = cloud.d();
    let n = cloud.n();
    let mut idx: Vec<usize> = (0..=d).collect();
    let mut contained: u128 = 0;
    loop {
        let hit = match d {
            1 => {
                let (a, b) = (cloud.row(idx[0])[0], cloud.row(idx[1])[0]);
                a.min(b) <= x[0] && x[0] <= a.max(b)
            }
            2 => triangle_contains(
                point2(cloud.row(idx[0])),
                point2(cloud.row(idx[1])),
                point2(cloud.row(idx[2])),
                point2(x),
            ),
            _ => hull_contains(cloud, &idx, x)?,
        };
        if hit {
            contained += 1;
        }
        // next combination in lexicographic order
        let Some(k) = (0..=d).rev().find(|&k| idx[k] < n - (d + 1) + k) else {
            return Ok(contained);
        };
        idx[k] += 1;
        for j in k + 1..=d {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Closed triangle containment with exact predicates; collinear vertex
/// triples degrade to segment (or point) containment.
pub(crate) fn triangle_contains(a: [f64; 2], b: [f64; 2], c: [f64; 2], q: [f64; 2]) -> bool {
    let area = orient(a, b, c);
    if area != Ordering::Equal {
        let o1 = orient(a, b, q);
        let o2 = orient(b, c, q);
        let o3 = orient(c, a, q);
        return [o1, o2, o3]
            .iter()
            .all(|&o| o == area || o == Ordering::Equal);
    }
    collinear_hull_contains(&[a, b, c], q)
}

/// `q` in the convex hull of points known to be collinear.
fn collinear_hull_contains(pts: &[[f64; 2]], q: [f64; 2]) -> bool {
    let first = pts[0];
    let Some(other) = pts.iter().copied().find(|&p| p != first) else {
        return q == first;
    };
    if orient(first, other, q) != Ordering::Equal {
        return false;
    }
    // compare along the axis with the larger extent
    let axis = if (other[0] - first[0]).abs() >= (other[1] - first[1]).abs() {
        0
    } else {
        1
    };
    let lo = pts.iter().map(|p| p[axis]).fold(f64::INFINITY, f64::min);
    let hi = pts
        .iter()
        .map(|p| p[axis])
        .fold(f64::NEG_INFINITY, f64::max);
    lo <= q[axis] && q[axis] <= hi
}

fn hull_contains(cloud: &PointCloud, idx: &[usize], x: &[f64]) -> Result<bool> {
    let rows: Vec<&[f64]> = idx.iter().map(|&i| cloud.row(i)).collect();
    let sub = PointCloud::from_rows(&rows)?;
    let problem = ZonoidLpProblem::new(&sub, x)?;
    Ok(matches!(
        solve_zonoid_lp(&problem)?,
        ZonoidLpOutcome::Feasible(_)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(300, 3), 4_455_100);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(7, 0), 1);
    }

    #[test]
    fn univariate_example() {
        let c = PointCloud::from_values(&[1.0, 2.0, 3.0]).unwrap();
        for m in [MethodSpec::auto(), MethodSpec::bruteforce()] {
            assert_eq!(simplicial_depth(&c, &[2.0], &m).unwrap().value, 1.0);
        }
        assert_eq!(
            simplicial_depth(&c, &[3.0], &MethodSpec::auto())
                .unwrap()
                .value,
            2.0 / 3.0
        );
    }

    #[test]
    fn single_triangle() {
        let c = PointCloud::from_rows(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        for m in [MethodSpec::exact2d(), MethodSpec::bruteforce()] {
            assert_eq!(simplicial_depth(&c, &[0.25, 0.25], &m).unwrap().value, 1.0);
            assert_eq!(simplicial_depth(&c, &[5.0, 5.0], &m).unwrap().value, 0.0);
            // boundary and vertex are contained
            assert_eq!(simplicial_depth(&c, &[0.5, 0.0], &m).unwrap().value, 1.0);
            assert_eq!(simplicial_depth(&c, &[0.0, 0.0], &m).unwrap().value, 1.0);
        }
    }

    #[test]
    fn too_few_points_gives_zero() {
        let c = PointCloud::from_rows(&[[0.0, 0.0], [1.0, 0.0]]).unwrap();
        assert_eq!(
            simplicial_depth(&c, &[0.5, 0.0], &MethodSpec::auto())
                .unwrap()
                .value,
            0.0
        );
    }

    #[test]
    fn degenerate_triangles() {
        assert!(triangle_contains(
            [0.0, 0.0],
            [2.0, 2.0],
            [1.0, 1.0],
            [0.5, 0.5]
        ));
        assert!(!triangle_contains(
            [0.0, 0.0],
            [2.0, 2.0],
            [1.0, 1.0],
            [3.0, 3.0]
        ));
        assert!(!triangle_contains(
            [0.0, 0.0],
            [2.0, 2.0],
            [1.0, 1.0],
            [0.5, 0.6]
        ));
        assert!(triangle_contains(
            [1.0, 1.0],
            [1.0, 1.0],
            [1.0, 1.0],
            [1.0, 1.0]
        ));
        assert!(!triangle_contains(
            [1.0, 1.0],
            [1.0, 1.0],
            [1.0, 1.0],
            [1.0, 2.0]
        ));
        assert!(triangle_contains(
            [0.0, 1.0],
            [0.0, 3.0],
            [0.0, 3.0],
            [0.0, 2.0]
        ));
    }

    #[test]
    fn exact_matches_bruteforce_with_antipodes_and_duplicates() {
        let c = PointCloud::from_rows(&[
            [1.0, 0.0],
            [-1.0, 0.0],
            [2.0, 0.0],
            [0.0, 1.0],
            [0.0, 0.0],
            [0.5, -0.5],
            [-3.0, 0.0],
            [1.0, 0.0],
        ])
        .unwrap();
        let e = simplicial_depth(&c, &[0.0, 0.0], &MethodSpec::exact2d()).unwrap();
        let b = simplicial_depth(&c, &[0.0, 0.0], &MethodSpec::bruteforce()).unwrap();
        assert_eq!(e.value, b.value);
    }

    #[test]
    fn three_dimensional_enumeration() {
        let c = PointCloud::from_rows(&[
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
        ])
        .unwrap();
        let r = simplicial_depth(&c, &[0.1, 0.1, 0.1], &MethodSpec::auto()).unwrap();
        assert_eq!(r.value, 1.0);
        let r = simplicial_depth(&c, &[1.0, 1.0, 1.0], &MethodSpec::auto()).unwrap();
        assert_eq!(r.value, 0.0);
    }
}
