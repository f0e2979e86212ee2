//! Marching squares on the node grid of a depth surface.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{DepthError, Result};

use super::DepthSurface;

/// Vertices `[beta0, beta1]`; closed polylines repeat their first vertex.
pub type Polyline = Vec<[f64; 2]>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourSet {
    pub levels: Vec<f64>,
    /// `polylines[k]` traces level `levels[k]`.
    pub polylines: Vec<Vec<Polyline>>,
}

impl ContourSet {
    pub fn is_closed(line: &Polyline) -> bool {
        line.len() > 2 && line.first() == line.last()
    }
}

/// Grid edge: `H(i, j)` joins nodes `(i, j)` and `(i + 1, j)`, `V(i, j)`
/// joins `(i, j)` and `(i, j + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Edge {
    H(usize, usize),
    V(usize, usize),
}

/// Contour polylines of the superlevel sets `{value >= level}` for each
/// level. Levels must be finite and strictly ascending; a level that the
/// surface never crosses yields no polylines. Edge crossings are linearly
/// interpolated; in a saddle cell the corners whose status differs from the
/// cell-centre average are cut off. Open chains (ending on the grid
/// boundary) come first in edge order, then closed loops.
pub fn contour_lines(s: &DepthSurface, levels: &[f64]) -> Result<ContourSet> {
    if levels.iter().any(|l| !l.is_finite()) {
        return Err(DepthError::NonFinite("contour levels"));
    }
    if levels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DepthError::InvalidArgument(
            "contour levels must be strictly ascending".into(),
        ));
    }
    Ok(ContourSet {
        levels: levels.to_vec(),
        polylines: levels.iter().map(|&l| trace_level(s, l)).collect(),
    })
}

fn crossing(s: &DepthSurface, e: Edge, level: f64) -> [f64; 2] {
    let g = &s.grid;
    let ((i0, j0), (i1, j1)) = match e {
        Edge::H(i, j) => ((i, j), (i + 1, j)),
        Edge::V(i, j) => ((i, j), (i, j + 1)),
    };
    let (va, vb) = (s.value(i0, j0), s.value(i1, j1));
    let t = ((level - va) / (vb - va)).clamp(0.0, 1.0);
    let (a, b) = (
        [g.beta0_at(i0), g.beta1_at(j0)],
        [g.beta0_at(i1), g.beta1_at(j1)],
    );
    [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]
}

fn cell_segments(s: &DepthSurface, i: usize, j: usize, level: f64, out: &mut Vec<(Edge, Edge)>) {
    // corners counterclockwise from (i, j), each with its two incident edges
    let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
    let bottom = Edge::H(i, j);
    let right = Edge::V(i + 1, j);
    let top = Edge::H(i, j + 1);
    let left = Edge::V(i, j);
    let incident = [(bottom, left), (bottom, right), (top, right), (top, left)];
    let v: Vec<f64> = corners.iter().map(|&(a, b)| s.value(a, b)).collect();
    let inside: Vec<bool> = v.iter().map(|&x| x >= level).collect();
    let count = inside.iter().filter(|&&b| b).count();
    match count {
        0 | 4 => {}
        1 | 3 => {
            // the odd corner out is cut off
            let odd = (0..4)
                .find(|&k| inside[k] == (count == 1))
                .expect("odd corner");
            out.push(incident[odd]);
        }
        _ => {
            if inside[0] == inside[2] {
                let centre = (v[0] + v[1] + v[2] + v[3]) / 4.0 >= level;
                for k in 0..4 {
                    if inside[k] != centre {
                        out.push(incident[k]);
                    }
                }
            } else {
                // two adjacent corners inside: the line crosses opposite edges
                out.push(if inside[0] == inside[1] {
                    (left, right)
                } else {
                    (bottom, top)
                });
            }
        }
    }
}

fn trace_level(s: &DepthSurface, level: f64) -> Vec<Polyline> {
    let (n0, n1) = s.grid.shape();
    let mut segments = Vec::new();
    for i in 0..n0 - 1 {
        for j in 0..n1 - 1 {
            cell_segments(s, i, j, level, &mut segments);
        }
    }
    let mut at: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (k, &(a, b)) in segments.iter().enumerate() {
        at.entry(a).or_default().push(k);
        at.entry(b).or_default().push(k);
    }
    let mut used = vec![false; segments.len()];
    let walk = |start: Edge, used: &mut Vec<bool>| -> Polyline {
        let mut line = vec![crossing(s, start, level)];
        let mut cur = start;
        while let Some(&k) = at[&cur].iter().find(|&&k| !used[k]) {
            used[k] = true;
            let (a, b) = segments[k];
            cur = if a == cur { b } else { a };
            line.push(crossing(s, cur, level));
        }
        line
    };
    let mut lines = Vec::new();
    let starts: Vec<Edge> = at
        .iter()
        .filter(|(_, v)| v.len() == 1)
        .map(|(e, _)| *e)
        .collect();
    for e in starts {
        if at[&e].iter().any(|&k| !used[k]) {
            lines.push(walk(e, &mut used));
        }
    }
    let keys: Vec<Edge> = at.keys().copied().collect();
    for e in keys {
        if at[&e].iter().any(|&k| !used[k]) {
            lines.push(walk(e, &mut used));
        }
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::result::{Method, Notion};
    use crate::surface::GridSpec;

    fn surface(count: usize, f: impl Fn(f64, f64) -> f64) -> DepthSurface {
        let g = GridSpec::square(0.0, 1.0, count).unwrap();
        let values = g.nodes().iter().map(|p| f(p[0], p[1])).collect();
        DepthSurface::new(Notion::Rayleigh, Method::Closedform, g, values).unwrap()
    }

    #[test]
    fn constant_surface_has_no_contours() {
        let s = surface(5, |_, _| 0.5);
        let c = contour_lines(&s, &[0.2, 0.7]).unwrap();
        assert_eq!(c.polylines, vec![Vec::<Polyline>::new(), Vec::new()]);
    }

    #[test]
    fn cone_gives_one_closed_circle_per_level() {
        let centre = [0.47, 0.52];
        let dist = |a: f64, b: f64| ((a - centre[0]).powi(2) + (b - centre[1]).powi(2)).sqrt();
        let s = surface(41, |a, b| 1.0 / (1.0 + dist(a, b)));
        let levels = [0.75, 0.8, 0.9];
        let c = contour_lines(&s, &levels).unwrap();
        let h = 1.0 / 40.0;
        for (k, lines) in c.polylines.iter().enumerate() {
            assert_eq!(lines.len(), 1);
            assert!(ContourSet::is_closed(&lines[0]));
            let radius = 1.0 / levels[k] - 1.0;
            for p in &lines[0] {
                assert!((dist(p[0], p[1]) - radius).abs() < h);
            }
        }
    }

    #[test]
    fn boundary_crossing_lines_are_open() {
        let s = surface(6, |a, _| a);
        let c = contour_lines(&s, &[0.5]).unwrap();
        assert_eq!(c.polylines[0].len(), 1);
        let line = &c.polylines[0][0];
        assert!(!ContourSet::is_closed(line));
        assert_eq!(line.len(), 6);
        assert!(line.iter().all(|p| (p[0] - 0.5).abs() < 1e-15));
    }

    #[test]
    fn saddle_follows_the_centre() {
        // corners alternate high/low; centre average above the level joins the highs
        let g = GridSpec::square(0.0, 1.0, 2).unwrap();
        let s = DepthSurface::new(
            Notion::Halfspace,
            Method::Exact2d,
            g,
            vec![1.0, 0.0, 0.0, 0.9],
        )
        .unwrap();
        let high = contour_lines(&s, &[0.4]).unwrap();
        let low = contour_lines(&s, &[0.6]).unwrap();
        assert_eq!(high.polylines[0].len(), 2);
        assert_eq!(low.polylines[0].len(), 2);
        assert_ne!(high.polylines, low.polylines);
    }

    #[test]
    fn levels_must_ascend() {
        let s = surface(3, |a, b| a * b);
        assert!(contour_lines(&s, &[0.5, 0.2]).is_err());
        assert!(contour_lines(&s, &[0.2, 0.2]).is_err());
        assert!(contour_lines(&s, &[f64::NAN]).is_err());
        assert!(contour_lines(&s, &[]).unwrap().polylines.is_empty());
    }
}
