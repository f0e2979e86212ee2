//! Exact planar predicates and angular ordering around a centre point.

use std::cmp::Ordering;

use robust::{orient2d, Coord};

/// Sign of the orientation of `(a, b, c)`: positive when counterclockwise.
/// Exact for all finite inputs.
pub(crate) fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Ordering {
    let v = orient2d(
        Coord { x: a[0], y: a[1] },
        Coord { x: b[0], y: b[1] },
        Coord { x: c[0], y: c[1] },
    );
    v.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
}

pub(crate) fn point2(p: &[f64]) -> [f64; 2] {
    [p[0], p[1]]
}

/// Angular order of points around `center`, starting at the positive
/// x-axis and turning counterclockwise. Points must differ from the centre.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AngularFrame {
    pub center: [f64; 2],
}

impl AngularFrame {
    pub fn new(center: [f64; 2]) -> Self {
        Self { center }
    }

    /// 0 for angles in `[0, pi)`, 1 for `[pi, 2 pi)`.
    fn half(&self, p: [f64; 2]) -> u8 {
        let c = self.center;
        if p[1] > c[1] || (p[1] == c[1] && p[0] > c[0]) {
            0
        } else {
            1
        }
    }

    pub fn cmp(&self, a: [f64; 2], b: [f64; 2]) -> Ordering {
        match self.half(a).cmp(&self.half(b)) {
            Ordering::Equal => orient(self.center, b, a),
            other => other,
        }
    }

    /// `b` lies on the same ray from the centre as `a`.
    pub fn same_ray(&self, a: [f64; 2], b: [f64; 2]) -> bool {
        self.half(a) == self.half(b) && orient(self.center, a, b) == Ordering::Equal
    }

    /// `b` is on the ray opposite to `a`.
    pub fn opposite_ray(&self, a: [f64; 2], b: [f64; 2]) -> bool {
        self.half(a) != self.half(b) && orient(self.center, a, b) == Ordering::Equal
    }

    /// `b` is reached from `a` by a counterclockwise turn strictly between 0 and pi.
    pub fn strictly_ccw(&self, a: [f64; 2], b: [f64; 2]) -> bool {
        orient(self.center, a, b) == Ordering::Greater
    }

    pub fn coincides(&self, p: [f64; 2]) -> bool {
        p == self.center
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_sign_convention() {
        assert_eq!(
            orient([0.0, 0.0], [1.0, 0.0], [0.0, 1.0]),
            Ordering::Greater
        );
        assert_eq!(orient([0.0, 0.0], [0.0, 1.0], [1.0, 0.0]), Ordering::Less);
        assert_eq!(orient([0.0, 0.0], [1.0, 1.0], [3.0, 3.0]), Ordering::Equal);
        // a nearly collinear triple that naive evaluation gets wrong
        assert_eq!(
            orient([0.1, 0.1], [0.2, 0.2], [0.30000000000000004, 0.3]),
            Ordering::Less
        );
    }

    #[test]
    fn angular_sort() {
        let f = AngularFrame::new([0.0, 0.0]);
        let mut pts = vec![
            [0.0, -1.0],
            [-1.0, 0.0],
            [1.0, 1.0],
            [1.0, 0.0],
            [0.0, 1.0],
            [1.0, -1.0],
        ];
        pts.sort_by(|a, b| f.cmp(*a, *b));
        assert_eq!(
            pts,
            vec![
                [1.0, 0.0],
                [1.0, 1.0],
                [0.0, 1.0],
                [-1.0, 0.0],
                [0.0, -1.0],
                [1.0, -1.0]
            ]
        );
        assert!(f.same_ray([1.0, 1.0], [2.0, 2.0]));
        assert!(f.opposite_ray([1.0, 1.0], [-2.0, -2.0]));
        assert!(!f.same_ray([1.0, 1.0], [-2.0, -2.0]));
    }
}
