//! Depth surfaces over `(beta0, beta1)` grids, their contour lines, and a
//! monotonicity diagnostic along rays.
//!
//! Contours are level sets of the piecewise-linear interpolant of the node
//! values. For the step-function notions (halfspace, simplicial) they trace
//! the interpolated surface, not the exact discontinuities.

mod contour;
mod rays;

pub use contour::{contour_lines, ContourSet, Polyline};
pub use rays::{ray_monotonicity, RayReport, RaySpec, RayViolation};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::data::{Coefficient, RegressionDataset};
use crate::directions::MethodSpec;
use crate::error::{DepthError, Result};
use crate::estimate::check_cost;
use crate::regression::RegressionEvaluator;
use crate::result::{Method, Notion};

/// Node axes `(lo, hi, count)`; node `i` sits at `lo + i (hi - lo) / (count - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub beta0: (f64, f64, usize),
    pub beta1: (f64, f64, usize),
}

fn node((lo, hi, count): (f64, f64, usize), i: usize) -> f64 {
    if i + 1 == count {
        hi
    } else {
        lo + i as f64 * (hi - lo) / (count - 1) as f64
    }
}

impl GridSpec {
    pub fn new(beta0: (f64, f64, usize), beta1: (f64, f64, usize)) -> Result<Self> {
        let g = Self { beta0, beta1 };
        g.validate()?;
        Ok(g)
    }

    /// `count x count` nodes on `[lo, hi]^2`.
    pub fn square(lo: f64, hi: f64, count: usize) -> Result<Self> {
        Self::new((lo, hi, count), (lo, hi, count))
    }

    pub fn validate(&self) -> Result<()> {
        for (name, (lo, hi, count)) in [("beta0", self.beta0), ("beta1", self.beta1)] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) || count < 2 {
                return Err(DepthError::InvalidArgument(format!(
                    "{name} axis ({lo}, {hi}, {count}) needs lo < hi and at least 2 nodes"
                )));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.beta0.2, self.beta1.2)
    }

    pub fn beta0_at(&self, i: usize) -> f64 {
        node(self.beta0, i)
    }

    pub fn beta1_at(&self, j: usize) -> f64 {
        node(self.beta1, j)
    }

    /// All nodes in row-major order (`beta0` index outer).
    pub fn nodes(&self) -> Vec<[f64; 2]> {
        let (n0, n1) = self.shape();
        (0..n0)
            .flat_map(|i| (0..n1).map(move |j| (i, j)))
            .map(|(i, j)| [self.beta0_at(i), self.beta1_at(j)])
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepthSurface {
    pub notion: Notion,
    pub method: Method,
    pub grid: GridSpec,
    /// Row-major: `values[i * n1 + j]` is the depth at `(beta0_i, beta1_j)`.
    pub values: Vec<f64>,
}

impl DepthSurface {
    pub fn new(notion: Notion, method: Method, grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        grid.validate()?;
        let (n0, n1) = grid.shape();
        if values.len() != n0 * n1 {
            return Err(DepthError::InvalidShape(format!(
                "{} values for a {n0}x{n1} grid",
                values.len()
            )));
        }
        if values.iter().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(DepthError::InvalidArgument(
                "surface values must lie in [0, 1]".into(),
            ));
        }
        Ok(Self {
            notion,
            method,
            grid,
            values,
        })
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.grid.beta1.2 + j]
    }

    /// Largest value and its node indices (first in row-major order).
    pub fn argmax(&self) -> (f64, usize, usize) {
        let n1 = self.grid.beta1.2;
        let (k, v) = self
            .values
            .iter()
            .enumerate()
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, (k, &v)| if v > acc.1 { (k, v) } else { acc },
            );
        (v, k / n1, k % n1)
    }
}

/// Depth of every grid node, evaluated in parallel. Node values equal
/// direct [`rdepth`](crate::regression::rdepth) calls bitwise.
pub fn eval_surface(
    ds: &RegressionDataset,
    notion: Notion,
    m: &MethodSpec,
    g: &GridSpec,
) -> Result<DepthSurface> {
    g.validate()?;
    if ds.d() != 1 {
        return Err(DepthError::InvalidArgument(format!(
            "depth surfaces need a single covariate, got {}",
            ds.d()
        )));
    }
    let nodes = g.nodes();
    check_cost(ds, notion, m, nodes.len())?;
    let ev = RegressionEvaluator::new(ds, notion, m)?;
    let results = nodes
        .par_iter()
        .map(|&[b0, b1]| {
            Coefficient::new(b0, &[b1])
                .and_then(|t| ev.depth(&t))
                .map_err(|e| e.at_node(b0, b1))
        })
        .collect::<Result<Vec<_>>>()?;
    let method = results[0].method;
    DepthSurface::new(
        notion,
        method,
        *g,
        results.into_iter().map(|r| r.value).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regression::rdepth;

    #[test]
    fn grid_nodes_hit_both_ends() {
        let g = GridSpec::new((0.1, 0.7, 7), (-1.0, 1.0, 3)).unwrap();
        assert_eq!(g.beta0_at(0), 0.1);
        assert_eq!(g.beta0_at(6), 0.7);
        assert_eq!(g.beta1_at(1), 0.0);
        assert_eq!(g.nodes().len(), 21);
        assert!(GridSpec::square(0.0, 1.0, 1).is_err());
        assert!(GridSpec::square(1.0, 1.0, 5).is_err());
    }

    #[test]
    fn nodes_match_direct_calls() {
        let ds =
            RegressionDataset::from_xy(&[0.1, 0.9, -0.4, 1.3, 0.5], &[0.4, 1.2, 0.1, 0.9, 0.8])
                .unwrap();
        let g = GridSpec::square(0.0, 1.0, 2).unwrap();
        let m = MethodSpec::auto();
        for notion in Notion::ALL {
            let s = eval_surface(&ds, notion, &m, &g).unwrap();
            assert_eq!(s.values.len(), 4);
            for i in 0..2 {
                for j in 0..2 {
                    let t = Coefficient::new(g.beta0_at(i), &[g.beta1_at(j)]).unwrap();
                    let direct = rdepth(notion, &ds, &t, &m).unwrap().value;
                    assert_eq!(s.value(i, j).to_bits(), direct.to_bits());
                }
            }
        }
    }
}
