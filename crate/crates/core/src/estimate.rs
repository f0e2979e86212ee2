//! Least squares and deepest-fit search over coefficient grids.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::data::{Coefficient, RegressionDataset};
use crate::directions::{MethodKind, MethodSpec};
use crate::error::{DepthError, Result};
use crate::location::binomial;
use crate::regression::RegressionEvaluator;
use crate::result::{DepthResult, Notion};
use crate::transform::lift;

/// Largest accepted condition number of `W^T W`.
pub const MAX_DESIGN_CONDITION: f64 = 1e12;

/// Upper limit on simplex evaluations for enumerated simplicial depth over a grid.
pub const SIMPLEX_EVALUATION_LIMIT: u128 = 10_000_000;

/// Tolerance for treating two depth values as tied.
pub const TIE_TOL: f64 = 1e-12;

/// Least squares coefficient, by QR of the lifted design.
pub fn ols(ds: &RegressionDataset) -> Result<Coefficient> {
    let w = lift(ds);
    let (n, p) = (w.n(), w.cols());
    if n < p {
        return Err(DepthError::SingularDesign {
            condition: f64::INFINITY,
        });
    }
    let data: Vec<f64> = w.rows().flatten().copied().collect();
    let wm = DMatrix::from_row_slice(n, p, &data);
    let sv = wm.singular_values();
    let (max, min) = (sv.max(), sv.min());
    let condition = if min > 0.0 {
        (max / min).powi(2)
    } else {
        f64::INFINITY
    };
    if !(condition <= MAX_DESIGN_CONDITION) {
        return Err(DepthError::SingularDesign { condition });
    }
    let qr = wm.qr();
    let qty = qr.q().transpose() * DVector::from_column_slice(ds.y());
    let beta = qr
        .r()
        .solve_upper_triangular(&qty)
        .ok_or(DepthError::SingularDesign { condition })?;
    Coefficient::from_slice(beta.as_slice())
}

/// Rejects grids on which enumerated simplicial depth would exceed
/// [`SIMPLEX_EVALUATION_LIMIT`] simplex evaluations.
pub(crate) fn check_cost(
    ds: &RegressionDataset,
    notion: Notion,
    spec: &MethodSpec,
    nodes: usize,
) -> Result<()> {
    if notion == Notion::Simplicial && spec.kind == MethodKind::Bruteforce {
        let evaluations = binomial(ds.n(), ds.d() + 2).saturating_mul(nodes as u128);
        if evaluations > SIMPLEX_EVALUATION_LIMIT {
            return Err(DepthError::CostGuard {
                evaluations,
                limit: SIMPLEX_EVALUATION_LIMIT,
            });
        }
    }
    Ok(())
}

/// Evaluates `(beta0, beta1)` nodes in parallel, attaching coordinates to errors.
pub(crate) fn eval_nodes(ev: &RegressionEvaluator<'_>, nodes: &[[f64; 2]]) -> Result<Vec<f64>> {
    nodes
        .par_iter()
        .map(|&[b0, b1]| {
            Coefficient::new(b0, &[b1])
                .and_then(|t| ev.depth(&t))
                .map(|r| r.value)
                .map_err(|e| e.at_node(b0, b1))
        })
        .collect()
}

/// Coarse-to-fine grid search for simple regression (`d = 1`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub notion: Notion,
    pub method: MethodSpec,
    /// `[lo, hi]` for the intercept.
    pub beta0: [f64; 2],
    /// `[lo, hi]` for the slope.
    pub beta1: [f64; 2],
    /// Grid points per axis at every level.
    pub coarse: usize,
    /// Number of refinement levels after the coarse pass; each shrinks the
    /// search box fourfold around the incumbent.
    pub refine_levels: usize,
}

impl SearchSpec {
    /// Unit box `[0, 1]^2`, 41 points per axis, three refinement levels.
    pub fn new(notion: Notion) -> Self {
        Self {
            notion,
            method: MethodSpec::auto(),
            beta0: [0.0, 1.0],
            beta1: [0.0, 1.0],
            coarse: 41,
            refine_levels: 3,
        }
    }

    pub fn with_box(mut self, beta0: [f64; 2], beta1: [f64; 2]) -> Self {
        self.beta0 = beta0;
        self.beta1 = beta1;
        self
    }

    pub fn with_method(mut self, method: MethodSpec) -> Self {
        self.method = method;
        self
    }

    pub fn with_resolution(mut self, coarse: usize, refine_levels: usize) -> Self {
        self.coarse = coarse;
        self.refine_levels = refine_levels;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (name, [lo, hi]) in [("beta0", self.beta0), ("beta1", self.beta1)] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(DepthError::InvalidArgument(format!(
                    "{name} interval [{lo}, {hi}] must satisfy lo < hi"
                )));
            }
        }
        if self.coarse < 3 {
            return Err(DepthError::InvalidArgument(format!(
                "coarse must be at least 3, got {}",
                self.coarse
            )));
        }
        self.method.validate()
    }
}

/// Best grid value and spacing at one level of the search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub level: usize,
    pub step: [f64; 2],
    pub best: f64,
    pub ties: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub theta_star: Coefficient,
    pub depth: DepthResult,
    /// Grid points attaining the maximum at the finest level.
    pub argmax_cells: Vec<[f64; 2]>,
    pub levels: Vec<LevelSummary>,
    /// The incumbent sits within half a coarse cell of the edge of the
    /// search box, or outside it.
    pub on_boundary: bool,
}

fn axis(center: f64, h: f64, c: usize) -> Vec<f64> {
    let mid = (c as f64 - 1.0) / 2.0;
    (0..c).map(|i| center + (i as f64 - mid) * h).collect()
}

/// Maximises the depth of `spec.notion` over the box. Each level evaluates a
/// `coarse x coarse` grid (cell centres of the box at level 0, then a grid
/// four times finer centred on the incumbent) together with the previous
/// incumbent. Grid points within [`TIE_TOL`] of the maximum are averaged; if
/// the average is itself not maximal, the tied point closest to it is used.
pub fn deepest_fit(ds: &RegressionDataset, spec: &SearchSpec) -> Result<FitResult> {
    spec.validate()?;
    if ds.d() != 1 {
        return Err(DepthError::InvalidArgument(format!(
            "grid search needs a single covariate, got {}",
            ds.d()
        )));
    }
    let c = spec.coarse;
    // every level evaluates the grid, the previous incumbent and the tie average
    check_cost(
        ds,
        spec.notion,
        &spec.method,
        (c * c + 2) * (spec.refine_levels + 1),
    )?;
    let ev = RegressionEvaluator::new(ds, spec.notion, &spec.method)?;

    let mut h = [
        (spec.beta0[1] - spec.beta0[0]) / c as f64,
        (spec.beta1[1] - spec.beta1[0]) / c as f64,
    ];
    let h0 = h;
    let mut center = [
        (spec.beta0[0] + spec.beta0[1]) / 2.0,
        (spec.beta1[0] + spec.beta1[1]) / 2.0,
    ];
    let mut incumbent: Option<([f64; 2], f64)> = None;
    let mut levels = Vec::new();
    let mut argmax_cells = Vec::new();

    for level in 0..=spec.refine_levels {
        if level > 0 {
            h = [h[0] / 4.0, h[1] / 4.0];
        }
        let (a0, a1) = (axis(center[0], h[0], c), axis(center[1], h[1], c));
        let mut nodes: Vec<[f64; 2]> = a0
            .iter()
            .flat_map(|&b0| a1.iter().map(move |&b1| [b0, b1]))
            .collect();
        if let Some((p, _)) = incumbent {
            nodes.push(p);
        }
        let values = eval_nodes(&ev, &nodes)?;
        let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        argmax_cells = nodes
            .iter()
            .zip(&values)
            .filter(|(_, &v)| v >= best - TIE_TOL)
            .map(|(p, _)| *p)
            .collect();
        let k = argmax_cells.len() as f64;
        let avg = [
            argmax_cells.iter().map(|p| p[0]).sum::<f64>() / k,
            argmax_cells.iter().map(|p| p[1]).sum::<f64>() / k,
        ];
        let avg_value = eval_nodes(&ev, &[avg])?[0];
        let chosen = if avg_value >= best - TIE_TOL {
            (avg, avg_value)
        } else {
            let dist = |p: &[f64; 2]| (p[0] - avg[0]).powi(2) + (p[1] - avg[1]).powi(2);
            let p = *argmax_cells
                .iter()
                .min_by(|a, b| dist(a).total_cmp(&dist(b)))
                .expect("nonempty argmax");
            (p, best)
        };
        levels.push(LevelSummary {
            level,
            step: h,
            best,
            ties: argmax_cells.len(),
        });
        incumbent = Some(chosen);
        center = chosen.0;
    }

    let (p, _) = incumbent.expect("at least one level");
    let theta_star = Coefficient::new(p[0], &[p[1]])?;
    let depth = ev.depth(&theta_star).map_err(|e| e.at_node(p[0], p[1]))?;
    let near = |v: f64, [lo, hi]: [f64; 2], h: f64| v <= lo + h / 2.0 || v >= hi - h / 2.0;
    let on_boundary = near(p[0], spec.beta0, h0[0]) || near(p[1], spec.beta1, h0[1]);
    if on_boundary {
        log::warn!(
            "deepest {} fit ({}, {}) lies on the boundary of the search box",
            spec.notion,
            p[0],
            p[1]
        );
    }
    Ok(FitResult {
        theta_star,
        depth,
        argmax_cells,
        levels,
        on_boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn noisy() -> RegressionDataset {
        RegressionDataset::from_xy(
            &[0.3, -1.2, 0.8, 2.1, -0.4, 1.5, 0.9, -0.1, 0.05, -0.7],
            &[0.7, -0.2, 0.8, 1.6, 0.1, 1.4, 0.8, 0.6, 0.4, 0.2],
        )
        .unwrap()
    }

    #[test]
    fn ols_recovers_exact_fit() {
        let ds = RegressionDataset::from_xy(&[0.0, 1.0, 2.0, 5.0], &[1.0, 3.0, 5.0, 11.0]).unwrap();
        let t = ols(&ds).unwrap();
        assert!((t.beta0() - 1.0).abs() < 1e-10 && (t.beta1()[0] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn ols_rejects_constant_covariate() {
        let ds = RegressionDataset::from_xy(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(ols(&ds), Err(DepthError::SingularDesign { .. })));
    }

    #[test]
    fn ols_scales_with_response() {
        let ds = noisy();
        let a = ols(&ds).unwrap();
        let b = ols(&ds.scale_response(-3.0).unwrap()).unwrap();
        for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
            assert!((-3.0 * x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn rayleigh_fit_lands_on_least_squares() {
        let ds = noisy();
        let spec = SearchSpec::new(Notion::Rayleigh)
            .with_box([-1.0, 1.0], [-1.0, 1.0])
            .with_resolution(11, 3);
        let fit = deepest_fit(&ds, &spec).unwrap();
        let o = ols(&ds).unwrap();
        let finest = fit.levels.last().unwrap().step;
        assert!((fit.theta_star.beta0() - o.beta0()).abs() <= finest[0]);
        assert!((fit.theta_star.beta1()[0] - o.beta1()[0]).abs() <= finest[1]);
        assert!(fit.levels.windows(2).all(|w| w[1].best >= w[0].best));
        assert!(!fit.on_boundary);
    }

    #[test]
    fn cost_guard_blocks_enumeration_on_large_grids() {
        let x: Vec<f64> = (0..300).map(|i| i as f64 / 300.0).collect();
        let ds = RegressionDataset::from_xy(&x, &x).unwrap();
        let spec = SearchSpec::new(Notion::Simplicial).with_method(MethodSpec::bruteforce());
        assert!(matches!(
            deepest_fit(&ds, &spec),
            Err(DepthError::CostGuard { .. })
        ));
    }

    #[test]
    fn invalid_search_boxes() {
        let ds = noisy();
        assert!(deepest_fit(
            &ds,
            &SearchSpec::new(Notion::Zonoid).with_box([1.0, 0.0], [0.0, 1.0])
        )
        .is_err());
        assert!(deepest_fit(&ds, &SearchSpec::new(Notion::Zonoid).with_resolution(2, 1)).is_err());
    }
}
