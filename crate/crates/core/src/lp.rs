//! Dense bounded-variable simplex for the zonoid depth program.
//!
//! The program `min t` subject to `sum lambda_i X_i = x`, `sum lambda_i = 1`,
//! `0 <= lambda_i <= t` is solved in homogeneous form: with `mu_i = lambda_i / t`,
//!
//! ```text
//! maximise  sum mu_i   subject to  sum mu_i (X_i - x) = 0,  0 <= mu_i <= 1,
//! ```
//!
//! whose optimum is `1 / t*` when `x` lies in the convex hull and `0`
//! otherwise. Each equality row is rescaled by a power of two and a sign so
//! that row scalings of the input produce identical pivots.

use crate::data::PointCloud;
use crate::error::{DepthError, Result};
use crate::linalg::solve_square;
use crate::result::ZonoidCertificate;

const REDUCED_COST_TOL: f64 = 1e-11;
const PIVOT_TOL: f64 = 1e-11;

/// Columns `X_i - x`, one equality row per coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct ZonoidLpProblem {
    /// `d x n`, row-major, after row canonicalisation.
    a: Vec<f64>,
    /// Factor applied to each original row.
    row_scale: Vec<f64>,
    /// Unscaled columns, row-major `d x n`, for the separation margin.
    raw: Vec<f64>,
    n: usize,
    d: usize,
}

/// Power-of-two scale and sign that bring the largest entry into `[1, 2)`
/// and make the first nonzero entry positive.
fn canonical_scale(row: &[f64]) -> f64 {
    let max = row.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let Some(first) = row.iter().copied().find(|&v| v != 0.0) else {
        return 1.0;
    };
    let e = max.log2().floor() as i32;
    let mut s = (-e as f64).exp2();
    // log2 rounding can be off by one near powers of two
    if max * s >= 2.0 {
        s *= 0.5;
    } else if max * s < 1.0 {
        s *= 2.0;
    }
    if first < 0.0 {
        -s
    } else {
        s
    }
}

impl ZonoidLpProblem {
    pub fn new(cloud: &PointCloud, x: &[f64]) -> Result<Self> {
        let (n, d) = (cloud.n(), cloud.d());
        if x.len() != d {
            return Err(DepthError::DimensionMismatch {
                expected: d,
                got: x.len(),
            });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(DepthError::NonFinite("query point"));
        }
        let mut raw = vec![0.0; d * n];
        for (j, p) in cloud.rows().enumerate() {
            for k in 0..d {
                raw[k * n + j] = p[k] - x[k];
            }
        }
        if raw.iter().any(|v| !v.is_finite()) {
            return Err(DepthError::NonFinite("centred point cloud"));
        }
        let mut a = raw.clone();
        let mut row_scale = Vec::with_capacity(d);
        for row in a.chunks_exact_mut(n) {
            let s = canonical_scale(row);
            for v in row.iter_mut() {
                *v *= s;
            }
            row_scale.push(s);
        }
        Ok(Self {
            a,
            row_scale,
            raw,
            n,
            d,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Default iteration cap `50 (n + d)`.
    pub fn default_iteration_cap(&self) -> usize {
        50 * (self.n + self.d)
    }

    fn column(&self, j: usize) -> Vec<f64> {
        if j < self.n {
            (0..self.d).map(|k| self.a[k * self.n + j]).collect()
        } else {
            let mut e = vec![0.0; self.d];
            e[j - self.n] = 1.0;
            e
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ZonoidLpOutcome {
    /// `x` is a convex combination of the points; weights minimise the
    /// largest weight.
    Feasible(ZonoidCertificate),
    /// `x` lies outside the convex hull: `separator^T (X_i - x) >= margin > 0`
    /// for every point, with `separator` of unit length.
    Infeasible { separator: Vec<f64>, margin: f64 },
}

impl ZonoidLpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, ZonoidLpOutcome::Feasible(_))
    }
}

pub fn solve_zonoid_lp(p: &ZonoidLpProblem) -> Result<ZonoidLpOutcome> {
    solve_zonoid_lp_with_cap(p, p.default_iteration_cap())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Basic(usize),
    Lower,
    Upper,
}

pub fn solve_zonoid_lp_with_cap(p: &ZonoidLpProblem, cap: usize) -> Result<ZonoidLpOutcome> {
    let (n, m) = (p.n, p.d);
    let cols = n + m;
    let upper = |j: usize| if j < n { 1.0 } else { 0.0 };
    let cost = |j: usize| if j < n { 1.0 } else { 0.0 };

    // tableau B^{-1} [A | I], starting from the artificial basis
    let mut t = vec![0.0; m * cols];
    for k in 0..m {
        t[k * cols..k * cols + n].copy_from_slice(&p.a[k * n..(k + 1) * n]);
        t[k * cols + n + k] = 1.0;
    }
    let mut basis: Vec<usize> = (n..cols).collect();
    let mut state: Vec<State> = (0..cols)
        .map(|j| {
            if j < n {
                State::Lower
            } else {
                State::Basic(j - n)
            }
        })
        .collect();
    let mut beta = vec![0.0f64; m];
    let mut reduced: Vec<f64> = (0..cols).map(cost).collect();

    let mut iterations = 0;
    loop {
        // Bland: the lowest-index improving column enters
        let entering = (0..n).find_map(|j| match state[j] {
            State::Lower if reduced[j] > REDUCED_COST_TOL => Some((j, 1.0)),
            State::Upper if reduced[j] < -REDUCED_COST_TOL => Some((j, -1.0)),
            _ => None,
        });
        let Some((q, dir)) = entering else {
            break;
        };
        if iterations == cap {
            return Err(DepthError::SolverFailure { iterations });
        }
        iterations += 1;

        // ratio test; the bound flip of the entering column competes with index q
        let mut step = upper(q);
        let mut leave: Option<(usize, usize, bool)> = None;
        let mut leave_var = q;
        for r in 0..m {
            let alpha = t[r * cols + q];
            if alpha.abs() <= PIVOT_TOL {
                continue;
            }
            let delta = -alpha * dir;
            let b = basis[r];
            let (limit, to_upper) = if delta < 0.0 {
                (beta[r].max(0.0) / -delta, false)
            } else {
                ((upper(b) - beta[r]).max(0.0) / delta, true)
            };
            if limit < step || (limit == step && b < leave_var) {
                step = limit;
                leave = Some((r, b, to_upper));
                leave_var = b;
            }
        }

        for r in 0..m {
            beta[r] -= t[r * cols + q] * dir * step;
        }
        match leave {
            None => {
                state[q] = if dir > 0.0 {
                    State::Upper
                } else {
                    State::Lower
                };
            }
            Some((r, b, to_upper)) => {
                let start = if dir > 0.0 { 0.0 } else { 1.0 };
                beta[r] = start + dir * step;
                state[b] = if to_upper { State::Upper } else { State::Lower };
                state[q] = State::Basic(r);
                basis[r] = q;
                pivot(&mut t, &mut reduced, cols, r, q);
            }
        }
    }

    // recompute basic values and duals from the unmodified scaled data
    let mut bmat = vec![0.0; m * m];
    for (r, &b) in basis.iter().enumerate() {
        let col = p.column(b);
        for k in 0..m {
            bmat[k * m + r] = col[k];
        }
    }
    let mut mu: Vec<f64> = (0..n)
        .map(|j| if state[j] == State::Upper { 1.0 } else { 0.0 })
        .collect();
    let mut rhs = vec![0.0; m];
    for j in 0..n {
        if mu[j] != 0.0 {
            for k in 0..m {
                rhs[k] -= p.a[k * n + j];
            }
        }
    }
    let xb = solve_square(&bmat, &rhs, m).ok_or(DepthError::SolverFailure { iterations })?;
    for (r, &b) in basis.iter().enumerate() {
        if b < n {
            mu[b] = xb[r].clamp(0.0, 1.0);
        }
    }
    let s: f64 = mu.iter().sum();

    if s < 0.5 {
        let mut bt = vec![0.0; m * m];
        for a in 0..m {
            for b in 0..m {
                bt[a * m + b] = bmat[b * m + a];
            }
        }
        let cb: Vec<f64> = basis.iter().map(|&b| cost(b)).collect();
        let y = solve_square(&bt, &cb, m).ok_or(DepthError::SolverFailure { iterations })?;
        let w: Vec<f64> = y.iter().zip(&p.row_scale).map(|(a, b)| a * b).collect();
        let norm = w.iter().map(|v| v * v).sum::<f64>().sqrt();
        let separator: Vec<f64> = w.iter().map(|v| v / norm).collect();
        let margin = (0..n)
            .map(|j| (0..m).map(|k| separator[k] * p.raw[k * n + j]).sum::<f64>())
            .fold(f64::INFINITY, f64::min);
        return Ok(ZonoidLpOutcome::Infeasible { separator, margin });
    }

    let lambda: Vec<f64> = mu.iter().map(|v| v / s).collect();
    let t_star = lambda.iter().copied().fold(0.0, f64::max);
    Ok(ZonoidLpOutcome::Feasible(ZonoidCertificate {
        lambda,
        t_star,
    }))
}

fn pivot(t: &mut [f64], reduced: &mut [f64], cols: usize, r: usize, q: usize) {
    let inv = 1.0 / t[r * cols + q];
    for v in &mut t[r * cols..(r + 1) * cols] {
        *v *= inv;
    }
    t[r * cols + q] = 1.0;
    let (before, rest) = t.split_at_mut(r * cols);
    let (prow, after) = rest.split_at_mut(cols);
    for row in before
        .chunks_exact_mut(cols)
        .chain(after.chunks_exact_mut(cols))
    {
        let f = row[q];
        if f != 0.0 {
            for (v, pv) in row.iter_mut().zip(prow.iter()) {
                *v -= f * pv;
            }
            row[q] = 0.0;
        }
    }
    let f = reduced[q];
    for (v, pv) in reduced.iter_mut().zip(prow.iter()) {
        *v -= f * pv;
    }
    reduced[q] = 0.0;
}
