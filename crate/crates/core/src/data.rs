//! Immutable sample containers and the coefficient type.

use serde::{Deserialize, Serialize};

use crate::error::{DepthError, Result};

const UNIT_NORM_TOL: f64 = 1e-12;

fn check_finite(values: &[f64], what: &'static str) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(DepthError::NonFinite(what))
    }
}

/// An `n x d` sample of points, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    data: Vec<f64>,
    n: usize,
    d: usize,
}

impl PointCloud {
    pub fn new(data: Vec<f64>, n: usize, d: usize) -> Result<Self> {
        if n == 0 {
            return Err(DepthError::Empty("point cloud"));
        }
        if d == 0 {
            return Err(DepthError::InvalidShape(
                "dimension must be at least 1".into(),
            ));
        }
        if data.len() != n * d {
            return Err(DepthError::InvalidShape(format!(
                "{} values cannot form a {n}x{d} cloud",
                data.len()
            )));
        }
        check_finite(&data, "point cloud")?;
        Ok(Self { data, n, d })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let first = rows.first().ok_or(DepthError::Empty("point cloud"))?;
        let d = first.as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * d);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != d {
                return Err(DepthError::InvalidShape(format!(
                    "row {i} has {} entries, expected {d}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Self::new(data, rows.len(), d)
    }

    /// One-dimensional cloud.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        Self::new(values.to_vec(), values.len(), 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[f64]> + Clone + '_ {
        self.data.chunks_exact(self.d)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Largest Euclidean norm of any point.
    pub fn radius(&self) -> f64 {
        self.rows()
            .map(|r| r.iter().map(|v| v * v).sum::<f64>().sqrt())
            .fold(0.0, f64::max)
    }

    /// Image of the cloud under `p -> A p + b` with `A` given row-major (`d x d`).
    pub fn affine_image(&self, a: &[f64], b: &[f64]) -> Result<Self> {
        let d = self.d;
        if a.len() != d * d || b.len() != d {
            return Err(DepthError::DimensionMismatch {
                expected: d,
                got: b.len(),
            });
        }
        let mut data = Vec::with_capacity(self.data.len());
        for row in self.rows() {
            data.extend(affine_apply(a, b, row));
        }
        Self::new(data, self.n, d)
    }
}

pub(crate) fn affine_apply(a: &[f64], b: &[f64], p: &[f64]) -> Vec<f64> {
    let d = p.len();
    (0..d)
        .map(|r| {
            let mut acc = 0.0;
            for c in 0..d {
                acc += a[r * d + c] * p[c];
            }
            acc + b[r]
        })
        .collect()
}

/// A unit vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Direction(Vec<f64>);

impl Direction {
    /// Accepts `u` only if it already has unit length.
    pub fn new(u: Vec<f64>) -> Result<Self> {
        check_finite(&u, "direction")?;
        let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
        if u.is_empty() || (norm - 1.0).abs() > UNIT_NORM_TOL {
            return Err(DepthError::InvalidArgument(format!(
                "direction must have unit norm, got {norm}"
            )));
        }
        Ok(Self(u))
    }

    /// Rescales `u` to unit length.
    pub fn normalize(u: &[f64]) -> Result<Self> {
        check_finite(u, "direction")?;
        let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(DepthError::InvalidArgument(
                "cannot normalize a zero vector".into(),
            ));
        }
        Ok(Self(u.iter().map(|v| v / norm).collect()))
    }

    pub fn from_angle(angle: f64) -> Self {
        Self(vec![angle.cos(), angle.sin()])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn dot(&self, p: &[f64]) -> f64 {
        self.0.iter().zip(p).map(|(a, b)| a * b).sum()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|v| -v).collect())
    }
}

/// Covariates `x` (`n x d`, row-major) paired with responses `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionDataset {
    x: Vec<f64>,
    y: Vec<f64>,
    d: usize,
}

impl RegressionDataset {
    pub fn new(x: Vec<f64>, y: Vec<f64>, d: usize) -> Result<Self> {
        let n = y.len();
        if n == 0 {
            return Err(DepthError::Empty("regression dataset"));
        }
        if d == 0 {
            return Err(DepthError::InvalidShape(
                "covariate dimension must be at least 1".into(),
            ));
        }
        if x.len() != n * d {
            return Err(DepthError::InvalidShape(format!(
                "{} covariate values do not align with {n} responses in dimension {d}",
                x.len()
            )));
        }
        check_finite(&x, "covariates")?;
        check_finite(&y, "responses")?;
        Ok(Self { x, y, d })
    }

    pub fn from_rows<R: AsRef<[f64]>>(x_rows: &[R], y: &[f64]) -> Result<Self> {
        if x_rows.len() != y.len() {
            return Err(DepthError::InvalidShape(format!(
                "{} covariate rows but {} responses",
                x_rows.len(),
                y.len()
            )));
        }
        let cloud = PointCloud::from_rows(x_rows)?;
        Self::new(cloud.data, y.to_vec(), cloud.d)
    }

    /// Simple regression (`d = 1`).
    pub fn from_xy(x: &[f64], y: &[f64]) -> Result<Self> {
        if x.len() != y.len() {
            return Err(DepthError::InvalidShape(format!(
                "{} covariates but {} responses",
                x.len(),
                y.len()
            )));
        }
        Self::new(x.to_vec(), y.to_vec(), 1)
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn x_row(&self, i: usize) -> &[f64] {
        &self.x[i * self.d..(i + 1) * self.d]
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    /// Same covariates with responses multiplied by `b`.
    pub fn scale_response(&self, b: f64) -> Result<Self> {
        Self::new(
            self.x.clone(),
            self.y.iter().map(|v| b * v).collect(),
            self.d,
        )
    }

    /// Covariates mapped through `x -> A x` (`A` row-major `d x d`).
    pub fn transform_covariates(&self, a: &[f64]) -> Result<Self> {
        let zero = vec![0.0; self.d];
        if a.len() != self.d * self.d {
            return Err(DepthError::DimensionMismatch {
                expected: self.d * self.d,
                got: a.len(),
            });
        }
        let mut x = Vec::with_capacity(self.x.len());
        for i in 0..self.n() {
            x.extend(affine_apply(a, &zero, self.x_row(i)));
        }
        Self::new(x, self.y.clone(), self.d)
    }
}

/// Regression coefficient `(beta0, beta1)` with `beta1` of length `d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coefficient(Vec<f64>);

impl Coefficient {
    pub fn new(beta0: f64, beta1: &[f64]) -> Result<Self> {
        let mut v = Vec::with_capacity(beta1.len() + 1);
        v.push(beta0);
        v.extend_from_slice(beta1);
        Self::from_slice(&v)
    }

    /// Full parameter vector `(beta0, beta1...)`; needs at least two entries.
    pub fn from_slice(values: &[f64]) -> Result<Self> {
        if values.len() < 2 {
            return Err(DepthError::InvalidShape(
                "a coefficient needs an intercept and at least one slope".into(),
            ));
        }
        check_finite(values, "coefficient")?;
        Ok(Self(values.to_vec()))
    }

    pub fn beta0(&self) -> f64 {
        self.0[0]
    }

    pub fn beta1(&self) -> &[f64] {
        &self.0[1..]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// Parameter dimension `d + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn scaled(&self, b: f64) -> Self {
        Self(self.0.iter().map(|v| b * v).collect())
    }
}
