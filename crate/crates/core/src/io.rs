//! Synthetic data, CSV datasets and surface JSON files.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::data::{PointCloud, RegressionDataset};
use crate::error::{DepthError, Result};
use crate::result::{Method, Notion};
use crate::surface::{ContourSet, DepthSurface, GridSpec, Polyline};

/// Simple linear model `y = beta0 + beta1 x + e` with `x ~ N(0, 1)` and
/// `e ~ N(0, noise_var)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SyntheticConfig {
    pub n: usize,
    pub beta0: f64,
    pub beta1: f64,
    /// Variance of the error term.
    pub noise_var: f64,
    pub seed: u64,
}

/// Seed of the reference synthetic dataset.
pub const DEFAULT_SEED: u64 = 20;

impl Default for SyntheticConfig {
    /// 300 observations from `y = 0.5 + 0.5 x + e`, error variance 0.2.
    fn default() -> Self {
        Self {
            n: 300,
            beta0: 0.5,
            beta1: 0.5,
            noise_var: 0.2,
            seed: DEFAULT_SEED,
        }
    }
}

/// Draws the dataset from a ChaCha8 stream seeded with `c.seed`. Standard
/// normals come from `rand_distr::StandardNormal` (ziggurat); for each
/// observation `x_i` is drawn first, then the error.
pub fn gen_synthetic(c: &SyntheticConfig) -> Result<RegressionDataset> {
    if c.n == 0 {
        return Err(DepthError::InvalidArgument("n must be at least 1".into()));
    }
    if !(c.noise_var >= 0.0 && c.noise_var.is_finite()) {
        return Err(DepthError::InvalidArgument(format!(
            "noise variance must be finite and non-negative, got {}",
            c.noise_var
        )));
    }
    if !(c.beta0.is_finite() && c.beta1.is_finite()) {
        return Err(DepthError::NonFinite("true coefficients"));
    }
    let sd = c.noise_var.sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let mut x = Vec::with_capacity(c.n);
    let mut y = Vec::with_capacity(c.n);
    for _ in 0..c.n {
        let xi: f64 = rng.sample(StandardNormal);
        let e: f64 = rng.sample(StandardNormal);
        x.push(xi);
        y.push(c.beta0 + c.beta1 * xi + sd * e);
    }
    RegressionDataset::from_xy(&x, &y)
}

/// Contents of a CSV file: with a trailing `y` column a regression dataset,
/// otherwise a point cloud.
#[derive(Debug, Clone, PartialEq)]
pub enum CsvData {
    Regression(RegressionDataset),
    Points(PointCloud),
}

fn parse_err(path: &Path, line: u64, message: impl Into<String>) -> DepthError {
    DepthError::Parse {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

/// Reads a comma-separated file with header `x1,...,xd,y` or `x1,...,xd`.
pub fn read_csv(path: impl AsRef<Path>) -> Result<CsvData> {
    let path = path.as_ref();
    let text = fs::read(path)?;
    // csv counts lines inconsistently under CRLF, so derive them from byte offsets
    let line_at = |pos: Option<&csv::Position>| {
        pos.map_or(0, |p| {
            let mut end = (p.byte() as usize).min(text.len());
            while end < text.len() && matches!(text[end], b'\r' | b'\n') {
                end += 1;
            }
            1 + text[..end].iter().filter(|&&b| b == b'\n').count() as u64
        })
    };
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_slice());
    let header: Vec<String> = rdr
        .headers()
        .map_err(|e| parse_err(path, 1, e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();
    let has_y = header.last().map(String::as_str) == Some("y");
    let d = if has_y {
        header.len() - 1
    } else {
        header.len()
    };
    let expected: Vec<String> = (1..=d).map(|k| format!("x{k}")).collect();
    if d == 0 || header[..d] != expected[..] {
        return Err(parse_err(
            path,
            1,
            format!("header must be x1,...,xd[,y], got '{}'", header.join(",")),
        ));
    }
    let width = header.len();
    let mut values = Vec::new();
    let mut rows = 0;
    for rec in rdr.records() {
        let rec = rec.map_err(|e| parse_err(path, line_at(e.position()), e.to_string()))?;
        let line = line_at(rec.position());
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        if rec.len() != width {
            return Err(parse_err(
                path,
                line,
                format!("expected {width} fields, found {}", rec.len()),
            ));
        }
        for field in rec.iter() {
            let v: f64 = field
                .parse()
                .map_err(|_| parse_err(path, line, format!("'{field}' is not a number")))?;
            if !v.is_finite() {
                return Err(parse_err(path, line, format!("'{field}' is not finite")));
            }
            values.push(v);
        }
        rows += 1;
    }
    if rows == 0 {
        return Err(parse_err(path, 1, "no data rows"));
    }
    if has_y {
        let mut x = Vec::with_capacity(rows * d);
        let mut y = Vec::with_capacity(rows);
        for row in values.chunks_exact(width) {
            x.extend_from_slice(&row[..d]);
            y.push(row[d]);
        }
        Ok(CsvData::Regression(RegressionDataset::new(x, y, d)?))
    } else {
        Ok(CsvData::Points(PointCloud::new(values, rows, d)?))
    }
}

pub fn read_dataset(path: impl AsRef<Path>) -> Result<RegressionDataset> {
    let path = path.as_ref();
    match read_csv(path)? {
        CsvData::Regression(ds) => Ok(ds),
        CsvData::Points(_) => Err(parse_err(path, 1, "expected a 'y' column")),
    }
}

pub fn read_points(path: impl AsRef<Path>) -> Result<PointCloud> {
    let path = path.as_ref();
    match read_csv(path)? {
        CsvData::Points(c) => Ok(c),
        CsvData::Regression(_) => Err(parse_err(path, 1, "expected covariate columns only")),
    }
}

fn header(d: usize, with_y: bool) -> Vec<String> {
    let mut h: Vec<String> = (1..=d).map(|k| format!("x{k}")).collect();
    if with_y {
        h.push("y".into());
    }
    h
}

fn write_rows<'a>(
    path: &Path,
    head: Vec<String>,
    rows: impl Iterator<Item = Vec<f64>> + 'a,
) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| DepthError::Io(e.into()))?;
    w.write_record(&head)
        .map_err(|e| DepthError::Io(e.into()))?;
    for row in rows {
        // Debug formatting of f64 is the shortest string that parses back exactly
        w.write_record(row.iter().map(|v| format!("{v:?}")))
            .map_err(|e| DepthError::Io(e.into()))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `x1,...,xd,y` with round-trip float formatting.
pub fn write_csv(path: impl AsRef<Path>, ds: &RegressionDataset) -> Result<()> {
    let rows = (0..ds.n()).map(|i| {
        let mut r = ds.x_row(i).to_vec();
        r.push(ds.y()[i]);
        r
    });
    write_rows(path.as_ref(), header(ds.d(), true), rows)
}

pub fn write_points_csv(path: impl AsRef<Path>, cloud: &PointCloud) -> Result<()> {
    write_rows(
        path.as_ref(),
        header(cloud.d(), false),
        cloud.rows().map(<[f64]>::to_vec),
    )
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    beta0: (f64, f64, usize),
    beta1: (f64, f64, usize),
}

#[derive(Serialize, Deserialize)]
struct SurfaceJson {
    notion: Notion,
    method: String,
    grid: GridJson,
    values: Vec<f64>,
    levels: Vec<f64>,
    contours: Vec<Vec<Polyline>>,
}

fn method_from_str(s: &str) -> Result<Method> {
    [
        Method::Exact1d,
        Method::Exact2d,
        Method::Bruteforce,
        Method::Sampled,
        Method::Grid,
        Method::Closedform,
        Method::Lp,
    ]
    .into_iter()
    .find(|m| m.as_str() == s)
    .ok_or_else(|| DepthError::InvalidArgument(format!("unknown method '{s}'")))
}

/// Canonical JSON text of a surface and its contours: `contours[k]` lists
/// the polylines of `levels[k]`, each a list of `[beta0, beta1]` pairs.
pub fn surface_json(s: &DepthSurface, contours: &ContourSet) -> Result<String> {
    let doc = SurfaceJson {
        notion: s.notion,
        method: s.method.as_str().to_string(),
        grid: GridJson {
            beta0: s.grid.beta0,
            beta1: s.grid.beta1,
        },
        values: s.values.clone(),
        levels: contours.levels.clone(),
        contours: contours.polylines.clone(),
    };
    let mut text = serde_json::to_string(&doc)?;
    text.push('\n');
    Ok(text)
}

pub fn write_surface_json(
    s: &DepthSurface,
    contours: &ContourSet,
    path: impl AsRef<Path>,
) -> Result<()> {
    fs::write(path, surface_json(s, contours)?)?;
    Ok(())
}

pub fn parse_surface_json(text: &str) -> Result<(DepthSurface, ContourSet)> {
    let doc: SurfaceJson = serde_json::from_str(text)
        .map_err(|e| DepthError::InvalidArgument(format!("malformed surface JSON: {e}")))?;
    if doc.levels.len() != doc.contours.len() {
        return Err(DepthError::InvalidShape(format!(
            "{} levels but {} contour groups",
            doc.levels.len(),
            doc.contours.len()
        )));
    }
    let grid = GridSpec::new(doc.grid.beta0, doc.grid.beta1)?;
    let surface = DepthSurface::new(doc.notion, method_from_str(&doc.method)?, grid, doc.values)?;
    Ok((
        surface,
        ContourSet {
            levels: doc.levels,
            polylines: doc.contours,
        },
    ))
}

pub fn read_surface_json(path: impl AsRef<Path>) -> Result<(DepthSurface, ContourSet)> {
    parse_surface_json(&fs::read_to_string(path)?)
}
