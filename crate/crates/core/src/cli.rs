//! Command-line interface of the `regdepth` binary.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::data::Coefficient;
use crate::directions::{MethodKind, MethodSpec, DEFAULT_DIRECTIONS};
use crate::error::{DepthError, Result};
use crate::estimate::{deepest_fit, ols, SearchSpec};
use crate::io::{
    gen_synthetic, read_dataset, read_points, surface_json, write_csv, write_surface_json,
    SyntheticConfig, DEFAULT_SEED,
};
use crate::location;
use crate::regression::rdepth;
use crate::result::Notion;
use crate::surface::{contour_lines, eval_surface, ray_monotonicity, GridSpec, RaySpec};

#[derive(Debug, Parser)]
#[command(
    name = "regdepth",
    version,
    about = "Location and regression depth tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a simple linear regression dataset as CSV.
    Gen(GenArgs),
    /// Location depth of a point in a CSV point cloud.
    Depth(DepthArgs),
    /// Regression depth of a coefficient vector.
    Rdepth(RdepthArgs),
    /// Deepest fit by coarse-to-fine grid search.
    Fit(FitArgs),
    /// Depth surface over a coefficient grid, with contour lines.
    Surface(SurfaceArgs),
    /// Diagnostics.
    #[command(subcommand)]
    Diagnose(Diagnose),
}

#[derive(Debug, Subcommand)]
enum Diagnose {
    /// Report depth increases along seeded rays from a centre coefficient.
    Rays(RaysArgs),
}

#[derive(Debug, Args)]
struct MethodArgs {
    /// auto, exact1d, exact2d, bruteforce or sampled.
    #[arg(long, default_value = "auto")]
    method: String,
    /// Number of directions (sampled) or planar grid angles.
    #[arg(long, default_value_t = DEFAULT_DIRECTIONS)]
    dirs: usize,
    /// Seed for sampled directions.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Skip local refinement of the best planar direction.
    #[arg(long)]
    no_refine: bool,
}

impl MethodArgs {
    fn spec(&self) -> Result<MethodSpec> {
        let kind: MethodKind = self.method.parse()?;
        let spec = MethodSpec {
            kind,
            num_directions: self.dirs,
            seed: self.seed,
            refine: !self.no_refine,
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value_t = 300)]
    n: usize,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    beta0: f64,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    beta1: f64,
    /// Variance of the normal error term.
    #[arg(long, default_value_t = 0.2)]
    noise_var: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output file; CSV goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DepthArgs {
    #[arg(long)]
    notion: Notion,
    /// CSV with header x1,...,xd.
    #[arg(long)]
    data: PathBuf,
    /// Comma-separated coordinates.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[command(flatten)]
    method: MethodArgs,
}

#[derive(Debug, Args)]
struct RdepthArgs {
    #[arg(long)]
    notion: Notion,
    /// CSV with header x1,...,xd,y.
    #[arg(long)]
    data: PathBuf,
    /// Comma-separated `beta0,beta1,...`, or `ols` for the least squares fit.
    #[arg(long, allow_hyphen_values = true)]
    theta: String,
    #[command(flatten)]
    method: MethodArgs,
}

#[derive(Debug, Args)]
struct FitArgs {
    #[arg(long)]
    notion: Notion,
    #[arg(long)]
    data: PathBuf,
    /// Search box `lo0,hi0,lo1,hi1`.
    #[arg(long = "box", default_value = "0,1,0,1", allow_hyphen_values = true)]
    search_box: String,
    /// Grid points per axis.
    #[arg(long, default_value_t = 41)]
    coarse: usize,
    /// Refinement levels.
    #[arg(long, default_value_t = 3)]
    refine: usize,
    #[command(flatten)]
    method: MethodArgs,
}

#[derive(Debug, Args)]
struct SurfaceArgs {
    #[arg(long)]
    notion: Notion,
    #[arg(long)]
    data: PathBuf,
    /// `lo0,hi0,n0,lo1,hi1,n1`; defaults to the unit square with 101 nodes
    /// per axis (41 for simplicial depth).
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Comma-separated ascending contour levels.
    #[arg(long, default_value = "")]
    levels: String,
    /// Output file; JSON goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    method: MethodArgs,
}

#[derive(Debug, Args)]
struct RaysArgs {
    #[arg(long)]
    notion: Notion,
    #[arg(long)]
    data: PathBuf,
    /// Comma-separated centre coefficient, or `ols`.
    #[arg(long, default_value = "ols", allow_hyphen_values = true)]
    center: String,
    #[arg(long, default_value_t = 16)]
    rays: usize,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    #[arg(long, default_value_t = 50)]
    steps: usize,
    /// Seed for the ray directions.
    #[arg(long = "ray-seed", default_value_t = 0)]
    ray_seed: u64,
    /// Increases up to this size are ignored.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[command(flatten)]
    method: MethodArgs,
}

fn parse_list(what: &str, s: &str) -> Result<Vec<f64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| {
                    DepthError::InvalidArgument(format!("{what}: '{t}' is not a finite number"))
                })
        })
        .collect()
}

fn parse_count(what: &str, v: f64) -> Result<usize> {
    if v.fract() == 0.0 && v >= 0.0 && v <= u32::MAX as f64 {
        Ok(v as usize)
    } else {
        Err(DepthError::InvalidArgument(format!(
            "{what}: {v} is not a node count"
        )))
    }
}

fn coefficient(arg: &str, ds: &crate::data::RegressionDataset) -> Result<Coefficient> {
    if arg.trim() == "ols" {
        ols(ds)
    } else {
        Coefficient::from_slice(&parse_list("theta", arg)?)
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Gen(a) => {
            let ds = gen_synthetic(&SyntheticConfig {
                n: a.n,
                beta0: a.beta0,
                beta1: a.beta1,
                noise_var: a.noise_var,
                seed: a.seed,
            })?;
            match a.out {
                Some(path) => write_csv(path, &ds),
                None => {
                    writeln!(out, "x1,y")?;
                    for i in 0..ds.n() {
                        writeln!(out, "{:?},{:?}", ds.x()[i], ds.y()[i])?;
                    }
                    Ok(())
                }
            }
        }
        Command::Depth(a) => {
            let cloud = read_points(&a.data)?;
            let x = parse_list("point", &a.point)?;
            let r = location::depth(a.notion, &cloud, &x, &a.method.spec()?)?;
            emit(out, &r)
        }
        Command::Rdepth(a) => {
            let ds = read_dataset(&a.data)?;
            let theta = coefficient(&a.theta, &ds)?;
            emit(out, &rdepth(a.notion, &ds, &theta, &a.method.spec()?)?)
        }
        Command::Fit(a) => {
            let ds = read_dataset(&a.data)?;
            let b = parse_list("box", &a.search_box)?;
            if b.len() != 4 {
                return Err(DepthError::InvalidArgument(
                    "box needs four values lo0,hi0,lo1,hi1".into(),
                ));
            }
            let spec = SearchSpec::new(a.notion)
                .with_box([b[0], b[1]], [b[2], b[3]])
                .with_resolution(a.coarse, a.refine)
                .with_method(a.method.spec()?);
            emit(out, &deepest_fit(&ds, &spec)?)
        }
        Command::Surface(a) => {
            let ds = read_dataset(&a.data)?;
            let grid = match &a.grid {
                Some(g) => {
                    let v = parse_list("grid", g)?;
                    if v.len() != 6 {
                        return Err(DepthError::InvalidArgument(
                            "grid needs six values lo0,hi0,n0,lo1,hi1,n1".into(),
                        ));
                    }
                    GridSpec::new(
                        (v[0], v[1], parse_count("grid", v[2])?),
                        (v[3], v[4], parse_count("grid", v[5])?),
                    )?
                }
                None if a.notion == Notion::Simplicial => GridSpec::square(0.0, 1.0, 41)?,
                None => GridSpec::square(0.0, 1.0, 101)?,
            };
            let levels = parse_list("levels", &a.levels)?;
            let surface = eval_surface(&ds, a.notion, &a.method.spec()?, &grid)?;
            let contours = contour_lines(&surface, &levels)?;
            match a.out {
                Some(path) => write_surface_json(&surface, &contours, path),
                None => {
                    out.write_all(surface_json(&surface, &contours)?.as_bytes())?;
                    Ok(())
                }
            }
        }
        Command::Diagnose(Diagnose::Rays(a)) => {
            let ds = read_dataset(&a.data)?;
            let center = coefficient(&a.center, &ds)?;
            let spec = RaySpec {
                num_rays: a.rays,
                radius: a.radius,
                steps: a.steps,
                seed: a.ray_seed,
                tolerance: a.tol,
            };
            let report = ray_monotonicity(&ds, a.notion, &a.method.spec()?, &center, &spec)?;
            emit(out, &report)
        }
    }
}

/// Sizes the global thread pool from `REGDEPTH_THREADS` (unset or 0: all cores).
fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("REGDEPTH_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| {
        DepthError::InvalidArgument(format!("REGDEPTH_THREADS must be an integer, got '{v}'"))
    })?;
    // a pool that is already initialised keeps its size
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to stderr. Returns the process exit code: 0 on
/// success, 1 for usage and input errors, 2 for internal failures.
pub fn run_with_args<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match configure_threads().and_then(|_| run(cli, out)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}

/// Entry point of the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = run_with_args(args, &mut lock);
    let _ = lock.flush();
    code
}
