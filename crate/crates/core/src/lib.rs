//! Location and regression depth functions.
//!
//! Five notions of depth (halfspace, simplicial, projection, Rayleigh and
//! zonoid) are available for a point relative to a point cloud, and for a
//! coefficient vector of a linear model relative to a regression dataset.
//! Regression depth is evaluated as the location depth of the origin with
//! respect to the cloud `r_i(theta) (1, x_i)`.
//!
//! On top of the depth functions sit least squares and deepest-fit
//! estimators, depth surfaces over coefficient grids with contour
//! extraction, and CSV/JSON input and output for the `regdepth` binary.

pub mod cli;
pub mod data;
pub mod directions;
pub mod error;
pub mod estimate;
mod geom;
pub mod io;
pub mod linalg;
pub mod location;
pub mod lp;
pub mod regression;
pub mod result;
pub mod stats;
pub mod surface;
pub mod transform;

pub use data::{Coefficient, Direction, PointCloud, RegressionDataset};
pub use directions::{MethodKind, MethodSpec};
pub use error::{DepthError, Result};
pub use result::{DepthResult, HyperplaneWitness, Method, Notion, Witness, ZonoidCertificate};
