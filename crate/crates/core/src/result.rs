use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::data::Direction;
use crate::error::DepthError;

/// The five depth notions, shared by the location and regression settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Notion {
    Halfspace,
    Simplicial,
    Projection,
    Rayleigh,
    Zonoid,
}

impl Notion {
    pub const ALL: [Notion; 5] = [
        Notion::Halfspace,
        Notion::Simplicial,
        Notion::Projection,
        Notion::Rayleigh,
        Notion::Zonoid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Notion::Halfspace => "halfspace",
            Notion::Simplicial => "simplicial",
            Notion::Projection => "projection",
            Notion::Rayleigh => "rayleigh",
            Notion::Zonoid => "zonoid",
        }
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Notion {
    type Err = DepthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Notion::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| DepthError::InvalidArgument(format!("unknown depth notion '{s}'")))
    }
}

/// Algorithm that actually produced a depth value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact1d,
    Exact2d,
    Bruteforce,
    Sampled,
    /// Deterministic angular grid with local refinement.
    Grid,
    Closedform,
    Lp,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact1d => "exact1d",
            Method::Exact2d => "exact2d",
            Method::Bruteforce => "bruteforce",
            Method::Sampled => "sampled",
            Method::Grid => "grid",
            Method::Closedform => "closedform",
            Method::Lp => "lp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(v0, v1)` of the direct regression-depth form: the count is taken over
/// the sign of `r_i (v1^T x_i - v0)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HyperplaneWitness {
    pub v0: f64,
    pub v1: Direction,
}

/// Optimal zonoid weights: `sum lambda_i X_i = x`, `sum lambda_i = 1`,
/// `t_star = max lambda_i` minimal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZonoidCertificate {
    pub lambda: Vec<f64>,
    pub t_star: f64,
}

impl ZonoidCertificate {
    /// Checks sign, normalisation and the `t_star` bound.
    pub fn is_consistent(&self) -> bool {
        let sum: f64 = self.lambda.iter().sum();
        let max = self
            .lambda
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        self.lambda.iter().all(|&l| l >= -1e-12)
            && (sum - 1.0).abs() <= 1e-9
            && max <= self.t_star + 1e-12
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Direction { direction: Direction },
    Hyperplane(HyperplaneWitness),
    Zonoid(ZonoidCertificate),
}

/// Provenance of a direction-set approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingInfo {
    pub directions: usize,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepthResult {
    pub value: f64,
    pub notion: Notion,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sampling: Option<SamplingInfo>,
}

impl DepthResult {
    pub(crate) fn new(value: f64, notion: Notion, method: Method) -> Self {
        debug_assert!((0.0..=1.0).contains(&value), "depth {value} out of range");
        Self {
            value,
            notion,
            method,
            witness: None,
            sampling: None,
        }
    }

    pub(crate) fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub(crate) fn with_direction(self, u: Direction) -> Self {
        self.with_witness(Witness::Direction { direction: u })
    }

    pub(crate) fn with_sampling(mut self, sampling: Option<SamplingInfo>) -> Self {
        self.sampling = sampling;
        self
    }

    pub fn direction(&self) -> Option<&Direction> {
        match &self.witness {
            Some(Witness::Direction { direction }) => Some(direction),
            _ => None,
        }
    }

    pub fn zonoid_certificate(&self) -> Option<&ZonoidCertificate> {
        match &self.witness {
            Some(Witness::Zonoid(c)) => Some(c),
            _ => None,
        }
    }
}

/// `1 / (1 + O)`, with infinite outlyingness mapping to depth 0.
pub(crate) fn depth_from_outlyingness(o: f64) -> f64 {
    if o.is_infinite() {
        0.0
    } else {
        1.0 / (1.0 + o)
    }
}
