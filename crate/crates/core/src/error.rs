use thiserror::Error;

pub type Result<T> = std::result::Result<T, DepthError>;

#[derive(Debug, Error)]
pub enum DepthError {
    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("method {method} is not applicable: {reason}")]
    MethodMismatch { method: String, reason: String },

    #[error("too few observations: need at least {need}, got {got}")]
    TooFew { need: usize, got: usize },

    #[error(
        "covariance matrix is singular (smallest eigenvalue {min_eigenvalue:e}, trace {trace:e})"
    )]
    SingularCovariance { min_eigenvalue: f64, trace: f64 },

    #[error("design matrix is singular or ill-conditioned (condition number {condition:e})")]
    SingularDesign { condition: f64 },

    #[error("LP solver did not converge within {iterations} iterations")]
    SolverFailure { iterations: usize },

    #[error("cost guard: {evaluations} simplex evaluations exceed the limit of {limit}")]
    CostGuard { evaluations: u128, limit: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("at theta = ({beta0}, {beta1}): {source}")]
    AtNode {
        beta0: f64,
        beta1: f64,
        #[source]
        source: Box<DepthError>,
    },

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: String,
        line: u64,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl DepthError {
    /// Whether the failure originates inside the library rather than from
    /// user-supplied input.
    pub fn is_internal(&self) -> bool {
        match self {
            DepthError::SolverFailure { .. } | DepthError::Json(_) => true,
            DepthError::AtNode { source, .. } => source.is_internal(),
            _ => false,
        }
    }

    pub(crate) fn at_node(self, beta0: f64, beta1: f64) -> Self {
        DepthError::AtNode {
            beta0,
            beta1,
            source: Box::new(self),
        }
    }
}
