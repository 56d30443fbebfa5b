use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("colouring covers {got} vertices but the graph has {expected}")]
    ColouringLength { expected: usize, got: usize },

    #[error("vertex {vertex} is uncoloured (colours must be >= 1)")]
    Uncoloured { vertex: usize },

    #[error("vertex {vertex} has degree {degree}, exceeding the bound {delta}")]
    DegreeExceeded {
        vertex: usize,
        degree: usize,
        delta: usize,
    },

    #[error("path family exceeds the memory budget of {budget_bytes} bytes (ell = {ell})")]
    PathBudgetExceeded { budget_bytes: usize, ell: usize },

    #[error("path {path:?} is not in the directed family of the auxiliary graph")]
    NotInDirectedFamily { path: Vec<usize> },

    #[error("search budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("ranking failed verification on path {path:?} (shared colour {colour})")]
    VerificationFailed { path: Vec<usize>, colour: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
