use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the region where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s = 1: {0}")]
    Pole(String),

    /// A computation would exceed a configured memory or work budget.
    #[error("resource limit: {what} needs {needed}, budget is {budget}")]
    Resource {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    /// The requested tolerance cannot be met within the truncation caps.
    #[error("tolerance {requested:e} unattainable: best achievable is {achievable:e} ({detail})")]
    Tolerance {
        requested: f64,
        achievable: f64,
        detail: String,
    },

    /// Argument beyond the range covered by a precomputed table.
    #[error("coverage error: {0}")]
    Coverage(String),

    #[error("contour error: {0}")]
    Contour(String),

    #[error("refinement failed after {iterations} iterations: {detail}")]
    Refinement { iterations: usize, detail: String },

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("malformed checkpoint line {line}: {detail}")]
    Checkpoint { line: usize, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
