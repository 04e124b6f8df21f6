use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed design data: overlapping groups, out-of-range points,
    /// duplicated points in a block, and the like.
    #[error("structural error: {0}")]
    Structure(String),

    /// Parameters fail a necessary divisibility or inequality condition.
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    /// A generator cannot serve the requested parameters (e.g. an order
    /// that is neither prime nor tabulated, or too many squares).
    #[error("unavailable: {0}")]
    Unavailable(String),

    /// A construction operator was called with mismatched parameters.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An ingredient request could not be satisfied.
    #[error("ingredient resolution failed: {0}")]
    Resolution(String),

    /// Self-certification failed: a construction produced an object that
    /// does not verify. Always a bug, never silently ignored.
    #[error("certification failed: {0}")]
    Certification(String),

    /// The congruence planner hit a residue with no modular inverse.
    #[error("plan infeasible modulo {modulus}: {detail}")]
    PlanInfeasible { modulus: u64, detail: String },

    /// Search instance exceeds the configured desk-scale point cap.
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    #[error("unknown catalog key: {0}")]
    UnknownKey(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
