use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operation undefined on its input (gcd of two zeros, multiplicity in the zero polynomial).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally invalid input (bad variable ordering, unknown variable, malformed term).
    #[error("invalid input: {0}")]
    Input(String),

    /// Parameter outside the documented validity range.
    #[error("parameter out of range: {0}")]
    Param(String),

    /// A recurrence whose leading coefficient vanishes at step `n`.
    #[error("singular recurrence: leading coefficient vanishes at n = {n}")]
    SingularRecurrence { n: i64 },

    /// Invariant violated inside the library; never expected on catalog inputs.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
