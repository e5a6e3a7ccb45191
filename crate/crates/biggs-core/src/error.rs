use num_bigint::BigUint;

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value is outside the operation's domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The request is well-formed but exceeds a hard resource limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Two permutations of different degrees were combined.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    /// A generator violates a structural precondition (e.g. not an involution).
    #[error("generator contract violated: {0}")]
    Contract(String),

    /// Factorization ran out of budget; the unfactored cofactor is reported.
    #[error("partial factorization: unfactored cofactor {0}")]
    PartialFactorization(BigUint),

    /// A property that is supposed to hold unconditionally failed; this always
    /// indicates a bug, never bad input.
    #[error("internal contradiction: {0}")]
    Contradiction(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
