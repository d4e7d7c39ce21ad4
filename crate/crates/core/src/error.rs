use thiserror::Error;

/// Errors raised by the arithmetic, phase, signal and geometry routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    #[error("{value} is not coprime to the modulus {modulus}")]
    NotCoprime { value: u64, modulus: u64 },

    /// A floating-point oracle could not certify its own rounding.
    #[error("oracle residue too large: {0}")]
    OracleFailure(String),

    #[error("the zeta function has a pole at s = 1")]
    Pole,

    /// Exact integer arithmetic would overflow its fixed-width representation.
    #[error("exact arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
