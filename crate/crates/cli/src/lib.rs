//! Library side of the `arithphase` command: table and figure jobs that
//! write deterministic CSV.

pub mod figures;
pub mod table;

use thiserror::Error;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "ARITHPHASE_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments; exit status 2.
    #[error("{0}")]
    Usage(String),
    /// Failure while computing or writing; exit status 1.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Internal(_) => 1,
        }
    }
}

impl From<arithphase::Error> for CliError {
    fn from(e: arithphase::Error) -> Self {
        match e {
            arithphase::Error::Domain(_) | arithphase::Error::NotCoprime { .. } | arithphase::Error::Parse { .. } => {
                Self::Usage(e.to_string())
            }
            _ => Self::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::InvalidInput {
            Self::Usage(e.to_string())
        } else {
            Self::Internal(e.to_string())
        }
    }
}

/// Sizes the global worker pool from [`THREADS_ENV`] when it is set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Internal(e.to_string()))
}
