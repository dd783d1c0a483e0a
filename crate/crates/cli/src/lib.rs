//! Library half of the `gradex` command: config loading, analysis reports,
//! the exhaustive census and the Leavitt matrix check.

pub mod census;
pub mod config;
pub mod error;
pub mod leavitt_verify;
pub mod report;

pub use error::{CliError, Result};

/// Process exit code for errors; answers use 0 (yes), 1 (no), 2 (unknown).
pub fn error_exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) | CliError::Config { .. } => 3,
        CliError::Algebra(gradex_core::Error::Parse { .. }) => 3,
        CliError::Algebra(gradex_core::Error::CertificateFailed(_)) => 5,
        CliError::Algebra(_) => 4,
        CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 6,
    }
}
