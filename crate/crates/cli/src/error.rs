//! Error type carrying the exit-code split: usage and parse problems exit
//! with 2, domain errors (degenerate inputs, unsupported dimensions) with 1.

use assocform_core::contra::ContraError;
use assocform_core::exactla::LinAlgError;
use assocform_core::milnor::MilnorError;
use assocform_core::multipoly::MultiPolyError;
use assocform_core::scalars::ScalarError;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Malformed invocation or input text; exit code 2.
    Usage(String),
    /// The input violates a mathematical precondition; exit code 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ContraError> for CliError {
    fn from(e: ContraError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<MilnorError> for CliError {
    fn from(e: MilnorError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<MultiPolyError> for CliError {
    fn from(e: MultiPolyError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<LinAlgError> for CliError {
    fn from(e: LinAlgError) -> Self {
        CliError::Domain(e.to_string())
    }
}
