//! Errors of the front end and their exit codes.

use thiserror::Error;
use topzeta::error::{DiagramError, EngineError, FamilyError, GenericError, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: unreadable files, syntax errors, ideals not supported at
    /// the origin, out-of-range parameters.
    #[error("{0}")]
    Input(String),
    /// Inputs the engine does not handle, such as irrational centers.
    #[error("{0}")]
    Unsupported(String),
    /// A check failed or an internal invariant broke.
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(format!("parse error: {e}"))
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::NoGenerators
            | EngineError::AllZero
            | EngineError::SupportMissesOrigin { .. } => CliError::Input(e.to_string()),
            EngineError::CenterNotRational { .. } | EngineError::StepBudgetExceeded(_) => {
                CliError::Unsupported(e.to_string())
            }
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        match e {
            DiagramError::Json(_) | DiagramError::Malformed(_) | DiagramError::NotACandidate(_) => {
                CliError::Input(e.to_string())
            }
            DiagramError::NotMinimal => CliError::Unsupported(e.to_string()),
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<GenericError> for CliError {
    fn from(e: GenericError) -> Self {
        match e {
            GenericError::Engine(e) => e.into(),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::ParameterOrder { .. } | FamilyError::OutOfRange(_) => {
                CliError::Input(e.to_string())
            }
            FamilyError::NotRealized { .. } => CliError::Invariant(e.to_string()),
            FamilyError::Engine(e) => e.into(),
        }
    }
}
