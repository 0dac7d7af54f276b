use std::path::PathBuf;

use equilines::groebner::GroebnerError;
use equilines::polyring::PolyError;
use equilines::sicgen::SicgenError;
use equilines::solver::SolverError;
use equilines::verify::VerifyError;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const IO: i32 = 1;
    pub const VALIDATION: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const VERIFICATION: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed JSON: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: upstream hash {found} does not match {expected}; rerun the upstream step or pass --force")]
    HashMismatch { path: PathBuf, expected: String, found: String },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: Box<CliError> },
    #[error(transparent)]
    Sicgen(#[from] SicgenError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Input { source, .. } => source.exit_code(),
            CliError::Groebner(GroebnerError::BudgetExhausted(_) | GroebnerError::TimeLimit(_)) => exit::BUDGET,
            CliError::VerificationFailed(_) => exit::VERIFICATION,
            _ => exit::VALIDATION,
        }
    }

    /// Attach the input file a wrapped module error came from.
    pub fn at(self, path: &std::path::Path) -> CliError {
        match self {
            e @ (CliError::Io { .. }
            | CliError::Json { .. }
            | CliError::HashMismatch { .. }
            | CliError::Input { .. }) => e,
            e => CliError::Input { path: path.to_path_buf(), source: Box::new(e) },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use equilines::groebner::Progress;

    #[test]
    fn exit_codes() {
        let p = Progress { pairs_processed: 1, basis_size: 2, pairs_pending: 3 };
        assert_eq!(CliError::Groebner(GroebnerError::BudgetExhausted(p.clone())).exit_code(), 3);
        assert_eq!(CliError::Groebner(GroebnerError::TimeLimit(p)).at("x.json".as_ref()).exit_code(), 3);
        assert_eq!(CliError::Config("bad".into()).exit_code(), 2);
        assert_eq!(CliError::VerificationFailed("no".into()).exit_code(), 4);
        assert_eq!(
            CliError::Solver(SolverError::NotLex).at("b.json".as_ref()).to_string(),
            "b.json: basis is not in lex order"
        );
    }
}
