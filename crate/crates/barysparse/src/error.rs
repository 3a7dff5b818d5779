use std::path::PathBuf;

use thiserror::Error;

/// Everything the command-line tool can fail with, mapped onto exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Document { field: String, message: String },
    #[error("points line {line}: {message}")]
    PointRow { line: usize, message: String },
    #[error("invalid polytope: {0}")]
    Validation(barysparse_core::Error),
    #[error("decomposition failed: {0}")]
    Shelling(barysparse_core::Error),
    #[error("unsupported dimension {0}: only 2-dimensional polytopes can be rendered")]
    UnsupportedDimension(usize),
    #[error("{count} of {total} points lie outside the polytope")]
    StrictOutside { count: usize, total: usize },
    #[error("verification failed: {0}")]
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Shelling(_) => 3,
            CliError::StrictOutside { .. } => 4,
            CliError::VerifyFailed(_) => 5,
            _ => 2,
        }
    }

    pub(crate) fn document(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Document { field: field.into(), message: message.into() }
    }
}

impl From<barysparse_core::Error> for CliError {
    fn from(e: barysparse_core::Error) -> Self {
        use barysparse_core::Error as E;
        match e {
            E::ShellingFailed | E::DegenerateCone { .. } => CliError::Shelling(e),
            other => CliError::Validation(other),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use barysparse_core::Error;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(Error::ShellingFailed).exit_code(), 3);
        assert_eq!(CliError::from(Error::DegenerateCone { facet: 2 }).exit_code(), 3);
        assert_eq!(CliError::from(Error::NotConvex { vertex: 1 }).exit_code(), 2);
        assert_eq!(CliError::StrictOutside { count: 1, total: 2 }.exit_code(), 4);
        assert_eq!(CliError::VerifyFailed("cover".into()).exit_code(), 5);
        assert_eq!(CliError::UnsupportedDimension(3).exit_code(), 2);
    }
}
