use std::fmt;

use superhopf::Error;

use crate::expr::ParseError;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(ParseError),
    /// A well-formed expression that cannot be evaluated, e.g. `M[1] * m[;1]`.
    Eval(String),
    Library(Error),
    /// Suites ran and at least one failed. The reports are already printed.
    SuiteFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) | CliError::Eval(_) => 2,
            CliError::Library(Error::DegreeGuard { .. }) => 3,
            CliError::Library(Error::Unsupported(_) | Error::TooFewVariables { .. }) => 1,
            CliError::Library(_) => 2,
            CliError::SuiteFailed(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Eval(s) => f.write_str(s),
            CliError::Parse(e) => e.fmt(f),
            CliError::Library(e) => e.fmt(f),
            CliError::SuiteFailed(1) => f.write_str("1 suite failed"),
            CliError::SuiteFailed(n) => write!(f, "{n} suites failed"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}
