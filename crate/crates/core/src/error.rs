use thiserror::Error;

use crate::combinatorics::Bidegree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular matrix: a basis-change or triangularity assumption failed")]
    SingularMatrix,
    #[error("result is not triangular with respect to dominance: {0}")]
    NotTriangular(String),
    #[error("rational function has a pole at {at}")]
    Pole { at: &'static str },
    #[error("expansion needs {needed} variables but only {available} are available")]
    TooFewVariables { needed: usize, available: usize },
    #[error("polynomial is not quasisymmetric: {0}")]
    NotQuasisymmetric(String),
    #[error("element is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("bidegree {bidegree} exceeds the degree guard n+m <= {limit}")]
    DegreeGuard { bidegree: Bidegree, limit: usize },
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
