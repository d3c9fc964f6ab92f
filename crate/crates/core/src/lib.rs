//! Symmetric, quasisymmetric and noncommutative symmetric functions in
//! superspace, with exact arithmetic and a brute-force polynomial oracle.

pub mod combinatorics;
pub mod error;
pub mod kernel;
pub mod nsym;
pub mod oracle;
pub mod qsym;
pub mod suites;
pub mod sym;

pub use combinatorics::{Bidegree, DottedComposition, Part, SuperPartition};
pub use error::{Error, Result};
pub use kernel::{LinComb, RationalFunction, TensorComb};
pub use sym::{Sym, SymBasis, SymElement, SymTensor};

/// Exact rational scalars.
pub type Q = num_rational::BigRational;

/// An element of sQSym in the monomial basis `M_α`.
pub type QsElement = LinComb<DottedComposition, Q>;

/// An element of sNSym in the basis `H_α`.
pub type NsElement = LinComb<DottedComposition, Q>;
