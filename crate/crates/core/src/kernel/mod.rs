//! Coefficient arithmetic, sparse linear combinations, tensors and linear algebra.

mod coeff;
mod linalg;
mod lincomb;
mod ratfunc;
mod rational;
mod tensor;

pub use coeff::{from_int, Coeff, Field};
pub use linalg::{solve_linear, Matrix};
pub use lincomb::LinComb;
pub use ratfunc::{RationalFunction, UniPoly};
pub use rational::{format_q, parse_q};
pub use tensor::{
    contract, expand_left, expand_right, map_legs, outer, paired, tensor_mul, twist, Graded,
    PairingSign, Tensor3Comb, TensorComb,
};
