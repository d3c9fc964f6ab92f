//! Scalar traits for coefficients of linear combinations.
//!
//! Everything in the crate that only needs ring operations is generic over
//! [`Coeff`]; linear solving and basis inversion need a [`Field`]. Machine
//! integers are valid coefficients (the brute-force oracle uses `i64`), exact
//! rationals and [`RationalFunction`](super::RationalFunction) are fields.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Inv, One, Zero};

pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    /// `self` if `negative` is false, `-self` otherwise.
    fn signed(self, negative: bool) -> Self {
        if negative {
            -self
        } else {
            self
        }
    }

    /// `(-1)^k` as a coefficient.
    fn sign(k: usize) -> Self {
        Self::one().signed(k % 2 == 1)
    }
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Send
        + Sync
{
}

/// A coefficient ring in which every nonzero element is invertible.
pub trait Field: Coeff + Div<Output = Self> + Inv<Output = Self> {}

impl<T> Field for T where T: Coeff + Div<Output = T> + Inv<Output = T> {}

/// Embeds a small integer into any coefficient ring.
pub fn from_int<C: Coeff>(k: i64) -> C {
    let mut acc = C::zero();
    let mut unit = C::one();
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + unit.clone();
        }
        unit = unit.clone() + unit;
        n >>= 1;
    }
    acc.signed(k < 0)
}
