//! Superpartitions, dotted compositions, and the orders and shuffles on them.

mod coarsen;
mod composition;
pub mod partition;
mod shuffle;
mod superpartition;

use std::fmt;

pub use coarsen::{
    coarsenings, covers, refinements, strong_coarsenings, strong_refinements, weak_coarsenings,
    weak_refinements, Refinement,
};
pub use composition::{canonicalize_dotted, dotted_compositions, DottedComposition, Part};
pub use shuffle::{overlapping_shuffles, Shuffle, ShufflePath, Step};
pub use superpartition::{dominance_leq, superpartitions, SuperPartition};

/// Total degree `n` and fermionic degree `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub n: usize,
    pub m: usize,
}

impl Bidegree {
    pub const fn new(n: usize, m: usize) -> Self {
        Self { n, m }
    }

    /// `n + m`, the quantity bounded by degree guards.
    pub fn weight(&self) -> usize {
        self.n + self.m
    }

    /// All bidegrees with `n + m = w`.
    pub fn of_weight(w: usize) -> impl Iterator<Item = Bidegree> {
        (0..=w).map(move |m| Bidegree::new(w - m, m))
    }
}

impl std::ops::Add for Bidegree {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.n + rhs.n, self.m + rhs.m)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.n, self.m)
    }
}
