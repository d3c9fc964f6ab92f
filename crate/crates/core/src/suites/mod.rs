//! Exhaustive identity checks over bounded degrees.
//!
//! Each suite enumerates every index up to a weight bound, checks a family
//! of identities, and stops at the first counterexample. The acceptance
//! tests and the `check` command both run these.

mod classical;
mod dual;
mod golden;
mod lambda;
mod quasi;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::combinatorics::{dotted_compositions, superpartitions, Bidegree, DottedComposition, SuperPartition};
use crate::error::{Error, Result};
use crate::sym::Sym;

pub use classical::{kostka, schur_polynomial, ssyt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Golden,
    HopfQsym,
    Oracle,
    HopfSym,
    Schur,
    Cauchy,
    CauchySigned,
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Golden,
        Suite::HopfQsym,
        Suite::Oracle,
        Suite::HopfSym,
        Suite::Schur,
        Suite::Cauchy,
        Suite::CauchySigned,
        Suite::Duality,
    ];

    /// The suites run by `all`. The unsigned Cauchy identity fails from
    /// bidegree (1|2) on and is only run when asked for by name.
    pub const DEFAULT: [Suite; 7] = [
        Suite::Golden,
        Suite::HopfQsym,
        Suite::Oracle,
        Suite::HopfSym,
        Suite::Schur,
        Suite::CauchySigned,
        Suite::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::HopfQsym => "hopf-qsym",
            Suite::Oracle => "oracle",
            Suite::HopfSym => "hopf-sym",
            Suite::Schur => "schur",
            Suite::Cauchy => "cauchy",
            Suite::CauchySigned => "cauchy-signed",
            Suite::Duality => "duality",
        }
    }

    /// The weight bound used when none is given.
    pub fn default_degree(self) -> usize {
        match self {
            Suite::Golden => 0,
            Suite::HopfQsym | Suite::HopfSym | Suite::Duality => 5,
            Suite::Oracle | Suite::Schur => 4,
            Suite::Cauchy | Suite::CauchySigned => 3,
        }
    }

    /// The largest weight bound a run will accept.
    pub fn max_degree(self) -> usize {
        match self {
            Suite::Golden => usize::MAX,
            Suite::HopfQsym => 7,
            Suite::Oracle => 5,
            Suite::HopfSym => 7,
            Suite::Schur => 5,
            Suite::Cauchy | Suite::CauchySigned => 4,
            Suite::Duality => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidIndex(format!("unknown suite {s:?}")))
    }
}

/// Why a suite stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// An identity failed; the message names the first offending indices.
    Counterexample(String),
    /// A library call failed outright.
    Error(Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Counterexample(s) => write!(f, "counterexample: {s}"),
            Failure::Error(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub max_degree: usize,
    /// Number of identities verified before stopping.
    pub checks: usize,
    pub failure: Option<Failure>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} (max degree {}, {} checks, {:.2?})",
            self.suite, self.max_degree, self.checks, self.elapsed
        )?;
        if let Some(failure) = &self.failure {
            write!(f, ": {failure}")?;
        }
        Ok(())
    }
}

pub(crate) type Outcome = std::result::Result<usize, Failure>;

pub(crate) fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(1)
    } else {
        Err(Failure::Counterexample(what()))
    }
}

/// Runs `f` on every item in parallel. The reported failure is the first one
/// in item order, so output does not depend on scheduling.
pub(crate) fn each<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) -> Outcome {
    let results: Vec<Outcome> = items.par_iter().map(f).collect();
    let mut n = 0;
    for r in results {
        n += r?;
    }
    Ok(n)
}

pub(crate) fn compositions_upto(w: usize) -> Vec<DottedComposition> {
    (0..=w)
        .flat_map(Bidegree::of_weight)
        .flat_map(dotted_compositions)
        .collect()
}

pub(crate) fn superpartitions_upto(w: usize) -> Vec<SuperPartition> {
    (0..=w)
        .flat_map(Bidegree::of_weight)
        .flat_map(superpartitions)
        .collect()
}

pub(crate) fn weight_of(a: &DottedComposition) -> usize {
    a.size() + a.fermionic_degree()
}

/// Runs one suite with a fresh [`Sym`] at the default guards.
pub fn run(suite: Suite, max_degree: usize, seed: u64) -> Result<Report> {
    run_with(&Sym::new(), suite, max_degree, seed)
}

/// Runs one suite. Fails with a degree-guard error if `max_degree` exceeds
/// [`Suite::max_degree`].
pub fn run_with(sym: &Sym, suite: Suite, max_degree: usize, seed: u64) -> Result<Report> {
    if max_degree > suite.max_degree() {
        return Err(Error::DegreeGuard {
            bidegree: Bidegree::new(max_degree, 0),
            limit: suite.max_degree(),
        });
    }
    let start = Instant::now();
    let d = max_degree;
    let outcome = match suite {
        Suite::Golden => golden::run(),
        Suite::HopfQsym => quasi::hopf(d, seed),
        Suite::Oracle => quasi::oracle(d),
        Suite::HopfSym => lambda::hopf(sym, d),
        Suite::Schur => lambda::schur(sym, d),
        Suite::Cauchy => lambda::cauchy(sym, d, false),
        Suite::CauchySigned => lambda::cauchy(sym, d, true),
        Suite::Duality => dual::run(sym, d, seed),
    };
    let (checks, failure) = match outcome {
        Ok(n) => (n, None),
        Err(f) => (0, Some(f)),
    };
    Ok(Report {
        suite,
        max_degree,
        checks,
        failure,
        elapsed: start.elapsed(),
    })
}
