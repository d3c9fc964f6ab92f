use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::partition::{conjugate_partition, dominates, partitions_bounded};
use super::Bidegree;
use crate::error::Error;
use crate::kernel::Graded;

/// A superpartition `(Λᵃ; Λˢ)`: strictly decreasing fermionic parts (possibly
/// ending in 0) and a partition of positive symmetric parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SuperPartition {
    fermionic: Vec<usize>,
    symmetric: Vec<usize>,
}

impl SuperPartition {
    pub fn new(fermionic: Vec<usize>, mut symmetric: Vec<usize>) -> Result<Self, Error> {
        if fermionic.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidIndex(format!(
                "fermionic parts {fermionic:?} are not strictly decreasing"
            )));
        }
        while symmetric.last() == Some(&0) {
            symmetric.pop();
        }
        if symmetric.windows(2).any(|w| w[0] < w[1]) || symmetric.contains(&0) {
            return Err(Error::InvalidIndex(format!(
                "symmetric parts {symmetric:?} are not a partition"
            )));
        }
        Ok(Self {
            fermionic,
            symmetric,
        })
    }

    /// Sorts the parts into canonical order; `None` on a repeated fermionic part.
    pub fn from_unsorted(mut fermionic: Vec<usize>, mut symmetric: Vec<usize>) -> Option<Self> {
        fermionic.sort_unstable_by(|a, b| b.cmp(a));
        symmetric.sort_unstable_by(|a, b| b.cmp(a));
        symmetric.retain(|&x| x > 0);
        Self::new(fermionic, symmetric).ok()
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn fermionic_parts(&self) -> &[usize] {
        &self.fermionic
    }

    pub fn symmetric_parts(&self) -> &[usize] {
        &self.symmetric
    }

    pub fn total_degree(&self) -> usize {
        self.fermionic.iter().sum::<usize>() + self.symmetric.iter().sum::<usize>()
    }

    pub fn fermionic_degree(&self) -> usize {
        self.fermionic.len()
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.total_degree(), self.fermionic_degree())
    }

    /// `ℓ(Λ) = m + ℓ(Λˢ)`.
    pub fn length(&self) -> usize {
        self.fermionic.len() + self.symmetric.len()
    }

    /// Rows of the diagram, top to bottom, as `(size, circled)`. A circled row
    /// sits above an uncircled row of the same size.
    fn rows(&self) -> Vec<(usize, bool)> {
        let mut rows: Vec<(usize, bool)> = self
            .fermionic
            .iter()
            .map(|&v| (v, true))
            .chain(self.symmetric.iter().map(|&v| (v, false)))
            .collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        rows
    }

    /// `Λ*`: the diagram with circles deleted.
    pub fn star(&self) -> Vec<usize> {
        self.rows().into_iter().map(|(v, _)| v).filter(|&v| v > 0).collect()
    }

    /// `Λ⊛`: every circle replaced by a box.
    pub fn circled(&self) -> Vec<usize> {
        self.rows().into_iter().map(|(v, c)| v + c as usize).collect()
    }

    /// Recovers `Λ` from the pair `(Λ*, Λ⊛)`; rows where they differ by one are circled.
    pub fn from_star_circled(star: &[usize], circled: &[usize]) -> Option<Self> {
        let len = star.len().max(circled.len());
        let (mut fermionic, mut symmetric) = (Vec::new(), Vec::new());
        for i in 0..len {
            let s = star.get(i).copied().unwrap_or(0);
            let c = circled.get(i).copied().unwrap_or(0);
            match c.checked_sub(s) {
                Some(0) => symmetric.push(s),
                Some(1) => fermionic.push(s),
                _ => return None,
            }
        }
        Self::new(fermionic, symmetric).ok()
    }

    /// Transpose of the diagram, circles included.
    pub fn conjugate(&self) -> Self {
        let star = conjugate_partition(&self.star());
        let circled = conjugate_partition(&self.circled());
        Self::from_star_circled(&star, &circled).expect("conjugate of a superpartition diagram")
    }

    /// The dotted composition `(Λ₁̇,…,Λ̇_m,Λ_{m+1},…,Λ_ℓ)`.
    pub fn dotted_parts(&self) -> Vec<(usize, bool)> {
        self.fermionic
            .iter()
            .map(|&v| (v, true))
            .chain(self.symmetric.iter().map(|&v| (v, false)))
            .collect()
    }
}

impl Graded for SuperPartition {
    fn fermionic_degree(&self) -> usize {
        self.fermionic.len()
    }
}

/// `Ω ≤ Λ` in dominance: same bidegree, `Ω* ≤ Λ*` and `Ω⊛ ≤ Λ⊛`.
pub fn dominance_leq(omega: &SuperPartition, lambda: &SuperPartition) -> bool {
    omega.bidegree() == lambda.bidegree()
        && dominates(&lambda.star(), &omega.star())
        && dominates(&lambda.circled(), &omega.circled())
}

/// All superpartitions of bidegree `(n|m)`, dominant ones first.
pub fn superpartitions(b: Bidegree) -> Vec<SuperPartition> {
    fn fermionic_sets(n: usize, m: usize, below: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        // m distinct values below `below` need at least 0+1+…+(m-1).
        for v in (m - 1..below.min(n + 1)).rev() {
            prefix.push(v);
            fermionic_sets(n - v, m - 1, v, prefix, out);
            prefix.pop();
        }
    }
    let mut sets = Vec::new();
    fermionic_sets(b.n, b.m, b.n + 1, &mut Vec::new(), &mut sets);
    let mut out: Vec<SuperPartition> = sets
        .into_iter()
        .flat_map(|f| {
            let rest = b.n - f.iter().sum::<usize>();
            partitions_bounded(rest, rest)
                .into_iter()
                .map(move |s| SuperPartition::new(f.clone(), s).unwrap())
        })
        .collect();
    out.sort();
    out
}

/// Total order refining dominance: by bidegree, then `Λ⊛` and `Λ*` in
/// decreasing lexicographic order, so dominant superpartitions come first.
impl Ord for SuperPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bidegree()
            .cmp(&other.bidegree())
            .then_with(|| other.circled().cmp(&self.circled()))
            .then_with(|| other.star().cmp(&self.star()))
    }
}

impl PartialOrd for SuperPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl SuperPartition {
    /// `a,b;c,d` without delimiters.
    pub fn index_string(&self) -> String {
        format!("{};{}", join(&self.fermionic), join(&self.symmetric))
    }
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.index_string())
    }
}

impl fmt::Debug for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidIndex(format!("bad part {t:?}")))
        })
        .collect()
}

/// Accepts `a,b;c,d`, optionally wrapped in `()` or `[]`.
impl FromStr for SuperPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .unwrap_or(t);
        let (a, sym) = t
            .split_once(';')
            .ok_or_else(|| Error::InvalidIndex(format!("superpartition {s:?} needs a ';'")))?;
        Self::new(parse_list(a)?, parse_list(sym)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(sp("3,1,0;2,1").conjugate(), sp("4,2,0;1"));
        assert_eq!(sp(";").conjugate(), sp(";"));
        assert_eq!(sp("0;").conjugate(), sp("0;"));
        assert_eq!(sp(";2").conjugate(), sp(";1,1"));
    }

    #[test]
    fn diagrams() {
        let l = sp("3,1,0;2,1");
        assert_eq!(l.star(), vec![3, 2, 1, 1]);
        assert_eq!(l.circled(), vec![4, 2, 2, 1, 1]);
        assert_eq!(l.bidegree(), Bidegree::new(7, 3));
        assert_eq!(l.length(), 5);
    }

    #[test]
    fn canonical_form() {
        assert_eq!(sp("2;1,0,0"), sp("2;1"));
        assert!("1,1;".parse::<SuperPartition>().is_err());
        assert!("0,1;".parse::<SuperPartition>().is_err());
        assert!("1;1,2".parse::<SuperPartition>().is_err());
        assert!("1,2".parse::<SuperPartition>().is_err());
        assert_eq!(sp("(2;3,1)").to_string(), "(2;3,1)");
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(superpartitions(Bidegree::new(0, 0)), vec![sp(";")]);
        let got: BTreeSet<_> = superpartitions(Bidegree::new(2, 1)).into_iter().collect();
        let want: BTreeSet<_> = ["2;", "1;1", "0;2", "0;1,1"].iter().map(|s| sp(s)).collect();
        assert_eq!(got, want);
        assert_eq!(superpartitions(Bidegree::new(1, 2)), vec![sp("1,0;")]);
    }

    // Independent count: choose a set of m distinct values, then a partition of the rest.
    fn brute_count(n: usize, m: usize) -> usize {
        let mut count = 0;
        for mask in 0u32..1 << (n + 1) {
            if mask.count_ones() as usize != m {
                continue;
            }
            let s: usize = (0..=n).filter(|i| mask >> i & 1 == 1).sum();
            if s <= n {
                count += super::super::partition::partitions(n - s).len();
            }
        }
        count
    }

    #[test]
    fn enumeration_counts_and_order() {
        for n in 0..8 {
            for m in 0..5 {
                let list = superpartitions(Bidegree::new(n, m));
                assert_eq!(list.len(), brute_count(n, m), "({n}|{m})");
                // Never lists a dominated superpartition before one that dominates it.
                for (i, a) in list.iter().enumerate() {
                    for b in &list[i + 1..] {
                        assert!(!dominance_leq(a, b) || a == b);
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&sp("3;"), &sp("3;")));
        assert!(dominance_leq(&sp("0;3"), &sp("3;")));
        assert!(!dominance_leq(&sp("3;"), &sp("0;3")));
        assert!(dominance_leq(&sp(";1,1"), &sp(";2")));
        assert!(!dominance_leq(&sp(";1"), &sp("1;")));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..6 {
            for m in 0..3 {
                let list = superpartitions(Bidegree::new(n, m));
                for a in &list {
                    for b in &list {
                        if a != b {
                            assert!(!(dominance_leq(a, b) && dominance_leq(b, a)));
                        }
                        for c in &list {
                            if dominance_leq(a, b) && dominance_leq(b, c) {
                                assert!(dominance_leq(a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=8 {
            for m in 0..=8 - n {
                for l in superpartitions(Bidegree::new(n, m)) {
                    let c = l.conjugate();
                    assert_eq!(c.bidegree(), l.bidegree());
                    assert_eq!(c.conjugate(), l);
                }
            }
        }
    }
}
