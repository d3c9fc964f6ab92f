use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{Bidegree, SuperPartition};
use crate::error::Error;
use crate::kernel::Graded;

/// One entry of a dotted composition. Undotted values are positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    pub value: usize,
    pub dotted: bool,
}

impl Part {
    pub fn plain(value: usize) -> Self {
        Self {
            value,
            dotted: false,
        }
    }

    pub fn dot(value: usize) -> Self {
        Self {
            value,
            dotted: true,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.dotted { "." } else { "" })
    }
}

impl fmt::Debug for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let (digits, dotted) = match t.strip_suffix('.') {
            Some(d) => (d, true),
            None => (t, false),
        };
        let value = digits
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidIndex(format!("bad part {s:?}")))?;
        if !dotted && value == 0 {
            return Err(Error::InvalidIndex("undotted parts must be positive".into()));
        }
        Ok(Self { value, dotted })
    }
}

/// A dotted composition. Written `(3.,1,2)`, with a trailing `.` on dotted parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DottedComposition {
    parts: Vec<Part>,
}

impl DottedComposition {
    pub fn new(parts: Vec<Part>) -> Result<Self, Error> {
        if parts.iter().any(|p| !p.dotted && p.value == 0) {
            return Err(Error::InvalidIndex("undotted parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<Part>) -> Self {
        debug_assert!(parts.iter().all(|p| p.dotted || p.value > 0));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds from `(value, dotted)` pairs.
    pub fn from_pairs(pairs: &[(usize, bool)]) -> Result<Self, Error> {
        Self::new(
            pairs
                .iter()
                .map(|&(value, dotted)| Part { value, dotted })
                .collect(),
        )
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|α|`
    pub fn size(&self) -> usize {
        self.parts.iter().map(|p| p.value).sum()
    }

    /// `m_α`, the number of dotted parts.
    pub fn fermionic_degree(&self) -> usize {
        self.parts.iter().filter(|p| p.dotted).count()
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.size(), self.fermionic_degree())
    }

    pub fn eta(&self) -> Vec<bool> {
        self.parts.iter().map(|p| p.dotted).collect()
    }

    pub fn values(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.value).collect()
    }

    pub fn reverse(&self) -> Self {
        Self {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self { parts }
    }

    /// `(α₁…α_k, α_{k+1}…α_ℓ)`
    pub fn split_at(&self, k: usize) -> (Self, Self) {
        let (a, b) = self.parts.split_at(k);
        (
            Self { parts: a.to_vec() },
            Self { parts: b.to_vec() },
        )
    }

    /// Parts written without delimiters, e.g. `3.,1,2`.
    pub fn index_string(&self) -> String {
        self.parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl From<&SuperPartition> for DottedComposition {
    fn from(l: &SuperPartition) -> Self {
        Self::from_parts_unchecked(
            l.dotted_parts()
                .into_iter()
                .map(|(value, dotted)| Part { value, dotted })
                .collect(),
        )
    }
}

impl Graded for DottedComposition {
    fn fermionic_degree(&self) -> usize {
        DottedComposition::fermionic_degree(self)
    }
}

/// By bidegree, then longer compositions first, then parts in decreasing
/// lexicographic order.
impl Ord for DottedComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bidegree()
            .cmp(&other.bidegree())
            .then_with(|| other.len().cmp(&self.len()))
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for DottedComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DottedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.index_string())
    }
}

impl fmt::Debug for DottedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `3.,1,2`, optionally wrapped in `()` or `[]`; the empty string is `∅`.
impl FromStr for DottedComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        Ok(Self {
            parts: t.split(',').map(str::parse).collect::<Result<_, _>>()?,
        })
    }
}

/// All dotted compositions of bidegree `(n|m)`, in `Ord` order.
pub fn dotted_compositions(b: Bidegree) -> Vec<DottedComposition> {
    fn go(n: usize, m: usize, prefix: &mut Vec<Part>, out: &mut Vec<DottedComposition>) {
        if n == 0 && m == 0 {
            out.push(DottedComposition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for v in 1..=n {
            prefix.push(Part::plain(v));
            go(n - v, m, prefix, out);
            prefix.pop();
        }
        if m > 0 {
            for v in 0..=n {
                prefix.push(Part::dot(v));
                go(n - v, m - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(b.n, b.m, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Sorts `α` into the superpartition of its rearrangement class. Returns the
/// superpartition and whether reordering the dotted entries is an odd
/// permutation, or `None` when two dotted entries coincide.
pub fn canonicalize_dotted(alpha: &DottedComposition) -> Option<(SuperPartition, bool)> {
    let dotted: Vec<usize> = alpha
        .parts
        .iter()
        .filter(|p| p.dotted)
        .map(|p| p.value)
        .collect();
    let mut inversions = 0usize;
    for i in 0..dotted.len() {
        for j in i + 1..dotted.len() {
            match dotted[i].cmp(&dotted[j]) {
                Ordering::Equal => return None,
                Ordering::Less => inversions += 1,
                Ordering::Greater => {}
            }
        }
    }
    let symmetric = alpha
        .parts
        .iter()
        .filter(|p| !p.dotted)
        .map(|p| p.value)
        .collect();
    let lambda = SuperPartition::from_unsorted(dotted, symmetric)?;
    Some((lambda, inversions % 2 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dc(s: &str) -> DottedComposition {
        s.parse().unwrap()
    }

    #[test]
    fn statistics() {
        let a = dc("3.,1,2.");
        assert_eq!(a.size(), 6);
        assert_eq!(a.fermionic_degree(), 2);
        assert_eq!(a.len(), 3);
        assert_eq!(a.eta(), vec![true, false, true]);
        assert_eq!(a.reverse(), dc("2.,1,3."));
        assert_eq!(a.to_string(), "(3.,1,2.)");
        assert_eq!(dc("[]"), DottedComposition::empty());
        assert!("0".parse::<DottedComposition>().is_err());
        assert_eq!(dc("0."), DottedComposition::from_pairs(&[(0, true)]).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(dotted_compositions(Bidegree::new(1, 0)), vec![dc("1")]);
        assert_eq!(dotted_compositions(Bidegree::new(0, 1)), vec![dc("0.")]);
        let mut got = dotted_compositions(Bidegree::new(1, 1));
        got.sort_by_key(|a| a.to_string());
        let mut want = vec![dc("1."), dc("0.,1"), dc("1,0.")];
        want.sort_by_key(|a| a.to_string());
        assert_eq!(got, want);
    }

    // Counts by the first part: c(n,m) = Σ_{v≥1} c(n-v,m) + Σ_{v≥0} c(n-v,m-1).
    fn count(n: usize, m: usize) -> usize {
        if n == 0 && m == 0 {
            return 1;
        }
        let plain: usize = (1..=n).map(|v| count(n - v, m)).sum();
        let dotted: usize = if m == 0 {
            0
        } else {
            (0..=n).map(|v| count(n - v, m - 1)).sum()
        };
        plain + dotted
    }

    #[test]
    fn enumeration_counts() {
        for w in 1..8 {
            let mut total = 0;
            for m in 0..=w {
                let list = dotted_compositions(Bidegree::new(w - m, m));
                assert_eq!(list.len(), count(w - m, m));
                assert!(list.windows(2).all(|p| p[0] < p[1]));
                assert!(list.iter().all(|a| a.len() <= w));
                total += list.len();
            }
            assert_eq!(total, 2 * 3usize.pow(w as u32 - 1));
        }
    }

    #[test]
    fn canonicalize_examples() {
        let sp = |s: &str| s.parse::<SuperPartition>().unwrap();
        assert_eq!(canonicalize_dotted(&dc("2.,3,1")), Some((sp("2;3,1"), false)));
        assert_eq!(canonicalize_dotted(&dc("0.,1.")), Some((sp("1,0;"), true)));
        assert_eq!(canonicalize_dotted(&dc("4.,4.,2")), None);
        assert_eq!(canonicalize_dotted(&dc("0.,2.,1.")), Some((sp("2,1,0;"), false)));
    }

    #[test]
    fn display_order() {
        let mut v = vec![dc("2.,4."), dc("5.,1."), dc("2.,3,1.")];
        v.sort();
        assert_eq!(v, vec![dc("2.,3,1."), dc("5.,1."), dc("2.,4.")]);
    }

    fn composition() -> impl Strategy<Value = DottedComposition> {
        proptest::collection::vec((0usize..4, any::<bool>()), 0..5).prop_map(|v| {
            DottedComposition::new(
                v.into_iter()
                    .map(|(value, dotted)| Part {
                        value: if dotted { value } else { value + 1 },
                        dotted,
                    })
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn reverse_and_concat(a in composition(), b in composition(), c in composition()) {
            prop_assert_eq!(a.reverse().reverse(), a.clone());
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
            prop_assert_eq!(a.concat(&DottedComposition::empty()), a.clone());
            prop_assert_eq!(a.to_string().parse::<DottedComposition>().unwrap(), a);
        }
    }
}
