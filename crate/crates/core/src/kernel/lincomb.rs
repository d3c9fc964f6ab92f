use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::coeff::Coeff;

/// A sparse linear combination of basis indices with coefficients in `C`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// vectors. Iteration follows the `Ord` of the index type, which for every
/// index type in this crate is the graded display order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<I: Ord, C> {
    terms: BTreeMap<I, C>,
}

impl<I: Ord, C> Default for LinComb<I, C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<I: Ord + Clone, C: Coeff> LinComb<I, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element `index` with coefficient one.
    pub fn basis(index: I) -> Self {
        Self::term(index, C::one())
    }

    pub fn term(index: I, coeff: C) -> Self {
        let mut out = Self::zero();
        out.add_term(index, coeff);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (I, C)>) -> Self {
        let mut out = Self::zero();
        for (i, c) in terms {
            out.add_term(i, c);
        }
        out
    }

    /// Adds `coeff * index`, dropping the entry if it cancels.
    pub fn add_term(&mut self, index: I, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `scale * other` to `self`.
    pub fn add_scaled(&mut self, other: &Self, scale: &C) {
        for (i, c) in other.iter() {
            self.add_term(i.clone(), c.clone() * scale.clone());
        }
    }

    pub fn coeff(&self, index: &I) -> C {
        self.terms.get(index).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.iter().map(|(i, c)| (i.clone(), c.clone() * factor.clone())))
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<J, F>(&self, mut f: F) -> LinComb<J, C>
    where
        J: Ord + Clone,
        F: FnMut(&I) -> LinComb<J, C>,
    {
        let mut out = LinComb::zero();
        for (i, c) in self.iter() {
            out.add_scaled(&f(i), c);
        }
        out
    }

    /// Keeps the terms whose index satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&I) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| keep(i))
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    /// Converts coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> LinComb<I, D> {
        LinComb::from_terms(self.iter().map(|(i, c)| (i.clone(), f(c))))
    }
}

impl<I: Ord, C> LinComb<I, C> {
    pub fn iter(&self) -> btree_map::Iter<'_, I, C> {
        self.terms.iter()
    }

    pub fn indices(&self) -> btree_map::Keys<'_, I, C> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }
}

impl<I: Ord, C> IntoIterator for LinComb<I, C> {
    type Item = (I, C);
    type IntoIter = btree_map::IntoIter<I, C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, I: Ord, C> IntoIterator for &'a LinComb<I, C> {
    type Item = (&'a I, &'a C);
    type IntoIter = btree_map::Iter<'a, I, C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<I: Ord + Clone, C: Coeff> FromIterator<(I, C)> for LinComb<I, C> {
    fn from_iter<T: IntoIterator<Item = (I, C)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

impl<I: Ord + Clone, C: Coeff> AddAssign<&LinComb<I, C>> for LinComb<I, C> {
    fn add_assign(&mut self, rhs: &LinComb<I, C>) {
        for (i, c) in rhs.iter() {
            self.add_term(i.clone(), c.clone());
        }
    }
}

impl<I: Ord + Clone, C: Coeff> SubAssign<&LinComb<I, C>> for LinComb<I, C> {
    fn sub_assign(&mut self, rhs: &LinComb<I, C>) {
        for (i, c) in rhs.iter() {
            self.add_term(i.clone(), -c.clone());
        }
    }
}

impl<I: Ord + Clone, C: Coeff> Add for LinComb<I, C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<I: Ord + Clone, C: Coeff> Add<&LinComb<I, C>> for &LinComb<I, C> {
    type Output = LinComb<I, C>;

    fn add(self, rhs: &LinComb<I, C>) -> LinComb<I, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<I: Ord + Clone, C: Coeff> Sub for LinComb<I, C> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<I: Ord + Clone, C: Coeff> Sub<&LinComb<I, C>> for &LinComb<I, C> {
    type Output = LinComb<I, C>;

    fn sub(self, rhs: &LinComb<I, C>) -> LinComb<I, C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<I: Ord + Clone, C: Coeff> Neg for LinComb<I, C> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(i, c)| (i, -c)).collect(),
        }
    }
}

impl<I: Ord + Clone, C: Coeff> Mul<&C> for &LinComb<I, C> {
    type Output = LinComb<I, C>;

    fn mul(self, rhs: &C) -> LinComb<I, C> {
        self.scale(rhs)
    }
}

impl<I: Ord + Clone, C: Coeff> Mul<&C> for LinComb<I, C> {
    type Output = LinComb<I, C>;

    fn mul(self, rhs: &C) -> LinComb<I, C> {
        self.scale(rhs)
    }
}

impl<I: Ord + fmt::Debug, C: fmt::Debug> fmt::Debug for LinComb<I, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<I: Ord, C: Coeff + fmt::Display> LinComb<I, C> {
    /// Renders as `a - 2*b + 1/2*c` with each index written by `index`.
    pub fn render_with(&self, mut index: impl FnMut(&I) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (i, c)) in self.iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&index(i));
        }
        out
    }
}

impl<I: Ord + fmt::Display, C: Coeff + fmt::Display> fmt::Display for LinComb<I, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|i| i.to_string()))
    }
}
