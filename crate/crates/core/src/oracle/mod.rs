//! Explicit polynomials in commuting `x_1..x_N` and anticommuting `θ_1..θ_N`.
//!
//! This is the brute-force side of every cross-check: quasisymmetric and
//! symmetric functions are expanded in finitely many variables, multiplied
//! term by term, and read back through their leading monomials.

use std::collections::HashMap;
use std::fmt;

use crate::combinatorics::{DottedComposition, Part, SuperPartition};
use crate::error::{Error, Result};
use crate::kernel::{Coeff, LinComb, TensorComb};

/// `θ^A x^e` with the θ factors in increasing index order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    theta: u64,
    exps: Vec<u16>,
}

impl SuperMonomial {
    pub fn one(n: usize) -> Self {
        Self {
            theta: 0,
            exps: vec![0; n],
        }
    }

    pub fn theta_mask(&self) -> u64 {
        self.theta
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn has_theta(&self, i: usize) -> bool {
        self.theta >> i & 1 == 1
    }

    pub fn fermionic_degree(&self) -> usize {
        self.theta.count_ones() as usize
    }

    /// Product of two monomials, with `true` for a sign flip; `None` if a θ repeats.
    pub fn mul(&self, other: &Self) -> Option<(Self, bool)> {
        if self.theta & other.theta != 0 {
            return None;
        }
        let mut swaps = 0u32;
        let mut b = other.theta;
        while b != 0 {
            let j = b.trailing_zeros();
            swaps += (self.theta >> j).count_ones();
            b &= b - 1;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Some((
            Self {
                theta: self.theta | other.theta,
                exps,
            },
            swaps % 2 == 1,
        ))
    }

    /// Positions carrying a θ or a positive power of `x`.
    fn occupied(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0 || self.has_theta(i))
    }

    /// The composition read off a monomial supported on `0..ℓ`, if it is one.
    fn leading_composition(&self, offset: usize, len: usize) -> Option<DottedComposition> {
        let mut parts = Vec::new();
        let mut ended = false;
        for i in offset..offset + len {
            let dotted = self.has_theta(i);
            let value = self.exps[i] as usize;
            if dotted || value > 0 {
                if ended {
                    return None;
                }
                parts.push(Part { value, dotted });
            } else {
                ended = true;
            }
        }
        DottedComposition::new(parts).ok()
    }
}

impl fmt::Debug for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..self.exps.len() {
            if self.has_theta(i) {
                write!(f, "{}θ{}", if first { "" } else { "·" }, i + 1)?;
                first = false;
            }
        }
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                write!(f, "{}x{}", if first { "" } else { "·" }, i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                first = false;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial in `N` commuting and `N` anticommuting variables.
#[derive(Clone, PartialEq)]
pub struct SuperPolynomial<C> {
    n: usize,
    terms: HashMap<SuperMonomial, C>,
}

impl<C: Coeff> SuperPolynomial<C> {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 64, "at most 64 anticommuting variables");
        Self {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(SuperMonomial::one(n), C::one())
    }

    pub fn monomial(m: SuperMonomial, c: C) -> Self {
        let mut p = Self::zero(m.exps.len());
        p.add_term(m, c);
        p
    }

    /// `x_i` (zero-based).
    pub fn x(n: usize, i: usize) -> Self {
        let mut m = SuperMonomial::one(n);
        m.exps[i] = 1;
        Self::monomial(m, C::one())
    }

    /// `θ_i` (zero-based).
    pub fn theta(n: usize, i: usize) -> Self {
        let mut m = SuperMonomial::one(n);
        m.theta = 1 << i;
        Self::monomial(m, C::one())
    }

    /// Builds a term from θ indices in the given order and an exponent vector.
    pub fn term(n: usize, thetas: &[usize], exps: &[u16], c: C) -> Self {
        let mut acc = Self::monomial(
            SuperMonomial {
                theta: 0,
                exps: exps.iter().copied().chain(std::iter::repeat(0)).take(n).collect(),
            },
            c,
        );
        for &i in thetas.iter().rev() {
            acc = Self::theta(n, i).mul(&acc);
        }
        acc
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.exps.len(), self.n);
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((m, neg)) = a.mul(b) {
                    out.add_term(m, (ca.clone() * cb.clone()).signed(neg));
                }
            }
        }
        out
    }

    /// Drops every term whose total degree plus fermionic degree exceeds `w`.
    pub fn truncate_weight(&self, w: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let weight = m.exps.iter().map(|&e| e as usize).sum::<usize>() + m.fermionic_degree();
            if weight <= w {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// `d = Σ θ_i ∂/∂x_i`, acting from the left.
    pub fn act_d(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            for i in 0..self.n {
                let e = m.exps[i];
                if e == 0 || m.has_theta(i) {
                    continue;
                }
                let mut dm = m.clone();
                dm.exps[i] -= 1;
                dm.theta |= 1 << i;
                let below = (m.theta & ((1u64 << i) - 1)).count_ones();
                let k = crate::kernel::from_int::<C>(e as i64);
                out.add_term(dm, (c.clone() * k).signed(below % 2 == 1));
            }
        }
        out
    }

    /// Reindexes into `total` variables, moving variable `i` to `i + offset`.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        assert!(offset + self.n <= total);
        let mut out = Self::zero(total);
        for (m, c) in &self.terms {
            let mut exps = vec![0; total];
            exps[offset..offset + self.n].copy_from_slice(&m.exps);
            out.add_term(
                SuperMonomial {
                    theta: m.theta << offset,
                    exps,
                },
                c.clone(),
            );
        }
        out
    }
}

impl<C: Coeff> fmt::Debug for SuperPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.cmp(b.0));
        let mut list = f.debug_map();
        for (m, c) in terms {
            list.entry(m, c);
        }
        list.finish()
    }
}

fn increasing_tuples(len: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    fn go(start: usize, len: usize, n: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == len {
            visit(cur);
            return;
        }
        for i in start..=n - (len - cur.len()) {
            cur.push(i);
            go(i + 1, len, n, cur, visit);
            cur.pop();
        }
    }
    if len <= n {
        go(0, len, n, &mut Vec::new(), &mut visit);
    }
}

/// `M_α` in `N` variables: `Σ_{i_1<…<i_ℓ} θ_{i_1}^{η_1}…θ_{i_ℓ}^{η_ℓ} x_{i_1}^{α_1}…x_{i_ℓ}^{α_ℓ}`.
pub fn expand_qs_monomial<C: Coeff>(alpha: &DottedComposition, n: usize) -> Result<SuperPolynomial<C>> {
    if alpha.len() > n {
        return Err(Error::TooFewVariables {
            needed: alpha.len(),
            available: n,
        });
    }
    let mut out = SuperPolynomial::zero(n);
    increasing_tuples(alpha.len(), n, |idx| {
        let mut m = SuperMonomial::one(n);
        for (&i, p) in idx.iter().zip(alpha.parts()) {
            m.exps[i] = p.value as u16;
            if p.dotted {
                m.theta |= 1 << i;
            }
        }
        out.add_term(m, C::one());
    });
    Ok(out)
}

/// `m_Λ` in `N` variables, summing distinct terms of
/// `θ_{σ(1)}…θ_{σ(m)} x_{σ(1)}^{Λ_1}…x_{σ(N)}^{Λ_N}`.
pub fn expand_monomial<C: Coeff>(lambda: &SuperPartition, n: usize) -> Result<SuperPolynomial<C>> {
    if lambda.length() > n {
        return Err(Error::TooFewVariables {
            needed: lambda.length(),
            available: n,
        });
    }
    let fermionic = lambda.fermionic_parts();
    let symmetric = lambda.symmetric_parts();
    let mut seen: HashMap<SuperMonomial, C> = HashMap::new();
    // Assign fermionic parts to distinct positions in order, then place the
    // symmetric multiset on the remaining positions.
    fn place_sym(
        sym: &[usize],
        free: &mut Vec<bool>,
        m: &mut SuperMonomial,
        out: &mut Vec<SuperMonomial>,
    ) {
        let Some((&v, rest)) = sym.split_first() else {
            out.push(m.clone());
            return;
        };
        for i in 0..free.len() {
            if free[i] {
                free[i] = false;
                m.exps[i] = v as u16;
                place_sym(rest, free, m, out);
                m.exps[i] = 0;
                free[i] = true;
            }
        }
    }
    let mut assign = Vec::new();
    fn place_ferm(m: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                place_ferm(m, n, cur, out);
                cur.pop();
            }
        }
    }
    place_ferm(fermionic.len(), n, &mut Vec::new(), &mut assign);
    for pos in assign {
        let mut m = SuperMonomial::one(n);
        let mut free = vec![true; n];
        for (&i, &v) in pos.iter().zip(fermionic) {
            m.exps[i] = v as u16;
            m.theta |= 1 << i;
            free[i] = false;
        }
        // sign of sorting θ_{pos_1}…θ_{pos_m} into increasing order
        let mut inv = 0;
        for a in 0..pos.len() {
            for b in a + 1..pos.len() {
                inv += (pos[a] > pos[b]) as usize;
            }
        }
        let mut out = Vec::new();
        place_sym(symmetric, &mut free, &mut m, &mut out);
        for mono in out {
            seen.insert(mono, C::sign(inv));
        }
    }
    let mut p = SuperPolynomial::zero(n);
    for (m, c) in seen {
        p.add_term(m, c);
    }
    Ok(p)
}

/// Reads `P` back in the `M` basis from its leading monomials.
pub fn extract_qsym<C: Coeff>(p: &SuperPolynomial<C>) -> Result<LinComb<DottedComposition, C>> {
    let n = p.n;
    let mut out = LinComb::zero();
    for (m, c) in &p.terms {
        if let Some(alpha) = m.leading_composition(0, n) {
            if m.occupied().count() == alpha.len() {
                out.add_term(alpha, c.clone());
            }
        }
    }
    let mut rebuilt = SuperPolynomial::zero(n);
    for (alpha, c) in &out {
        rebuilt = rebuilt.add(&expand_qs_monomial(alpha, n)?.scale(c));
    }
    if rebuilt != *p {
        return Err(Error::NotQuasisymmetric(format!(
            "{} terms do not reassemble from {} leading monomials",
            p.len(),
            out.len()
        )));
    }
    Ok(out)
}

/// `f(x;θ) g(y;φ)` in `2N` variables, `θ` before `φ`.
pub fn outer_product<C: Coeff>(f: &SuperPolynomial<C>, g: &SuperPolynomial<C>) -> SuperPolynomial<C> {
    let n = f.n;
    assert_eq!(n, g.n);
    f.embed(0, 2 * n).mul(&g.embed(n, 2 * n))
}

/// Reads a polynomial in two alphabets of `N` variables each as a tensor in `M ⊗ M`.
pub fn extract_qsym_tensor<C: Coeff>(
    p: &SuperPolynomial<C>,
) -> Result<TensorComb<DottedComposition, C>> {
    let n = p.n / 2;
    let mut out = TensorComb::zero();
    for (m, c) in &p.terms {
        let (Some(a), Some(b)) = (m.leading_composition(0, n), m.leading_composition(n, n)) else {
            continue;
        };
        if m.occupied().count() == a.len() + b.len() {
            out.add_term((a, b), c.clone());
        }
    }
    let mut rebuilt = SuperPolynomial::zero(p.n);
    for ((a, b), c) in &out {
        let t = outer_product(&expand_qs_monomial::<C>(a, n)?, &expand_qs_monomial::<C>(b, n)?);
        rebuilt = rebuilt.add(&t.scale(c));
    }
    if rebuilt != *p {
        return Err(Error::NotQuasisymmetric(
            "two-alphabet expansion does not reassemble".into(),
        ));
    }
    Ok(out)
}

/// Expands an `M`-basis element in `N` variables.
pub fn expand_qsym<C: Coeff>(f: &LinComb<DottedComposition, C>, n: usize) -> Result<SuperPolynomial<C>> {
    let mut out = SuperPolynomial::zero(n);
    for (alpha, c) in f {
        out = out.add(&expand_qs_monomial(alpha, n)?.scale(c));
    }
    Ok(out)
}

/// Expands an `m`-basis element in `N` variables.
pub fn expand_sym<C: Coeff>(f: &LinComb<SuperPartition, C>, n: usize) -> Result<SuperPolynomial<C>> {
    let mut out = SuperPolynomial::zero(n);
    for (lambda, c) in f {
        out = out.add(&expand_monomial(lambda, n)?.scale(c));
    }
    Ok(out)
}

/// Power sums `p_r = Σ x_i^r` and `p̃_k = Σ θ_i x_i^k`.
pub fn power_sum<C: Coeff>(r: usize, fermionic: bool, n: usize) -> SuperPolynomial<C> {
    let mut out = SuperPolynomial::zero(n);
    for i in 0..n {
        let mut m = SuperMonomial::one(n);
        m.exps[i] = r as u16;
        if fermionic {
            m.theta = 1 << i;
        }
        out.add_term(m, C::one());
    }
    out
}

#[cfg(test)]
mod tests;
