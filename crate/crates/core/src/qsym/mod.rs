//! Quasisymmetric functions in superspace on the monomial basis `M_α`.

use std::collections::HashMap;

use crate::combinatorics::{
    canonicalize_dotted, overlapping_shuffles, refinements, weak_coarsenings, DottedComposition,
    Part, Refinement, SuperPartition,
};
use crate::error::{Error, Result};
use crate::kernel::{Coeff, LinComb, TensorComb};

/// `M_α M_β = Σ_P sign(P) M_{Γ(P)}` over overlapping shuffles.
pub fn mul_basis<C: Coeff>(alpha: &DottedComposition, beta: &DottedComposition) -> LinComb<DottedComposition, C> {
    let mut out = LinComb::zero();
    for s in overlapping_shuffles(alpha, beta) {
        out.add_term(s.composition, C::one().signed(s.negative));
    }
    out
}

pub fn mul<C: Coeff>(
    f: &LinComb<DottedComposition, C>,
    g: &LinComb<DottedComposition, C>,
) -> LinComb<DottedComposition, C> {
    let mut out = LinComb::zero();
    for (a, ca) in f {
        for (b, cb) in g {
            out.add_scaled(&mul_basis(a, b), &(ca.clone() * cb.clone()));
        }
    }
    out
}

/// Deconcatenation.
pub fn comul_basis<C: Coeff>(alpha: &DottedComposition) -> TensorComb<DottedComposition, C> {
    (0..=alpha.len())
        .map(|k| (alpha.split_at(k), C::one()))
        .collect()
}

pub fn comul<C: Coeff>(f: &LinComb<DottedComposition, C>) -> TensorComb<DottedComposition, C> {
    let mut out = TensorComb::zero();
    for (a, c) in f {
        out.add_scaled(&comul_basis(a), c);
    }
    out
}

/// Coefficient of `M_∅`.
pub fn counit<C: Coeff>(f: &LinComb<DottedComposition, C>) -> C {
    f.coeff(&DottedComposition::empty())
}

fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// `S(M_α) = (-1)^{ℓ(α)+C(m_α,2)} Σ_{γ ⊵ Rev(α)} M_γ`.
pub fn antipode_basis<C: Coeff>(alpha: &DottedComposition) -> LinComb<DottedComposition, C> {
    let sign = C::sign(alpha.len() + choose2(alpha.fermionic_degree()));
    weak_coarsenings(&alpha.reverse())
        .into_iter()
        .map(|g| (g, sign.clone()))
        .collect()
}

pub fn antipode<C: Coeff>(f: &LinComb<DottedComposition, C>) -> LinComb<DottedComposition, C> {
    f.map_linear(antipode_basis)
}

/// The antipode computed from `S(1) = 1` and
/// `S(M_α) = -Σ_{k<ℓ} S(M_{α_1…α_k}) M_{α_{k+1}…α_ℓ}`, memoized across calls.
#[derive(Default)]
pub struct RecursiveAntipode<C> {
    memo: HashMap<DottedComposition, LinComb<DottedComposition, C>>,
}

impl<C: Coeff> RecursiveAntipode<C> {
    pub fn new() -> Self {
        Self {
            memo: HashMap::new(),
        }
    }

    pub fn apply(&mut self, alpha: &DottedComposition) -> LinComb<DottedComposition, C> {
        if let Some(v) = self.memo.get(alpha) {
            return v.clone();
        }
        let value = if alpha.is_empty() {
            LinComb::basis(DottedComposition::empty())
        } else {
            let mut acc = LinComb::zero();
            for k in 0..alpha.len() {
                let (head, tail) = alpha.split_at(k);
                let s = self.apply(&head);
                acc -= &mul(&s, &LinComb::basis(tail));
            }
            acc
        };
        self.memo.insert(alpha.clone(), value.clone());
        value
    }
}

pub fn antipode_recursive<C: Coeff>(alpha: &DottedComposition) -> LinComb<DottedComposition, C> {
    RecursiveAntipode::new().apply(alpha)
}

/// `L_α = Σ_{β ≼ α} M_β`.
pub fn fundamental<C: Coeff>(alpha: &DottedComposition) -> LinComb<DottedComposition, C> {
    refinements(alpha, Refinement::Strong)
        .into_iter()
        .map(|b| (b, C::one()))
        .collect()
}

/// `L̄_α = Σ_{β ⊴ α} M_β`.
pub fn fundamental_bar<C: Coeff>(alpha: &DottedComposition) -> LinComb<DottedComposition, C> {
    refinements(alpha, Refinement::Weak)
        .into_iter()
        .map(|b| (b, C::one()))
        .collect()
}

/// Rewrites an `M`-basis element in the `L` (strong) or `L̄` (weak) basis.
pub fn to_fundamental<C: Coeff>(
    f: &LinComb<DottedComposition, C>,
    order: Refinement,
) -> LinComb<DottedComposition, C> {
    let mut rest = f.clone();
    let mut out = LinComb::zero();
    // Every proper refinement is strictly longer, so peeling off the
    // shortest term is unitriangular.
    while let Some(alpha) = rest.indices().min_by_key(|a| a.len()).cloned() {
        let c = rest.coeff(&alpha);
        let l = match order {
            Refinement::Strong => fundamental::<C>(&alpha),
            Refinement::Weak => fundamental_bar::<C>(&alpha),
        };
        rest.add_scaled(&l, &-c.clone());
        out.add_term(alpha, c);
    }
    out
}

/// Distinct rearrangements of a sequence of parts.
fn rearrangements(parts: &[Part]) -> Vec<Vec<Part>> {
    let mut sorted = parts.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    let mut used = vec![false; sorted.len()];
    let mut cur = Vec::with_capacity(sorted.len());
    fn go(sorted: &[Part], used: &mut [bool], cur: &mut Vec<Part>, out: &mut Vec<Vec<Part>>) {
        if cur.len() == sorted.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..sorted.len() {
            if used[i] || (i > 0 && sorted[i] == sorted[i - 1] && !used[i - 1]) {
                continue;
            }
            used[i] = true;
            cur.push(sorted[i]);
            go(sorted, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
    go(&sorted, &mut used, &mut cur, &mut out);
    out
}

/// `ι(m_Λ) = Σ (-1)^{σ(α)} M_α` over distinct rearrangements `α` of `Λ`.
pub fn iota_basis<C: Coeff>(lambda: &SuperPartition) -> LinComb<DottedComposition, C> {
    let gamma = DottedComposition::from(lambda);
    let mut out = LinComb::zero();
    for parts in rearrangements(gamma.parts()) {
        let alpha = DottedComposition::new(parts).expect("rearranged parts stay valid");
        let (_, negative) = canonicalize_dotted(&alpha).expect("distinct dotted parts");
        out.add_term(alpha, C::one().signed(negative));
    }
    out
}

pub fn iota<C: Coeff>(f: &LinComb<SuperPartition, C>) -> LinComb<DottedComposition, C> {
    f.map_linear(iota_basis)
}

/// Inverse of `ι` on its image.
pub fn to_m<C: Coeff>(f: &LinComb<DottedComposition, C>) -> Result<LinComb<SuperPartition, C>> {
    let mut out = LinComb::zero();
    for (alpha, c) in f {
        let Some((lambda, negative)) = canonicalize_dotted(alpha) else {
            return Err(Error::NotSymmetric(format!("M{alpha} has a repeated dotted part")));
        };
        if DottedComposition::from(&lambda) == *alpha {
            debug_assert!(!negative);
            out.add_term(lambda, c.clone());
        }
    }
    if iota(&out) != *f {
        return Err(Error::NotSymmetric(
            "not a signed sum of full rearrangement classes".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
