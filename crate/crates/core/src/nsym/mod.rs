//! Noncommutative symmetric functions in superspace on the basis
//! `H_α = H_{α_1}⋯H_{α_ℓ}`, with `H_{ṙ} = H̃_r`.
//!
//! The pairing `⟨H_α, M_β⟩ = δ_{αβ}` identifies this algebra with the graded
//! dual of the quasisymmetric functions in superspace.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::combinatorics::{dotted_compositions, Bidegree, DottedComposition, Part, SuperPartition};
use crate::error::Result;
use crate::kernel::{paired, tensor_mul, Coeff, LinComb, PairingSign, TensorComb};
use crate::qsym;
use crate::sym::{Sym, SymBasis, SymElement};
use crate::Q;

pub type NsComb<C> = LinComb<DottedComposition, C>;

/// `H_α H_β = H_{α·β}`.
pub fn mul_basis<C: Coeff>(alpha: &DottedComposition, beta: &DottedComposition) -> NsComb<C> {
    LinComb::basis(alpha.concat(beta))
}

pub fn mul<C: Coeff>(f: &NsComb<C>, g: &NsComb<C>) -> NsComb<C> {
    let mut out = LinComb::zero();
    for (a, ca) in f {
        for (b, cb) in g {
            out.add_term(a.concat(b), ca.clone() * cb.clone());
        }
    }
    out
}

fn single(p: Part) -> DottedComposition {
    if p.value == 0 && !p.dotted {
        DottedComposition::empty()
    } else {
        DottedComposition::from_parts_unchecked(vec![p])
    }
}

/// `ΔH_n = Σ_{i+j=n} H_i ⊗ H_j` and `ΔH̃_n = Σ_{k+l=n} (H̃_k ⊗ H_l + H_l ⊗ H̃_k)`,
/// with `H_0 = 1`.
pub fn comul_generator<C: Coeff>(part: Part) -> TensorComb<DottedComposition, C> {
    let n = part.value;
    let mut out = TensorComb::zero();
    for k in 0..=n {
        let l = n - k;
        if part.dotted {
            out.add_term((single(Part::dot(k)), single(Part::plain(l))), C::one());
            out.add_term((single(Part::plain(l)), single(Part::dot(k))), C::one());
        } else {
            out.add_term((single(Part::plain(k)), single(Part::plain(l))), C::one());
        }
    }
    out
}

/// The generator coproduct extended multiplicatively into the twisted tensor
/// algebra.
pub fn comul_basis<C: Coeff>(alpha: &DottedComposition) -> TensorComb<DottedComposition, C> {
    let unit = (DottedComposition::empty(), DottedComposition::empty());
    alpha.parts().iter().fold(TensorComb::basis(unit), |acc, &p| {
        tensor_mul(&acc, &comul_generator(p), mul_basis)
    })
}

pub fn comul<C: Coeff>(f: &NsComb<C>) -> TensorComb<DottedComposition, C> {
    let mut out = TensorComb::zero();
    for (a, c) in f {
        out.add_scaled(&comul_basis(a), c);
    }
    out
}

pub fn counit<C: Coeff>(f: &NsComb<C>) -> C {
    f.coeff(&DottedComposition::empty())
}

/// `⟨F, f⟩` for `F` in the `H` basis and `f` in the `M` basis.
pub fn pair<C: Coeff>(f: &NsComb<C>, g: &LinComb<DottedComposition, C>) -> C {
    let mut acc = C::zero();
    for (a, ca) in f {
        let cb = g.coeff(a);
        if !cb.is_zero() {
            acc = acc + ca.clone() * cb;
        }
    }
    acc
}

pub fn pair_tensor<C: Coeff>(s: &TensorComb<DottedComposition, C>, t: &TensorComb<DottedComposition, C>) -> C {
    paired(
        |a, b| if a == b { C::one() } else { C::zero() },
        s,
        t,
        PairingSign::Plain,
    )
}

type AntipodeTable<C> = HashMap<DottedComposition, NsComb<C>>;

/// The antipode of the dual, read off as the transpose of the quasisymmetric
/// antipode one bidegree at a time.
pub struct Antipode<C> {
    tables: RwLock<HashMap<Bidegree, Arc<AntipodeTable<C>>>>,
}

impl<C: Coeff> Default for Antipode<C> {
    fn default() -> Self {
        Self {
            tables: RwLock::new(HashMap::new()),
        }
    }
}

impl<C: Coeff> Antipode<C> {
    pub fn new() -> Self {
        Self::default()
    }

    fn table(&self, b: Bidegree) -> Arc<AntipodeTable<C>> {
        if let Some(t) = self.tables.read().unwrap().get(&b) {
            return t.clone();
        }
        let mut table: AntipodeTable<C> = HashMap::new();
        for beta in dotted_compositions(b) {
            for (gamma, c) in qsym::antipode_basis::<C>(&beta) {
                table.entry(gamma).or_default().add_term(beta.clone(), c);
            }
        }
        let table = Arc::new(table);
        self.tables.write().unwrap().entry(b).or_insert(table).clone()
    }

    pub fn apply_basis(&self, alpha: &DottedComposition) -> NsComb<C> {
        self.table(alpha.bidegree())
            .get(alpha)
            .cloned()
            .unwrap_or_default()
    }

    pub fn apply(&self, f: &NsComb<C>) -> NsComb<C> {
        f.map_linear(|a| self.apply_basis(a))
    }
}

pub fn antipode<C: Coeff>(f: &NsComb<C>) -> NsComb<C> {
    Antipode::new().apply(f)
}

/// `π(H_α) = h^{(~)}_{α_1}⋯h^{(~)}_{α_ℓ}`, returned in the `h` basis.
pub fn pi_basis(sym: &Sym, alpha: &DottedComposition) -> Result<SymElement> {
    let mut acc = SymElement::one(SymBasis::Homogeneous);
    for p in alpha.parts() {
        let generator = if p.dotted {
            SuperPartition::new(vec![p.value], vec![])?
        } else {
            SuperPartition::new(vec![], vec![p.value])?
        };
        acc = sym.mul(&acc, &SymElement::basis_element(SymBasis::Homogeneous, generator))?;
    }
    Ok(acc)
}

pub fn pi(sym: &Sym, f: &NsComb<Q>) -> Result<SymElement> {
    let mut terms = LinComb::zero();
    for (a, c) in f {
        terms.add_scaled(&pi_basis(sym, a)?.terms, c);
    }
    Ok(SymElement::new(SymBasis::Homogeneous, terms))
}
