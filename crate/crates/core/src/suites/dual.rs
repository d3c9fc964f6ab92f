//! sNSym against sQSym and Λ.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::{compositions_upto, each, ensure, weight_of, Failure, Outcome};
use crate::combinatorics::{superpartitions, DottedComposition};
use crate::kernel::{contract, map_legs, outer, LinComb};
use crate::nsym::{self, Antipode};
use crate::qsym;
use crate::sym::{mul_m, Sym, SymBasis, SymComb, SymElement};
use crate::Q;

type E = LinComb<DottedComposition, Q>;

fn basis(a: &DottedComposition) -> E {
    LinComb::basis(a.clone())
}

fn pi_m(sym: &Sym, a: &DottedComposition) -> Result<SymComb<Q>, Failure> {
    Ok(sym.to_m(&nsym::pi_basis(sym, a)?)?)
}

pub(super) fn run(sym: &Sym, d: usize, seed: u64) -> Outcome {
    let all = compositions_upto(d);
    let mut n = 0;

    // ⟨⟨π(H_α), m_Λ⟩⟩ = ⟨H_α, ι(m_Λ)⟩
    n += each(&all, |a| {
        let image = nsym::pi_basis(sym, a)?;
        let mut k = 0;
        for l in superpartitions(a.bidegree()) {
            let m = SymElement::basis_element(SymBasis::Monomial, l.clone());
            let lhs = sym.hall(&image, &m)?;
            let rhs = nsym::pair(&basis(a), &qsym::iota(&m.terms));
            k += ensure(lhs == rhs, || format!("⟨⟨π(H{a}), m{l}⟩⟩ = {lhs} but ⟨H{a}, ι(m{l})⟩ = {rhs}"))?;
        }
        Ok(k)
    })?;

    // ⟨ΔH_γ, M_α⊗M_β⟩ = ⟨H_γ, M_α M_β⟩ and ⟨H_α H_β, M_γ⟩ = ⟨H_α⊗H_β, ΔM_γ⟩
    n += each(&all, |g| {
        let delta_h = nsym::comul_basis::<Q>(g);
        let delta_m = qsym::comul_basis::<Q>(g);
        let mut k = 0;
        for a in &all {
            if weight_of(a) > weight_of(g) {
                continue;
            }
            for b in &all {
                if a.bidegree() + b.bidegree() != g.bidegree() {
                    continue;
                }
                let lhs = nsym::pair_tensor(&delta_h, &outer(&basis(a), &basis(b)));
                let rhs = nsym::pair(&basis(g), &qsym::mul_basis(a, b));
                k += ensure(lhs == rhs, || format!("⟨ΔH{g}, M{a}⊗M{b}⟩ = {lhs}, ⟨H{g}, M{a}M{b}⟩ = {rhs}"))?;
                let lhs = nsym::pair(&nsym::mul_basis(a, b), &basis(g));
                let rhs = nsym::pair_tensor(&outer(&basis(a), &basis(b)), &delta_m);
                k += ensure(lhs == rhs, || format!("⟨H{a}H{b}, M{g}⟩ = {lhs}, ⟨H{a}⊗H{b}, ΔM{g}⟩ = {rhs}"))?;
            }
        }
        Ok(k)
    })?;

    let antipode = Antipode::<Q>::new();
    n += each(&all, |a| {
        let left = contract(&nsym::comul_basis::<Q>(a), |x, y| {
            nsym::mul(&antipode.apply_basis(x), &basis(y))
        });
        let unit = if a.is_empty() { basis(a) } else { E::zero() };
        ensure(left == unit, || format!("mul(S'⊗id)ΔH{a} = {left}"))
    })?;

    // π is a morphism of algebras and of coalgebras; sampled on small indices.
    let small: Vec<_> = all.iter().filter(|a| weight_of(a) <= d.min(4)).cloned().collect();
    let mut pairs = Vec::new();
    for a in &small {
        for b in &small {
            if weight_of(a) + weight_of(b) <= d.min(4) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let sample: Vec<_> = pairs.choose_multiple(&mut rng, 100.min(pairs.len())).cloned().collect();
    n += each(&sample, |(a, b)| {
        let lhs = pi_m(sym, &a.concat(b))?;
        let rhs = mul_m(&pi_m(sym, a)?, &pi_m(sym, b)?);
        ensure(lhs == rhs, || format!("π(H{a}H{b}) ≠ π(H{a})π(H{b})"))
    })?;
    n += each(&small, |a| {
        let mut legs = Vec::new();
        for ((x, y), _) in &nsym::comul_basis::<Q>(a) {
            legs.push(x.clone());
            legs.push(y.clone());
        }
        let images: std::collections::HashMap<DottedComposition, SymComb<Q>> = legs
            .into_iter()
            .map(|x| pi_m(sym, &x).map(|v| (x, v)))
            .collect::<Result<_, _>>()?;
        let lhs = map_legs(&nsym::comul_basis::<Q>(a), |x| images[x].clone(), |y| images[y].clone());
        let image = nsym::pi_basis(sym, a)?;
        let rhs = sym.convert_tensor(&sym.comul(&image)?, SymBasis::Monomial)?;
        ensure(lhs == rhs.terms, || format!("(π⊗π)ΔH{a} ≠ Δπ(H{a})"))
    })?;

    Ok(n)
}
