//! Identities in Λ: Hopf structure, the Schur families, and the Cauchy kernel.

use num_traits::{One, Zero};

use super::classical::{kostka, schur_polynomial};
use super::{each, ensure, superpartitions_upto, Failure, Outcome};
use crate::combinatorics::partition::partitions;
use crate::combinatorics::{superpartitions, Bidegree, SuperPartition};
use crate::kernel::{twist, Coeff, RationalFunction, TensorComb};
use crate::oracle::{expand_sym, SuperPolynomial};
use crate::sym::{
    deformed_scalar, is_unitriangular, limit, Specialization, Sym, SymBasis, SymComb, SymElement,
    SymTensor,
};
use crate::Q;

fn el(basis: SymBasis, l: &SuperPartition) -> SymElement {
    SymElement::basis_element(basis, l.clone())
}

fn generator_index(k: usize, fermionic: bool) -> SuperPartition {
    let sp = if fermionic {
        SuperPartition::new(vec![k], vec![])
    } else if k == 0 {
        SuperPartition::new(vec![], vec![])
    } else {
        SuperPartition::new(vec![], vec![k])
    };
    sp.expect("generator index")
}

/// `Δg_k = Σ g_i ⊗ g_j` and `Δg̃_k = Σ (g̃_a ⊗ g_b + g_b ⊗ g̃_a)` for `g = e, h`.
fn generator_coproduct(k: usize, fermionic: bool) -> TensorComb<SuperPartition, Q> {
    let mut out = TensorComb::zero();
    for a in 0..=k {
        let b = k - a;
        if fermionic {
            out.add_term((generator_index(a, true), generator_index(b, false)), Q::one());
            out.add_term((generator_index(b, false), generator_index(a, true)), Q::one());
        } else {
            out.add_term((generator_index(a, false), generator_index(b, false)), Q::one());
        }
    }
    out
}

pub(super) fn hopf(sym: &Sym, d: usize) -> Outcome {
    let all = superpartitions_upto(d);
    let mut n = 0;
    n += each(&all, |l| {
        let b = l.bidegree();
        let mut k = 0;
        for o in superpartitions(b) {
            let v = sym.hall(&el(SymBasis::Homogeneous, l), &el(SymBasis::Monomial, &o))?;
            let want = if *l == o { Q::one() } else { Q::zero() };
            k += ensure(v == want, || format!("⟨⟨h{l}, m{o}⟩⟩ = {v}"))?;
        }
        let oe = sym.convert(&sym.omega(&el(SymBasis::Elementary, l))?, SymBasis::Homogeneous)?;
        k += ensure(oe == el(SymBasis::Homogeneous, l), || format!("ω(e{l}) = {oe}"))?;

        let sign = Q::sign(b.n + b.m);
        let sm = sym.antipode(&el(SymBasis::Monomial, l))?;
        let om = sym.omega(&el(SymBasis::Monomial, l))?;
        k += ensure(sm.terms == om.terms.scale(&sign), || format!("S(m{l}) ≠ (-1)^(m+n) ω(m{l})"))?;

        let se = sym.convert(&sym.antipode(&el(SymBasis::Elementary, l))?, SymBasis::Homogeneous)?;
        let want = el(SymBasis::Homogeneous, l).terms.scale(&sign);
        k += ensure(se.terms == want, || format!("S(e{l}) = {se}"))?;

        let dp = sym.comul(&el(SymBasis::Power, l))?;
        k += ensure(twist(&dp.terms) == dp.terms, || format!("Δp{l} is not twist-invariant"))?;
        Ok(k)
    })?;

    for (basis, name) in [(SymBasis::Elementary, "e"), (SymBasis::Homogeneous, "h")] {
        for fermionic in [false, true] {
            let range = if fermionic { 0..d } else { 1..d + 1 };
            for k in range {
                let g = generator_index(k, fermionic);
                let got = sym.comul(&el(basis, &g))?;
                let got = sym.convert_tensor(&got, basis)?;
                let want = generator_coproduct(k, fermionic);
                n += ensure(got.terms == want, || format!("Δ{name}{g} = {:?}", got.terms))?;
            }
        }
    }
    Ok(n)
}

fn to_p(sym: &Sym, b: Bidegree, f: &SymComb<RationalFunction>) -> Result<SymComb<RationalFunction>, Failure> {
    let t = sym.transition(b, SymBasis::Power)?;
    let mut out = SymComb::zero();
    for (l, c) in f {
        let j = t.position(l).expect("index of its own bidegree");
        for (i, target) in t.index.iter().enumerate() {
            let x = &t.from_m[(i, j)];
            if !x.is_zero() {
                out.add_term(target.clone(), c.clone() * RationalFunction::constant(x.clone()));
            }
        }
    }
    Ok(out)
}

fn macdonald_checks(sym: &Sym, b: Bidegree) -> Outcome {
    let index = superpartitions(b);
    let spec = Specialization::Diagonal;
    let polys = sym.macdonald_bidegree(b, &spec)?;
    let mut n = ensure(is_unitriangular(&index, &polys), || format!("P in bidegree {b} is not unitriangular"))?;
    let in_p: Vec<_> = polys.iter().map(|p| to_p(sym, b, p)).collect::<Result<_, _>>()?;
    for i in 0..index.len() {
        for j in i + 1..index.len() {
            let v = deformed_scalar(&in_p[i], &in_p[j], &spec);
            n += ensure(v.is_zero(), || format!("⟨P{}, P{}⟩ = {v}", index[i], index[j]))?;
        }
    }
    for (l, p) in index.iter().zip(polys.iter()) {
        let s = limit(p, true)?;
        let sb = limit(p, false)?;
        n += ensure(sym.schur(l)?.terms == s, || format!("s{l} is not the u → 0 limit"))?;
        n += ensure(sym.schur_bar(l)?.terms == sb, || format!("sb{l} is not the u → ∞ limit"))?;
    }
    // The limits do not depend on the ray t = c·q along which they are taken.
    if b.weight() <= 3 {
        for c in [Q::from_integer(2.into()), Q::new(1.into(), 3.into())] {
            let ray = sym.macdonald_bidegree(b, &Specialization::Ray(c.clone()))?;
            for ((l, p), r) in index.iter().zip(polys.iter()).zip(ray.iter()) {
                for zero in [true, false] {
                    n += ensure(limit(p, zero)? == limit(r, zero)?, || {
                        format!("limit of P{l} along t = {c}·q differs (zero = {zero})")
                    })?;
                }
            }
        }
    }
    Ok(n)
}

fn conjugate_keys(f: &SymComb<Q>) -> SymComb<Q> {
    f.iter().map(|(l, c)| (l.conjugate(), c.clone())).collect()
}

pub(super) fn schur(sym: &Sym, d: usize) -> Outcome {
    let bidegrees: Vec<Bidegree> = (0..=d).flat_map(Bidegree::of_weight).collect();
    let mut n = each(&bidegrees, |&b| macdonald_checks(sym, b))?;

    let all = superpartitions_upto(d);
    n += each(&all, |l| {
        let mut k = 0;
        for o in superpartitions(l.bidegree()) {
            let want = if *l == o { Q::one() } else { Q::zero() };
            let a = sym.hall(&el(SymBasis::DualSchur, l), &el(SymBasis::Schur, &o))?;
            let c = sym.hall(&el(SymBasis::DualSchurBar, l), &el(SymBasis::SchurBar, &o))?;
            k += ensure(a == want, || format!("⟨⟨s*{l}, s{o}⟩⟩ = {a}"))?;
            k += ensure(c == want, || format!("⟨⟨sb*{l}, sb{o}⟩⟩ = {c}"))?;
        }
        for family in [SymBasis::Schur, SymBasis::SchurBar] {
            let via_skew = sym.comul_schur(family, l)?;
            let generic = sym.comul(&el(family, l))?;
            k += ensure(via_skew == generic, || format!("Δ{family}{l} via skew functions differs"))?;
        }
        Ok(k)
    })?;

    let mut pairs = Vec::new();
    for o in &all {
        for g in &all {
            if o.bidegree().weight() + g.bidegree().weight() <= d {
                pairs.push((o.clone(), g.clone()));
            }
        }
    }
    n += each(&pairs, |(o, g)| {
        let c = sym.lr_coeffs(SymBasis::Schur, o, g)?;
        let c_conj = sym.lr_coeffs(SymBasis::Schur, &g.conjugate(), &o.conjugate())?;
        let mut k = ensure(conjugate_keys(&c) == c_conj, || format!("c^Λ_{{{o},{g}}} ≠ c^Λ'_{{{g}',{o}'}}"))?;
        let b = o.bidegree() + g.bidegree();
        for family in [SymBasis::Schur, SymBasis::SchurBar] {
            let prod = sym.mul(&el(family, o), &el(family, g))?;
            let og = SymTensor {
                basis: family,
                terms: TensorComb::basis((o.clone(), g.clone())),
            };
            for l in superpartitions(b) {
                let f = el(family, &l);
                let lhs = sym.hall_tensor(&sym.comul(&f)?, &og)?;
                let rhs = sym.hall(&f, &prod)?;
                k += ensure(lhs == rhs, || format!("⟨⟨Δ{family}{l}, {family}{o}⊗{family}{g}⟩⟩ ≠ ⟨⟨{family}{l}, product⟩⟩"))?;
            }
        }
        Ok(k)
    })?;

    n += classical(sym, d)?;
    Ok(n)
}

fn bosonic(lambda: &[usize]) -> SuperPartition {
    SuperPartition::new(vec![], lambda.to_vec()).expect("partition")
}

/// The `m = 0` sector against tableau counts.
fn classical(sym: &Sym, d: usize) -> Outcome {
    let mut n = 0;
    for k in 0..=d {
        for lambda in partitions(k) {
            let l = bosonic(&lambda);
            let s = sym.schur(&l)?;
            let sb = sym.schur_bar(&l)?;
            for mu in partitions(k) {
                let want = Q::from_integer((kostka(&lambda, &mu) as i64).into());
                let o = bosonic(&mu);
                n += ensure(s.terms.coeff(&o) == want, || format!("Kostka number K({l}, {o})"))?;
                n += ensure(sb.terms.coeff(&o) == want, || format!("Kostka number for sb at ({l}, {o})"))?;
            }
        }
    }
    let all: Vec<Vec<usize>> = (0..=d).flat_map(partitions).collect();
    for lambda in &all {
        for mu in &all {
            let total: usize = lambda.iter().sum::<usize>() + mu.iter().sum::<usize>();
            if total > d {
                continue;
            }
            let vars = total.max(1);
            let lhs = schur_polynomial::<Q>(lambda, vars).mul(&schur_polynomial(mu, vars));
            let c = sym.lr_coeffs(SymBasis::Schur, &bosonic(lambda), &bosonic(mu))?;
            let mut rhs = SuperPolynomial::zero(vars);
            for (nu, coeff) in &c {
                rhs = rhs.add(&schur_polynomial::<Q>(nu.symmetric_parts(), vars).scale(coeff));
            }
            n += ensure(lhs.sub(&rhs).is_zero(), || format!("classical LR for {lambda:?}·{mu:?}"))?;
        }
    }
    Ok(n)
}

fn expand_in(f: &SymComb<Q>, vars: usize) -> Result<SuperPolynomial<Q>, Failure> {
    Ok(expand_sym(&f.filter(|l| l.length() <= vars), vars)?)
}

fn cauchy_kernel(vars: usize, d: usize) -> SuperPolynomial<Q> {
    let total = 2 * vars;
    let mut kernel = SuperPolynomial::<Q>::one(total);
    for i in 0..vars {
        for j in 0..vars {
            let y = vars + j;
            // 1/(1 - a - b) = Σ_k a^k + k a^{k-1} b, since b = θφ squares to zero.
            let mut factor = SuperPolynomial::zero(total);
            for k in 0..=d {
                let mut exps = vec![0u16; total];
                exps[i] = k as u16;
                exps[y] = k as u16;
                factor = factor.add(&SuperPolynomial::term(total, &[], &exps, Q::one()));
                if k > 0 {
                    exps[i] = (k - 1) as u16;
                    exps[y] = (k - 1) as u16;
                    let c = Q::from_integer((k as i64).into());
                    factor = factor.add(&SuperPolynomial::term(total, &[i, y], &exps, c));
                }
            }
            kernel = kernel.mul(&factor).truncate_weight(2 * d);
        }
    }
    kernel
}

/// The part of `p` of bidegree `b` in the first alphabet.
fn component(p: &SuperPolynomial<Q>, vars: usize, b: Bidegree) -> SuperPolynomial<Q> {
    let mut out = SuperPolynomial::zero(p.num_vars());
    for (m, c) in p.terms() {
        let n: usize = m.exponents()[..vars].iter().map(|&e| e as usize).sum();
        let odd = (0..vars).filter(|&i| m.has_theta(i)).count();
        if n == b.n && odd == b.m {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// `∏ 1/(1 - x_i y_j - θ_i φ_j)` against `Σ ε_Λ s_Λ(x;θ) s*_Λ(y;φ)` and
/// `Σ ε_Λ s̄_Λ(x;θ) s̄*_Λ(y;φ)`, one bidegree at a time: every bidegree up to
/// weight `d` in two variables per alphabet, then (3|3) in three. With
/// `signed`, `ε_Λ = (-1)^{C(m,2)}`; otherwise 1.
pub(super) fn cauchy(sym: &Sym, d: usize, signed: bool) -> Outcome {
    let small: Vec<Bidegree> = (0..=d).flat_map(Bidegree::of_weight).collect();
    let n = cauchy_in(sym, 2, d, &small, signed)?;
    Ok(n + cauchy_in(sym, 3, 6, &[Bidegree::new(3, 3)], signed)?)
}

fn cauchy_in(sym: &Sym, vars: usize, d: usize, bidegrees: &[Bidegree], signed: bool) -> Outcome {
    let total = 2 * vars;
    let kernel = cauchy_kernel(vars, d);
    let mut n = 0;
    for (family, dual) in [(SymBasis::Schur, SymBasis::DualSchur), (SymBasis::SchurBar, SymBasis::DualSchurBar)] {
        for &b in bidegrees {
            let mut sum = SuperPolynomial::zero(total);
            for l in superpartitions(b) {
                let x = expand_in(&sym.convert(&el(family, &l), SymBasis::Monomial)?.terms, vars)?;
                let y = expand_in(&sym.convert(&el(dual, &l), SymBasis::Monomial)?.terms, vars)?;
                let eps = if signed { Q::sign(b.m * b.m.saturating_sub(1) / 2) } else { Q::one() };
                sum = sum.add(&x.embed(0, total).mul(&y.embed(vars, total)).scale(&eps));
            }
            n += ensure(component(&kernel, vars, b).sub(&sum).is_zero(), || {
                format!("Cauchy kernel and Σ {family}(x) {dual}(y) differ in bidegree {b}")
            })?;
        }
    }
    Ok(n)
}
