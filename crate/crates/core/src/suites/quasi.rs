//! sQSym Hopf identities and the polynomial oracle.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::{compositions_upto, each, ensure, weight_of, Failure, Outcome};
use crate::combinatorics::DottedComposition;
use crate::kernel::{contract, expand_left, expand_right, tensor_mul, Coeff, LinComb, TensorComb};
use crate::oracle::{expand_qs_monomial, extract_qsym, extract_qsym_tensor, SuperPolynomial};
use crate::oracle;
use crate::qsym::{self, RecursiveAntipode};
use crate::sym::{generator, Family};
use crate::Q;

type E = LinComb<DottedComposition, Q>;

fn basis(a: &DottedComposition) -> E {
    LinComb::basis(a.clone())
}

fn pairs_upto(all: &[DottedComposition], d: usize) -> Vec<(DottedComposition, DottedComposition)> {
    let mut out = Vec::new();
    for a in all {
        for b in all {
            if weight_of(a) + weight_of(b) <= d {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

pub(super) fn hopf(d: usize, seed: u64) -> Outcome {
    let all = compositions_upto(d);
    let mut n = 0;

    n += each(&all, |a| {
        let delta = qsym::comul_basis::<Q>(a);
        let unit = if a.is_empty() { basis(a) } else { E::zero() };
        let left = contract(&delta, |x, y| qsym::mul(&qsym::antipode_basis(x), &basis(y)));
        let right = contract(&delta, |x, y| qsym::mul(&basis(x), &qsym::antipode_basis(y)));
        let mut k = ensure(left == unit, || format!("mul(S⊗id)Δ M{a} = {left}"))?;
        k += ensure(right == unit, || format!("mul(id⊗S)Δ M{a} = {right}"))?;
        let l3 = expand_left(&delta, qsym::comul_basis::<Q>);
        let r3 = expand_right(&delta, qsym::comul_basis::<Q>);
        k += ensure(l3 == r3, || format!("coassociativity fails on M{a}"))?;
        Ok(k)
    })?;

    // The recursion is sequential by nature; one memo serves every index.
    let mut rec = RecursiveAntipode::<Q>::new();
    for a in &all {
        let closed = qsym::antipode_basis::<Q>(a);
        let recursive = rec.apply(a);
        n += ensure(closed == recursive, || {
            format!("antipode of M{a}: closed form {closed}, recursion {recursive}")
        })?;
    }

    let pairs = pairs_upto(&all, d);
    n += each(&pairs, |(a, b)| {
        let ab = qsym::mul_basis::<Q>(a, b);
        let ba = qsym::mul_basis::<Q>(b, a);
        let sign = Q::sign(a.fermionic_degree() * b.fermionic_degree());
        let mut k = ensure(ab == ba.scale(&sign), || format!("M{a}·M{b} is not signed-commutative"))?;
        let lhs = qsym::comul(&ab);
        let rhs = tensor_mul(&qsym::comul_basis(a), &qsym::comul_basis(b), qsym::mul_basis);
        k += ensure(lhs == rhs, || format!("Δ(M{a}·M{b}) ≠ ΔM{a}·ΔM{b}"))?;
        Ok(k)
    })?;

    // S(fg) = (-1)^{|f||g|} S(g)S(f), sampled.
    let mut rng = StdRng::seed_from_u64(seed);
    let sample: Vec<_> = pairs.choose_multiple(&mut rng, 200.min(pairs.len())).cloned().collect();
    n += each(&sample, |(a, b)| {
        let lhs = qsym::antipode(&qsym::mul_basis::<Q>(a, b));
        let sign = Q::sign(a.fermionic_degree() * b.fermionic_degree());
        let rhs = qsym::mul(&qsym::antipode_basis(b), &qsym::antipode_basis(a)).scale(&sign);
        ensure(lhs == rhs, || format!("S(M{a}·M{b}) is not the signed reversed product"))
    })?;

    Ok(n)
}

fn poly_eq<C: Coeff>(a: &SuperPolynomial<C>, b: &SuperPolynomial<C>) -> bool {
    a.sub(b).is_zero()
}

pub(super) fn oracle(d: usize) -> Outcome {
    let all = compositions_upto(d);
    let mut n = 0;

    let pairs = pairs_upto(&all, d);
    n += each(&pairs, |(a, b)| {
        let vars = weight_of(a) + weight_of(b) + 1;
        let p = expand_qs_monomial::<Q>(a, vars)?.mul(&expand_qs_monomial(b, vars)?);
        let got = extract_qsym(&p)?;
        let want = qsym::mul_basis::<Q>(a, b);
        ensure(got == want, || format!("M{a}·M{b}: oracle {got}, shuffle rule {want}"))
    })?;

    n += each(&all, |a| {
        let vars = weight_of(a) + 1;
        let p = expand_qs_monomial::<Q>(a, 2 * vars)?;
        let got: TensorComb<DottedComposition, Q> = extract_qsym_tensor(&p)?;
        let want = qsym::comul_basis::<Q>(a);
        ensure(got == want, || format!("ΔM{a}: two-alphabet oracle disagrees"))
    })?;

    // d(p_{k+1}) = (k+1)p̃_k, d(e_{k+1}) = ẽ_k, d(h_{k+1}) = h̃_k.
    let vars = 6;
    let expand = |family: Family, k: usize, fermionic: bool| -> Result<SuperPolynomial<Q>, Failure> {
        let f = generator::<Q>(family, k, fermionic)
            .filter(|l| l.length() <= vars);
        Ok(oracle::expand_sym(&f, vars)?)
    };
    for k in 0..=d {
        for (family, scale) in [
            (Family::Power, Q::from_integer((k as i64 + 1).into())),
            (Family::Elementary, Q::from_integer(1.into())),
            (Family::Homogeneous, Q::from_integer(1.into())),
        ] {
            let lhs = expand(family, k + 1, false)?.act_d();
            let rhs = expand(family, k, true)?.scale(&scale);
            n += ensure(poly_eq(&lhs, &rhs), || format!("d relation for {family:?} at k = {k}"))?;
        }
    }
    Ok(n)
}
