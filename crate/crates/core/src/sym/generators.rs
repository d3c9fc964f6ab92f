//! The `m` basis and the multiplicative bases `p`, `e`, `h` on top of it.

use crate::combinatorics::{superpartitions, Bidegree, SuperPartition};
use crate::kernel::{from_int, Coeff, LinComb};
use crate::qsym;

pub type SymComb<C> = LinComb<SuperPartition, C>;

/// Families of multiplicative generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Power,
    Elementary,
    Homogeneous,
}

fn sp(fermionic: Vec<usize>, symmetric: Vec<usize>) -> SuperPartition {
    SuperPartition::new(fermionic, symmetric).expect("generator index")
}

/// `p_r, e_r, h_r` (`fermionic = false`, `r ≥ 1`) or `p̃_k, ẽ_k, h̃_k`
/// (`fermionic = true`, `k ≥ 0`) in the monomial basis.
pub fn generator<C: Coeff>(family: Family, k: usize, fermionic: bool) -> SymComb<C> {
    assert!(fermionic || k >= 1, "bosonic generators start at degree 1");
    match (family, fermionic) {
        (Family::Power, false) => LinComb::basis(sp(vec![], vec![k])),
        (Family::Power, true) => LinComb::basis(sp(vec![k], vec![])),
        (Family::Elementary, false) => LinComb::basis(sp(vec![], vec![1; k])),
        (Family::Elementary, true) => LinComb::basis(sp(vec![0], vec![1; k])),
        (Family::Homogeneous, false) => superpartitions(Bidegree::new(k, 0))
            .into_iter()
            .map(|l| (l, C::one()))
            .collect(),
        (Family::Homogeneous, true) => superpartitions(Bidegree::new(k, 1))
            .into_iter()
            .map(|l| {
                let c = from_int(l.fermionic_parts()[0] as i64 + 1);
                (l, c)
            })
            .collect(),
    }
}

/// Product in the `m` basis, computed inside sQSym.
pub fn mul_m<C: Coeff>(f: &SymComb<C>, g: &SymComb<C>) -> SymComb<C> {
    let prod = qsym::mul(&qsym::iota(f), &qsym::iota(g));
    qsym::to_m(&prod).expect("a product of symmetric functions is symmetric")
}

/// `g_Λ = g̃_{Λ_1}…g̃_{Λ_m} g_{Λ_{m+1}}…g_{Λ_ℓ}` in the monomial basis.
pub fn multiplicative_in_m<C: Coeff>(family: Family, lambda: &SuperPartition) -> SymComb<C> {
    let mut acc = LinComb::basis(SuperPartition::empty());
    for &k in lambda.fermionic_parts() {
        acc = mul_m(&acc, &generator(family, k, true));
    }
    for &r in lambda.symmetric_parts() {
        acc = mul_m(&acc, &generator(family, r, false));
    }
    acc
}

/// `p_Λ p_Ω` as a signed basis element, or `None` when a fermionic part repeats.
pub fn mul_p_basis(lambda: &SuperPartition, omega: &SuperPartition) -> Option<(SuperPartition, bool)> {
    let mut fermionic: Vec<usize> = lambda
        .fermionic_parts()
        .iter()
        .chain(omega.fermionic_parts())
        .copied()
        .collect();
    let mut inversions = 0;
    for i in 0..fermionic.len() {
        for j in i + 1..fermionic.len() {
            if fermionic[i] == fermionic[j] {
                return None;
            }
            inversions += (fermionic[i] < fermionic[j]) as usize;
        }
    }
    fermionic.sort_unstable_by(|a, b| b.cmp(a));
    let mut symmetric: Vec<usize> = lambda
        .symmetric_parts()
        .iter()
        .chain(omega.symmetric_parts())
        .copied()
        .collect();
    symmetric.sort_unstable_by(|a, b| b.cmp(a));
    Some((SuperPartition::new(fermionic, symmetric).ok()?, inversions % 2 == 1))
}

pub fn mul_p_basis_comb<C: Coeff>(lambda: &SuperPartition, omega: &SuperPartition) -> SymComb<C> {
    match mul_p_basis(lambda, omega) {
        Some((l, neg)) => LinComb::term(l, C::one().signed(neg)),
        None => LinComb::zero(),
    }
}

pub fn mul_p<C: Coeff>(f: &SymComb<C>, g: &SymComb<C>) -> SymComb<C> {
    let mut out = LinComb::zero();
    for (a, ca) in f {
        for (b, cb) in g {
            if let Some((l, neg)) = mul_p_basis(a, b) {
                out.add_term(l, (ca.clone() * cb.clone()).signed(neg));
            }
        }
    }
    out
}

/// `ω(p_Λ) = (-1)^{|Λ| - ℓ(Λˢ)} p_Λ`.
pub fn omega_p<C: Coeff>(f: &SymComb<C>) -> SymComb<C> {
    f.iter()
        .map(|(l, c)| {
            let k = l.total_degree() - l.symmetric_parts().len();
            (l.clone(), c.clone().signed(k % 2 == 1))
        })
        .collect()
}

/// `S(p_Λ) = (-1)^{ℓ(Λ)} p_Λ`.
pub fn antipode_p<C: Coeff>(f: &SymComb<C>) -> SymComb<C> {
    f.iter()
        .map(|(l, c)| (l.clone(), c.clone().signed(l.length() % 2 == 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = SymComb<i64>;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    fn el(terms: &[(&str, i64)]) -> E {
        terms.iter().map(|&(s, c)| (sp(s), c)).collect()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(generator::<i64>(Family::Elementary, 2, true), el(&[("0;1,1", 1)]));
        assert_eq!(generator::<i64>(Family::Homogeneous, 2, false), el(&[(";2", 1), (";1,1", 1)]));
        assert_eq!(generator::<i64>(Family::Homogeneous, 1, true), el(&[("1;", 2), ("0;1", 1)]));
        assert_eq!(generator::<i64>(Family::Power, 0, true), el(&[("0;", 1)]));
    }

    #[test]
    fn products_in_m() {
        let m = |s: &str| el(&[(s, 1)]);
        assert!(mul_m(&m("0;"), &m("0;")).is_zero());
        assert_eq!(mul_m(&m(";1"), &m(";1")), el(&[(";2", 1), (";1,1", 2)]));
        assert_eq!(mul_m(&m("0;"), &m("1;")), -mul_m(&m("1;"), &m("0;")));
        assert_eq!(multiplicative_in_m::<i64>(Family::Power, &sp("0;1")), el(&[("1;", 1), ("0;1", 1)]));
        assert_eq!(multiplicative_in_m::<i64>(Family::Elementary, &sp(";1,1")), el(&[(";2", 1), (";1,1", 2)]));
        assert_eq!(multiplicative_in_m::<i64>(Family::Power, &sp(";")), el(&[(";", 1)]));
    }

    #[test]
    fn power_sum_products() {
        assert_eq!(mul_p_basis(&sp("0;"), &sp("1;2")), Some((sp("1,0;2"), true)));
        assert_eq!(mul_p_basis(&sp("1;"), &sp("0;")), Some((sp("1,0;"), false)));
        assert_eq!(mul_p_basis(&sp("1;"), &sp("1;")), None);
        // closed form agrees with the monomial product
        for (a, b) in [("0;", "2;"), ("1;1", "0;"), ("2,0;", "1;1")] {
            let (a, b) = (sp(a), sp(b));
            let lhs = multiplicative_in_m::<i64>(Family::Power, &a);
            let rhs = multiplicative_in_m::<i64>(Family::Power, &b);
            let want = match mul_p_basis(&a, &b) {
                Some((l, neg)) => {
                    let v = multiplicative_in_m::<i64>(Family::Power, &l);
                    if neg { -v } else { v }
                }
                None => LinComb::zero(),
            };
            assert_eq!(mul_m(&lhs, &rhs), want);
        }
    }

    #[test]
    fn omega_and_antipode_signs() {
        assert_eq!(omega_p(&el(&[(";2", 1)])), el(&[(";2", -1)]));
        assert_eq!(omega_p(&el(&[("0;", 1)])), el(&[("0;", 1)]));
        assert_eq!(antipode_p(&el(&[("1,0;", 1)])), el(&[("1,0;", 1)]));
    }
}
