//! Sign-twisted tensor algebra over a graded basis.
//!
//! Tensors are linear combinations of ordered index pairs. The product on
//! `A ⊗ A` is `(f1 ⊗ g1)(f2 ⊗ g2) = (-1)^{|g1||f2|} f1 f2 ⊗ g1 g2`, where `|x|`
//! is the fermionic degree.

use super::coeff::Coeff;
use super::lincomb::LinComb;

pub type TensorComb<I, C> = LinComb<(I, I), C>;

/// Linear combination over index triples, for coassociativity checks.
pub type Tensor3Comb<I, C> = LinComb<(I, I, I), C>;

/// Basis indices carrying a fermionic (Z/2) grading.
pub trait Graded {
    fn fermionic_degree(&self) -> usize;
}

fn odd_pair<I: Graded>(a: &I, b: &I) -> bool {
    a.fermionic_degree() * b.fermionic_degree() % 2 == 1
}

/// `a ⊗ b` for two linear combinations.
pub fn outer<I: Ord + Clone, C: Coeff>(a: &LinComb<I, C>, b: &LinComb<I, C>) -> TensorComb<I, C> {
    let mut out = TensorComb::zero();
    for (i, ci) in a {
        for (j, cj) in b {
            out.add_term((i.clone(), j.clone()), ci.clone() * cj.clone());
        }
    }
    out
}

/// Product in the twisted tensor algebra, given the product on each leg.
pub fn tensor_mul<I, C, F>(s: &TensorComb<I, C>, t: &TensorComb<I, C>, mut leg: F) -> TensorComb<I, C>
where
    I: Ord + Clone + Graded,
    C: Coeff,
    F: FnMut(&I, &I) -> LinComb<I, C>,
{
    let mut out = TensorComb::zero();
    for ((f1, g1), c1) in s {
        for ((f2, g2), c2) in t {
            let left = leg(f1, f2);
            if left.is_zero() {
                continue;
            }
            let right = leg(g1, g2);
            let scale = (c1.clone() * c2.clone()).signed(odd_pair(g1, f2));
            for (a, ca) in &left {
                for (b, cb) in &right {
                    out.add_term(
                        (a.clone(), b.clone()),
                        scale.clone() * ca.clone() * cb.clone(),
                    );
                }
            }
        }
    }
    out
}

/// The twist `g ⊗ h ↦ (-1)^{|g||h|} h ⊗ g`.
pub fn twist<I, C>(s: &TensorComb<I, C>) -> TensorComb<I, C>
where
    I: Ord + Clone + Graded,
    C: Coeff,
{
    s.iter()
        .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone().signed(odd_pair(a, b))))
        .collect()
}

/// Applies even linear maps to the two legs independently.
pub fn map_legs<I, J, C, F, G>(s: &TensorComb<I, C>, mut left: F, mut right: G) -> TensorComb<J, C>
where
    I: Ord + Clone,
    J: Ord + Clone,
    C: Coeff,
    F: FnMut(&I) -> LinComb<J, C>,
    G: FnMut(&I) -> LinComb<J, C>,
{
    let mut out = TensorComb::zero();
    for ((a, b), c) in s {
        let la = left(a);
        if la.is_zero() {
            continue;
        }
        out.add_scaled(&outer(&la, &right(b)), c);
    }
    out
}

/// Contracts a tensor with the product map.
pub fn contract<I, C, F>(s: &TensorComb<I, C>, mut mul: F) -> LinComb<I, C>
where
    I: Ord + Clone,
    C: Coeff,
    F: FnMut(&I, &I) -> LinComb<I, C>,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in s {
        out.add_scaled(&mul(a, b), c);
    }
    out
}

/// `(Δ ⊗ id)` applied to a tensor.
pub fn expand_left<I, C, F>(s: &TensorComb<I, C>, mut comul: F) -> Tensor3Comb<I, C>
where
    I: Ord + Clone,
    C: Coeff,
    F: FnMut(&I) -> TensorComb<I, C>,
{
    let mut out = Tensor3Comb::zero();
    for ((a, b), c) in s {
        for ((a1, a2), ca) in &comul(a) {
            out.add_term((a1.clone(), a2.clone(), b.clone()), ca.clone() * c.clone());
        }
    }
    out
}

/// `(id ⊗ Δ)` applied to a tensor.
pub fn expand_right<I, C, F>(s: &TensorComb<I, C>, mut comul: F) -> Tensor3Comb<I, C>
where
    I: Ord + Clone,
    C: Coeff,
    F: FnMut(&I) -> TensorComb<I, C>,
{
    let mut out = Tensor3Comb::zero();
    for ((a, b), c) in s {
        for ((b1, b2), cb) in &comul(b) {
            out.add_term((a.clone(), b1.clone(), b2.clone()), cb.clone() * c.clone());
        }
    }
    out
}

/// Sign rule used when pairing `f ⊗ g` against `a ⊗ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingSign {
    /// `⟨f⊗g, a⊗b⟩ = ⟨f,a⟩⟨g,b⟩`. This is the rule under which the
    /// concatenation product and the twisted coproduct are dual, and under
    /// which `Λ` is self-dual.
    Plain,
    /// `⟨f⊗g, a⊗b⟩ = (-1)^{|g||a|}⟨f,a⟩⟨g,b⟩`, the twist applied to the
    /// middle factors.
    Koszul,
}

/// Bilinear extension of a pairing on single indices to tensors.
pub fn paired<J, I, C, F>(mut phi: F, s: &TensorComb<J, C>, t: &TensorComb<I, C>, sign: PairingSign) -> C
where
    J: Ord + Clone + Graded,
    I: Ord + Clone + Graded,
    C: Coeff,
    F: FnMut(&J, &I) -> C,
{
    let mut total = C::zero();
    for ((f, g), cs) in s {
        for ((a, b), ct) in t {
            let left = phi(f, a);
            if left.is_zero() {
                continue;
            }
            let right = phi(g, b);
            if right.is_zero() {
                continue;
            }
            let negative = match sign {
                PairingSign::Plain => false,
                PairingSign::Koszul => g.fermionic_degree() * a.fermionic_degree() % 2 == 1,
            };
            total = total + (cs.clone() * ct.clone() * left * right).signed(negative);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::DottedComposition;
    use proptest::prelude::*;

    type T = TensorComb<DottedComposition, i64>;

    fn dc(s: &str) -> DottedComposition {
        s.parse().unwrap()
    }

    fn t(terms: &[(&str, &str, i64)]) -> T {
        terms.iter().map(|&(a, b, c)| ((dc(a), dc(b)), c)).collect()
    }

    // Free graded-commutative toy product: concatenate, then sort parts with
    // the Koszul sign, vanishing on repeated dotted parts.
    fn leg(a: &DottedComposition, b: &DottedComposition) -> LinComb<DottedComposition, i64> {
        let mut parts = a.concat(b).parts().to_vec();
        let mut negative = false;
        for i in 1..parts.len() {
            let mut j = i;
            while j > 0 && parts[j - 1] > parts[j] {
                if parts[j - 1].dotted && parts[j].dotted {
                    negative = !negative;
                }
                parts.swap(j - 1, j);
                j -= 1;
            }
        }
        if parts.windows(2).any(|w| w[0] == w[1] && w[0].dotted) {
            return LinComb::zero();
        }
        LinComb::term(DottedComposition::new(parts).unwrap(), 1i64.signed(negative))
    }

    #[test]
    fn twisted_products() {
        assert_eq!(tensor_mul(&t(&[("", "0.", 1)]), &t(&[("0.", "", 1)]), leg), t(&[("0.", "0.", -1)]));
        assert_eq!(tensor_mul(&t(&[("", "1", 1)]), &t(&[("1", "", 1)]), leg), t(&[("1", "1", 1)]));
        let prim = t(&[("0.", "", 1), ("", "0.", 1)]);
        assert!(tensor_mul(&prim, &prim, leg).is_zero());
    }

    #[test]
    fn pairing_signs() {
        let delta = |a: &DottedComposition, b: &DottedComposition| if a == b { 1i64 } else { 0 };
        let s = t(&[("0.", "1", 1)]);
        assert_eq!(paired(delta, &s, &s, PairingSign::Plain), 1);
        assert_eq!(paired(delta, &s, &s, PairingSign::Koszul), 1);
        let s = t(&[("1", "0.", 1)]);
        let u = t(&[("1", "0.", 1)]);
        assert_eq!(paired(delta, &s, &u, PairingSign::Koszul), 1);
        let s = t(&[("0.", "1.", 1)]);
        assert_eq!(paired(delta, &s, &s, PairingSign::Plain), 1);
        assert_eq!(paired(delta, &s, &s, PairingSign::Koszul), -1);
        let s = t(&[("1", "2", 1)]);
        assert_eq!(paired(delta, &s, &s, PairingSign::Koszul), 1);
    }

    #[test]
    fn twist_is_an_involution() {
        let s = t(&[("0.", "1.", 2), ("1", "0.", -3), ("", "2.", 1)]);
        assert_eq!(twist(&twist(&s)), s);
        assert_eq!(twist(&t(&[("0.", "1.", 1)])), t(&[("1.", "0.", -1)]));
    }

    fn arb_tensor() -> impl Strategy<Value = T> {
        let part = (0usize..3, any::<bool>()).prop_map(|(v, d)| (v + usize::from(!d), d));
        let comp = prop::collection::vec(part, 0..2)
            .prop_map(|ps| DottedComposition::from_pairs(&ps).unwrap());
        prop::collection::vec((comp.clone(), comp, -2i64..3), 1..4)
            .prop_map(|v| v.into_iter().map(|(a, b, c)| ((a, b), c)).collect())
    }

    proptest! {
        #[test]
        fn tensor_product_is_associative(a in arb_tensor(), b in arb_tensor(), c in arb_tensor()) {
            let left = tensor_mul(&tensor_mul(&a, &b, leg), &c, leg);
            let right = tensor_mul(&a, &tensor_mul(&b, &c, leg), leg);
            prop_assert_eq!(left, right);
        }
    }
}
