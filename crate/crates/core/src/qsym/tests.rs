use super::*;
use crate::combinatorics::{dotted_compositions, Bidegree};
use crate::kernel::tensor_mul;
use crate::oracle::{expand_qs_monomial, extract_qsym};

type E = LinComb<DottedComposition, i64>;

fn dc(s: &str) -> DottedComposition {
    s.parse().unwrap()
}

fn sp(s: &str) -> SuperPartition {
    s.parse().unwrap()
}

fn el(terms: &[(&str, i64)]) -> E {
    terms.iter().map(|&(s, c)| (dc(s), c)).collect()
}

#[test]
fn product_example() {
    let got: E = mul_basis(&dc("3.,2"), &dc("4.,1"));
    let want = el(&[
        ("3.,2,4.,1", 1),
        ("3.,6.,1", 1),
        ("3.,4.,2,1", 1),
        ("3.,4.,3", 1),
        ("3.,4.,1,2", 1),
        ("4.,3.,2,1", -1),
        ("4.,3.,3", -1),
        ("4.,3.,1,2", -1),
        ("4.,4.,2", -1),
        ("4.,1,3.,2", -1),
    ]);
    assert_eq!(got, want);
    assert_eq!(mul_basis::<i64>(&dc(""), &dc("2.,1")), el(&[("2.,1", 1)]));
    assert_eq!(mul_basis::<i64>(&dc("1"), &dc("1")), el(&[("2", 1), ("1,1", 2)]));
    assert!(mul_basis::<i64>(&dc("0."), &dc("0.")).is_zero());
}

#[test]
fn small_products_match_oracle() {
    for (a, b) in [("1", "1"), ("0.", "1"), ("1.", "0."), ("2,1.", "1")] {
        let (a, b) = (dc(a), dc(b));
        let n = a.size() + b.size() + a.fermionic_degree() + b.fermionic_degree() + 1;
        let p = expand_qs_monomial::<i64>(&a, n)
            .unwrap()
            .mul(&expand_qs_monomial(&b, n).unwrap());
        assert_eq!(extract_qsym(&p).unwrap(), mul_basis(&a, &b));
    }
}

#[test]
fn coproduct_example() {
    let got: TensorComb<DottedComposition, i64> = comul_basis(&dc("2.,1,3.,4"));
    let want: TensorComb<DottedComposition, i64> = [
        ("", "2.,1,3.,4"),
        ("2.", "1,3.,4"),
        ("2.,1", "3.,4"),
        ("2.,1,3.", "4"),
        ("2.,1,3.,4", ""),
    ]
    .iter()
    .map(|&(a, b)| ((dc(a), dc(b)), 1))
    .collect();
    assert_eq!(got, want);
    assert_eq!(comul_basis::<i64>(&dc("")).len(), 1);
    assert_eq!(comul_basis::<i64>(&dc("3.")).len(), 2);
}

#[test]
fn counit_examples() {
    assert_eq!(counit(&el(&[("", 1)])), 1);
    assert_eq!(counit(&el(&[("2,1", 1)])), 0);
    assert_eq!(counit(&el(&[("", 3), ("1.", 2)])), 3);
}

#[test]
fn antipode_examples() {
    assert_eq!(
        antipode_basis::<i64>(&dc("1.,3,2.")),
        el(&[("2.,3,1.", 1), ("5.,1.", 1), ("2.,4.", 1)])
    );
    assert_eq!(antipode_basis::<i64>(&dc("4")), el(&[("4", -1)]));
    assert_eq!(antipode_basis::<i64>(&dc("4.")), el(&[("4.", -1)]));
    let s: E = antipode_basis(&dc("3.,2,2.,1,1."));
    assert_eq!(s.len(), 9);
    assert!(s.iter().all(|(_, &c)| c == 1));
    assert_eq!(s, antipode_recursive(&dc("3.,2,2.,1,1.")));
    assert_eq!(antipode_recursive::<i64>(&dc("")), el(&[("", 1)]));
    assert_eq!(antipode_recursive::<i64>(&dc("1.")), el(&[("1.", -1)]));
}

#[test]
fn closed_antipode_matches_recursion_small() {
    let mut rec = RecursiveAntipode::<i64>::new();
    for w in 0..=4 {
        for b in Bidegree::of_weight(w) {
            for a in dotted_compositions(b) {
                assert_eq!(antipode_basis::<i64>(&a), rec.apply(&a), "{a}");
            }
        }
    }
}

#[test]
fn fundamental_examples() {
    let l: E = fundamental(&dc("3,4.,2"));
    let want = el(&[
        ("3,4.,2", 1),
        ("2,1,4.,2", 1),
        ("1,2,4.,2", 1),
        ("1,1,1,4.,2", 1),
        ("3,4.,1,1", 1),
        ("2,1,4.,1,1", 1),
        ("1,2,4.,1,1", 1),
        ("1,1,1,4.,1,1", 1),
    ]);
    assert_eq!(l, want);

    let lb: E = fundamental_bar(&dc("2.,2"));
    let want = el(&[
        ("2.,2", 1),
        ("0.,2,2", 1),
        ("2,0.,2", 1),
        ("1.,1,2", 1),
        ("1,1.,2", 1),
        ("0.,1,1,2", 1),
        ("1,0.,1,2", 1),
        ("1,1,0.,2", 1),
        ("2.,1,1", 1),
        ("0.,2,1,1", 1),
        ("2,0.,1,1", 1),
        ("1.,1,1,1", 1),
        ("1,1.,1,1", 1),
        ("0.,1,1,1,1", 1),
        ("1,0.,1,1,1", 1),
        ("1,1,0.,1,1", 1),
    ]);
    assert_eq!(lb, want);
    assert_eq!(fundamental::<i64>(&dc("2")), el(&[("2", 1), ("1,1", 1)]));
}

#[test]
fn fundamental_inverse() {
    for a in dotted_compositions(Bidegree::new(3, 1)) {
        for order in [Refinement::Strong, Refinement::Weak] {
            let f: E = match order {
                Refinement::Strong => fundamental(&a),
                Refinement::Weak => fundamental_bar(&a),
            };
            assert_eq!(to_fundamental(&f, order), LinComb::basis(a.clone()));
        }
    }
}

#[test]
fn iota_examples() {
    let one = |s: &str| LinComb::<SuperPartition, i64>::basis(sp(s));
    assert_eq!(iota(&one(";2,1")), el(&[("2,1", 1), ("1,2", 1)]));
    assert_eq!(iota(&one("1,0;")), el(&[("1.,0.", 1), ("0.,1.", -1)]));
    let six = iota(&one("2;3,1"));
    assert_eq!(six.len(), 6);
    assert!(six.iter().all(|(_, &c)| c == 1));
}

#[test]
fn to_m_round_trip() {
    for w in 0..=5 {
        for b in Bidegree::of_weight(w) {
            for l in crate::combinatorics::superpartitions(b) {
                let m = LinComb::<SuperPartition, i64>::basis(l);
                assert_eq!(to_m(&iota(&m)).unwrap(), m);
            }
        }
    }
    assert!(matches!(to_m(&el(&[("1,2", 1)])), Err(Error::NotSymmetric(_))));
    let f = el(&[("2", 1), ("1,1", 2), ("1,2", 1), ("2,1", 1)]);
    let want: LinComb<SuperPartition, i64> =
        [(sp(";2"), 1), (sp(";1,1"), 2), (sp(";2,1"), 1)].into_iter().collect();
    assert_eq!(to_m(&f).unwrap(), want);
}

#[test]
fn coproduct_is_multiplicative_small() {
    let (a, b) = (dc("1.,1"), dc("0.,2"));
    let lhs = comul(&mul_basis::<i64>(&a, &b));
    let rhs = tensor_mul(&comul_basis(&a), &comul_basis(&b), mul_basis);
    assert_eq!(lhs, rhs);
}
