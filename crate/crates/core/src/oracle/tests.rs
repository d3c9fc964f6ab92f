use proptest::prelude::*;

use super::*;
use crate::combinatorics::{dotted_compositions, superpartitions, Bidegree};

type P = SuperPolynomial<i64>;

fn dc(s: &str) -> DottedComposition {
    s.parse().unwrap()
}

fn sp(s: &str) -> SuperPartition {
    s.parse().unwrap()
}

/// Sum of `θ_{thetas} x^{exps}` terms with one-based indices.
/// `(θ indices, [(variable, exponent)])` per term.
type Terms<'a> = &'a [(&'a [usize], &'a [(usize, u16)])];

fn poly(n: usize, terms: Terms<'_>) -> P {
    let mut out = P::zero(n);
    for (thetas, xs) in terms {
        let th: Vec<usize> = thetas.iter().map(|i| i - 1).collect();
        let mut exps = vec![0u16; n];
        for &(i, e) in *xs {
            exps[i - 1] = e;
        }
        out = out.add(&P::term(n, &th, &exps, 1));
    }
    out
}

#[test]
fn monomial_quasisymmetric_examples() {
    let want = poly(
        4,
        &[
            (&[1], &[(1, 3), (2, 1), (3, 2)]),
            (&[1], &[(1, 3), (2, 1), (4, 2)]),
            (&[1], &[(1, 3), (3, 1), (4, 2)]),
            (&[2], &[(2, 3), (3, 1), (4, 2)]),
        ],
    );
    assert_eq!(expand_qs_monomial::<i64>(&dc("3.,1,2"), 4).unwrap(), want);

    let want = poly(
        4,
        &[
            (&[2, 3], &[(1, 3), (2, 1), (3, 2)]),
            (&[2, 4], &[(1, 3), (2, 1), (4, 2)]),
            (&[3, 4], &[(1, 3), (3, 1), (4, 2)]),
            (&[3, 4], &[(2, 3), (3, 1), (4, 2)]),
        ],
    );
    assert_eq!(expand_qs_monomial::<i64>(&dc("3,1.,2."), 4).unwrap(), want);
    assert_eq!(expand_qs_monomial::<i64>(&dc(""), 3).unwrap(), P::one(3));
    assert_eq!(
        expand_qs_monomial::<i64>(&dc("1,1,1"), 2),
        Err(Error::TooFewVariables {
            needed: 3,
            available: 2
        })
    );
}

#[test]
fn monomial_symmetric_examples() {
    let want = poly(
        3,
        &[
            (&[1], &[(1, 2), (2, 3), (3, 1)]),
            (&[1], &[(1, 2), (3, 3), (2, 1)]),
            (&[2], &[(2, 2), (1, 3), (3, 1)]),
            (&[2], &[(2, 2), (3, 3), (1, 1)]),
            (&[3], &[(3, 2), (1, 3), (2, 1)]),
            (&[3], &[(3, 2), (2, 3), (1, 1)]),
        ],
    );
    assert_eq!(expand_monomial::<i64>(&sp("2;3,1"), 3).unwrap(), want);
    assert_eq!(
        expand_monomial::<i64>(&sp(";1"), 2).unwrap(),
        poly(2, &[(&[], &[(1, 1)]), (&[], &[(2, 1)])])
    );
    assert_eq!(
        expand_monomial::<i64>(&sp("0;"), 3).unwrap(),
        poly(3, &[(&[1], &[]), (&[2], &[]), (&[3], &[])])
    );
    // θ1θ2 - θ2θ1 summed over orders collapses to 2θ1θ2 x1 with the right sign
    assert_eq!(
        expand_monomial::<i64>(&sp("1,0;"), 2).unwrap(),
        poly(2, &[(&[1, 2], &[(1, 1)])]).sub(&poly(2, &[(&[1, 2], &[(2, 1)])]))
    );
}

#[test]
fn anticommutation() {
    let (t1, t2) = (P::theta(3, 0), P::theta(3, 1));
    assert!(t1.mul(&t2).add(&t2.mul(&t1)).is_zero());
    let t1x1 = t1.mul(&P::x(3, 0));
    assert!(t1x1.mul(&t1x1).is_zero());
    for n in 1..5 {
        let m0 = expand_qs_monomial::<i64>(&dc("0."), n).unwrap();
        assert!(m0.mul(&m0).is_zero());
    }
}

fn e(r: usize, fermionic: bool, n: usize) -> P {
    let ones = vec![1; r];
    let l = if fermionic {
        SuperPartition::new(vec![0], ones)
    } else {
        SuperPartition::new(vec![], ones)
    };
    expand_monomial(&l.unwrap(), n).unwrap()
}

fn h(r: usize, fermionic: bool, n: usize) -> P {
    let mut out = P::zero(n);
    let b = Bidegree::new(r, fermionic as usize);
    for l in superpartitions(b) {
        if l.length() > n {
            continue;
        }
        let c = if fermionic { l.fermionic_parts()[0] as i64 + 1 } else { 1 };
        out = out.add(&expand_monomial(&l, n).unwrap().scale(&c));
    }
    out
}

#[test]
fn d_relations() {
    let n = 6;
    assert!(P::one(n).act_d().is_zero());
    for k in 0..=4 {
        assert_eq!(
            power_sum::<i64>(k + 1, false, n).act_d(),
            power_sum::<i64>(k, true, n).scale(&(k as i64 + 1))
        );
        assert_eq!(e(k + 1, false, n).act_d(), e(k, true, n), "e {k}");
        assert_eq!(h(k + 1, false, n).act_d(), h(k, true, n), "h {k}");
    }
}

#[test]
fn extraction_round_trips() {
    for w in 0..=4 {
        for b in Bidegree::of_weight(w) {
            for a in dotted_compositions(b) {
                let p = expand_qs_monomial::<i64>(&a, 6).unwrap();
                assert_eq!(extract_qsym(&p).unwrap(), LinComb::basis(a));
            }
        }
    }
    let p = expand_monomial::<i64>(&sp("1,0;"), 4).unwrap();
    let want = LinComb::from_terms([(dc("1.,0."), 1), (dc("0.,1."), -1)]);
    assert_eq!(extract_qsym(&p).unwrap(), want);
    assert!(matches!(
        extract_qsym(&P::x(2, 0)),
        Err(Error::NotQuasisymmetric(_))
    ));
}

#[test]
fn two_alphabet_extraction() {
    let (a, b) = (dc("1.,2"), dc("0."));
    let f = expand_qs_monomial::<i64>(&a, 3).unwrap();
    let g = expand_qs_monomial::<i64>(&b, 3).unwrap();
    let t = extract_qsym_tensor(&outer_product(&f, &g)).unwrap();
    assert_eq!(t, LinComb::basis((a, b)));
}

fn small_poly() -> impl Strategy<Value = P> {
    let term = (0u64..16, proptest::collection::vec(0u16..3, 4), -3i64..4);
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        let mut p = P::zero(4);
        for (theta, exps, c) in terms {
            p.add_term(SuperMonomial { theta, exps }, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn d_squares_to_zero(p in small_poly()) {
        prop_assert!(p.act_d().act_d().is_zero());
    }

    #[test]
    fn product_is_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn d_is_an_odd_derivation(a in small_poly(), b in small_poly()) {
        // on θ-homogeneous pieces: d(ab) = d(a)b + (-1)^{|a|} a d(b)
        let mut even = P::zero(4);
        let mut odd = P::zero(4);
        for (m, c) in a.terms() {
            if m.fermionic_degree() % 2 == 0 { even.add_term(m.clone(), *c) } else { odd.add_term(m.clone(), *c) }
        }
        let rule = |x: &P, sign: i64| x.act_d().mul(&b).add(&x.mul(&b.act_d()).scale(&sign));
        prop_assert_eq!(even.mul(&b).act_d(), rule(&even, 1));
        prop_assert_eq!(odd.mul(&b).act_d(), rule(&odd, -1));
    }
}
