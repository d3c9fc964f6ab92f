//! Worked examples, reproduced exactly.

use std::collections::BTreeSet;

use super::{ensure, Outcome};
use crate::combinatorics::{strong_coarsenings, weak_coarsenings, DottedComposition, SuperPartition};
use crate::kernel::{LinComb, TensorComb};
use crate::oracle::{expand_monomial, expand_qs_monomial, SuperPolynomial};
use crate::qsym;

type E = LinComb<DottedComposition, i64>;

fn dc(s: &str) -> DottedComposition {
    s.parse().expect("golden index")
}

fn el(terms: &[(&str, i64)]) -> E {
    terms.iter().map(|&(s, c)| (dc(s), c)).collect()
}

fn plain_sum(list: &[&str]) -> E {
    list.iter().map(|&s| (dc(s), 1)).collect()
}

/// `Σ θ_{thetas} x^{exps}` with one-based variable numbers.
/// `(θ indices, [(variable, exponent)])` per term.
type Terms<'a> = &'a [(&'a [usize], &'a [(usize, u16)])];

fn poly(n: usize, terms: Terms<'_>) -> SuperPolynomial<i64> {
    let mut out = SuperPolynomial::zero(n);
    for (thetas, xs) in terms {
        let th: Vec<usize> = thetas.iter().map(|i| i - 1).collect();
        let mut exps = vec![0u16; n];
        for &(i, e) in *xs {
            exps[i - 1] = e;
        }
        out = out.add(&SuperPolynomial::term(n, &th, &exps, 1));
    }
    out
}

fn same(label: &str, got: E, want: E) -> Outcome {
    ensure(got == want, || format!("{label}: got {got}, expected {want}"))
}

pub(super) fn run() -> Outcome {
    let mut n = 0;

    n += same(
        "M[3.,2]*M[4.,1]",
        qsym::mul_basis::<i64>(&dc("3.,2"), &dc("4.,1")),
        el(&[
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
        ]),
    )?;

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
    let got = qsym::comul_basis::<i64>(&dc("2.,1,3.,4"));
    n += ensure(got == want, || format!("comul M[2.,1,3.,4]: got {got:?}"))?;

    n += same(
        "S(M[1.,3,2.])",
        qsym::antipode_basis::<i64>(&dc("1.,3,2.")),
        el(&[("2.,3,1.", 1), ("5.,1.", 1), ("2.,4.", 1)]),
    )?;

    n += same(
        "L[3,4.,2]",
        qsym::fundamental::<i64>(&dc("3,4.,2")),
        plain_sum(&[
            "3,4.,2",
            "2,1,4.,2",
            "1,2,4.,2",
            "1,1,1,4.,2",
            "3,4.,1,1",
            "2,1,4.,1,1",
            "1,2,4.,1,1",
            "1,1,1,4.,1,1",
        ]),
    )?;

    n += same(
        "Lb[2.,2]",
        qsym::fundamental_bar::<i64>(&dc("2.,2")),
        plain_sum(&[
            "2.,2",
            "0.,2,2",
            "2,0.,2",
            "1.,1,2",
            "1,1.,2",
            "0.,1,1,2",
            "1,0.,1,2",
            "1,1,0.,2",
            "2.,1,1",
            "0.,2,1,1",
            "2,0.,1,1",
            "1.,1,1,1",
            "1,1.,1,1",
            "0.,1,1,1,1",
            "1,0.,1,1,1",
            "1,1,0.,1,1",
        ]),
    )?;

    let want = poly(
        4,
        &[
            (&[1], &[(1, 3), (2, 1), (3, 2)]),
            (&[1], &[(1, 3), (2, 1), (4, 2)]),
            (&[1], &[(1, 3), (3, 1), (4, 2)]),
            (&[2], &[(2, 3), (3, 1), (4, 2)]),
        ],
    );
    n += ensure(expand_qs_monomial::<i64>(&dc("3.,1,2"), 4)? == want, || {
        "M[3.,1,2] in four variables".into()
    })?;

    let want = poly(
        4,
        &[
            (&[2, 3], &[(1, 3), (2, 1), (3, 2)]),
            (&[2, 4], &[(1, 3), (2, 1), (4, 2)]),
            (&[3, 4], &[(1, 3), (3, 1), (4, 2)]),
            (&[3, 4], &[(2, 3), (3, 1), (4, 2)]),
        ],
    );
    n += ensure(expand_qs_monomial::<i64>(&dc("3,1.,2."), 4)? == want, || {
        "M[3,1.,2.] in four variables".into()
    })?;

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
    let lambda: SuperPartition = "2;3,1".parse().expect("golden index");
    n += ensure(expand_monomial::<i64>(&lambda, 3)? == want, || "m(2;3,1) in three variables".into())?;

    let lambda: SuperPartition = "3,1,0;2,1".parse().expect("golden index");
    let want: SuperPartition = "4,2,0;1".parse().expect("golden index");
    n += ensure(lambda.conjugate() == want, || format!("conjugate of {lambda}: got {}", lambda.conjugate()))?;

    let alpha = dc("1,1,2.,1,2");
    let strong: BTreeSet<_> = strong_coarsenings(&alpha).into_iter().collect();
    let want: BTreeSet<_> = ["1,1,2.,1,2", "2,2.,1,2", "1,1,2.,3", "2,2.,3"].map(dc).into();
    n += ensure(strong == want, || format!("strong coarsenings of {alpha}: {strong:?}"))?;

    let weak: BTreeSet<_> = weak_coarsenings(&alpha).into_iter().collect();
    let want: BTreeSet<_> = [
        "1,1,2.,1,2",
        "2,2.,1,2",
        "1,3.,1,2",
        "1,1,3.,2",
        "1,1,2.,3",
        "4.,1,2",
        "2,3.,2",
        "2,2.,3",
        "1,1,5.",
        "1,4.,2",
        "1,3.,3",
        "5.,2",
        "4.,3",
        "2,5.",
        "1,6.",
        "7.",
    ]
    .map(dc)
    .into();
    n += ensure(weak == want, || format!("weak coarsenings of {alpha}: {weak:?}"))?;

    Ok(n)
}
