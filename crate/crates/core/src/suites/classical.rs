//! Classical Schur data from semistandard tableaux, independent of the
//! Gram–Schmidt construction.

use crate::kernel::Coeff;
use crate::oracle::SuperPolynomial;

/// All semistandard tableaux of shape `shape` with entries in `1..=max`,
/// as rows of entries.
pub fn ssyt(shape: &[usize], max: usize) -> Vec<Vec<Vec<usize>>> {
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&r| Vec::with_capacity(r)).collect();
    let mut out = Vec::new();
    fill(shape, max, 0, &mut rows, &mut out);
    out
}

fn fill(shape: &[usize], max: usize, cell: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    let total: usize = shape.iter().sum();
    if cell == total {
        out.push(rows.clone());
        return;
    }
    let mut r = 0;
    let mut before = 0;
    while before + shape[r] <= cell {
        before += shape[r];
        r += 1;
    }
    let c = cell - before;
    let mut low = if c > 0 { rows[r][c - 1] } else { 1 };
    if r > 0 {
        low = low.max(rows[r - 1][c] + 1);
    }
    for v in low..=max {
        rows[r].push(v);
        fill(shape, max, cell + 1, rows, out);
        rows[r].pop();
    }
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &[usize], mu: &[usize]) -> usize {
    ssyt(lambda, mu.len())
        .into_iter()
        .filter(|t| {
            let mut content = vec![0; mu.len()];
            for v in t.iter().flatten() {
                content[v - 1] += 1;
            }
            content == mu
        })
        .count()
}

/// `s_λ(x_1, …, x_n) = Σ_T x^T`.
pub fn schur_polynomial<C: Coeff>(lambda: &[usize], n: usize) -> SuperPolynomial<C> {
    let mut out = SuperPolynomial::zero(n);
    for t in ssyt(lambda, n) {
        let mut exps = vec![0u16; n];
        for v in t.iter().flatten() {
            exps[v - 1] += 1;
        }
        out = out.add(&SuperPolynomial::term(n, &[], &exps, C::one()));
    }
    out
}
