//! Pretty text and JSON rendering. Terms always come out in index order.

use serde::Serialize;
use superhopf::kernel::format_q;
use superhopf::oracle::SuperPolynomial;
use superhopf::suites::Report;
use superhopf::{DottedComposition, LinComb, SuperPartition, Q};

use crate::expr::{Basis, QsBasis};
use crate::value::{TensorValue, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Pretty,
    Json,
}

/// Index types that render both as literal text and as a JSON string list.
pub trait IndexText {
    fn literal(&self) -> String;
    fn json(&self) -> Vec<String>;
}

impl IndexText for DottedComposition {
    fn literal(&self) -> String {
        self.index_string()
    }

    fn json(&self) -> Vec<String> {
        self.parts().iter().map(ToString::to_string).collect()
    }
}

impl IndexText for SuperPartition {
    fn literal(&self) -> String {
        self.index_string()
    }

    fn json(&self) -> Vec<String> {
        let fermionic = self.fermionic_parts().iter().map(|k| format!("{k}."));
        fermionic
            .chain(self.symmetric_parts().iter().map(ToString::to_string))
            .collect()
    }
}

#[derive(Serialize)]
struct Term {
    index: Vec<String>,
    coeff: String,
}

#[derive(Serialize)]
struct TensorTerm {
    index_pair: [Vec<String>; 2],
    coeff: String,
}

#[derive(Serialize)]
struct Element<T> {
    basis: String,
    terms: Vec<T>,
}

#[derive(Serialize)]
struct Scalar {
    value: String,
}

fn pretty<I: Ord + Clone + IndexText>(basis: &str, f: &LinComb<I, Q>) -> String {
    f.render_with(|i| format!("{basis}[{}]", i.literal()))
}

fn json<I: Ord + Clone + IndexText>(basis: &str, f: &LinComb<I, Q>) -> String {
    let terms = f
        .iter()
        .map(|(i, c)| Term {
            index: i.json(),
            coeff: format_q(c),
        })
        .collect();
    to_json(&Element {
        basis: basis.to_string(),
        terms,
    })
}

fn pretty_tensor<I: Ord + Clone + IndexText>(basis: &str, t: &LinComb<(I, I), Q>) -> String {
    t.render_with(|(a, b)| format!("{basis}[{}] ⊗ {basis}[{}]", a.literal(), b.literal()))
}

fn json_tensor<I: Ord + Clone + IndexText>(basis: &str, t: &LinComb<(I, I), Q>) -> String {
    let terms = t
        .iter()
        .map(|((a, b), c)| TensorTerm {
            index_pair: [a.json(), b.json()],
            coeff: format_q(c),
        })
        .collect();
    to_json(&Element {
        basis: basis.to_string(),
        terms,
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

pub fn scalar(q: &Q, format: Format) -> String {
    match format {
        Format::Pretty => format_q(q),
        Format::Json => to_json(&Scalar { value: format_q(q) }),
    }
}

fn qs_symbol(b: QsBasis) -> &'static str {
    Basis::Qs(b).symbol()
}

fn element<I: Ord + Clone + IndexText>(basis: &str, f: &LinComb<I, Q>, format: Format) -> String {
    match format {
        Format::Pretty => pretty(basis, f),
        Format::Json => json(basis, f),
    }
}

fn tensor<I: Ord + Clone + IndexText>(basis: &str, t: &LinComb<(I, I), Q>, format: Format) -> String {
    match format {
        Format::Pretty => pretty_tensor(basis, t),
        Format::Json => json_tensor(basis, t),
    }
}

pub fn value(v: &Value, format: Format) -> String {
    match v {
        Value::Scalar(q) => scalar(q, format),
        Value::Qs(b, f) => element(qs_symbol(*b), f, format),
        Value::Ns(f) => element("H", f, format),
        Value::Sym(f) => element(f.basis.symbol(), &f.terms, format),
    }
}

pub fn tensor_value(t: &TensorValue, format: Format) -> String {
    match t {
        TensorValue::Qs(b, t) => tensor(qs_symbol(*b), t, format),
        TensorValue::Ns(t) => tensor("H", t, format),
        TensorValue::Sym(t) => tensor(t.basis.symbol(), &t.terms, format),
    }
}

/// One index per line, or a JSON list of index lists.
pub fn indices<I: IndexText>(kind: &str, items: &[I], format: Format) -> String {
    #[derive(Serialize)]
    struct Listing<'a> {
        kind: &'a str,
        items: Vec<Vec<String>>,
    }
    match format {
        Format::Pretty => items.iter().map(IndexText::literal).collect::<Vec<_>>().join("\n"),
        Format::Json => to_json(&Listing {
            kind,
            items: items.iter().map(IndexText::json).collect(),
        }),
    }
}

pub fn polynomial(p: &SuperPolynomial<Q>, format: Format) -> String {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| a.0.cmp(b.0));
    match format {
        Format::Pretty => {
            let f: LinComb<usize, Q> = terms.iter().enumerate().map(|(k, (_, c))| (k, (*c).clone())).collect();
            f.render_with(|&k| format!("{:?}", terms[k].0))
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Monomial {
                theta: Vec<usize>,
                exponents: Vec<u16>,
                coeff: String,
            }
            #[derive(Serialize)]
            struct Polynomial {
                variables: usize,
                terms: Vec<Monomial>,
            }
            let n = p.num_vars();
            to_json(&Polynomial {
                variables: n,
                terms: terms
                    .iter()
                    .map(|(m, c)| Monomial {
                        theta: (0..n).filter(|&i| m.has_theta(i)).map(|i| i + 1).collect(),
                        exponents: m.exponents().to_vec(),
                        coeff: format_q(c),
                    })
                    .collect(),
            })
        }
    }
}

pub fn reports(reports: &[Report], format: Format) -> String {
    #[derive(Serialize)]
    struct Line {
        suite: String,
        max_degree: usize,
        checks: usize,
        passed: bool,
        failure: Option<String>,
        elapsed_ms: u128,
    }
    match format {
        Format::Pretty => reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
        Format::Json => to_json(
            &reports
                .iter()
                .map(|r| Line {
                    suite: r.suite.to_string(),
                    max_degree: r.max_degree,
                    checks: r.checks,
                    passed: r.passed(),
                    failure: r.failure.as_ref().map(ToString::to_string),
                    elapsed_ms: r.elapsed.as_millis(),
                })
                .collect::<Vec<_>>(),
        ),
    }
}
