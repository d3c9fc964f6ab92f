//! Evaluated expressions and the operations the subcommands apply to them.

use num_traits::One;
use superhopf::combinatorics::Refinement;
use superhopf::kernel::map_legs;
use superhopf::oracle::{expand_qsym, expand_sym, SuperPolynomial};
use superhopf::{
    nsym, qsym, Bidegree, DottedComposition, Error, LinComb, NsElement, QsElement, Sym, SymBasis,
    SymElement, SymTensor, TensorComb, Q,
};

use crate::error::CliError;
use crate::expr::{Basis, Expr, Index, QsBasis};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Q),
    Qs(QsBasis, QsElement),
    Ns(NsElement),
    Sym(SymElement),
}

#[derive(Clone, Debug, PartialEq)]
pub enum TensorValue {
    Qs(QsBasis, TensorComb<DottedComposition, Q>),
    Ns(TensorComb<DottedComposition, Q>),
    Sym(SymTensor),
}

/// Default guard on `n + m` for sQSym and sNSym, whose operations are
/// combinatorial and stay cheap well past the `Λ` limits.
pub const DEFAULT_MAX_COMBINATORIAL_DEGREE: usize = 16;

/// Evaluation context: the `Λ` caches and the degree guard for sQSym and sNSym.
pub struct Context {
    pub sym: Sym,
    pub max_degree: usize,
}

fn to_m(basis: QsBasis, f: &QsElement) -> QsElement {
    match basis {
        QsBasis::M => f.clone(),
        QsBasis::L => f.map_linear(qsym::fundamental),
        QsBasis::Lb => f.map_linear(qsym::fundamental_bar),
    }
}

fn from_m(basis: QsBasis, f: &QsElement) -> QsElement {
    match basis {
        QsBasis::M => f.clone(),
        QsBasis::L => qsym::to_fundamental(f, Refinement::Strong),
        QsBasis::Lb => qsym::to_fundamental(f, Refinement::Weak),
    }
}

fn top_bidegree(f: &LinComb<DottedComposition, Q>) -> Bidegree {
    f.indices()
        .map(DottedComposition::bidegree)
        .max_by_key(Bidegree::weight)
        .unwrap_or_default()
}

fn algebra(v: &Value) -> &'static str {
    match v {
        Value::Scalar(_) => "a scalar",
        Value::Qs(..) => "sQSym",
        Value::Ns(_) => "sNSym",
        Value::Sym(_) => "Λ",
    }
}

fn mismatch(op: &str, a: &Value, b: &Value) -> CliError {
    CliError::Eval(format!("cannot {op} {} and {}", algebra(a), algebra(b)))
}

impl Context {
    /// Guards everything at `max_degree`, or at the per-algebra defaults.
    pub fn new(max_degree: Option<usize>) -> Self {
        let sym = match max_degree {
            Some(d) => Sym::with_limits(d, d.min(superhopf::sym::DEFAULT_MAX_SCHUR_DEGREE)),
            None => Sym::new(),
        };
        Self {
            sym,
            max_degree: max_degree.unwrap_or(DEFAULT_MAX_COMBINATORIAL_DEGREE),
        }
    }

    fn guard(&self, b: Bidegree) -> Result<(), CliError> {
        if b.weight() > self.max_degree {
            return Err(Error::DegreeGuard {
                bidegree: b,
                limit: self.max_degree,
            }
            .into());
        }
        Ok(())
    }

    pub fn eval(&self, e: &Expr) -> Result<Value, CliError> {
        match e {
            Expr::Scalar(q) => Ok(Value::Scalar(q.clone())),
            Expr::Literal(basis, index) => self.literal(*basis, index),
            Expr::Neg(a) => self.mul(&Value::Scalar(-Q::one()), &self.eval(a)?),
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => {
                let nb = self.mul(&Value::Scalar(-Q::one()), &self.eval(b)?)?;
                self.add(&self.eval(a)?, &nb)
            }
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
        }
    }

    fn literal(&self, basis: Basis, index: &Index) -> Result<Value, CliError> {
        match (basis, index) {
            (Basis::Qs(b), Index::Composition(a)) => {
                self.guard(a.bidegree())?;
                Ok(Value::Qs(b, LinComb::basis(a.clone())))
            }
            (Basis::H, Index::Composition(a)) => {
                self.guard(a.bidegree())?;
                Ok(Value::Ns(LinComb::basis(a.clone())))
            }
            (Basis::Sym(b), Index::Partition(l)) => {
                self.sym.guard(l.bidegree(), b.needs_macdonald())?;
                Ok(Value::Sym(SymElement::basis_element(b, l.clone())))
            }
            _ => unreachable!("the parser picks the index type from the basis"),
        }
    }

    fn one_like(&self, v: &Value) -> Value {
        match v {
            Value::Scalar(_) => Value::Scalar(Q::one()),
            Value::Qs(b, _) => Value::Qs(*b, LinComb::basis(DottedComposition::empty())),
            Value::Ns(_) => Value::Ns(LinComb::basis(DottedComposition::empty())),
            Value::Sym(f) => Value::Sym(SymElement::one(f.basis)),
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Result<Value, CliError> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (Value::Scalar(x), other) | (other, Value::Scalar(x)) => {
                let shifted = self.mul(&Value::Scalar(x.clone()), &self.one_like(other))?;
                return self.add(other, &shifted);
            }
            (Value::Qs(ba, f), Value::Qs(bb, g)) => Value::Qs(*ba, f + &from_m(*ba, &to_m(*bb, g))),
            (Value::Ns(f), Value::Ns(g)) => Value::Ns(f + g),
            (Value::Sym(f), Value::Sym(g)) => {
                let g = self.sym.convert(g, f.basis)?;
                Value::Sym(SymElement::new(f.basis, &f.terms + &g.terms))
            }
            _ => return Err(mismatch("add", a, b)),
        })
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Result<Value, CliError> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(x), other) | (other, Value::Scalar(x)) => match other {
                Value::Qs(b, f) => Value::Qs(*b, f.scale(x)),
                Value::Ns(f) => Value::Ns(f.scale(x)),
                Value::Sym(f) => Value::Sym(SymElement::new(f.basis, f.terms.scale(x))),
                Value::Scalar(_) => unreachable!(),
            },
            (Value::Qs(ba, f), Value::Qs(bb, g)) => {
                let (f, g) = (to_m(*ba, f), to_m(*bb, g));
                self.guard(top_bidegree(&f) + top_bidegree(&g))?;
                Value::Qs(*ba, from_m(*ba, &qsym::mul(&f, &g)))
            }
            (Value::Ns(f), Value::Ns(g)) => {
                self.guard(top_bidegree(f) + top_bidegree(g))?;
                Value::Ns(nsym::mul(f, g))
            }
            (Value::Sym(f), Value::Sym(g)) => Value::Sym(self.sym.mul(f, g)?),
            _ => return Err(mismatch("multiply", a, b)),
        })
    }

    pub fn comul(&self, v: &Value) -> Result<TensorValue, CliError> {
        Ok(match v {
            Value::Qs(b, f) => {
                let t = qsym::comul(&to_m(*b, f));
                let leg = |a: &DottedComposition| from_m(*b, &LinComb::basis(a.clone()));
                TensorValue::Qs(*b, map_legs(&t, leg, leg))
            }
            Value::Ns(f) => TensorValue::Ns(nsym::comul(f)),
            Value::Sym(f) => TensorValue::Sym(self.sym.comul(f)?),
            Value::Scalar(_) => return Err(CliError::Eval("the coproduct needs a basis element".into())),
        })
    }

    pub fn antipode(&self, v: &Value) -> Result<Value, CliError> {
        Ok(match v {
            Value::Scalar(q) => Value::Scalar(q.clone()),
            Value::Qs(b, f) => Value::Qs(*b, from_m(*b, &qsym::antipode(&to_m(*b, f)))),
            Value::Ns(f) => Value::Ns(nsym::antipode(f)),
            Value::Sym(f) => Value::Sym(self.sym.antipode(f)?),
        })
    }

    pub fn omega(&self, v: &Value) -> Result<Value, CliError> {
        match v {
            Value::Sym(f) => Ok(Value::Sym(self.sym.omega(f)?)),
            other => Err(CliError::Eval(format!("ω is defined on Λ, not on {}", algebra(other)))),
        }
    }

    /// The duality pairing of sNSym with sQSym, in either argument order, or
    /// the Hall product on `Λ`.
    pub fn pair(&self, a: &Value, b: &Value) -> Result<Q, CliError> {
        match (a, b) {
            (Value::Ns(f), Value::Qs(basis, g)) | (Value::Qs(basis, g), Value::Ns(f)) => {
                Ok(nsym::pair(f, &to_m(*basis, g)))
            }
            (Value::Sym(_), Value::Sym(_)) => self.hall(a, b),
            _ => Err(mismatch("pair", a, b)),
        }
    }

    pub fn hall(&self, a: &Value, b: &Value) -> Result<Q, CliError> {
        match (a, b) {
            (Value::Sym(f), Value::Sym(g)) => Ok(self.sym.hall(f, g)?),
            _ => Err(mismatch("take the Hall product of", a, b)),
        }
    }

    /// Change of basis within one algebra, plus the maps `ι: Λ → sQSym`,
    /// its left inverse on symmetric elements, and `π: sNSym → Λ`.
    pub fn convert(&self, v: &Value, to: Basis) -> Result<Value, CliError> {
        Ok(match (v, to) {
            (Value::Scalar(q), to) => {
                let empty = DottedComposition::empty();
                match to {
                    Basis::Qs(t) => Value::Qs(t, LinComb::term(empty, q.clone())),
                    Basis::H => Value::Ns(LinComb::term(empty, q.clone())),
                    Basis::Sym(t) => Value::Sym(SymElement::new(t, SymElement::one(t).terms.scale(q))),
                }
            }
            (Value::Qs(b, f), Basis::Qs(t)) => Value::Qs(t, from_m(t, &to_m(*b, f))),
            (Value::Qs(b, f), Basis::Sym(t)) => {
                let m = SymElement::new(SymBasis::Monomial, qsym::to_m(&to_m(*b, f))?);
                Value::Sym(self.sym.convert(&m, t)?)
            }
            (Value::Sym(f), Basis::Sym(t)) => Value::Sym(self.sym.convert(f, t)?),
            (Value::Sym(f), Basis::Qs(t)) => Value::Qs(t, from_m(t, &qsym::iota(&self.sym.to_m(f)?))),
            (Value::Ns(f), Basis::H) => Value::Ns(f.clone()),
            (Value::Ns(f), Basis::Sym(t)) => Value::Sym(self.sym.convert(&nsym::pi(&self.sym, f)?, t)?),
            (v, to) => {
                return Err(CliError::Eval(format!("no map from {} to the {to} basis", algebra(v))));
            }
        })
    }

    /// Expansion as a polynomial in `vars` commuting and `vars` anticommuting
    /// variables; by default one more variable than the largest `n + m`.
    pub fn expand(&self, v: &Value, vars: Option<usize>) -> Result<SuperPolynomial<Q>, CliError> {
        let weight = |w: usize| vars.unwrap_or(w + 1);
        Ok(match v {
            Value::Scalar(q) => SuperPolynomial::one(weight(0)).scale(q),
            Value::Qs(b, f) => {
                let f = to_m(*b, f);
                expand_qsym(&f, weight(top_bidegree(&f).weight()))?
            }
            Value::Sym(f) => {
                let m = self.sym.to_m(f)?;
                let w = m.indices().map(|l| l.bidegree().weight()).max().unwrap_or(0);
                let n = weight(w);
                // Monomials longer than the number of variables vanish.
                expand_sym(&m.filter(|l| l.length() <= n), n)?
            }
            Value::Ns(_) => {
                return Err(CliError::Eval("sNSym elements have no commutative expansion".into()));
            }
        })
    }
}
