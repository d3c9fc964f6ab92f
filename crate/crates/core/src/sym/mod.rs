//! Symmetric functions in superspace.
//!
//! Elements carry a basis tag. Everything funnels through the monomial basis:
//! each basis has a per-bidegree transition matrix to `m`, built once and
//! cached. Structure maps act on power sums, where they are diagonal or given
//! by closed formulas.

mod generators;
mod macdonald;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

pub use generators::{
    antipode_p, generator, mul_m, mul_p, mul_p_basis, multiplicative_in_m, omega_p, Family, SymComb,
};
pub use macdonald::{deformed_scalar, is_unitriangular, limit, macdonald_bidegree, power_sum_norm, Specialization};

use crate::combinatorics::{partition::z_factor, superpartitions, Bidegree, SuperPartition};
use crate::error::{Error, Result};
use crate::kernel::{outer, paired, tensor_mul, Matrix, PairingSign, RationalFunction, TensorComb};
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    Monomial,
    Power,
    Elementary,
    Homogeneous,
    Schur,
    SchurBar,
    DualSchur,
    DualSchurBar,
}

impl SymBasis {
    pub const ALL: [SymBasis; 8] = [
        SymBasis::Monomial,
        SymBasis::Power,
        SymBasis::Elementary,
        SymBasis::Homogeneous,
        SymBasis::Schur,
        SymBasis::SchurBar,
        SymBasis::DualSchur,
        SymBasis::DualSchurBar,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            SymBasis::Monomial => "m",
            SymBasis::Power => "p",
            SymBasis::Elementary => "e",
            SymBasis::Homogeneous => "h",
            SymBasis::Schur => "s",
            SymBasis::SchurBar => "sb",
            SymBasis::DualSchur => "s*",
            SymBasis::DualSchurBar => "sb*",
        }
    }

    /// Bases built from Macdonald polynomials, subject to the tighter degree guard.
    pub fn needs_macdonald(self) -> bool {
        matches!(
            self,
            SymBasis::Schur | SymBasis::SchurBar | SymBasis::DualSchur | SymBasis::DualSchurBar
        )
    }

    fn family(self) -> Option<Family> {
        match self {
            SymBasis::Power => Some(Family::Power),
            SymBasis::Elementary => Some(Family::Elementary),
            SymBasis::Homogeneous => Some(Family::Homogeneous),
            _ => None,
        }
    }
}

impl fmt::Display for SymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SymBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SymBasis::ALL
            .into_iter()
            .find(|b| b.symbol() == s)
            .ok_or_else(|| Error::InvalidIndex(format!("unknown basis {s:?}")))
    }
}

/// An element of `Λ` written in a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    pub basis: SymBasis,
    pub terms: SymComb<Q>,
}

impl SymElement {
    pub fn new(basis: SymBasis, terms: SymComb<Q>) -> Self {
        Self { basis, terms }
    }

    pub fn basis_element(basis: SymBasis, lambda: SuperPartition) -> Self {
        Self::new(basis, SymComb::basis(lambda))
    }

    pub fn one(basis: SymBasis) -> Self {
        Self::basis_element(basis, SuperPartition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = self.basis.symbol();
        f.write_str(&self.terms.render_with(|l| format!("{symbol}{l}")))
    }
}

/// An element of `Λ ⊗ Λ`, both legs in the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor {
    pub basis: SymBasis,
    pub terms: TensorComb<SuperPartition, Q>,
}

/// Change of basis between one basis and `m` in a single bidegree.
#[derive(Debug)]
pub struct Transition {
    pub index: Vec<SuperPartition>,
    pos: HashMap<SuperPartition, usize>,
    /// Column `j` holds the `m` coordinates of basis element `j`.
    pub to_m: Matrix<Q>,
    /// Column `j` holds the coordinates of `m_j` in this basis.
    pub from_m: Matrix<Q>,
}

impl Transition {
    fn new(index: Vec<SuperPartition>, to_m: Matrix<Q>) -> Result<Self> {
        let from_m = to_m.invert()?;
        Ok(Self::with_inverse(index, to_m, from_m))
    }

    fn with_inverse(index: Vec<SuperPartition>, to_m: Matrix<Q>, from_m: Matrix<Q>) -> Self {
        let pos = index.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Self {
            index,
            pos,
            to_m,
            from_m,
        }
    }

    pub fn position(&self, lambda: &SuperPartition) -> Option<usize> {
        self.pos.get(lambda).copied()
    }

    fn vector(&self, f: &SymComb<Q>) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.index.len()];
        for (l, c) in f {
            v[self.pos[l]] = c.clone();
        }
        v
    }

    fn comb(&self, v: Vec<Q>) -> SymComb<Q> {
        self.index.iter().cloned().zip(v).collect()
    }
}

fn by_bidegree<C: Clone + crate::kernel::Coeff>(f: &SymComb<C>) -> BTreeMap<Bidegree, SymComb<C>> {
    let mut out: BTreeMap<Bidegree, SymComb<C>> = BTreeMap::new();
    for (l, c) in f {
        out.entry(l.bidegree()).or_default().add_term(l.clone(), c.clone());
    }
    out
}

fn columns_to_matrix(dim: usize, columns: &[SymComb<Q>], index: &[SuperPartition]) -> Matrix<Q> {
    let pos: HashMap<&SuperPartition, usize> = index.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut m = Matrix::zeros(dim, dim);
    for (j, col) in columns.iter().enumerate() {
        for (l, c) in col {
            m[(pos[l], j)] = c.clone();
        }
    }
    m
}

fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

type MacdonaldKey = (Bidegree, Specialization);

/// Computation context for `Λ`: degree guards plus caches of transition
/// matrices and Macdonald polynomials. Safe to share across threads.
pub struct Sym {
    max_degree: usize,
    max_schur_degree: usize,
    transitions: RwLock<HashMap<(Bidegree, SymBasis), Arc<Transition>>>,
    macdonald: RwLock<HashMap<MacdonaldKey, Arc<Vec<SymComb<RationalFunction>>>>>,
}

impl Default for Sym {
    fn default() -> Self {
        Self::new()
    }
}

pub const DEFAULT_MAX_DEGREE: usize = 8;
pub const DEFAULT_MAX_SCHUR_DEGREE: usize = 6;

impl Sym {
    pub fn new() -> Self {
        Self::with_limits(DEFAULT_MAX_DEGREE, DEFAULT_MAX_SCHUR_DEGREE)
    }

    /// Degree guards bound `n + m`: `max_degree` for every operation,
    /// `max_schur_degree` for anything that needs Macdonald polynomials.
    pub fn with_limits(max_degree: usize, max_schur_degree: usize) -> Self {
        Self {
            max_degree,
            max_schur_degree,
            transitions: RwLock::new(HashMap::new()),
            macdonald: RwLock::new(HashMap::new()),
        }
    }

    pub fn guard(&self, b: Bidegree, schur: bool) -> Result<()> {
        let limit = if schur {
            self.max_schur_degree.min(self.max_degree)
        } else {
            self.max_degree
        };
        if b.weight() > limit {
            return Err(Error::DegreeGuard { bidegree: b, limit });
        }
        Ok(())
    }

    /// Transition data for `basis` in bidegree `b`, built on first use.
    pub fn transition(&self, b: Bidegree, basis: SymBasis) -> Result<Arc<Transition>> {
        self.guard(b, basis.needs_macdonald())?;
        if let Some(t) = self.transitions.read().unwrap().get(&(b, basis)) {
            return Ok(t.clone());
        }
        let t = Arc::new(self.build_transition(b, basis)?);
        let mut cache = self.transitions.write().unwrap();
        Ok(cache.entry((b, basis)).or_insert(t).clone())
    }

    fn build_transition(&self, b: Bidegree, basis: SymBasis) -> Result<Transition> {
        let index = superpartitions(b);
        let dim = index.len();
        if basis == SymBasis::Monomial {
            return Ok(Transition::with_inverse(index, Matrix::identity(dim), Matrix::identity(dim)));
        }
        let columns: Vec<SymComb<Q>> = match basis {
            SymBasis::Monomial => unreachable!(),
            SymBasis::Power | SymBasis::Elementary | SymBasis::Homogeneous => {
                let family = basis.family().unwrap();
                index.iter().map(|l| multiplicative_in_m::<Q>(family, l)).collect()
            }
            SymBasis::Schur | SymBasis::SchurBar => {
                let polys = self.macdonald_bidegree(b, &Specialization::Diagonal)?;
                let zero = basis == SymBasis::Schur;
                polys.iter().map(|p| limit(p, zero)).collect::<Result<_>>()?
            }
            SymBasis::DualSchur | SymBasis::DualSchurBar => {
                let other = if basis == SymBasis::DualSchur {
                    SymBasis::SchurBar
                } else {
                    SymBasis::Schur
                };
                let sign = if choose2(b.m) % 2 == 1 { -Q::one() } else { Q::one() };
                index
                    .iter()
                    .map(|l| {
                        let f = SymElement::basis_element(other, l.conjugate());
                        let w = self.omega(&f)?;
                        Ok(self.to_m(&w)? * &sign)
                    })
                    .collect::<Result<_>>()?
            }
        };
        let to_m = columns_to_matrix(dim, &columns, &index);
        Transition::new(index, to_m)
    }

    /// `m`-basis expansion of any element.
    pub fn to_m(&self, f: &SymElement) -> Result<SymComb<Q>> {
        Ok(self.convert(f, SymBasis::Monomial)?.terms)
    }

    /// Exact change of basis.
    pub fn convert(&self, f: &SymElement, to: SymBasis) -> Result<SymElement> {
        let mut out = SymComb::zero();
        for (b, part) in by_bidegree(&f.terms) {
            self.guard(b, f.basis.needs_macdonald() || to.needs_macdonald())?;
            if f.basis == to {
                out += &part;
                continue;
            }
            let m_vec = if f.basis == SymBasis::Monomial {
                self.transition(b, to)?.vector(&part)
            } else {
                let t = self.transition(b, f.basis)?;
                t.to_m.mul_vec(&t.vector(&part))
            };
            let t = self.transition(b, to)?;
            let coords = if to == SymBasis::Monomial {
                m_vec
            } else {
                t.from_m.mul_vec(&m_vec)
            };
            out += &t.comb(coords);
        }
        Ok(SymElement::new(to, out))
    }

    fn convert_comb(&self, f: &SymComb<Q>, from: SymBasis, to: SymBasis) -> Result<SymComb<Q>> {
        Ok(self.convert(&SymElement::new(from, f.clone()), to)?.terms)
    }

    fn guard_product(&self, f: &SymElement, g: &SymElement) -> Result<()> {
        let schur = f.basis.needs_macdonald() || g.basis.needs_macdonald();
        for a in f.terms.indices() {
            for b in g.terms.indices() {
                self.guard(a.bidegree() + b.bidegree(), schur)?;
            }
        }
        Ok(())
    }

    /// Product, returned in the basis of `f`.
    pub fn mul(&self, f: &SymElement, g: &SymElement) -> Result<SymElement> {
        self.guard_product(f, g)?;
        if f.basis == SymBasis::Monomial && g.basis == SymBasis::Monomial {
            return Ok(SymElement::new(SymBasis::Monomial, mul_m(&f.terms, &g.terms)));
        }
        let fp = self.convert(f, SymBasis::Power)?;
        let gp = self.convert(g, SymBasis::Power)?;
        let prod = SymElement::new(SymBasis::Power, mul_p(&fp.terms, &gp.terms));
        self.convert(&prod, f.basis)
    }

    /// `Δp_Λ`, the product of the primitive factors in the twisted tensor algebra.
    pub fn comul_p_basis(lambda: &SuperPartition) -> TensorComb<SuperPartition, Q> {
        let empty = SuperPartition::empty();
        let mut acc = TensorComb::basis((empty.clone(), empty.clone()));
        let gens = lambda
            .fermionic_parts()
            .iter()
            .map(|&k| SuperPartition::new(vec![k], vec![]).unwrap())
            .chain(
                lambda
                    .symmetric_parts()
                    .iter()
                    .map(|&r| SuperPartition::new(vec![], vec![r]).unwrap()),
            );
        for g in gens {
            let prim: TensorComb<SuperPartition, Q> =
                [((g.clone(), empty.clone()), Q::one()), ((empty.clone(), g), Q::one())]
                    .into_iter()
                    .collect();
            acc = tensor_mul(&acc, &prim, generators::mul_p_basis_comb::<Q>);
        }
        acc
    }

    /// Coproduct, both legs in the basis of `f`.
    pub fn comul(&self, f: &SymElement) -> Result<SymTensor> {
        let fp = self.convert(f, SymBasis::Power)?;
        let mut t = TensorComb::zero();
        for (l, c) in &fp.terms {
            t.add_scaled(&Self::comul_p_basis(l), c);
        }
        self.convert_tensor(
            &SymTensor {
                basis: SymBasis::Power,
                terms: t,
            },
            f.basis,
        )
    }

    pub fn convert_tensor(&self, t: &SymTensor, to: SymBasis) -> Result<SymTensor> {
        if t.basis == to {
            return Ok(t.clone());
        }
        let mut columns: HashMap<SuperPartition, SymComb<Q>> = HashMap::new();
        let mut terms = TensorComb::zero();
        for ((a, b), c) in &t.terms {
            for l in [a, b] {
                if !columns.contains_key(l) {
                    let col = self.convert_comb(&SymComb::basis(l.clone()), t.basis, to)?;
                    columns.insert(l.clone(), col);
                }
            }
            terms.add_scaled(&outer(&columns[a], &columns[b]), c);
        }
        Ok(SymTensor { basis: to, terms })
    }

    pub fn omega(&self, f: &SymElement) -> Result<SymElement> {
        let fp = self.convert(f, SymBasis::Power)?;
        self.convert(&SymElement::new(SymBasis::Power, omega_p(&fp.terms)), f.basis)
    }

    pub fn antipode(&self, f: &SymElement) -> Result<SymElement> {
        let fp = self.convert(f, SymBasis::Power)?;
        self.convert(&SymElement::new(SymBasis::Power, antipode_p(&fp.terms)), f.basis)
    }

    /// `⟨⟨p_Λ, p_Ω⟩⟩ = δ_{ΛΩ} z_{Λˢ}`.
    pub fn hall(&self, f: &SymElement, g: &SymElement) -> Result<Q> {
        let fp = self.convert(f, SymBasis::Power)?;
        let gp = self.convert(g, SymBasis::Power)?;
        let mut acc = Q::zero();
        for (l, c) in &fp.terms {
            let d = gp.terms.coeff(l);
            if !d.is_zero() {
                acc += c * d * Q::from_integer(z_factor(l.symmetric_parts()).into());
            }
        }
        Ok(acc)
    }

    /// `⟨⟨f ⊗ g, a ⊗ b⟩⟩ = ⟨⟨f, a⟩⟩⟨⟨g, b⟩⟩`.
    pub fn hall_tensor(&self, s: &SymTensor, t: &SymTensor) -> Result<Q> {
        let sp = self.convert_tensor(s, SymBasis::Power)?;
        let tp = self.convert_tensor(t, SymBasis::Power)?;
        let phi = |a: &SuperPartition, b: &SuperPartition| {
            if a == b {
                Q::from_integer(z_factor(a.symmetric_parts()).into())
            } else {
                Q::zero()
            }
        };
        Ok(paired(phi, &sp.terms, &tp.terms, PairingSign::Plain))
    }

    /// All `P_Λ` of bidegree `b`, in the order of [`superpartitions`].
    pub fn macdonald_bidegree(
        &self,
        b: Bidegree,
        spec: &Specialization,
    ) -> Result<Arc<Vec<SymComb<RationalFunction>>>> {
        self.guard(b, true)?;
        let key = (b, spec.clone());
        if let Some(v) = self.macdonald.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let index = superpartitions(b);
        let m_to_p = self.transition(b, SymBasis::Power)?.from_m.clone();
        let polys = Arc::new(macdonald_bidegree(&index, &m_to_p, spec)?);
        let mut cache = self.macdonald.write().unwrap();
        Ok(cache.entry(key).or_insert(polys).clone())
    }

    /// `P_Λ` along `q = t = u`, in the monomial basis.
    pub fn macdonald(&self, lambda: &SuperPartition) -> Result<SymComb<RationalFunction>> {
        self.macdonald_with(lambda, &Specialization::Diagonal)
    }

    pub fn macdonald_with(
        &self,
        lambda: &SuperPartition,
        spec: &Specialization,
    ) -> Result<SymComb<RationalFunction>> {
        let b = lambda.bidegree();
        let polys = self.macdonald_bidegree(b, spec)?;
        let pos = superpartitions(b).iter().position(|l| l == lambda).unwrap();
        Ok(polys[pos].clone())
    }

    /// `s_Λ` in the monomial basis.
    pub fn schur(&self, lambda: &SuperPartition) -> Result<SymElement> {
        self.convert(&SymElement::basis_element(SymBasis::Schur, lambda.clone()), SymBasis::Monomial)
    }

    /// `s̄_Λ` in the monomial basis.
    pub fn schur_bar(&self, lambda: &SuperPartition) -> Result<SymElement> {
        self.convert(&SymElement::basis_element(SymBasis::SchurBar, lambda.clone()), SymBasis::Monomial)
    }

    /// `s*_Λ = (-1)^{C(m,2)} ω s̄_{Λ'}` in the monomial basis.
    pub fn dual_schur(&self, lambda: &SuperPartition) -> Result<SymElement> {
        self.convert(&SymElement::basis_element(SymBasis::DualSchur, lambda.clone()), SymBasis::Monomial)
    }

    /// `s̄*_Λ = (-1)^{C(m,2)} ω s_{Λ'}` in the monomial basis.
    pub fn dual_schur_bar(&self, lambda: &SuperPartition) -> Result<SymElement> {
        self.convert(
            &SymElement::basis_element(SymBasis::DualSchurBar, lambda.clone()),
            SymBasis::Monomial,
        )
    }

    /// Structure constants of `family ∈ {s, s̄}`: `f_Γ f_Ω = Σ_Λ c^Λ_{ΓΩ} f_Λ`.
    pub fn lr_coeffs(
        &self,
        family: SymBasis,
        gamma: &SuperPartition,
        omega: &SuperPartition,
    ) -> Result<SymComb<Q>> {
        check_family(family)?;
        let a = SymElement::basis_element(family, gamma.clone());
        let b = SymElement::basis_element(family, omega.clone());
        Ok(self.mul(&a, &b)?.terms)
    }

    /// The skew function fixed by `f_Λ(x,y;θ,φ) = Σ_Ω f_{Λ/Ω}(x;θ) f_Ω(y;φ)`,
    /// i.e. `s_{Λ/Ω} = Σ_Γ c̄^{Λ'}_{Ω'Γ'} s_Γ` and `s̄_{Λ/Ω} = Σ_Γ c^Λ_{ΓΩ} s̄_Γ`.
    /// It is adjoint to right multiplication by the dual function.
    pub fn skew(&self, family: SymBasis, lambda: &SuperPartition, omega: &SuperPartition) -> Result<SymElement> {
        check_family(family)?;
        let (bl, bo) = (lambda.bidegree(), omega.bidegree());
        let mut out = SymComb::zero();
        if bo.n <= bl.n && bo.m <= bl.m {
            let rest = Bidegree::new(bl.n - bo.n, bl.m - bo.m);
            for gamma in superpartitions(rest) {
                let c = if family == SymBasis::Schur {
                    self.lr_coeffs(SymBasis::SchurBar, &omega.conjugate(), &gamma.conjugate())?
                        .coeff(&lambda.conjugate())
                } else {
                    self.lr_coeffs(SymBasis::Schur, &gamma, omega)?.coeff(lambda)
                };
                out.add_term(gamma, c);
            }
        }
        Ok(SymElement::new(family, out))
    }

    /// `Δf_Λ = Σ_Ω f_{Λ/Ω} ⊗ f_Ω` for `family ∈ {s, s̄}`.
    pub fn comul_schur(&self, family: SymBasis, lambda: &SuperPartition) -> Result<SymTensor> {
        check_family(family)?;
        let b = lambda.bidegree();
        let mut terms = TensorComb::zero();
        for m in 0..=b.m {
            for n in 0..=b.n {
                for omega in superpartitions(Bidegree::new(n, m)) {
                    let sk = self.skew(family, lambda, &omega)?;
                    for (g, c) in &sk.terms {
                        terms.add_term((g.clone(), omega.clone()), c.clone());
                    }
                }
            }
        }
        Ok(SymTensor {
            basis: family,
            terms,
        })
    }
}

fn check_family(family: SymBasis) -> Result<()> {
    match family {
        SymBasis::Schur | SymBasis::SchurBar => Ok(()),
        other => Err(Error::Unsupported(format!(
            "{other} is not a Schur family (expected s or sb)"
        ))),
    }
}

#[cfg(test)]
mod tests;
