//! Macdonald polynomials in superspace along a one-parameter specialization,
//! by Gram–Schmidt in the monomial basis.

use num_traits::{One, Zero};

use super::generators::SymComb;
use crate::combinatorics::{dominance_leq, partition::z_factor, SuperPartition};
use crate::error::{Error, Result};
use crate::kernel::{Matrix, RationalFunction, UniPoly};
use crate::Q;

/// Where `(q,t)` is evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `q = t = u`.
    Diagonal,
    /// `q = u`, `t = c·u`.
    Ray(Q),
}

/// `⟨⟨p_Λ, p_Λ⟩⟩_{q,t}` at the specialization.
pub fn power_sum_norm(lambda: &SuperPartition, spec: &Specialization) -> RationalFunction {
    let u = RationalFunction::var();
    let fermionic: usize = lambda.fermionic_parts().iter().sum();
    let mut w = u.pow(fermionic) * RationalFunction::constant(Q::from_integer(z_factor(lambda.symmetric_parts()).into()));
    if let Specialization::Ray(c) = spec {
        for &r in lambda.symmetric_parts() {
            let one = RationalFunction::one();
            let num = one.clone() - u.pow(r);
            let den = one - RationalFunction::from_poly(UniPoly::monomial(c.clone(), 1)).pow(r);
            w = w * num / den;
        }
    }
    w
}

fn dot(a: &[RationalFunction], b: &[RationalFunction], w: &[RationalFunction]) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for ((x, y), z) in a.iter().zip(b).zip(w) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = acc + x.clone() * y.clone() * z.clone();
    }
    acc
}

/// `P_Λ` for every `Λ` of one bidegree.
///
/// `index` lists the superpartitions dominant-first and `m_to_p` has the
/// power-sum coordinates of `m_index[j]` in column `j`.
pub fn macdonald_bidegree(
    index: &[SuperPartition],
    m_to_p: &Matrix<Q>,
    spec: &Specialization,
) -> Result<Vec<SymComb<RationalFunction>>> {
    let dim = index.len();
    let weights: Vec<RationalFunction> = index.iter().map(|l| power_sum_norm(l, spec)).collect();
    let lift = |j: usize| -> Vec<RationalFunction> {
        (0..dim)
            .map(|i| RationalFunction::constant(m_to_p[(i, j)].clone()))
            .collect()
    };
    // Orthogonalized vectors in p coordinates, m coordinates, and their norms,
    // filled from the least dominant superpartition upwards.
    let mut p_coords: Vec<Vec<RationalFunction>> = vec![Vec::new(); dim];
    let mut m_coords: Vec<Vec<RationalFunction>> = vec![Vec::new(); dim];
    let mut norms: Vec<RationalFunction> = vec![RationalFunction::zero(); dim];
    for j in (0..dim).rev() {
        let mut v = lift(j);
        let mut mc = vec![RationalFunction::zero(); dim];
        mc[j] = RationalFunction::one();
        for k in j + 1..dim {
            let c = dot(&v, &p_coords[k], &weights);
            if c.is_zero() {
                continue;
            }
            let c = c / norms[k].clone();
            for i in 0..dim {
                if !p_coords[k][i].is_zero() {
                    v[i] = v[i].clone() - c.clone() * p_coords[k][i].clone();
                }
                if !m_coords[k][i].is_zero() {
                    mc[i] = mc[i].clone() - c.clone() * m_coords[k][i].clone();
                }
            }
        }
        let norm = dot(&v, &v, &weights);
        if norm.is_zero() {
            return Err(Error::SingularMatrix);
        }
        norms[j] = norm;
        p_coords[j] = v;
        m_coords[j] = mc;
    }
    let mut out = Vec::with_capacity(dim);
    for (j, lambda) in index.iter().enumerate() {
        let mut p = SymComb::zero();
        for (i, c) in m_coords[j].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !dominance_leq(&index[i], lambda) {
                return Err(Error::NotTriangular(format!(
                    "P{lambda} has a term m{} not below it in dominance",
                    index[i]
                )));
            }
            p.add_term(index[i].clone(), c.clone());
        }
        out.push(p);
    }
    Ok(out)
}

/// Coefficientwise limit `u → 0` (`zero = true`) or `u → ∞`.
pub fn limit(f: &SymComb<RationalFunction>, zero: bool) -> Result<SymComb<Q>> {
    let mut out = SymComb::zero();
    for (l, c) in f {
        let v = if zero { c.limit_zero()? } else { c.limit_infinity()? };
        out.add_term(l.clone(), v);
    }
    Ok(out)
}

/// Deformed scalar product of two elements given in `p` coordinates.
pub fn deformed_scalar(
    f: &SymComb<RationalFunction>,
    g: &SymComb<RationalFunction>,
    spec: &Specialization,
) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for (l, c) in f {
        let d = g.coeff(l);
        if !d.is_zero() {
            acc = acc + c.clone() * d * power_sum_norm(l, spec);
        }
    }
    acc
}

/// Every `P_Λ` is `m_Λ` plus terms strictly below `Λ` in dominance.
pub fn is_unitriangular(index: &[SuperPartition], polys: &[SymComb<RationalFunction>]) -> bool {
    index.iter().zip(polys).all(|(l, p)| {
        p.coeff(l).is_one() && p.indices().all(|o| dominance_leq(o, l))
    })
}
