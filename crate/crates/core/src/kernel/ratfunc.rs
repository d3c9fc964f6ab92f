//! Univariate polynomials and rational functions over `Q` in a parameter `u`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Inv, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Q;

/// Polynomial in `u` with rational coefficients, stored lowest degree first
/// without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `c * u^k`
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn var() -> Self {
        Self::monomial(Q::one(), 1)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, at: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lead_inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv())
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    fn fmt_in(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{var}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        Self::constant(Q::one())
    }
}

impl Add for UniPoly {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for UniPoly {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for UniPoly {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for UniPoly {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "u")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "u")
    }
}

/// A reduced quotient of polynomials in `u` with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().inv();
        Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The parameter `u`.
    pub fn var() -> Self {
        Self::from_poly(UniPoly::var())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Value at `u = 0`.
    pub fn limit_zero(&self) -> Result<Q> {
        let d = self.den.coeff(0);
        if d.is_zero() {
            return Err(Error::Pole { at: "u = 0" });
        }
        Ok(self.num.coeff(0) / d)
    }

    /// Limit as `u → ∞`.
    pub fn limit_infinity(&self) -> Result<Q> {
        let dn = self.num.degree();
        let dd = self.den.degree().unwrap_or(0);
        match dn {
            None => Ok(Q::zero()),
            Some(n) if n < dd => Ok(Q::zero()),
            Some(n) if n == dd => Ok(self.num.leading() / self.den.leading()),
            Some(_) => Err(Error::Pole { at: "u = ∞" }),
        }
    }

    pub fn eval(&self, at: &Q) -> Result<Q> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole { at: "evaluation point" });
        }
        Ok(self.num.eval(at) / d)
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }
}

impl From<Q> for RationalFunction {
    fn from(c: Q) -> Self {
        Self::constant(c)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
}

impl Add for RationalFunction {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return Self::new(self.num + rhs.num, self.den);
        }
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        Self::new(num, &self.den * &rhs.den)
    }
}

impl Sub for RationalFunction {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RationalFunction {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RationalFunction {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Inv for RationalFunction {
    type Output = Self;

    fn inv(self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        Self::new(self.den, self.num)
    }
}

impl Div for RationalFunction {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.degree().unwrap_or(0) == 0 {
                return write!(f, "{}", self.num);
            }
            return write!(f, "({})", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn limits_of_simple_quotients() {
        // (u+2)/(u^2+1)
        let r = RationalFunction::new(poly(&[2, 1]), poly(&[1, 0, 1]));
        assert_eq!(r.limit_zero().unwrap(), q(2));
        assert_eq!(r.limit_infinity().unwrap(), q(0));
        // (3u^2+u)/(u^2-u)
        let r = RationalFunction::new(poly(&[0, 1, 3]), poly(&[0, -1, 1]));
        assert_eq!(r.limit_infinity().unwrap(), q(3));
        // reduced to (3u+1)/(u-1), so the value at zero exists
        assert_eq!(r.limit_zero().unwrap(), q(-1));
    }

    #[test]
    fn one_over_u_has_a_pole_at_zero() {
        let r = RationalFunction::one() / RationalFunction::var();
        assert_eq!(r.limit_zero(), Err(Error::Pole { at: "u = 0" }));
        assert_eq!(r.limit_infinity().unwrap(), q(0));
        assert_eq!(RationalFunction::var().limit_infinity(), Err(Error::Pole { at: "u = ∞" }));
    }

    #[test]
    fn normal_form_is_reduced_and_monic() {
        let r = RationalFunction::new(poly(&[-2, 0, 2]), poly(&[2, 2]));
        // (2u^2 - 2)/(2u + 2) = u - 1
        assert_eq!(r, RationalFunction::from_poly(poly(&[-1, 1])));
        assert!(RationalFunction::new(poly(&[3]), poly(&[6])).is_constant());
    }

    #[test]
    fn display() {
        let r = RationalFunction::new(poly(&[0, 1]), poly(&[1, 1]));
        assert_eq!(r.to_string(), "(u)/(u + 1)");
        assert_eq!(RationalFunction::constant(Q::new(1.into(), 2.into())).to_string(), "1/2");
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-4i64..5, 0..4).prop_map(|c| poly(&c))
    }

    fn nonzero_rf() -> impl Strategy<Value = RationalFunction> {
        (small_poly(), small_poly())
            .prop_filter("nonzero", |(a, b)| !a.is_zero() && !b.is_zero())
            .prop_map(|(a, b)| RationalFunction::new(a, b))
    }

    proptest! {
        #[test]
        fn quotient_times_reciprocal_is_one(a in nonzero_rf(), b in nonzero_rf()) {
            let x = a.clone() / b.clone();
            let y = b / a;
            prop_assert_eq!(x * y, RationalFunction::one());
        }

        #[test]
        fn field_axioms(a in nonzero_rf(), b in nonzero_rf(), c in nonzero_rf()) {
            prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() - a, RationalFunction::zero());
        }

        #[test]
        fn division_with_remainder(a in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            let (quot, rem) = a.div_rem(&d);
            prop_assert!(rem.degree().is_none_or(|r| r < d.degree().unwrap()));
            prop_assert_eq!(&quot * &d + rem, a);
        }
    }
}
