//! Rational functions K(t) in lowest terms with a monic denominator.

use std::fmt;

use super::cyclotomic::{format_poly, QTerm};
use super::poly::{Coeff, Poly};

#[derive(Clone, PartialEq)]
pub struct RatFn<K> {
    pub num: Poly<K>,
    pub den: Poly<K>,
    /// The unit of K; lets zero values still build constants.
    pub one: K,
}

impl<K: Coeff> RatFn<K> {
    pub fn from_poly(p: Poly<K>, one: K) -> Self {
        RatFn { num: p, den: Poly::constant(one.clone()), one }
    }

    pub fn constant(k: K) -> Self {
        let one = k.one_like();
        Self::from_poly(Poly::constant(k), one)
    }

    pub fn t(one: K) -> Self {
        Self::from_poly(Poly::monomial(one.clone(), 1), one)
    }

    /// Build `num/den` in canonical form; `den` must be nonzero.
    pub fn new(num: Poly<K>, den: Poly<K>, one: K) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(Poly::zero(), one);
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.divrem(&g);
        let (mut d, _) = den.divrem(&g);
        let lead = d.lead().expect("nonzero").inv();
        n = n.scale(&lead);
        d = d.scale(&lead);
        RatFn { num: n, den: d, one }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone(), self.one.clone());
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
            self.one.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone(), one: self.one.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::from_poly(Poly::zero(), self.one.clone());
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den), self.one.clone())
    }

    pub fn inv(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone(), self.one.clone())
    }

    pub fn mul_int(&self, n: i64) -> Self {
        Self::new(self.num.scale(&self.one.mul_int(n)), self.den.clone(), self.one.clone())
    }

    /// d/dt by the quotient rule.
    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::new(n, self.den.mul(&self.den), self.one.clone())
    }

    pub(crate) fn render(&self, coeff: impl Fn(&K) -> QTerm + Copy) -> String {
        let n = format_poly(&self.num, "t", coeff);
        if self.den.degree() == Some(0) {
            return n;
        }
        let d = format_poly(&self.den, "t", coeff);
        format!("({n})/({d})")
    }
}

impl<K: Coeff> fmt::Debug for RatFn<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({:?} / {:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::Q;

    fn p(v: &[i64]) -> Poly<Q> {
        Poly::from_coeffs(v.iter().map(|&x| Q::from_int(x)).collect())
    }

    #[test]
    fn cancellation_to_polynomial() {
        let f = RatFn::new(p(&[-1, 0, 1]), p(&[-1, 1]), Q::one());
        assert_eq!(f, RatFn::from_poly(p(&[1, 1]), Q::one()));
    }

    #[test]
    fn denominator_is_monic() {
        let f = RatFn::new(p(&[1]), p(&[0, 2]), Q::one());
        assert_eq!(f.den, p(&[0, 1]));
        assert_eq!(f.num, Poly::constant(Q::new(1, 2)));
    }

    #[test]
    fn derivative_of_inverse() {
        // d/dt (1/t) = -1/t^2
        let f = RatFn::new(p(&[1]), p(&[0, 1]), Q::one());
        assert_eq!(f.derivative(), RatFn::new(p(&[-1]), p(&[0, 0, 1]), Q::one()));
    }
}
