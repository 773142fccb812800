//! Dense univariate polynomials over an exact coefficient field.

use std::fmt::Debug;

use super::rational::Q;

/// Field operations needed by [`Poly`]. Constants are produced from an
/// existing element (`zero_like`/`one_like`) so that coefficient types with
/// runtime context (the cyclotomic order) need no global state.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self) -> Self;
    fn mul_int(&self, n: i64) -> Self;
}

impl Coeff for Q {
    fn is_zero(&self) -> bool {
        Q::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn add(&self, other: &Self) -> Self {
        Q::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Q::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Q::mul(self, other)
    }
    fn neg(&self) -> Self {
        Q::neg(self)
    }
    fn inv(&self) -> Self {
        Q::inv(self)
    }
    fn mul_int(&self, n: i64) -> Self {
        Q::mul(self, &Q::from_int(n))
    }
}

/// Coefficients are stored low degree first with no trailing zeros; the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<K> {
    pub c: Vec<K>,
}

impl<K: Coeff> Poly<K> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn from_coeffs(mut c: Vec<K>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn constant(k: K) -> Self {
        Self::from_coeffs(vec![k])
    }

    /// `k * x^e`.
    pub fn monomial(k: K, e: usize) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let mut c = vec![k.zero_like(); e];
        c.push(k);
        Poly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&K> {
        self.c.last()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.c.len() >= other.c.len() { (self, other) } else { (other, self) };
        let mut c = long.c.clone();
        for (i, v) in short.c.iter().enumerate() {
            c[i] = c[i].add(v);
        }
        Self::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|x| x.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let z = self.c[0].zero_like();
        let mut c = vec![z; self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.c.iter().map(|x| x.mul(k)).collect())
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.c[dd].inv();
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let z = lead_inv.zero_like();
        let mut quot = vec![z; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = rem[i].mul(&lead_inv);
            for (j, dc) in divisor.c.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = rem[k].sub(&f.mul(dc));
            }
            quot[i - dd] = f;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    pub fn make_monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let one = match self.lead().or(other.lead()) {
            Some(l) => l.one_like(),
            None => return (Self::zero(), Self::zero(), Self::zero()),
        };
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(one.clone()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(one));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let l = r0.lead().expect("nonzero gcd").inv();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.c.iter().enumerate().skip(1).map(|(i, k)| k.mul_int(i as i64)).collect())
    }

    pub fn eval(&self, x: &K) -> Option<K> {
        let mut acc: Option<K> = None;
        for k in self.c.iter().rev() {
            acc = Some(match acc {
                None => k.clone(),
                Some(a) => a.mul(x).add(k),
            });
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly<Q> {
        Poly::from_coeffs(v.iter().map(|&x| Q::from_int(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) / (x - 1) = x + 1
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let g = p(&[-1, 0, 1]).gcd(&p(&[2, 2]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[-1, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, p(&[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
    }
}
