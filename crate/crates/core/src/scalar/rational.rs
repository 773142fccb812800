//! Rational numbers with an `i64` fast path.
//!
//! Almost every structure constant and operator entry in this crate is a
//! small integer, so values are kept as a reduced `i64` pair until an
//! operation overflows, at which point they move to `BigRational`.
//! The representation is canonical: a value that fits in `i64` is never
//! stored in the big variant.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Q {
    /// Reduced, denominator > 0.
    Small(i64, i64),
    Big(BigRational),
}

impl Q {
    pub fn zero() -> Self {
        Q::Small(0, 1)
    }

    pub fn one() -> Self {
        Q::Small(1, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Q::Small(n, 1)
    }

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            // BigRational is already reduced with positive denominator.
            if n != i64::MIN && d != i64::MIN {
                return Q::Small(n, d);
            }
        }
        Q::Big(r)
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Q::Small(0, 1);
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN && b != i64::MIN => Q::Small(a, b),
            _ => Q::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Q::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Q::Small(_, d) => *d == 1,
            Q::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Q::Small(n, _) => *n < 0,
            Q::Big(r) => r.is_negative(),
        }
    }

    pub fn add(&self, other: &Q) -> Q {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        if s != i64::MIN {
                            return Q::Small(s, 1);
                        }
                    }
                }
                let n = *a as i128 * *d as i128 + *c as i128 * *b as i128;
                let den = *b as i128 * *d as i128;
                Q::from_i128(n, den)
            }
            _ => Q::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Q {
        match self {
            Q::Small(n, d) => Q::Small(-n, *d),
            Q::Big(r) => Q::from_big(-r),
        }
    }

    pub fn sub(&self, other: &Q) -> Q {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Q) -> Q {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        if p != i64::MIN {
                            return Q::Small(p, 1);
                        }
                    }
                }
                Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Q::from_big(self.to_big() * other.to_big()),
        }
    }

    /// Panics on zero; callers check first.
    pub fn inv(&self) -> Q {
        match self {
            Q::Small(n, d) => {
                assert!(*n != 0, "inverse of zero");
                Q::from_i128(*d as i128, *n as i128)
            }
            Q::Big(r) => Q::from_big(r.recip()),
        }
    }

    pub fn div(&self, other: &Q) -> Q {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: u32) -> Q {
        let mut acc = Q::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn numer_big(&self) -> BigInt {
        match self {
            Q::Small(n, _) => BigInt::from(*n),
            Q::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom_big(&self) -> BigInt {
        match self {
            Q::Small(_, d) => BigInt::from(*d),
            Q::Big(r) => r.denom().clone(),
        }
    }

    pub fn abs(&self) -> Q {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(n, 1) => write!(f, "{n}"),
            Q::Small(n, d) => write!(f, "{n}/{d}"),
            Q::Big(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Self {
        Q::from_int(n)
    }
}

/// Parse a decimal integer that may exceed `i64`.
pub(crate) fn parse_integer(digits: &str) -> Option<Q> {
    if let Ok(n) = digits.parse::<i64>() {
        return Some(Q::from_int(n));
    }
    let big: BigInt = digits.parse().ok()?;
    Some(Q::from_big(BigRational::from_integer(big)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic() {
        let a = Q::new(1, 2);
        let b = Q::new(1, 3);
        assert_eq!(a.add(&b), Q::new(5, 6));
        assert_eq!(a.mul(&b), Q::new(1, 6));
        assert_eq!(a.sub(&a), Q::zero());
        assert_eq!(Q::new(-4, -6), Q::new(2, 3));
        assert_eq!(Q::new(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn overflow_moves_to_big_and_back() {
        let big = Q::from_int(i64::MAX - 1);
        let sq = big.mul(&big);
        assert!(matches!(sq, Q::Big(_)));
        let back = sq.div(&big);
        assert_eq!(back, big);
        assert!(matches!(back, Q::Small(_, _)));
    }

    #[test]
    fn ordering_is_numeric() {
        assert!(Q::new(1, 3) < Q::new(1, 2));
        assert!(Q::new(-1, 2) < Q::zero());
    }
}
