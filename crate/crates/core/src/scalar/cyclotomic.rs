//! Arithmetic in ℚ(ζₙ) realised as ℚ[x]/Φₙ(x).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::poly::{Coeff, Poly};
use super::rational::Q;

/// Shared modulus data for one cyclotomic order.
#[derive(Debug)]
pub struct CycloCtx {
    pub order: u32,
    pub phi: Poly<Q>,
    /// `x^k mod Φₙ` for `deg Φₙ ≤ k < 2·deg Φₙ − 1`, low degree first.
    reduce: Vec<Vec<Q>>,
}

impl CycloCtx {
    pub fn degree(&self) -> usize {
        self.phi.degree().unwrap_or(0)
    }
}

/// Φₙ by dividing xⁿ − 1 by Φ_d for every proper divisor d of n.
pub fn cyclotomic_polynomial(n: u32) -> Poly<Q> {
    assert!(n >= 1);
    let mut c = vec![Q::zero(); n as usize + 1];
    c[0] = Q::from_int(-1);
    c[n as usize] = Q::one();
    let mut p = Poly::from_coeffs(c);
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = p.divrem(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

pub fn context(order: u32) -> Arc<CycloCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    guard
        .entry(order)
        .or_insert_with(|| {
            let phi = cyclotomic_polynomial(order);
            let deg = phi.degree().unwrap_or(0);
            let reduce = (deg..(2 * deg).saturating_sub(1))
                .map(|k| {
                    let mut r = Poly::monomial(Q::one(), k).rem(&phi).c;
                    r.resize(deg, Q::zero());
                    r
                })
                .collect();
            Arc::new(CycloCtx { order, phi, reduce })
        })
        .clone()
}

/// An element of ℚ(ζₙ), stored as its reduced representative of degree < φ(n).
#[derive(Clone)]
pub struct Cyc {
    pub ctx: Arc<CycloCtx>,
    pub poly: Poly<Q>,
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order && self.poly == other.poly
    }
}

impl Eq for Cyc {}

impl Cyc {
    pub fn from_poly(ctx: Arc<CycloCtx>, p: Poly<Q>) -> Self {
        let poly = p.rem(&ctx.phi);
        Cyc { ctx, poly }
    }

    pub fn from_q(ctx: Arc<CycloCtx>, q: Q) -> Self {
        Cyc { ctx, poly: Poly::constant(q) }
    }

    pub fn zeta_pow(ctx: Arc<CycloCtx>, k: i64) -> Self {
        let n = ctx.order as i64;
        let e = k.rem_euclid(n) as usize;
        Self::from_poly(ctx, Poly::monomial(Q::one(), e))
    }

    pub fn order(&self) -> u32 {
        self.ctx.order
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self.poly.c.len() {
            0 => Some(Q::zero()),
            1 => Some(self.poly.c[0].clone()),
            _ => None,
        }
    }
}

impl Coeff for Cyc {
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
    fn zero_like(&self) -> Self {
        Cyc { ctx: self.ctx.clone(), poly: Poly::zero() }
    }
    fn one_like(&self) -> Self {
        Cyc { ctx: self.ctx.clone(), poly: Poly::constant(Q::one()) }
    }
    fn add(&self, other: &Self) -> Self {
        Cyc { ctx: self.ctx.clone(), poly: self.poly.add(&other.poly) }
    }
    fn sub(&self, other: &Self) -> Self {
        Cyc { ctx: self.ctx.clone(), poly: self.poly.sub(&other.poly) }
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.poly.c, &other.poly.c);
        if a.len() <= 1 || b.len() <= 1 {
            let (k, p) = if a.len() <= 1 { (a, &other.poly) } else { (b, &self.poly) };
            let poly = k.first().map_or_else(Poly::zero, |k| p.scale(k));
            return Cyc { ctx: self.ctx.clone(), poly };
        }
        // schoolbook product, then fold the high part through the table
        let deg = self.ctx.degree();
        let mut c = vec![Q::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] = c[i + j].add(&x.mul(y));
                }
            }
        }
        let high = c.split_off(deg.min(c.len()));
        for (k, h) in high.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            for (l, r) in self.ctx.reduce[k].iter().enumerate() {
                if !r.is_zero() {
                    c[l] = c[l].add(&h.mul(r));
                }
            }
        }
        Cyc { ctx: self.ctx.clone(), poly: Poly::from_coeffs(c) }
    }
    fn neg(&self) -> Self {
        Cyc { ctx: self.ctx.clone(), poly: self.poly.neg() }
    }
    fn inv(&self) -> Self {
        // Φₙ is irreducible, so gcd(a, Φₙ) = 1 for nonzero a.
        let (g, s, _) = self.poly.xgcd(&self.ctx.phi);
        debug_assert!(g.degree() == Some(0));
        Self::from_poly(self.ctx.clone(), s)
    }
    fn mul_int(&self, n: i64) -> Self {
        Cyc { ctx: self.ctx.clone(), poly: self.poly.scale(&Q::from_int(n)) }
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.poly, "z", |q| QTerm::Rational(q.clone())))
    }
}

pub(crate) enum QTerm {
    Rational(Q),
    Compound(String),
}

/// Render a polynomial highest degree first, e.g. `1/2*z^2 - z + 1`.
pub(crate) fn format_poly<K: Coeff>(p: &Poly<K>, var: &str, term: impl Fn(&K) -> QTerm) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, k) in p.c.iter().enumerate().rev() {
        if k.is_zero() {
            continue;
        }
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        let first = out.is_empty();
        match term(k) {
            QTerm::Rational(q) => {
                let neg = q.is_negative();
                let mag = q.abs();
                if first {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                if mono.is_empty() {
                    out.push_str(&mag.to_string());
                } else if mag.is_one() {
                    out.push_str(&mono);
                } else {
                    out.push_str(&format!("{mag}*{mono}"));
                }
            }
            QTerm::Compound(s) => {
                if !first {
                    out.push_str(" + ");
                }
                if mono.is_empty() {
                    out.push_str(&format!("({s})"));
                } else {
                    out.push_str(&format!("({s})*{mono}"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &Poly<Q>) -> Vec<i64> {
        p.c.iter()
            .map(|q| match q {
                Q::Small(n, 1) => *n,
                _ => panic!("non-integer"),
            })
            .collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(coeffs(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_squared_in_q_i() {
        let z = Cyc::zeta_pow(context(4), 1);
        assert_eq!(z.mul(&z), Cyc::from_q(context(4), Q::from_int(-1)));
    }

    #[test]
    fn table_product_matches_division() {
        for order in [3, 5, 7, 8, 12] {
            let ctx = context(order);
            let deg = ctx.degree();
            let a: Vec<Q> = (0..deg).map(|i| Q::new(i as i64 * 3 - 2, 1 + i as i64 % 2)).collect();
            let b: Vec<Q> = (0..deg).map(|i| Q::from_int(5 - i as i64 * i as i64)).collect();
            let (pa, pb) = (Poly::from_coeffs(a), Poly::from_coeffs(b));
            let want = pa.mul(&pb).rem(&ctx.phi);
            let got = Cyc::from_poly(ctx.clone(), pa).mul(&Cyc::from_poly(ctx.clone(), pb));
            assert_eq!(got.poly, want, "order {order}");
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let ctx = context(5);
        let a = Cyc::from_poly(ctx.clone(), Poly::from_coeffs(vec![Q::from_int(2), Q::from_int(-1), Q::new(1, 3)]));
        assert_eq!(a.mul(&a.inv()), a.one_like());
    }

    #[test]
    fn display_format() {
        let ctx = context(5);
        let a = Cyc::from_poly(ctx, Poly::from_coeffs(vec![Q::one(), Q::from_int(-1), Q::new(1, 2)]));
        assert_eq!(a.to_string(), "1/2*z^2 - z + 1");
    }
}
