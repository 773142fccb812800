use serde_json::{json, Value};

use super::cochain::{Chain, Cochain, Window};
use super::matrix::{same_carrier, AlgMatrix};
use crate::algebra::{Element, Trace};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `Σ_{i0,…,im} x¹_{i0 i1} ⊗ x²_{i1 i2} ⊗ ⋯ ⊗ x^{m+1}_{im i0}`.
fn contracted(factors: &[&AlgMatrix]) -> Chain {
    let field = factors[0].field();
    let k = factors[0].size();
    let len = factors.len();
    let mut out = Chain::zero(field, len - 1);
    let one = Scalar::one(&field);
    let mut idx = vec![0usize; len];
    loop {
        let elems: Vec<Element> = (0..len).map(|t| factors[t].entry(idx[t], idx[(t + 1) % len]).clone()).collect();
        if elems.iter().all(|x| !x.is_zero()) {
            out.add_scaled(&one, &Chain::tensor(field, &elems));
        }
        let mut p = len;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < k {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// `Ch^{2n}(e) = Tr(e⊗e⊗⋯⊗e)` with `2n+1` factors, in `C_{2n}(A)`.
pub fn chern_even(e: &AlgMatrix, n: usize) -> Result<Chain> {
    if !e.is_idempotent_certified() {
        return Err(Error::NoCertificate);
    }
    Ok(contracted(&vec![e; 2 * n + 1]))
}

/// `Tr((u⁻¹−1)⊗(u−1)⊗⋯⊗(u⁻¹−1)⊗(u−1))` with `2n+2` factors, in
/// `C_{2n+1}(A)`; `u⁻¹` is the certified witness.
pub fn chern_odd(u: &AlgMatrix, n: usize) -> Result<Chain> {
    let w = u.witness().ok_or(Error::NoCertificate)?;
    let id = AlgMatrix::identity(u.carrier().clone(), u.size());
    let (a, b) = (w.sub(&id)?, u.sub(&id)?);
    let factors: Vec<&AlgMatrix> = (0..2 * n + 2).map(|t| if t % 2 == 0 { &a } else { &b }).collect();
    Ok(contracted(&factors))
}

/// A pairing value with the provenance needed to read it: the cocycle's
/// verified window and the basis labels the evaluation touched.
#[derive(Clone, Debug, PartialEq)]
pub struct Pairing {
    pub value: Scalar,
    pub degree: usize,
    pub window: Window,
    pub support: Vec<String>,
    /// Whether every touched label lies in the verified window.
    pub within_window: bool,
}

impl Pairing {
    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.to_string(),
            "degree": self.degree,
            "window": self.window.to_json(),
            "support": self.support,
            "within_window": self.within_window,
        })
    }
}

fn check_pairing(phi: &Cochain, m: &AlgMatrix, odd: bool) -> Result<Window> {
    if !same_carrier(phi.carrier(), m.carrier()) {
        return Err(Error::CarrierMismatch(format!("{} vs {}", phi.carrier().name(), m.carrier().name())));
    }
    let d = phi.degree();
    if (d % 2 == 1) != odd {
        return Err(Error::DegreeMismatch { expected: d ^ 1, found: d });
    }
    phi.verified_window().cloned().ok_or(Error::NotVerified)
}

fn finish(phi: &Cochain, chain: &Chain, window: Window) -> Result<Pairing> {
    let support = chain.support();
    let within_window = support.iter().all(|l| window.contains(l));
    Ok(Pairing { value: phi.eval_chain(chain)?, degree: phi.degree(), window, support, within_window })
}

/// `⟨[φ], [e]⟩ = (tr#φ)(e, …, e)` for a verified cocycle of degree `2n`.
pub fn pair_even(phi: &Cochain, e: &AlgMatrix) -> Result<Pairing> {
    let window = check_pairing(phi, e, false)?;
    let chain = chern_even(e, phi.degree() / 2)?;
    finish(phi, &chain, window)
}

/// `⟨[φ], [u]⟩ = (tr#φ)(u⁻¹−1, u−1, …, u⁻¹−1, u−1)` for a verified cocycle
/// of degree `2n+1`.
pub fn pair_odd(phi: &Cochain, u: &AlgMatrix) -> Result<Pairing> {
    let window = check_pairing(phi, u, true)?;
    let chain = chern_odd(u, phi.degree() / 2)?;
    finish(phi, &chain, window)
}

/// `e ↦ Σ τ(e_ii)`.
#[derive(Clone, Debug)]
pub struct DimensionFunction {
    tau: Trace,
}

pub fn dimension_function(tau: Trace) -> DimensionFunction {
    DimensionFunction { tau }
}

impl DimensionFunction {
    pub fn apply(&self, e: &AlgMatrix) -> Scalar {
        self.tau.apply(&e.trace_element())
    }
}

/// Outcome of pairing a cochain with the conjugation family `u_t e u_t⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationVerdict {
    /// `⟨φ, u_t e u_t⁻¹⟩` as an element of the coefficient field.
    pub value: Scalar,
    /// `d/dt` of the value.
    pub derivative: Scalar,
    pub constant: bool,
    /// `⟨φ, e⟩`.
    pub base: Scalar,
    pub passed: bool,
    pub cyclic_verified: bool,
}

impl ConjugationVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.to_string(),
            "derivative": self.derivative.to_string(),
            "constant": self.constant,
            "base": self.base.to_string(),
            "passed": self.passed,
            "cyclic_verified": self.cyclic_verified,
        })
    }
}

/// Pairs `φ` (of even degree) with `e_t = u_t e u_t⁻¹` and checks that the
/// result is a constant function of `t` equal to `⟨φ, e⟩`. The cochain need
/// not be verified, so that the role of cyclicity can be demonstrated.
pub fn conjugation_invariance_test(phi: &Cochain, e: &AlgMatrix, u_t: &AlgMatrix) -> Result<ConjugationVerdict> {
    if !e.is_idempotent_certified() {
        return Err(Error::NoCertificate);
    }
    let w = u_t.witness().ok_or(Error::NoCertificate)?;
    if phi.degree() % 2 == 1 {
        return Err(Error::DegreeMismatch { expected: phi.degree() ^ 1, found: phi.degree() });
    }
    let n = phi.degree() / 2;
    let e_t = u_t.mul(e)?.mul(&w)?.certify_idempotent()?;
    let value = phi.eval_chain(&chern_even(&e_t, n)?)?;
    let base = phi.eval_chain(&chern_even(e, n)?)?;
    let derivative = value.derivative_t();
    let constant = value.is_constant_in_t();
    let passed = constant && value == base;
    Ok(ConjugationVerdict { value, derivative, constant, base, passed, cyclic_verified: phi.is_verified() })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{labels, validate_trace, Algebra};
    use crate::chern::cochain::{validate_cyclic_cocycle, CarrierRef};
    use crate::constructions::{matrix_algebra, weyl_torus, weyl_trace};
    use crate::scalar::FieldSpec;

    fn matrix_trace(a: &Algebra) -> Trace {
        let f = a.field();
        let vals = a.labels().iter().filter_map(|l| {
            let (i, j) = labels::parse_matrix_unit(l)?;
            (i == j).then(|| (l.clone(), Scalar::one(&f)))
        });
        validate_trace(a, Trace::table(f, vals), None).unwrap()
    }

    #[test]
    fn trivial_chern_characters() {
        let q: CarrierRef = Arc::new(matrix_algebra(FieldSpec::Rationals, 1).unwrap());
        let one = AlgMatrix::identity(q.clone(), 1).certify_idempotent().unwrap();
        let ch = chern_even(&one, 0).unwrap();
        assert_eq!(ch.terms, BTreeMap::from([(vec!["E:1,1".to_string()], Scalar::one(&FieldSpec::Rationals))]));
        let u = AlgMatrix::identity(q.clone(), 1);
        let u = u.clone().certify_invertible(&u).unwrap();
        assert!(chern_odd(&u, 0).unwrap().is_zero());
        assert!(chern_odd(&u, 1).unwrap().is_zero());
        assert_eq!(chern_even(&AlgMatrix::identity(q, 1), 0).unwrap_err(), Error::NoCertificate);
    }

    #[test]
    fn weyl_torus_trace_pairing() {
        let w = weyl_torus(1, 3).unwrap();
        let f = w.field();
        let tau = weyl_trace(&w).unwrap();
        let carrier: CarrierRef = Arc::new(w);
        let third = Scalar::from_q(&f, crate::scalar::Q::new(1, 3));
        let mut x = Element::zero(f);
        for m in 0..3 {
            x.add_term(crate::constructions::uv_label(m, 0), third.clone());
        }
        let e = AlgMatrix::element(carrier.clone(), x).unwrap().certify_idempotent().unwrap();
        let phi = validate_cyclic_cocycle(Cochain::from_trace(carrier, tau.clone()), None).unwrap();
        let p = pair_even(&phi, &e).unwrap();
        assert_eq!(p.value, third);
        assert_eq!(dimension_function(tau.clone()).apply(&e), third);
        let two = Scalar::from_int(&f, 2);
        let doubled = tau.lin_comb(&two, &tau, &Scalar::zero(&f));
        assert_eq!(dimension_function(doubled).apply(&e), &two * &third);
    }

    #[test]
    fn pairing_preconditions() {
        let m2 = matrix_algebra(FieldSpec::Rationals, 2).unwrap();
        let tau = matrix_trace(&m2);
        let a: CarrierRef = Arc::new(m2);
        let raw = Cochain::from_trace(a.clone(), tau);
        let e = AlgMatrix::element(a.clone(), Element::basis(FieldSpec::Rationals, "E:1,1")).unwrap();
        assert_eq!(pair_even(&raw, &e.clone().certify_idempotent().unwrap()).unwrap_err(), Error::NotVerified);
        let phi = validate_cyclic_cocycle(raw, None).unwrap();
        assert_eq!(pair_even(&phi, &e).unwrap_err(), Error::NoCertificate);
        let e = e.certify_idempotent().unwrap();
        assert_eq!(pair_even(&phi, &e).unwrap().value, Scalar::one(&FieldSpec::Rationals));
        assert_eq!(pair_odd(&phi, &e).unwrap_err(), Error::DegreeMismatch { expected: 1, found: 0 });
    }

    #[test]
    fn conjugation_family_over_rational_functions() {
        let f = FieldSpec::rational_functions();
        let m2 = matrix_algebra(f, 2).unwrap();
        let tau = matrix_trace(&m2);
        let a: CarrierRef = Arc::new(m2);
        let t = Scalar::t(&f).unwrap();
        let e12 = Element::basis(f, "E:1,2");
        let u = AlgMatrix::element(a.clone(), a.unit().add(&e12.scale(&t))).unwrap();
        let w = AlgMatrix::element(a.clone(), a.unit().sub(&e12.scale(&t))).unwrap();
        let u = u.certify_invertible(&w).unwrap();
        let e = AlgMatrix::element(a.clone(), Element::basis(f, "E:1,1")).unwrap().certify_idempotent().unwrap();
        let phi = validate_cyclic_cocycle(Cochain::from_trace(a.clone(), tau), None).unwrap();
        let v = conjugation_invariance_test(&phi, &e, &u).unwrap();
        assert!(v.passed && v.constant);
        assert_eq!(v.value, Scalar::one(&f));
        // the E12-coefficient functional is not a trace and sees −t
        let psi = Cochain::explicit(a, 0, BTreeMap::from([(vec!["E:1,2".to_string()], Scalar::one(&f))])).unwrap();
        let v = conjugation_invariance_test(&psi, &e, &u).unwrap();
        assert!(!v.constant && !v.passed && !v.cyclic_verified);
        assert_eq!(v.value, -&t);
    }
}
