use super::cochain::{CarrierRef, Cochain, CochainRule};
use crate::algebra::{check_invariant_trace, Derivation, Trace};
use crate::engine::{chevalley_eilenberg_differential, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;

/// `φ_c(a0,…,an) = Σ_σ sgn(σ) τ(a0 X_{σ(1)}(a1) ⋯ X_{σ(n)}(an))`, extended
/// linearly in `c ∈ Λⁿ(span Ds)` (coordinates in `exterior_basis`).
///
/// `τ` must be invariant under every derivation on the window (the whole
/// basis of a finite carrier when `window` is `None`). For `n ≥ 1` the Lie
/// algebra spanned by `Ds` is reconstructed on the window and the
/// Chevalley–Eilenberg boundary of `c` is recorded in the rule; only when
/// it vanishes is `φ_c` expected to be cyclic.
pub fn lie_action_to_cyclic(carrier: CarrierRef, tau: Trace, ds: Vec<Derivation>, c: SparseVec, n: usize, window: Option<Vec<String>>) -> Result<Cochain> {
    let verdict = check_invariant_trace(carrier.as_ref(), &tau, &ds, window.clone())?;
    if let Some((_, label)) = verdict.counterexample {
        return Err(Error::NotInvariant(label));
    }
    let ce_closed = if n == 0 || c.is_empty() {
        true
    } else {
        let lie = LieAlgebra::from_derivations(carrier.field(), &ds, &verdict.window)?;
        chevalley_eilenberg_differential(&lie, n).apply(&c).is_empty()
    };
    Ok(Cochain::rule(carrier, n, CochainRule::FromLie { tau, ds, c, ce_closed }))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{labels, validate_trace, Element};
    use crate::chern::cochain::{check_closed, validate_cyclic_cocycle};
    use crate::constructions::{matrix_algebra, polynomial_torus, torus_window};
    use crate::engine::wedge;
    use crate::scalar::{FieldSpec, Scalar};

    #[test]
    fn torus_cocycles() {
        let t = polynomial_torus().unwrap();
        let f = t.algebra.field();
        let carrier: CarrierRef = t.algebra.clone();
        let ds = vec![t.x1.clone(), t.x2.clone()];
        let w = torus_window(1);
        let phi0 = lie_action_to_cyclic(carrier.clone(), t.tau.clone(), ds.clone(), vec![(0, Scalar::one(&f))], 0, Some(w.clone())).unwrap();
        assert_eq!(phi0.eval(&["g:(0,0)"]).unwrap(), Scalar::one(&f));
        let phi1 = lie_action_to_cyclic(carrier.clone(), t.tau.clone(), ds.clone(), wedge(2, &[0], &f), 1, Some(w.clone())).unwrap();
        // φ₁(U⁻¹, U) = τ(U⁻¹ X₁(U)) = 1
        assert_eq!(phi1.eval(&["g:(-1,0)", "g:(1,0)"]).unwrap(), Scalar::one(&f));
        validate_cyclic_cocycle(phi1, Some(w.clone())).unwrap();
        let phi2 = lie_action_to_cyclic(carrier, t.tau.clone(), ds, wedge(2, &[0, 1], &f), 2, Some(w.clone())).unwrap();
        validate_cyclic_cocycle(phi2.clone(), Some(w)).unwrap();
        // φ₂(a0, a1, a2) = τ(a0(X₁(a1)X₂(a2) − X₂(a1)X₁(a2)))
        let (a0, a1, a2) = (labels::lattice(&[-1, -1]), labels::lattice(&[1, 0]), labels::lattice(&[0, 1]));
        let prod = |x: &Element, y: &Element| t.algebra.mul(x, y).unwrap();
        use crate::algebra::Carrier;
        let e = |l: &str| Element::basis(f, l);
        let lhs = prod(&t.x1.apply(&e(&a1)), &t.x2.apply(&e(&a2))).sub(&prod(&t.x2.apply(&e(&a1)), &t.x1.apply(&e(&a2))));
        let expected = t.tau.apply(&prod(&e(&a0), &lhs));
        assert_eq!(phi2.eval(&[&a0, &a1, &a2]).unwrap(), expected);
        assert!(!expected.is_zero());
    }

    #[test]
    fn nonabelian_case_is_hochschild_but_not_cyclic() {
        let q = FieldSpec::Rationals;
        let m2 = matrix_algebra(q, 2).unwrap();
        let tau = validate_trace(&m2, crate::algebra::Trace::table(q, [("E:1,1".to_string(), Scalar::one(&q)), ("E:2,2".to_string(), Scalar::one(&q))]), None).unwrap();
        let ad = |l: &str| Derivation::inner(&m2, &Element::basis(q, l)).unwrap();
        let carrier: CarrierRef = Arc::new(m2.clone());
        let phi = lie_action_to_cyclic(carrier, tau, vec![ad("E:1,1"), ad("E:1,2")], wedge(2, &[0, 1], &q), 2, None).unwrap();
        match phi.representation() {
            crate::chern::cochain::Representation::Rule(CochainRule::FromLie { ce_closed, .. }) => assert!(!ce_closed),
            _ => unreachable!(),
        }
        check_closed(&phi, None).unwrap();
        assert!(matches!(validate_cyclic_cocycle(phi, None), Err(Error::NotCyclic(_))));
    }

    #[test]
    fn non_invariant_trace_rejected() {
        let q = FieldSpec::Rationals;
        let m2 = matrix_algebra(q, 2).unwrap();
        // E11 coefficient is not a trace, and not ad(E12)-invariant
        let tau = crate::algebra::Trace::table(q, [("E:1,2".to_string(), Scalar::one(&q))]);
        let d = Derivation::inner(&m2, &Element::basis(q, "E:1,1")).unwrap();
        let res = lie_action_to_cyclic(Arc::new(m2), tau, vec![d], vec![(0, Scalar::one(&q))], 1, None);
        assert!(matches!(res, Err(Error::NotInvariant(_))));
    }
}
