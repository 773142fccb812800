use serde::Serialize;

use super::operators::{decode, encode};
use super::Engine;
use crate::algebra::{Algebra, Element};
use crate::constructions::{matrix_algebra, tensor_product};
use crate::error::{Error, Result};
use crate::linalg::{induced_rank, solve, SparseMatrix};
use crate::scalar::Scalar;

/// The generalized trace `Tr: C_n(M_k(A)) → C_n(A)` and the corner
/// inclusion `i_*: C_n(A) → C_n(M_k(A))`, `a ↦ E_11 ⊗ a` in each factor.
/// `M_k(A)` is `M_k ⊗ A` with labels `E:i,j|a`.
pub struct MoritaMaps {
    pub mk: Algebra,
    pub tr: SparseMatrix,
    pub incl: SparseMatrix,
}

pub fn generalized_trace_chain(k: usize, a: &Algebra, n: usize, cap: usize) -> Result<MoritaMaps> {
    let mk = tensor_product(&matrix_algebra(a.field(), k)?, a)?;
    let (tr, incl) = morita_pair(&mk, k, a, n, cap)?;
    Ok(MoritaMaps { mk, tr, incl })
}

fn morita_pair(mk: &Algebra, k: usize, a: &Algebra, n: usize, cap: usize) -> Result<(SparseMatrix, SparseMatrix)> {
    let (da, dm) = (a.dim(), mk.dim());
    let big = Engine::with_cap(mk, cap).dim(n)?;
    let small = Engine::with_cap(a, cap).dim(n)?;
    let one = Scalar::one(&a.field());
    // Tr(E_{i0 j0}a0 ⊗ … ⊗ E_{in jn}an) = a0⊗…⊗an when j_t = i_{t+1} cyclically
    let tr_cols = (0..big)
        .map(|col| {
            let t = decode(col, dm, n + 1);
            let unit = |x: usize| ((x / da) / k, (x / da) % k);
            let chained = (0..=n).all(|p| unit(t[p]).1 == unit(t[(p + 1) % (n + 1)]).0);
            if chained {
                let l: Vec<usize> = t.iter().map(|x| x % da).collect();
                vec![(encode(&l, da), one.clone())]
            } else {
                Vec::new()
            }
        })
        .collect();
    let incl_cols = (0..small).map(|col| vec![(encode(&decode(col, da, n + 1), dm), one.clone())]).collect();
    Ok((SparseMatrix::from_columns(small, a.field(), tr_cols), SparseMatrix::from_columns(big, a.field(), incl_cols)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaAudit {
    pub k: usize,
    /// `Tr ∘ i_* = id` per degree.
    pub retraction: Vec<bool>,
    /// `b Tr = Tr b` and `b i_* = i_* b` per degree.
    pub chain_maps: Vec<bool>,
    pub hh_a: Vec<usize>,
    pub hh_mk: Vec<usize>,
    /// Rank of `Tr` on `HH_n`.
    pub tr_rank: Vec<usize>,
    pub passed: bool,
}

/// Checks `Tr ∘ i_* = id`, that both maps commute with `b`, and that `Tr`
/// induces an isomorphism `HH_n(M_k(A)) → HH_n(A)` for `n ≤ max_n`.
pub fn morita_audit(k: usize, a: &Algebra, max_n: usize, cap: usize) -> Result<MoritaAudit> {
    let mk = tensor_product(&matrix_algebra(a.field(), k)?, a)?;
    let (ea, em) = (Engine::with_cap(a, cap), Engine::with_cap(&mk, cap));
    let mut out = MoritaAudit { k, retraction: vec![], chain_maps: vec![], hh_a: vec![], hh_mk: vec![], tr_rank: vec![], passed: true };
    let mut prev: Option<(SparseMatrix, SparseMatrix)> = None;
    for n in 0..=max_n {
        let (tr, incl) = morita_pair(&mk, k, a, n, cap)?;
        out.retraction.push(tr.mul(&incl) == SparseMatrix::identity(tr.rows, a.field()));
        let commutes = match &prev {
            Some((tr0, incl0)) => ea.b(n)?.mul(&tr) == tr0.mul(&*em.b(n)?) && em.b(n)?.mul(&incl) == incl0.mul(&*ea.b(n)?),
            None => true,
        };
        out.chain_maps.push(commutes);
        out.hh_a.push(ea.dim(n)? - ea.rank_b(n)? - ea.rank_b(n + 1)?);
        out.hh_mk.push(em.dim(n)? - em.rank_b(n)? - em.rank_b(n + 1)?);
        out.tr_rank.push(induced_rank(&*em.b(n)?, &tr, &*ea.b(n + 1)?));
        prev = Some((tr, incl));
    }
    out.passed = out.retraction.iter().chain(&out.chain_maps).all(|x| *x)
        && out.hh_a == out.hh_mk
        && out.tr_rank == out.hh_a;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerActionAudit {
    /// Whether conjugation by `u` is the identity already on chains.
    pub theta_identity_on_chains: Vec<bool>,
    /// Whether `Θ − id` maps cycles into boundaries.
    pub theta_trivial_on_homology: Vec<bool>,
    /// Whether `L_a` maps cycles into boundaries.
    pub la_zero_on_homology: Vec<bool>,
    pub passed: bool,
}

/// `u⁻¹`, found by solving `u v = 1` and confirmed by `v u = 1`.
pub fn inverse(a: &Algebra, u: &Element) -> Result<Element> {
    let uc = a.coords(u)?;
    let v = solve(&a.left_mult(&uc), a.unit_vec()).ok_or(Error::NotInvertible)?;
    if a.mul_vec(&v, &uc) != *a.unit_vec() {
        return Err(Error::NotInvertible);
    }
    Ok(a.to_element(&v))
}

/// Conjugation `Θ = (u·u⁻¹)^{⊗(n+1)}` and `L_a = Σ_i 1⊗…⊗[a, ·]⊗…⊗1`
/// both act trivially on `HH_n` for `n ≤ max_n`; membership of images of
/// cycles in the boundaries is decided by rank augmentation.
pub fn inner_action_audit(eng: &Engine, u: &Element, a_el: &Element, max_n: usize) -> Result<InnerActionAudit> {
    let a = eng.algebra();
    let field = a.field();
    let v = inverse(a, u)?;
    let (uc, vc, ac) = (a.coords(u)?, a.coords(&v)?, a.coords(a_el)?);
    let conj = a.left_mult(&uc).mul(&a.right_mult(&vc));
    let ad = a.left_mult(&ac).sub(&a.right_mult(&ac));
    let id1 = SparseMatrix::identity(a.dim(), field);
    let mut out = InnerActionAudit { theta_identity_on_chains: vec![], theta_trivial_on_homology: vec![], la_zero_on_homology: vec![], passed: true };
    let mut theta = conj.clone();
    let mut la = ad.clone();
    let mut idn = id1.clone();
    for n in 0..=max_n {
        if n > 0 {
            theta = theta.kron(&conj);
            la = la.kron(&id1).add(&idn.kron(&ad));
            idn = idn.kron(&id1);
        }
        eng.dim(n + 1)?;
        let diff = theta.sub(&idn);
        out.theta_identity_on_chains.push(diff.is_zero());
        out.theta_trivial_on_homology.push(induced_rank(&*eng.b(n)?, &diff, &*eng.b(n + 1)?) == 0);
        out.la_zero_on_homology.push(induced_rank(&*eng.b(n)?, &la, &*eng.b(n + 1)?) == 0);
    }
    out.passed = out.theta_trivial_on_homology.iter().chain(&out.la_zero_on_homology).all(|x| *x);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::truncated_poly;
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn trace_of_matrix_units() {
        let q = matrix_algebra(Q, 1).unwrap();
        let maps = generalized_trace_chain(2, &q, 0, 1000).unwrap();
        // E11 and E22 map to 1, off-diagonal units to 0
        assert_eq!(maps.tr.to_dense()[0].iter().filter(|x| x.is_one()).count(), 2);
        let maps = generalized_trace_chain(2, &q, 1, 1000).unwrap();
        let e12 = maps.mk.index_of("E:1,2|E:1,1").unwrap();
        let e21 = maps.mk.index_of("E:2,1|E:1,1").unwrap();
        assert!(maps.tr.get(0, e12 * 4 + e21).is_one());
    }

    #[test]
    fn morita_invariance_for_dual_numbers() {
        let dual = truncated_poly(Q, 2).unwrap();
        let audit = morita_audit(2, &dual, 2, 20_000).unwrap();
        assert!(audit.passed, "{audit:?}");
        assert_eq!(audit.hh_mk, vec![2, 1, 1]);
    }

    #[test]
    fn inner_actions_on_matrices() {
        let m2 = matrix_algebra(Q, 2).unwrap();
        let eng = Engine::new(&m2);
        let u = Element::from_terms(Q, [("E:1,1".to_string(), Scalar::one(&Q)), ("E:2,2".to_string(), Scalar::from_int(&Q, -1))]).unwrap();
        let audit = inner_action_audit(&eng, &u, &Element::basis(Q, "E:1,2"), 2).unwrap();
        assert!(audit.passed);
        assert!(!audit.theta_identity_on_chains[0]);
        let singular = Element::basis(Q, "E:1,1");
        assert_eq!(inner_action_audit(&eng, &singular, &singular, 1).unwrap_err(), Error::NotInvertible);
    }
}
