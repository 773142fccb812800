//! Hochschild, cyclic and periodic cyclic homology of finite-dimensional
//! algebras as exact linear algebra on the unnormalized chain spaces
//! `C_n = A^{⊗(n+1)}`, plus audits of the operator identities, the SBI
//! sequence, Morita maps and inner actions.
//!
//! All chain-level operators are stored in their homological orientation:
//! `b, b′: C_n → C_{n−1}`, `λ, N: C_n → C_n`, `s, B: C_n → C_{n+1}` with
//! `B = (1−λ) s N`. The cochain operators are their transposes.

pub mod audit;
mod bicomplex;
mod cochains;
mod complex;
mod homology;
mod lie;
mod morita;
pub mod operators;
mod report;
mod sbi;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix};

pub use audit::{operator_identity_audit, IdentityCheck};
pub use bicomplex::{Bicomplex, BicomplexKind};
pub use cochains::{bimodule_cochain_differential, dual_cochain_differential, hochschild_cohomology, two_cochain_vector, Coefficients};
pub use complex::ChainComplex;
pub use homology::{cyclic_homology, hochschild_homology, periodic_cyclic, HcMethod, Parity};
pub use lie::{chevalley_eilenberg_differential, exterior_basis, wedge, LieAlgebra};
pub use morita::{generalized_trace_chain, inner_action_audit, inverse, morita_audit, InnerActionAudit, MoritaAudit, MoritaMaps};
pub use report::{HomologyReport, Theory};
pub use sbi::{sbi_audit, SbiAudit, SbiNode};

/// Default bound on the dimension of any chain space the engine builds.
pub const DEFAULT_SIZE_CAP: usize = 20_000;

type LambdaHook = Arc<dyn Fn(usize, SparseMatrix) -> SparseMatrix + Send + Sync>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Op {
    B,
    BPrime,
    Lambda,
    OneMinusLambda,
    Norm,
    S,
    Connes,
}

/// Operator matrices and ranks for one algebra, built on demand and
/// cached. Safe to share across threads.
pub struct Engine<'a> {
    alg: &'a Algebra,
    cap: usize,
    lambda_hook: Option<LambdaHook>,
    mats: Mutex<HashMap<(Op, usize), Arc<SparseMatrix>>>,
    ranks: Mutex<BTreeMap<String, usize>>,
}

impl<'a> Engine<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        Self::with_cap(alg, DEFAULT_SIZE_CAP)
    }

    pub fn with_cap(alg: &'a Algebra, cap: usize) -> Self {
        Engine { alg, cap, lambda_hook: None, mats: Mutex::default(), ranks: Mutex::default() }
    }

    /// Replace `λ_n` by `hook(n, λ_n)` everywhere, including `N` and `B`.
    /// Used to confirm the audits notice a broken operator.
    pub fn with_lambda_hook(mut self, hook: impl Fn(usize, SparseMatrix) -> SparseMatrix + Send + Sync + 'static) -> Self {
        self.lambda_hook = Some(Arc::new(hook));
        self
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn field(&self) -> crate::scalar::FieldSpec {
        self.alg.field()
    }

    /// Enforce the size cap on a space of the given size.
    pub fn check_size(&self, degree: usize, size: Option<usize>) -> Result<usize> {
        match size {
            Some(s) if s <= self.cap => Ok(s),
            _ => Err(Error::DegreeTooLarge { degree, size: size.unwrap_or(usize::MAX), cap: self.cap }),
        }
    }

    /// `dim C_n = d^{n+1}`, subject to the size cap.
    pub fn dim(&self, n: usize) -> Result<usize> {
        let size = u32::try_from(n + 1).ok().and_then(|e| self.alg.dim().checked_pow(e));
        self.check_size(n, size)
    }

    fn cached(&self, op: Op, n: usize, build: impl FnOnce() -> Result<SparseMatrix>) -> Result<Arc<SparseMatrix>> {
        if let Some(m) = self.mats.lock().expect("matrix cache").get(&(op, n)) {
            return Ok(m.clone());
        }
        let m = Arc::new(build()?);
        self.mats.lock().expect("matrix cache").insert((op, n), m.clone());
        Ok(m)
    }

    /// Hochschild boundary `b: C_n → C_{n−1}`; for `n = 0` the zero map to
    /// the zero space.
    pub fn b(&self, n: usize) -> Result<Arc<SparseMatrix>> {
        let dim = self.dim(n)?;
        self.cached(Op::B, n, || Ok(operators::boundary(self.alg, n, dim, true)))
    }

    /// `b′: C_n → C_{n−1}`, the boundary without the wrap-around term.
    pub fn b_prime(&self, n: usize) -> Result<Arc<SparseMatrix>> {
        let dim = self.dim(n)?;
        self.cached(Op::BPrime, n, || Ok(operators::boundary(self.alg, n, dim, false)))
    }

    pub fn lambda(&self, n: usize) -> Result<Arc<SparseMatrix>> {
        let dim = self.dim(n)?;
        self.cached(Op::Lambda, n, || {
            let lam = operators::lambda(self.alg, n, dim);
            Ok(match &self.lambda_hook {
                Some(h) => h(n, lam),
                None => lam,
            })
        })
    }

    pub fn one_minus_lambda(&self, n: usize) -> Result<Arc<SparseMatrix>> {
        let lam = self.lambda(n)?;
        self.cached(Op::OneMinusLambda, n, || Ok(SparseMatrix::identity(lam.rows, self.field()).sub(&lam)))
    }

    pub fn norm(&self, n: usize) -> Result<Arc<SparseMatrix>> {
        let lam = self.lambda(n)?;
        self.cached(Op::Norm, n, || Ok(operators::norm_operator(&lam, n)))
    }

    /// Extra degeneracy `s: C_n → C_{n+1}`.
    pub fn s(&self, n: usize) -> Result<Arc<SparseMatrix>> {
        let dim = self.dim(n)?;
        self.dim(n + 1)?;
        self.cached(Op::S, n, || Ok(operators::extra_degeneracy(self.alg, dim)))
    }

    /// Connes' operator `B = (1−λ) s N: C_n → C_{n+1}`.
    pub fn connes_b(&self, n: usize) -> Result<Arc<SparseMatrix>> {
        let (one_minus, s, norm) = (self.one_minus_lambda(n + 1)?, self.s(n)?, self.norm(n)?);
        self.cached(Op::Connes, n, || Ok(one_minus.mul(&s.mul(&norm))))
    }

    /// Memoized rank under a stable name; the names double as the report's
    /// rank table.
    pub fn rank_named<M: std::borrow::Borrow<SparseMatrix>>(&self, name: &str, m: impl FnOnce() -> Result<M>) -> Result<usize> {
        if let Some(r) = self.ranks.lock().expect("rank cache").get(name) {
            return Ok(*r);
        }
        let r = rank(m()?.borrow());
        self.ranks.lock().expect("rank cache").insert(name.to_string(), r);
        Ok(r)
    }

    pub fn rank_b(&self, n: usize) -> Result<usize> {
        self.rank_named(&format!("b_{n}"), || self.b(n))
    }

    pub fn rank_one_minus_lambda(&self, n: usize) -> Result<usize> {
        self.rank_named(&format!("1-lambda_{n}"), || self.one_minus_lambda(n))
    }

    pub fn rank_norm(&self, n: usize) -> Result<usize> {
        self.rank_named(&format!("N_{n}"), || self.norm(n))
    }

    /// Snapshot of every rank computed so far.
    pub fn ranks(&self) -> BTreeMap<String, usize> {
        self.ranks.lock().expect("rank cache").clone()
    }

    /// Ranks whose names start with one of the prefixes.
    pub fn ranks_with(&self, prefixes: &[&str]) -> BTreeMap<String, usize> {
        self.ranks().into_iter().filter(|(k, _)| prefixes.iter().any(|p| k.starts_with(p))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::truncated_poly;
    use crate::scalar::{FieldSpec, Scalar};

    #[test]
    fn connes_b_on_dual_numbers_in_degree_zero() {
        let dual = truncated_poly(FieldSpec::Rationals, 2).unwrap();
        let eng = Engine::new(&dual);
        let big_b = eng.connes_b(0).unwrap();
        // B(x) = 1⊗x + x⊗1 in the chain orientation; B(1) = 2·1⊗1
        let q = |n| Scalar::from_int(&FieldSpec::Rationals, n);
        assert_eq!(big_b.column(1), &[(1, q(1)), (2, q(1))]);
        assert_eq!(big_b.column(0), &[(0, q(2))]);
    }

    #[test]
    fn size_cap_is_enforced() {
        let dual = truncated_poly(FieldSpec::Rationals, 2).unwrap();
        let eng = Engine::with_cap(&dual, 8);
        assert!(eng.b(2).is_ok());
        assert_eq!(eng.b(3).unwrap_err(), Error::DegreeTooLarge { degree: 3, size: 16, cap: 8 });
    }
}
