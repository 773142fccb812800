use rayon::prelude::*;
use serde::Serialize;

use super::Engine;
use crate::error::Result;
use crate::linalg::SparseMatrix;

/// One identity checked in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub degree: usize,
    pub passed: bool,
}

pub const B_SQUARED: &str = "b² = 0";
pub const B_PRIME_SQUARED: &str = "b′² = 0";
pub const LAMBDA_B: &str = "(1−λ)b = b′(1−λ)";
pub const NORM_B: &str = "Nb = b′N";
pub const CONTRACTION: &str = "b′s + sb′ = id";
pub const CONNES_SQUARED: &str = "B² = 0";
pub const CONNES_ANTICOMMUTES: &str = "bB + Bb = 0";
pub const KER_LAMBDA: &str = "Ker(1−λ) = Im N";
pub const KER_NORM: &str = "Ker N = Im(1−λ)";

/// The identities are stated for cochains; on chains they are checked in
/// transposed form, e.g. `(1−λ)b = b′(1−λ)` as `b_n(1−λ_n) = (1−λ_{n−1})b′_n`
/// and `Nb = b′N` as `b′_n N_n = N_{n−1} b_n`. Degree `n` names the domain
/// `C_n`; an instance is checked when every space it touches has degree at
/// most `max_n`. The kernel/image identities use `(1−λ)N = N(1−λ) = 0`
/// together with `rank N + rank(1−λ) = dim C_n`.
pub fn operator_identity_audit(eng: &Engine, max_n: usize) -> Result<Vec<IdentityCheck>> {
    let mut jobs: Vec<(&'static str, usize)> = Vec::new();
    for n in 0..=max_n {
        if n >= 2 {
            jobs.push((B_SQUARED, n));
            jobs.push((B_PRIME_SQUARED, n));
        }
        if n >= 1 {
            jobs.push((LAMBDA_B, n));
            jobs.push((NORM_B, n));
        }
        if n < max_n {
            jobs.push((CONTRACTION, n));
            jobs.push((CONNES_ANTICOMMUTES, n));
        }
        if n + 2 <= max_n {
            jobs.push((CONNES_SQUARED, n));
        }
        jobs.push((KER_LAMBDA, n));
        jobs.push((KER_NORM, n));
    }
    jobs.par_iter()
        .map(|&(identity, n)| Ok(IdentityCheck { identity: identity.to_string(), degree: n, passed: check(eng, identity, n)? }))
        .collect()
}

fn check(eng: &Engine, identity: &str, n: usize) -> Result<bool> {
    let id = |k: usize| -> Result<SparseMatrix> { Ok(SparseMatrix::identity(eng.dim(k)?, eng.field())) };
    Ok(match identity {
        B_SQUARED => eng.b(n - 1)?.mul(&*eng.b(n)?).is_zero(),
        B_PRIME_SQUARED => eng.b_prime(n - 1)?.mul(&*eng.b_prime(n)?).is_zero(),
        LAMBDA_B => eng.b(n)?.mul(&*eng.one_minus_lambda(n)?) == eng.one_minus_lambda(n - 1)?.mul(&*eng.b_prime(n)?),
        NORM_B => eng.b_prime(n)?.mul(&*eng.norm(n)?) == eng.norm(n - 1)?.mul(&*eng.b(n)?),
        CONTRACTION => {
            let mut lhs = eng.b_prime(n + 1)?.mul(&*eng.s(n)?);
            if n >= 1 {
                lhs = lhs.add(&eng.s(n - 1)?.mul(&*eng.b_prime(n)?));
            }
            lhs == id(n)?
        }
        CONNES_SQUARED => eng.connes_b(n + 1)?.mul(&*eng.connes_b(n)?).is_zero(),
        CONNES_ANTICOMMUTES => {
            let mut lhs = eng.b(n + 1)?.mul(&*eng.connes_b(n)?);
            if n >= 1 {
                lhs = lhs.add(&eng.connes_b(n - 1)?.mul(&*eng.b(n)?));
            }
            lhs.is_zero()
        }
        KER_LAMBDA | KER_NORM => {
            let (one_minus, norm) = (eng.one_minus_lambda(n)?, eng.norm(n)?);
            let composite = if identity == KER_LAMBDA { one_minus.mul(&norm) } else { norm.mul(&one_minus) };
            composite.is_zero() && eng.rank_norm(n)? + eng.rank_one_minus_lambda(n)? == eng.dim(n)?
        }
        other => unreachable!("unknown identity {other}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra, truncated_poly};
    use crate::scalar::FieldSpec;

    #[test]
    fn all_identities_hold() {
        for (alg, max_n) in [(matrix_algebra(FieldSpec::Rationals, 1).unwrap(), 4), (matrix_algebra(FieldSpec::Rationals, 2).unwrap(), 3)] {
            let eng = Engine::new(&alg);
            let checks = operator_identity_audit(&eng, max_n).unwrap();
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
            for name in [B_SQUARED, LAMBDA_B, NORM_B, CONTRACTION, CONNES_SQUARED, CONNES_ANTICOMMUTES, KER_LAMBDA, KER_NORM] {
                assert!(checks.iter().any(|c| c.identity == name), "{name} unchecked");
            }
        }
    }

    #[test]
    fn sign_flipped_lambda_is_caught() {
        let dual = truncated_poly(FieldSpec::Rationals, 2).unwrap();
        let eng = Engine::new(&dual).with_lambda_hook(|_, lam| lam.neg());
        let checks = operator_identity_audit(&eng, 2).unwrap();
        assert!(checks.iter().any(|c| c.identity == LAMBDA_B && c.degree == 1 && !c.passed));
    }
}
