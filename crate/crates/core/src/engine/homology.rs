use std::time::Instant;

use rayon::prelude::*;

use super::{Bicomplex, BicomplexKind, Engine, HomologyReport, Theory};
use crate::error::{Error, Result};
use crate::linalg::{induced_rank, SparseMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcMethod {
    /// Homology of the quotient complex `C_n / (1−λ)` under `b`.
    Quotient,
    CyclicBicomplex,
    BBBicomplex,
}

impl HcMethod {
    pub const ALL: [HcMethod; 3] = [HcMethod::Quotient, HcMethod::CyclicBicomplex, HcMethod::BBBicomplex];

    pub fn theory(self) -> Theory {
        match self {
            HcMethod::Quotient => Theory::CyclicQuotient,
            HcMethod::CyclicBicomplex => Theory::CyclicBicomplex,
            HcMethod::BBBicomplex => Theory::CyclicBB,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "quotient" => Some(HcMethod::Quotient),
            "cyclic" | "cyclic_bicomplex" => Some(HcMethod::CyclicBicomplex),
            "bB" | "bb" | "bB_bicomplex" => Some(HcMethod::BBBicomplex),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

fn elapsed(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// `HH_n(A, A)` for `n ≤ max_n`; degree 0 is cross-checked against the
/// commutator quotient `A/[A,A]`.
pub fn hochschild_homology(eng: &Engine, max_n: usize) -> Result<HomologyReport> {
    let start = Instant::now();
    let ranks: Vec<usize> = (0..=max_n + 1).into_par_iter().map(|n| eng.rank_b(n)).collect::<Result<_>>()?;
    let mut report = HomologyReport::new(eng.algebra().name(), Theory::Hochschild, max_n);
    for n in 0..=max_n {
        if n >= 1 && !eng.b(n - 1)?.mul(&*eng.b(n)?).is_zero() {
            return Err(crate::linalg::LinalgError::NotAComplex.into());
        }
        report.dims.insert(n, eng.dim(n)? - ranks[n] - ranks[n + 1]);
    }
    let direct = eng.algebra().commutator_quotient_dim();
    if report.dims[&0] != direct {
        return Err(Error::MethodDisagreement(format!("HH_0 = {} but dim A/[A,A] = {direct}", report.dims[&0])));
    }
    report.ranks = eng.ranks_with(&["b_"]);
    report.elapsed_ms = elapsed(start);
    Ok(report)
}

fn quotient_dims(eng: &Engine, max_n: usize) -> Result<Vec<usize>> {
    // rank of b̄_n on C^λ = C/(1−λ): rank [b_n | 1−λ_{n−1}] − rank(1−λ_{n−1})
    let bar = |n: usize| -> Result<usize> {
        if n == 0 {
            return Ok(0);
        }
        let joint = eng.rank_named(&format!("b_{n}|1-lambda_{}", n - 1), || {
            Ok(SparseMatrix::hstack(&[&*eng.b(n)?, &*eng.one_minus_lambda(n - 1)?]))
        })?;
        Ok(joint - eng.rank_one_minus_lambda(n - 1)?)
    };
    let bars: Vec<usize> = (0..=max_n + 1).into_par_iter().map(bar).collect::<Result<_>>()?;
    (0..=max_n).map(|n| Ok(eng.dim(n)? - eng.rank_one_minus_lambda(n)? - bars[n] - bars[n + 1])).collect()
}

fn total_dims(eng: &Engine, kind: BicomplexKind, max_n: usize) -> Result<Vec<usize>> {
    let tot = Bicomplex::new(eng, kind);
    for n in 2..=max_n + 1 {
        if !tot.squares_to_zero(n)? {
            return Err(crate::linalg::LinalgError::NotAComplex.into());
        }
    }
    (0..=max_n + 1).into_par_iter().map(|n| tot.rank_differential(n)).collect::<Result<Vec<_>>>()?;
    (0..=max_n).map(|n| tot.homology_dim(n)).collect()
}

fn hc_dims(eng: &Engine, method: HcMethod, max_n: usize) -> Result<Vec<usize>> {
    match method {
        HcMethod::Quotient => quotient_dims(eng, max_n),
        HcMethod::CyclicBicomplex => total_dims(eng, BicomplexKind::Cyclic, max_n),
        HcMethod::BBBicomplex => total_dims(eng, BicomplexKind::BB, max_n),
    }
}

/// `HC_n(A)` for `n ≤ max_n` by the chosen route, cross-checked against
/// every other route that fits under the size cap. Any disagreement is an
/// error.
pub fn cyclic_homology(eng: &Engine, max_n: usize, method: HcMethod) -> Result<HomologyReport> {
    let start = Instant::now();
    let dims = hc_dims(eng, method, max_n)?;
    let mut report = HomologyReport::new(eng.algebra().name(), method.theory(), max_n);
    report.dims = dims.iter().copied().enumerate().collect();
    for other in HcMethod::ALL.into_iter().filter(|m| *m != method) {
        match hc_dims(eng, other, max_n) {
            Ok(d) if d == dims => report.cross_checked.push(other.theory()),
            Ok(d) => {
                return Err(Error::MethodDisagreement(format!("{} gives {dims:?} but {} gives {d:?}", method.theory(), other.theory())))
            }
            Err(Error::DegreeTooLarge { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    if report.dims[&0] != eng.algebra().commutator_quotient_dim() {
        return Err(Error::MethodDisagreement("HC_0 differs from dim A/[A,A]".into()));
    }
    report.ranks = eng.ranks_with(&["b_", "1-lambda_", "Dcyc_", "DbB_"]);
    report.elapsed_ms = elapsed(start);
    Ok(report)
}

/// Periodic cyclic homology of one parity from the window `n ≤ window`:
/// the ranks of `S: HC_n → HC_{n−2}` on the cyclic bicomplex, reported as
/// stable once the two highest agree.
pub fn periodic_cyclic(eng: &Engine, parity: Parity, window: usize) -> Result<HomologyReport> {
    let start = Instant::now();
    let theory = match parity {
        Parity::Even => Theory::PeriodicEven,
        Parity::Odd => Theory::PeriodicOdd,
    };
    let tot = Bicomplex::new(eng, BicomplexKind::Cyclic);
    let mut report = HomologyReport::new(eng.algebra().name(), theory, window);
    report.dims = total_dims(eng, BicomplexKind::Cyclic, window)?.into_iter().enumerate().collect();
    let first = match parity {
        Parity::Even => 2,
        Parity::Odd => 3,
    };
    let degrees: Vec<usize> = (first..=window).step_by(2).collect();
    let s_ranks: Vec<usize> = degrees
        .par_iter()
        .map(|&n| Ok(induced_rank(&tot.differential(n)?, &tot.truncation(n)?, &tot.differential(n - 1)?)))
        .collect::<Result<_>>()?;
    report.ranks = eng.ranks_with(&["Dcyc_"]);
    report.ranks.extend(degrees.iter().zip(&s_ranks).map(|(n, r)| (format!("S_{n}"), *r)));
    match s_ranks.len() {
        len if len >= 2 && s_ranks[len - 1] == s_ranks[len - 2] => report.stable = Some(s_ranks[len - 1]),
        _ => report.status = Some("not stabilized in window".into()),
    }
    report.elapsed_ms = elapsed(start);
    Ok(report)
}
