use std::time::Instant;

use rayon::prelude::*;

use super::operators::{decode, encode};
use super::{hochschild_homology, Engine, HomologyReport, Theory};
use crate::algebra::Algebra;
use crate::constructions::{BimoduleData, TwoCochain};
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix, SparseVec};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// `A` as a bimodule over itself (the deformation complex).
    Regular,
    /// The linear dual `A*`; cochains are functionals on `A^{⊗(n+1)}`.
    Dual,
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `δ: C^n(A, A*) → C^{n+1}(A, A*)` on functionals `φ` of `n+1` arguments:
/// `(δφ)(a_0,…,a_{n+1}) = Σ_{i≤n} (−1)^i φ(…, a_i a_{i+1}, …)
/// + (−1)^{n+1} φ(a_{n+1}a_0, a_1, …, a_n)`. Built directly from the
/// formula, row by row.
pub fn dual_cochain_differential(eng: &Engine, n: usize) -> Result<SparseMatrix> {
    let a = eng.algebra();
    let d = a.dim();
    let (cols, rows) = (eng.dim(n)?, eng.dim(n + 1)?);
    let triplets: Vec<(usize, usize, Scalar)> = (0..rows)
        .into_par_iter()
        .flat_map_iter(|row| {
            let j = decode(row, d, n + 2);
            let mut out = Vec::new();
            let mut buf = Vec::with_capacity(n + 1);
            for i in 0..=n {
                for (k, c) in a.product(j[i], j[i + 1]) {
                    buf.clear();
                    buf.extend_from_slice(&j[..i]);
                    buf.push(*k);
                    buf.extend_from_slice(&j[i + 2..]);
                    out.push((row, encode(&buf, d), c.mul_int(sign(i))));
                }
            }
            for (k, c) in a.product(j[n + 1], j[0]) {
                buf.clear();
                buf.push(*k);
                buf.extend_from_slice(&j[1..=n]);
                out.push((row, encode(&buf, d), c.mul_int(sign(n + 1))));
            }
            out
        })
        .collect();
    Ok(SparseMatrix::from_triplets(rows, cols, a.field(), triplets))
}

/// `δ: C^n(A, M) → C^{n+1}(A, M)` on multilinear maps of `n` arguments,
/// `(δf)(a_1,…,a_{n+1}) = a_1 f(a_2,…) + Σ (−1)^i f(…, a_i a_{i+1}, …)
/// + (−1)^{n+1} f(a_1,…,a_n) a_{n+1}`. The basis cochain sending the tuple
/// `I` to `m_j` sits at `lex(I)·dim M + j`.
pub fn bimodule_cochain_differential(a: &Algebra, m: &BimoduleData, n: usize, cap: usize) -> Result<SparseMatrix> {
    let (d, k) = (a.dim(), m.dim());
    let size = |p: usize| u32::try_from(p).ok().and_then(|e| d.checked_pow(e)).and_then(|x| x.checked_mul(k));
    let cols = size(n).filter(|s| *s <= cap).ok_or(Error::DegreeTooLarge { degree: n, size: size(n).unwrap_or(usize::MAX), cap })?;
    let rows = size(n + 1)
        .filter(|s| *s <= cap)
        .ok_or(Error::DegreeTooLarge { degree: n + 1, size: size(n + 1).unwrap_or(usize::MAX), cap })?;
    let field = a.field();
    let tuples = rows / k;
    let triplets: Vec<(usize, usize, Scalar)> = (0..tuples)
        .into_par_iter()
        .flat_map_iter(|jt| {
            let j = decode(jt, d, n + 1);
            let row = |r: usize| jt * k + r;
            let col = |t: &[usize], c: usize| encode(t, d) * k + c;
            let mut out = Vec::new();
            for c in 0..k {
                for (r, v) in m.left[j[0]].column(c) {
                    out.push((row(*r), col(&j[1..], c), v.clone()));
                }
                for (r, v) in m.right[j[n]].column(c) {
                    out.push((row(*r), col(&j[..n], c), v.mul_int(sign(n + 1))));
                }
            }
            let mut buf = Vec::with_capacity(n);
            for i in 1..=n {
                for (p, v) in a.product(j[i - 1], j[i]) {
                    buf.clear();
                    buf.extend_from_slice(&j[..i - 1]);
                    buf.push(*p);
                    buf.extend_from_slice(&j[i + 1..]);
                    for c in 0..k {
                        out.push((row(c), col(&buf, c), v.mul_int(sign(i))));
                    }
                }
            }
            out
        })
        .collect();
    Ok(SparseMatrix::from_triplets(rows, cols, field, triplets))
}

/// Coordinates of a 2-cochain in `C^2(A, M)` under the same scheme.
pub fn two_cochain_vector(a: &Algebra, m: &BimoduleData, f: &TwoCochain) -> SparseVec {
    let (d, k) = (a.dim(), m.dim());
    let mut out = Vec::new();
    for (ij, v) in f.values.iter().enumerate().take(d * d) {
        out.extend(v.iter().map(|(r, c)| (ij * k + r, c.clone())));
    }
    out
}

/// `H^n(A, M)` for `n ≤ max_n`. For `A*` the dimensions are compared with
/// `HH_n(A)` and any difference is an error.
pub fn hochschild_cohomology(eng: &Engine, coeff: Coefficients, max_n: usize) -> Result<HomologyReport> {
    let start = Instant::now();
    let a = eng.algebra();
    let (theory, deltas): (Theory, Vec<SparseMatrix>) = match coeff {
        Coefficients::Dual => {
            (Theory::CohomologyADual, (0..=max_n).into_par_iter().map(|n| dual_cochain_differential(eng, n)).collect::<Result<_>>()?)
        }
        Coefficients::Regular => {
            let m = BimoduleData::regular(a);
            let ds = (0..=max_n).into_par_iter().map(|n| bimodule_cochain_differential(a, &m, n, eng.cap())).collect::<Result<_>>()?;
            (Theory::CohomologyA, ds)
        }
    };
    for n in 1..deltas.len() {
        if !deltas[n].mul(&deltas[n - 1]).is_zero() {
            return Err(crate::linalg::LinalgError::NotAComplex.into());
        }
    }
    let ranks: Vec<usize> = deltas.par_iter().map(rank).collect();
    let mut report = HomologyReport::new(a.name(), theory, max_n);
    for n in 0..=max_n {
        let below = if n == 0 { 0 } else { ranks[n - 1] };
        report.dims.insert(n, deltas[n].cols - ranks[n] - below);
        report.ranks.insert(format!("delta_{n}"), ranks[n]);
    }
    if coeff == Coefficients::Dual {
        let hh = hochschild_homology(eng, max_n)?;
        if hh.dims != report.dims {
            return Err(Error::MethodDisagreement(format!("H^n(A, A*) = {:?} but HH_n = {:?}", report.dims_vec(), hh.dims_vec())));
        }
        report.cross_checked.push(Theory::Hochschild);
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
