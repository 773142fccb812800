//! Sparse exact elimination: rank, kernels, linear solves and homology
//! dimensions.
//!
//! Vectors are inserted one at a time into an echelon table keyed by
//! leading coordinate. Coordinates are first relabelled by ascending
//! occurrence count and vectors are inserted shortest first, a static
//! Markowitz-style ordering that keeps fill-in low on the tensor-power
//! operators this crate produces.

use std::collections::HashMap;

use rayon::prelude::*;

use super::sparse::{axpy, scale_vec, SparseMatrix, SparseVec};
use super::LinalgError;
use crate::scalar::Scalar;

struct Echelon {
    /// leading (relabelled) coordinate -> normalized row with leading 1
    pivots: HashMap<usize, SparseVec>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { pivots: HashMap::new() }
    }

    /// Reduce `v` against the table; returns the residual.
    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, x)) = v.first() {
            match self.pivots.get(lead) {
                Some(p) => {
                    let c = -x;
                    v = axpy(&v, &c, p);
                }
                None => break,
            }
        }
        v
    }

    /// Insert `v`; true if it enlarged the span.
    fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some((lead, x)) => {
                let lead = *lead;
                let inv = x.inv();
                self.pivots.insert(lead, scale_vec(&r, &inv));
                true
            }
        }
    }
}

/// Relabelling of coordinates by ascending occurrence count.
fn markowitz_order(vectors: &[SparseVec], dim: usize) -> Vec<usize> {
    let mut count = vec![0usize; dim];
    for v in vectors {
        for (i, _) in v {
            count[*i] += 1;
        }
    }
    let mut coords: Vec<usize> = (0..dim).collect();
    coords.sort_by_key(|&i| (count[i], i));
    let mut relabel = vec![0usize; dim];
    for (new, old) in coords.into_iter().enumerate() {
        relabel[old] = new;
    }
    relabel
}

fn relabel_vec(v: &[(usize, Scalar)], relabel: &[usize]) -> SparseVec {
    let mut out: SparseVec = v.iter().map(|(i, x)| (relabel[*i], x.clone())).collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Rank of the span of the given vectors in a space of dimension `dim`.
pub fn rank_of_vectors(vectors: &[SparseVec], dim: usize) -> usize {
    let relabel = markowitz_order(vectors, dim);
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by_key(|&k| (vectors[k].len(), k));
    let mut ech = Echelon::new();
    let mut rank = 0;
    for k in order {
        if vectors[k].is_empty() {
            continue;
        }
        if ech.insert(relabel_vec(&vectors[k], &relabel)) {
            rank += 1;
        }
    }
    rank
}

/// Exact rank. The matrix is split into the connected components of its
/// row/column incidence graph (graded operators are block diagonal after a
/// permutation), each block is eliminated along its smaller dimension, and
/// the blocks run in parallel.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 || m.is_zero() {
        return 0;
    }
    let blocks = components(m);
    if blocks.len() == 1 {
        return block_rank(&blocks[0]);
    }
    blocks.par_iter().map(block_rank).sum()
}

fn block_rank(m: &SparseMatrix) -> usize {
    if m.cols <= m.rows {
        rank_of_vectors(m.columns(), m.rows)
    } else {
        let t = m.transpose();
        rank_of_vectors(t.columns(), t.rows)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Nonzero connected blocks with rows and columns renumbered locally.
fn components(m: &SparseMatrix) -> Vec<SparseMatrix> {
    let mut parent: Vec<usize> = (0..m.rows).collect();
    for col in m.columns() {
        if let Some((first, _)) = col.first() {
            let r0 = find(&mut parent, *first);
            for (i, _) in &col[1..] {
                let r = find(&mut parent, *i);
                if r != r0 {
                    parent[r] = r0;
                }
            }
        }
    }
    let mut block_of = HashMap::new();
    let mut local_row = vec![0usize; m.rows];
    let mut heights: Vec<usize> = Vec::new();
    for i in 0..m.rows {
        let root = find(&mut parent, i);
        let next = heights.len();
        let b = *block_of.entry(root).or_insert(next);
        if b == heights.len() {
            heights.push(0);
        }
        local_row[i] = heights[b];
        heights[b] += 1;
    }
    let mut cols: Vec<Vec<SparseVec>> = vec![Vec::new(); heights.len()];
    for col in m.columns() {
        if let Some((first, _)) = col.first() {
            let b = block_of[&find(&mut parent, *first)];
            cols[b].push(col.iter().map(|(i, x)| (local_row[*i], x.clone())).collect());
        }
    }
    cols.into_iter()
        .zip(heights)
        .filter(|(c, _)| !c.is_empty())
        .map(|(c, h)| SparseMatrix::from_columns(h, m.field, c))
        .collect()
}

/// Rank together with a basis of the kernel `{v : Mv = 0}`.
///
/// Columns are reduced while tracking their combinations; a column that
/// reduces to zero yields a kernel vector containing its own coordinate with
/// coefficient 1 plus earlier pivot columns only, so the basis is
/// independent.
pub fn rank_and_kernel(m: &SparseMatrix) -> (usize, Vec<SparseVec>) {
    let relabel = markowitz_order(m.columns(), m.rows);
    let field = m.field;
    let one = Scalar::one(&field);
    // leading coord -> (row vector, combination over columns)
    let mut pivots: HashMap<usize, (SparseVec, SparseVec)> = HashMap::new();
    let mut kernel = Vec::new();
    for j in 0..m.cols {
        let mut v = relabel_vec(m.column(j), &relabel);
        let mut combo: SparseVec = vec![(j, one.clone())];
        loop {
            let Some((lead, x)) = v.first() else { break };
            match pivots.get(lead) {
                Some((p, pc)) => {
                    let c = -x;
                    v = axpy(&v, &c, p);
                    combo = axpy(&combo, &c, pc);
                }
                None => break,
            }
        }
        match v.first() {
            None => kernel.push(combo),
            Some((lead, x)) => {
                let lead = *lead;
                let inv = x.inv();
                pivots.insert(lead, (scale_vec(&v, &inv), scale_vec(&combo, &inv)));
            }
        }
    }
    (pivots.len(), kernel)
}

pub fn kernel(m: &SparseMatrix) -> Vec<SparseVec> {
    rank_and_kernel(m).1
}

/// Some `x` with `Mx = b`, or `None` when `b` is outside the column space.
pub fn solve(m: &SparseMatrix, b: &[(usize, Scalar)]) -> Option<SparseVec> {
    let field = m.field;
    let one = Scalar::one(&field);
    let mut pivots: HashMap<usize, (SparseVec, SparseVec)> = HashMap::new();
    let reduce = |pivots: &HashMap<usize, (SparseVec, SparseVec)>, mut v: SparseVec, mut combo: SparseVec| {
        loop {
            let Some((lead, x)) = v.first() else { break };
            match pivots.get(lead) {
                Some((p, pc)) => {
                    let c = -x;
                    v = axpy(&v, &c, p);
                    combo = axpy(&combo, &c, pc);
                }
                None => break,
            }
        }
        (v, combo)
    };
    for j in 0..m.cols {
        let (v, combo) = reduce(&pivots, m.column(j).to_vec(), vec![(j, one.clone())]);
        if let Some((lead, x)) = v.first() {
            let lead = *lead;
            let inv = x.inv();
            pivots.insert(lead, (scale_vec(&v, &inv), scale_vec(&combo, &inv)));
        }
    }
    // b - M·combo reduces to zero  <=>  M·(-combo) = b
    let (residual, combo) = reduce(&pivots, b.to_vec(), Vec::new());
    if residual.is_empty() {
        let minus_one = Scalar::from_int(&field, -1);
        Some(scale_vec(&combo, &minus_one))
    } else {
        None
    }
}

/// `dim ker(d_out) − rank(d_in)` for `d_in: C_{n+1} → C_n`, `d_out: C_n → C_{n−1}`.
pub fn homology_dim(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<usize, LinalgError> {
    if d_in.rows != d_out.cols {
        return Err(LinalgError::ShapeMismatch(format!(
            "d_in has {} rows but d_out has {} columns",
            d_in.rows, d_out.cols
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(LinalgError::NotAComplex);
    }
    Ok(d_out.cols - rank(d_out) - rank(d_in))
}

/// Rank of the map induced on homology by a chain map `f: X_n → Y_m`,
/// given the outgoing differential `d_src: X_n → X_{n−1}` and the incoming
/// differential `d_tgt_in: Y_{m+1} → Y_m`. Uses
/// `rank [[d, 0], [f, e]] − rank d − rank e`, which equals
/// `dim (f(Z) + B) − dim B` without choosing representatives.
pub fn induced_rank(d_src: &SparseMatrix, f: &SparseMatrix, d_tgt_in: &SparseMatrix) -> usize {
    assert_eq!(d_src.cols, f.cols, "chain map source mismatch");
    assert_eq!(f.rows, d_tgt_in.rows, "chain map target mismatch");
    let field = f.field;
    let big = SparseMatrix::block(
        &[d_src.rows, f.rows],
        &[f.cols, d_tgt_in.cols],
        field,
        &[vec![Some(d_src), None], vec![Some(f), Some(d_tgt_in)]],
    );
    rank(&big) - rank(d_src) - rank(d_tgt_in)
}

/// `rank [a | b]`, the dimension of the sum of the two column spaces.
pub fn joint_rank(a: &SparseMatrix, b: &SparseMatrix) -> usize {
    rank(&SparseMatrix::hstack(&[a, b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(&FieldSpec::Rationals, n)
    }

    fn mat(rows: &[&[i64]]) -> SparseMatrix {
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        SparseMatrix::from_dense(FieldSpec::Rationals, &dense)
    }

    #[test]
    fn block_diagonal_rank() {
        let m = mat(&[&[1, 0, 2, 0], &[0, 1, 0, 1], &[3, 0, 6, 0], &[0, 0, 0, 0]]);
        assert_eq!(components(&m).len(), 2);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn identity_rank_and_empty_kernel() {
        let (r, k) = rank_and_kernel(&mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(r, 2);
        assert!(k.is_empty());
    }

    #[test]
    fn one_by_two_kernel() {
        let m = mat(&[&[1, -1]]);
        let (r, k) = rank_and_kernel(&m);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![(0, q(1)), (1, q(1))]]);
    }

    #[test]
    fn homology_dims_small() {
        let f = FieldSpec::Rationals;
        let z3 = SparseMatrix::zeros(3, 3, f);
        assert_eq!(homology_dim(&z3, &z3).unwrap(), 3);
        let d_in = mat(&[&[1], &[-1]]);
        let d_out = mat(&[&[1, 1]]);
        assert_eq!(homology_dim(&d_in, &d_out).unwrap(), 0);
        let bad = mat(&[&[1, 0]]);
        assert_eq!(homology_dim(&d_in, &bad), Err(LinalgError::NotAComplex));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(&[&[1, 1], &[2, 2]]);
        let x = solve(&m, &[(0, q(3)), (1, q(6))]).unwrap();
        assert_eq!(m.apply(&x), vec![(0, q(3)), (1, q(6))]);
        assert!(solve(&m, &[(0, q(1))]).is_none());
    }

    #[test]
    fn induced_rank_of_identity_on_circle_like_complex() {
        // X: 0 -> Q --0--> Q -> 0 ; identity chain map has rank 1 in degree 0.
        let f = FieldSpec::Rationals;
        let d = SparseMatrix::zeros(0, 1, f);
        let e = SparseMatrix::zeros(1, 1, f);
        assert_eq!(induced_rank(&d, &SparseMatrix::identity(1, f), &e), 1);
        let e2 = SparseMatrix::identity(1, f);
        assert_eq!(induced_rank(&d, &SparseMatrix::identity(1, f), &e2), 0);
    }
}
