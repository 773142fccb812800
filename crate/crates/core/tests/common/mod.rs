//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's elimination or operator code.
#![allow(dead_code)]

use hochcyc::algebra::Algebra;
use hochcyc::linalg::SparseMatrix;
use hochcyc::scalar::Scalar;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn big(s: &Scalar) -> BigRational {
    s.as_rational().expect("rational scalar").to_big()
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Rank by textbook Gauss-Jordan over `BigRational` on a dense copy.
pub fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] = &rows[i][j] - t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dense rational copy of a sparse matrix (rows × cols).
pub fn to_big_dense(m: &SparseMatrix, rows: usize) -> Vec<Vec<BigRational>> {
    let cols = m.columns().len();
    let mut out = vec![vec![BigRational::zero(); cols]; rows];
    for (j, col) in m.columns().iter().enumerate() {
        for (i, v) in col {
            out[*i][j] = big(v);
        }
    }
    out
}

pub fn oracle_rank(m: &SparseMatrix, rows: usize) -> usize {
    if rows == 0 || m.columns().is_empty() {
        return 0;
    }
    dense_rank(to_big_dense(m, rows))
}

/// Structure constants `c[i][j][k]` of a rational finite algebra.
pub fn structure(a: &Algebra) -> Vec<Vec<Vec<BigRational>>> {
    let d = a.dim();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut v = vec![BigRational::zero(); d];
                    for (k, c) in a.product(i, j) {
                        v[*k] = big(c);
                    }
                    v
                })
                .collect()
        })
        .collect()
}

/// All tuples in `{0..d}^len`, lexicographic.
pub fn tuples(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..d).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Homology dimensions `dim C_n − rank d_n − rank d_{n+1}` of a complex given
/// by dense differentials `d[n]: C_n → C_{n−1}` (with `d[0]` empty).
pub fn homology(dims: &[usize], d: &[Vec<Vec<BigRational>>]) -> Vec<usize> {
    let rank = |n: usize| if n < d.len() && !d[n].is_empty() && dims[n] > 0 { dense_rank(d[n].clone()) } else { 0 };
    (0..dims.len() - 1).map(|n| dims[n] - rank(n) - rank(n + 1)).collect()
}
