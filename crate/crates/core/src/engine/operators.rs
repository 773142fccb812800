//! The cyclic-module operators on `C_n = A^{⊗(n+1)}` as sparse matrices.
//!
//! `C_n` is indexed lexicographically: the tuple `(i0, …, in)` sits at
//! `((i0·d + i1)·d + …)·d + in`.

use crate::algebra::Algebra;
use crate::linalg::{accumulate, SparseMatrix, SparseVec};
use crate::scalar::Scalar;

pub fn decode(mut idx: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

pub fn encode(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_{i<n} (−1)^i a0⊗…⊗a_i a_{i+1}⊗…⊗an`, plus the wrap-around term
/// `(−1)^n an a0⊗a1⊗…⊗a_{n−1}` when `cyclic` (giving `b` rather than `b′`).
pub fn boundary(a: &Algebra, n: usize, dim_n: usize, cyclic: bool) -> SparseMatrix {
    let d = a.dim();
    let field = a.field();
    if n == 0 {
        return SparseMatrix::zeros(0, dim_n, field);
    }
    let signs = [Scalar::one(&field), Scalar::from_int(&field, -1)];
    let cols = (0..dim_n)
        .map(|col| {
            let t = decode(col, d, n + 1);
            let mut entries = Vec::new();
            let mut buf = Vec::with_capacity(n);
            for i in 0..n {
                for (k, c) in a.product(t[i], t[i + 1]) {
                    buf.clear();
                    buf.extend_from_slice(&t[..i]);
                    buf.push(*k);
                    buf.extend_from_slice(&t[i + 2..]);
                    let s = &signs[i % 2];
                    entries.push((encode(&buf, d), s * c));
                }
            }
            if cyclic {
                for (k, c) in a.product(t[n], t[0]) {
                    buf.clear();
                    buf.push(*k);
                    buf.extend_from_slice(&t[1..n]);
                    entries.push((encode(&buf, d), &signs[n % 2] * c));
                }
            }
            accumulate(entries)
        })
        .collect();
    SparseMatrix::from_columns(dim_n / d, field, cols)
}

/// `λ(a0⊗…⊗an) = (−1)^n an⊗a0⊗…⊗a_{n−1}`.
pub fn lambda(a: &Algebra, n: usize, dim_n: usize) -> SparseMatrix {
    let d = a.dim();
    let field = a.field();
    let s = Scalar::from_int(&field, sign(n));
    let block = dim_n / d;
    // the last digit moves to the front
    let cols = (0..dim_n).map(|col| vec![((col % d) * block + col / d, s.clone())]).collect();
    SparseMatrix::from_columns(dim_n, field, cols)
}

/// `s(a0⊗…⊗an) = 1⊗a0⊗…⊗an` into `C_{n+1}`.
pub fn extra_degeneracy(a: &Algebra, dim_n: usize) -> SparseMatrix {
    let unit = a.unit_vec();
    let cols = (0..dim_n).map(|col| unit.iter().map(|(u, c)| (u * dim_n + col, c.clone())).collect::<SparseVec>()).collect();
    SparseMatrix::from_columns(dim_n * a.dim(), a.field(), cols)
}

/// `N = 1 + λ + … + λ^n`.
pub fn norm_operator(lam: &SparseMatrix, n: usize) -> SparseMatrix {
    let mut acc = SparseMatrix::identity(lam.rows, lam.field);
    let mut p = SparseMatrix::identity(lam.rows, lam.field);
    for _ in 0..n {
        p = lam.mul(&p);
        acc = acc.add(&p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra, truncated_poly};
    use crate::linalg::rank;
    use crate::scalar::FieldSpec;

    #[test]
    fn index_round_trip() {
        assert_eq!(decode(encode(&[1, 0, 2], 3), 3, 3), vec![1, 0, 2]);
    }

    #[test]
    fn ground_field_boundaries_alternate() {
        let q = matrix_algebra(FieldSpec::Rationals, 1).unwrap();
        for n in 1..6 {
            let b = boundary(&q, n, 1, true);
            let expect = if n % 2 == 0 { 1 } else { 0 };
            assert_eq!(b.nnz(), expect, "b_{n} on Q");
        }
        let lam = lambda(&q, 1, 1);
        assert_eq!(lam.get(0, 0), Scalar::from_int(&FieldSpec::Rationals, -1));
        assert!(norm_operator(&lam, 1).is_zero());
    }

    #[test]
    fn small_boundaries() {
        let dual = truncated_poly(FieldSpec::Rationals, 2).unwrap();
        assert!(boundary(&dual, 1, 4, true).is_zero());
        let m2 = matrix_algebra(FieldSpec::Rationals, 2).unwrap();
        assert_eq!(rank(&boundary(&m2, 1, 16, true)), 3);
    }

    #[test]
    fn lambda_has_order_n_plus_one() {
        let dual = truncated_poly(FieldSpec::Rationals, 2).unwrap();
        let lam = lambda(&dual, 2, 8);
        let cube = lam.mul(&lam).mul(&lam);
        assert_eq!(cube, SparseMatrix::identity(8, FieldSpec::Rationals));
    }
}
