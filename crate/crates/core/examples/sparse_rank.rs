//! Exact rank, kernel and solving for sparse matrices.
use hochcyc::linalg::{rank_and_kernel, solve, SparseMatrix};
use hochcyc::scalar::{FieldSpec, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::Rationals;
    let n = |k: i64| Scalar::from_int(&q, k);
    // third row = first + second
    let m = SparseMatrix::from_dense(q, &[vec![n(1), n(2), n(0)], vec![n(0), n(1), n(1)], vec![n(1), n(3), n(1)]]);
    let (rank, kernel) = rank_and_kernel(&m);
    println!("rank {rank}, kernel basis {kernel:?}");
    let rhs = m.apply(&[(0, n(1)), (2, n(5))]);
    println!("solve A x = {rhs:?}: x = {:?}", solve(&m, &rhs));
    println!("solve A x = e_0: {:?}", solve(&m, &[(0, n(1))]));

    let c5 = FieldSpec::cyclotomic(5)?;
    let z = |k| Scalar::zeta_pow(&c5, k).unwrap();
    let w = SparseMatrix::from_dense(c5, &[vec![z(0), z(1)], vec![z(1), z(2)]]);
    println!("over Q(ζ5): rank [[1, ζ], [ζ, ζ²]] = {}", hochcyc::linalg::rank(&w));
    Ok(())
}
