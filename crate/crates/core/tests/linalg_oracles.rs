mod common;

use common::{dense_rank, oracle_rank, to_big_dense};
use hochcyc::linalg::{kernel, rank, rank_and_kernel, solve, SparseMatrix};
use hochcyc::scalar::{FieldSpec, Scalar};
use num_traits::Zero;
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..9, 1usize..9).prop_flat_map(|(r, c)| {
        // mostly zeros so that rank deficiency is common
        let entry = prop_oneof![4 => Just(0i64), 1 => -3i64..=3];
        (Just(r), Just(c), proptest::collection::vec(entry, r * c))
    })
}

fn build(field: FieldSpec, r: usize, c: usize, e: &[i64]) -> SparseMatrix {
    let trip = (0..r).flat_map(|i| (0..c).map(move |j| (i, j))).filter_map(|(i, j)| {
        let v = e[i * c + j];
        (v != 0).then(|| (i, j, Scalar::from_int(&field, v)))
    });
    SparseMatrix::from_triplets(r, c, field, trip.collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_dense_oracle((r, c, e) in matrix()) {
        let m = build(Q, r, c, &e);
        prop_assert_eq!(rank(&m), oracle_rank(&m, r));
    }

    #[test]
    fn kernel_is_a_basis_of_the_null_space((r, c, e) in matrix()) {
        let m = build(Q, r, c, &e);
        let (rk, ker) = rank_and_kernel(&m);
        prop_assert_eq!(ker.len(), c - rk);
        for v in &ker {
            prop_assert!(m.apply(v).is_empty());
        }
        // independence of the kernel vectors, checked densely
        if !ker.is_empty() {
            let k = SparseMatrix::from_columns(c, Q, ker.clone());
            prop_assert_eq!(dense_rank(to_big_dense(&k, c)), ker.len());
        }
        prop_assert_eq!(kernel(&m).len(), ker.len());
    }

    #[test]
    fn solve_reproduces_consistent_rhs((r, c, e) in matrix(), x in proptest::collection::vec(-2i64..=2, 8)) {
        let m = build(Q, r, c, &e);
        let xv: Vec<_> = (0..c).filter(|&j| x[j] != 0).map(|j| (j, Scalar::from_int(&Q, x[j]))).collect();
        let b = m.apply(&xv);
        let sol = solve(&m, &b).expect("b lies in the image");
        prop_assert_eq!(m.apply(&sol), b);
    }

    #[test]
    fn inconsistent_rhs_is_rejected((r, c, e) in matrix()) {
        let m = build(Q, r, c, &e);
        // a unit vector outside the column space exists iff rank < rows
        let rows = to_big_dense(&m, r);
        let target = (0..r).find(|&i| {
            let mut aug = rows.clone();
            for (k, row) in aug.iter_mut().enumerate() {
                row.push(if k == i { common::int(1) } else { num_rational::BigRational::zero() });
            }
            dense_rank(aug) > dense_rank(rows.clone())
        });
        if let Some(i) = target {
            prop_assert!(solve(&m, &[(i, Scalar::one(&Q))]).is_none());
        }
    }

    #[test]
    fn rank_is_unchanged_by_field_extension((r, c, e) in matrix(), order in prop_oneof![Just(3u32), Just(4), Just(5), Just(8)]) {
        let f = FieldSpec::cyclotomic(order).unwrap();
        prop_assert_eq!(rank(&build(f, r, c, &e)), oracle_rank(&build(Q, r, c, &e), r));
        let rf = FieldSpec::rational_functions();
        prop_assert_eq!(rank(&build(rf, r, c, &e)), oracle_rank(&build(Q, r, c, &e), r));
    }

    #[test]
    fn cyclotomic_rank_is_transpose_invariant((r, c, e) in matrix(), k in proptest::collection::vec(0i64..5, 64)) {
        // entries ζ^k · n over ℚ(ζ₅)
        let f = FieldSpec::cyclotomic(5).unwrap();
        let trip: Vec<_> = (0..r).flat_map(|i| (0..c).map(move |j| (i, j))).filter_map(|(i, j)| {
            let v = e[i * c + j];
            (v != 0).then(|| (i, j, Scalar::zeta_pow(&f, k[(i * c + j) % 64]).unwrap().mul_int(v)))
        }).collect();
        let m = SparseMatrix::from_triplets(r, c, f, trip);
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
        let (rk, ker) = rank_and_kernel(&m);
        prop_assert_eq!(rk + ker.len(), c);
        for v in &ker {
            prop_assert!(m.apply(v).is_empty());
        }
    }
}

#[test]
fn rank_one_over_cyclotomic_field() {
    // [[1, ζ], [ζ², ζ³]] is rank 1 over ℚ(ζ₇); swapping ζ² for ζ makes it invertible.
    let f = FieldSpec::cyclotomic(7).unwrap();
    let z = |k| Scalar::zeta_pow(&f, k).unwrap();
    let m = SparseMatrix::from_dense(f, &[vec![z(0), z(1)], vec![z(2), z(3)]]);
    assert_eq!(rank(&m), 1);
    let n = SparseMatrix::from_dense(f, &[vec![z(0), z(1)], vec![z(1), z(3)]]);
    assert_eq!(rank(&n), 2);
}
