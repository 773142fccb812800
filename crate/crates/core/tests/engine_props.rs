use std::collections::BTreeMap;

use hochcyc::algebra::Algebra;
use hochcyc::engine::{operator_identity_audit, Engine};
use hochcyc::gallery::fixtures::{finite, finite_specs};
use hochcyc::linalg::{SparseMatrix, SparseVec};
use hochcyc::scalar::Scalar;
use proptest::prelude::*;

/// Degree limit keeping `C_{n+1}` small for each algebra.
fn top_degree(a: &Algebra) -> usize {
    match a.dim() {
        0..=3 => 3,
        4 => 2,
        _ => 1,
    }
}

fn algebras() -> Vec<Algebra> {
    finite_specs().into_iter().map(|(name, _)| finite(name).unwrap()).collect()
}

/// `b(a0⊗…⊗an)` straight from the face maps on tuples of labels.
fn b_oracle(a: &Algebra, t: &[usize]) -> BTreeMap<Vec<usize>, Scalar> {
    let f = a.field();
    let n = t.len() - 1;
    let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    let mut push = |k: Vec<usize>, c: Scalar| {
        let e = out.entry(k).or_insert_with(|| Scalar::zero(&f));
        *e = &*e + &c;
    };
    for i in 0..n {
        let sign = Scalar::from_int(&f, if i % 2 == 0 { 1 } else { -1 });
        for (k, c) in a.product(t[i], t[i + 1]) {
            let mut u = t[..i].to_vec();
            u.push(*k);
            u.extend_from_slice(&t[i + 2..]);
            push(u, &sign * c);
        }
    }
    let sign = Scalar::from_int(&f, if n % 2 == 0 { 1 } else { -1 });
    for (k, c) in a.product(t[n], t[0]) {
        let mut u = vec![*k];
        u.extend_from_slice(&t[1..n]);
        push(u, &sign * c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn index(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

fn tuple(mut i: usize, d: usize, len: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for k in (0..len).rev() {
        t[k] = i % d;
        i /= d;
    }
    t
}

fn random_vec(dim: usize, field: &hochcyc::scalar::FieldSpec, seeds: &[(usize, i64)]) -> SparseVec {
    let mut v: BTreeMap<usize, Scalar> = BTreeMap::new();
    for &(i, c) in seeds {
        let e = v.entry(i % dim).or_insert_with(|| Scalar::zero(field));
        *e = &*e + &Scalar::from_int(field, c);
    }
    v.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn apply(m: &SparseMatrix, v: &SparseVec) -> SparseVec {
    m.apply(v)
}

fn sum(x: &SparseVec, y: &SparseVec) -> SparseVec {
    hochcyc::linalg::accumulate(x.iter().chain(y).cloned())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn b_matches_face_map_formula(which in 0usize..64, n in 1usize..4, pick in 0usize..1_000_000) {
        let all = algebras();
        let a = &all[which % all.len()];
        let n = n.min(top_degree(a));
        let d = a.dim();
        let eng = Engine::new(a);
        let b = eng.b(n).unwrap();
        let col = pick % d.pow(n as u32 + 1);
        let t = tuple(col, d, n + 1);
        let mut expected: SparseVec = b_oracle(a, &t).into_iter().map(|(u, c)| (index(&u, d), c)).collect();
        expected.sort_by_key(|(i, _)| *i);
        prop_assert_eq!(b.column(col).to_vec(), expected);
    }

    #[test]
    fn lambda_rotates_with_sign(which in 0usize..64, n in 0usize..4, pick in 0usize..1_000_000) {
        let all = algebras();
        let a = &all[which % all.len()];
        let n = n.min(top_degree(a));
        let d = a.dim();
        let lam = Engine::new(a).lambda(n).unwrap();
        let col = pick % d.pow(n as u32 + 1);
        let t = tuple(col, d, n + 1);
        let mut rotated = vec![t[n]];
        rotated.extend_from_slice(&t[..n]);
        let sign = Scalar::from_int(&a.field(), if n % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(lam.column(col).to_vec(), vec![(index(&rotated, d), sign)]);
    }

    #[test]
    fn mixed_complex_identities_on_random_chains(
        which in 0usize..64,
        n in 1usize..4,
        seeds in proptest::collection::vec((0usize..1_000_000, -4i64..=4), 1..8),
    ) {
        let all = algebras();
        let a = &all[which % all.len()];
        let n = n.min(top_degree(a) - 1).max(1);
        let eng = Engine::new(a);
        let f = a.field();
        let v = random_vec(eng.dim(n).unwrap(), &f, &seeds);
        // b² = 0
        prop_assert!(apply(&eng.b(n - 1).unwrap(), &apply(&eng.b(n).unwrap(), &v)).is_empty());
        // B² = 0
        prop_assert!(apply(&eng.connes_b(n + 1).unwrap(), &apply(&eng.connes_b(n).unwrap(), &v)).is_empty());
        // bB + Bb = 0
        let bb = apply(&eng.b(n + 1).unwrap(), &apply(&eng.connes_b(n).unwrap(), &v));
        let bb2 = apply(&eng.connes_b(n - 1).unwrap(), &apply(&eng.b(n).unwrap(), &v));
        prop_assert!(sum(&bb, &bb2).is_empty());
        // λ^{n+1} = id and N(1 − λ) = 0
        let lam = eng.lambda(n).unwrap();
        let mut w = v.clone();
        for _ in 0..=n {
            w = apply(&lam, &w);
        }
        prop_assert_eq!(&w, &v);
        prop_assert!(apply(&eng.norm(n).unwrap(), &apply(&eng.one_minus_lambda(n).unwrap(), &v)).is_empty());
        // b(1 − λ) = (1 − λ)b′
        let lhs = apply(&eng.b(n).unwrap(), &apply(&eng.one_minus_lambda(n).unwrap(), &v));
        let rhs = apply(&eng.one_minus_lambda(n - 1).unwrap(), &apply(&eng.b_prime(n).unwrap(), &v));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn identity_audit_passes_on_every_finite_fixture() {
    for a in algebras() {
        let eng = Engine::new(&a);
        for check in operator_identity_audit(&eng, top_degree(&a).saturating_sub(1)).unwrap() {
            assert!(check.passed, "{} {:?}", a.name(), check);
        }
    }
}
