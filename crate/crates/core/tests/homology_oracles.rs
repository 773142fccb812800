mod common;

use std::collections::HashMap;

use common::{dense_rank, homology, structure, tuples};
use hochcyc::algebra::Algebra;
use hochcyc::constructions::{group_algebra, matrix_algebra, tensor_product, truncated_poly, FiniteGroup};
use hochcyc::engine::{
    cyclic_homology, hochschild_cohomology, hochschild_homology, morita_audit, Coefficients, Engine, HcMethod, DEFAULT_SIZE_CAP,
};
use num_rational::BigRational;
use num_traits::{One, Zero};

const Q: hochcyc::scalar::FieldSpec = hochcyc::scalar::FieldSpec::Rationals;

/// The normalized mixed complex `(C̄, b, B)` of an algebra whose unit is a
/// basis vector, built from structure constants alone.
struct Normalized {
    c: Vec<Vec<Vec<BigRational>>>,
    unit: usize,
    d: usize,
    /// basis of `C̄_n = A ⊗ Ā^{⊗n}` and its inverse index
    basis: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl Normalized {
    fn new(a: &Algebra, top: usize) -> Self {
        let unit_vec = a.unit_vec();
        assert_eq!(unit_vec.len(), 1, "unit must be a basis vector");
        assert!(unit_vec[0].1.is_one());
        let unit = unit_vec[0].0;
        let d = a.dim();
        let mut basis = Vec::new();
        let mut index = Vec::new();
        for n in 0..=top {
            let b: Vec<Vec<usize>> = tuples(d, n + 1).into_iter().filter(|t| t[1..].iter().all(|&x| x != unit)).collect();
            index.push(b.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect());
            basis.push(b);
        }
        Normalized { c: structure(a), unit, d, basis, index }
    }

    fn dim(&self, n: usize) -> usize {
        self.basis[n].len()
    }

    fn add(&self, col: &mut [BigRational], n: usize, t: &[usize], coeff: &BigRational) {
        if let Some(&i) = self.index[n].get(t) {
            col[i] = &col[i] + coeff;
        }
    }

    /// Dense `b: C̄_n → C̄_{n−1}` (rows × cols).
    fn b(&self, n: usize) -> Vec<Vec<BigRational>> {
        let (rows, cols) = (self.dim(n - 1), self.dim(n));
        let mut m = vec![vec![BigRational::zero(); cols]; rows];
        for (j, t) in self.basis[n].iter().enumerate() {
            let mut col = vec![BigRational::zero(); rows];
            for i in 0..n {
                let s = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                for k in 0..self.d {
                    let c = &self.c[t[i]][t[i + 1]][k];
                    if !c.is_zero() {
                        let u = [&t[..i], &[k], &t[i + 2..]].concat();
                        self.add(&mut col, n - 1, &u, &(&s * c));
                    }
                }
            }
            let s = if n % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            for k in 0..self.d {
                let c = &self.c[t[n]][t[0]][k];
                if !c.is_zero() {
                    let u = [&[k], &t[1..n]].concat();
                    self.add(&mut col, n - 1, &u, &(&s * c));
                }
            }
            for (i, v) in col.into_iter().enumerate() {
                m[i][j] = v;
            }
        }
        m
    }

    /// Dense `B: C̄_n → C̄_{n+1}`.
    fn big_b(&self, n: usize) -> Vec<Vec<BigRational>> {
        let (rows, cols) = (self.dim(n + 1), self.dim(n));
        let mut m = vec![vec![BigRational::zero(); cols]; rows];
        for (j, t) in self.basis[n].iter().enumerate() {
            for i in 0..=n {
                let s = if (n * i) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                let u = [&[self.unit], &t[i..], &t[..i]].concat();
                if let Some(&r) = self.index[n + 1].get(&u) {
                    m[r][j] = &m[r][j] + &s;
                }
            }
        }
        m
    }

    /// `b + B` on `Tot_n = ⊕_p C̄_{n−2p}` → `Tot_{n−1}`.
    fn total(&self, n: usize) -> Vec<Vec<BigRational>> {
        let blocks = |m: usize| (0..=m / 2).map(|p| m - 2 * p).collect::<Vec<_>>();
        let offsets = |m: usize| {
            let mut o = Vec::new();
            let mut acc = 0;
            for k in blocks(m) {
                o.push((k, acc));
                acc += self.dim(k);
            }
            (o, acc)
        };
        let (src, cols) = offsets(n);
        let (tgt, rows) = offsets(n - 1);
        let mut m = vec![vec![BigRational::zero(); cols]; rows];
        let place = |m: &mut Vec<Vec<BigRational>>, block: Vec<Vec<BigRational>>, r0: usize, c0: usize| {
            for (i, row) in block.into_iter().enumerate() {
                for (j, v) in row.into_iter().enumerate() {
                    if !v.is_zero() {
                        m[r0 + i][c0 + j] = v;
                    }
                }
            }
        };
        for &(k, c0) in &src {
            if k >= 1 {
                let &(_, r0) = tgt.iter().find(|(kk, _)| *kk == k - 1).unwrap();
                place(&mut m, self.b(k), r0, c0);
            }
            if let Some(&(_, r0)) = tgt.iter().find(|(kk, _)| *kk == k + 1) {
                place(&mut m, self.big_b(k), r0, c0);
            }
        }
        m
    }

    fn tot_dim(&self, n: usize) -> usize {
        (0..=n / 2).map(|p| self.dim(n - 2 * p)).sum()
    }

    fn hh(&self, max_n: usize) -> Vec<usize> {
        let dims: Vec<usize> = (0..=max_n + 1).map(|n| self.dim(n)).collect();
        let d: Vec<_> = (0..=max_n + 1).map(|n| if n == 0 { vec![] } else { self.b(n) }).collect();
        homology(&dims, &d)
    }

    fn hc(&self, max_n: usize) -> Vec<usize> {
        let dims: Vec<usize> = (0..=max_n + 1).map(|n| self.tot_dim(n)).collect();
        let d: Vec<_> = (0..=max_n + 1).map(|n| if n == 0 { vec![] } else { self.total(n) }).collect();
        homology(&dims, &d)
    }
}

fn mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigRational::zero(), |acc, k| if row[k].is_zero() { acc } else { acc + &row[k] * &b[k][j] }))
                .collect()
        })
        .collect()
}

fn is_zero(m: &[Vec<BigRational>]) -> bool {
    m.iter().all(|r| r.iter().all(Zero::is_zero))
}

fn unital_examples() -> Vec<Algebra> {
    vec![
        truncated_poly(Q, 1).unwrap(),
        truncated_poly(Q, 2).unwrap(),
        truncated_poly(Q, 3).unwrap(),
        truncated_poly(Q, 4).unwrap(),
        group_algebra(Q, &FiniteGroup::cyclic(2)).unwrap(),
        group_algebra(Q, &FiniteGroup::cyclic(3)).unwrap(),
        group_algebra(Q, &FiniteGroup::cyclic(4)).unwrap(),
    ]
}

#[test]
fn normalized_oracle_is_a_mixed_complex() {
    for a in unital_examples() {
        let o = Normalized::new(&a, 5);
        for n in 1..=3 {
            assert!(is_zero(&mul(&o.b(n), &o.b(n + 1))), "{} b² at {n}", a.name());
            assert!(is_zero(&mul(&o.big_b(n + 1), &o.big_b(n))), "{} B² at {n}", a.name());
            let bb = mul(&o.b(n + 1), &o.big_b(n));
            let bb2 = mul(&o.big_b(n - 1), &o.b(n));
            let sum: Vec<Vec<_>> = bb.iter().zip(&bb2).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect()).collect();
            assert!(is_zero(&sum), "{} bB + Bb at {n}", a.name());
        }
    }
}

#[test]
fn hochschild_homology_matches_normalized_complex() {
    for a in unital_examples() {
        let o = Normalized::new(&a, 5);
        let engine = hochschild_homology(&Engine::new(&a), 4).unwrap().dims_vec();
        assert_eq!(engine, o.hh(4), "{}", a.name());
    }
}

#[test]
fn cyclic_homology_matches_normalized_mixed_complex() {
    for a in unital_examples() {
        let o = Normalized::new(&a, 5);
        let oracle = o.hc(4);
        for method in HcMethod::ALL {
            let engine = cyclic_homology(&Engine::new(&a), 4, method).unwrap().dims_vec();
            assert_eq!(engine, oracle, "{} via {:?}", a.name(), method);
        }
    }
}

#[test]
fn truncated_polynomials_follow_the_periodic_resolution() {
    // 0 ← A ←0− A ←m·x^{m−1}− A ←0− A ← …  gives HH_0 = m and HH_n = m − 1.
    for m in 2..=4 {
        let a = truncated_poly(Q, m).unwrap();
        let mut expected = vec![m];
        expected.extend(std::iter::repeat(m - 1).take(4));
        assert_eq!(hochschild_homology(&Engine::new(&a), 4).unwrap().dims_vec(), expected, "m = {m}");
        // dually, Hom(resolution, A): HH^0 = A and HH^n = ker or coker of m·x^{m−1}
        let co = hochschild_cohomology(&Engine::new(&a), Coefficients::Regular, 3).unwrap().dims_vec();
        assert_eq!(co, expected[..4].to_vec(), "m = {m}");
        let dual = hochschild_cohomology(&Engine::new(&a), Coefficients::Dual, 3).unwrap().dims_vec();
        assert_eq!(dual, expected[..4].to_vec(), "m = {m}");
    }
}

fn class_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if !seen[x] {
            classes += 1;
            for h in 0..n {
                seen[g.mul(g.mul(h, x), g.inverse(h))] = true;
            }
        }
    }
    classes
}

#[test]
fn semisimple_group_algebras_have_class_count_hh0_and_nothing_above() {
    for g in [FiniteGroup::symmetric(3), FiniteGroup::cyclic(5), FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2))] {
        let a = group_algebra(Q, &g).unwrap();
        let dims = hochschild_homology(&Engine::new(&a), 2).unwrap().dims_vec();
        assert_eq!(dims, vec![class_count(&g), 0, 0]);
    }
    assert_eq!(class_count(&FiniteGroup::symmetric(3)), 3);
}

#[test]
fn morita_invariance_for_small_matrix_sizes() {
    let dual = truncated_poly(Q, 2).unwrap();
    let q = truncated_poly(Q, 1).unwrap();
    for (k, a, max_n) in [(2, &dual, 2), (3, &q, 2), (2, &q, 3)] {
        let audit = morita_audit(k, a, max_n, DEFAULT_SIZE_CAP).unwrap();
        assert!(audit.passed, "{audit:?}");
        let mk = tensor_product(&matrix_algebra(Q, k).unwrap(), a).unwrap();
        let direct = hochschild_homology(&Engine::new(&mk), max_n).unwrap().dims_vec();
        assert_eq!(direct, hochschild_homology(&Engine::new(a), max_n).unwrap().dims_vec());
    }
}

#[test]
fn matrix_algebra_rank_oracle_for_b() {
    // rank of b_1 on M₂(ℚ) from a dense copy of the formula
    let m2 = matrix_algebra(Q, 2).unwrap();
    let eng = Engine::new(&m2);
    let b1 = eng.b(1).unwrap();
    assert_eq!(eng.rank_b(1).unwrap(), dense_rank(common::to_big_dense(&b1, 4)));
    assert_eq!(eng.rank_b(1).unwrap(), 3);
}
