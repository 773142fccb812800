use std::collections::HashMap;

use crate::algebra::{Derivation, Element};
use crate::error::{Error, Result};
use crate::linalg::{accumulate, solve, SparseMatrix, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

/// A finite-dimensional Lie algebra by structure constants:
/// `brackets[i][j]` holds the coordinates of `[X_i, X_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    field: FieldSpec,
    brackets: Vec<Vec<SparseVec>>,
}

impl LieAlgebra {
    pub fn from_structure(field: FieldSpec, brackets: Vec<Vec<SparseVec>>) -> Self {
        LieAlgebra { field, brackets }
    }

    /// The span of the given derivations, evaluated on `window`; fails with
    /// [`Error::NotClosedUnderBracket`] if some `[D_i, D_j]` leaves the span
    /// there. The derivations are assumed linearly independent on the window.
    pub fn from_derivations(field: FieldSpec, ds: &[Derivation], window: &[String]) -> Result<Self> {
        let mut index: HashMap<(usize, String), usize> = HashMap::new();
        let mut flatten = |d: &Derivation| -> SparseVec {
            let mut entries = Vec::new();
            for (w, label) in window.iter().enumerate() {
                let img: Element = d.value(label);
                for (out, c) in img.terms() {
                    let next = index.len();
                    let k = *index.entry((w, out.clone())).or_insert(next);
                    entries.push((k, c.clone()));
                }
            }
            accumulate(entries)
        };
        let basis: Vec<SparseVec> = ds.iter().map(&mut flatten).collect();
        let mut brackets = vec![vec![Vec::new(); ds.len()]; ds.len()];
        let mut pending = Vec::new();
        for i in 0..ds.len() {
            for j in 0..ds.len() {
                if i != j {
                    pending.push((i, j, flatten(&ds[i].bracket(&ds[j]))));
                }
            }
        }
        let rows = index.len();
        let span = SparseMatrix::from_columns(rows, field, basis);
        for (i, j, v) in pending {
            brackets[i][j] = solve(&span, &v).ok_or(Error::NotClosedUnderBracket { i, j })?;
        }
        Ok(LieAlgebra { field, brackets })
    }

    pub fn dim(&self) -> usize {
        self.brackets.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.brackets[i][j]
    }
}

/// Increasing `n`-subsets of `0..dim` in lexicographic order, the basis of
/// `Λⁿ`.
pub fn exterior_basis(dim: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, dim: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            go(i + 1, dim, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, dim, n, &mut Vec::new(), &mut out);
    out
}

/// Sort a wedge of distinct indices, returning the permutation sign, or
/// `None` if an index repeats.
fn normalize(mut w: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut sign = 1;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] == w[j + 1] {
                return None;
            }
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((w, sign))
}

/// Trivial-coefficient Chevalley–Eilenberg differential `δ: Λⁿ → Λⁿ⁻¹`,
/// `δ(X_1∧…∧X_n) = Σ_{i<j} (−1)^{i+j} [X_i, X_j] ∧ X_1 ∧ … X̂_i … X̂_j … ∧ X_n`
/// with 1-based positions, in the bases of [`exterior_basis`].
pub fn chevalley_eilenberg_differential(lie: &LieAlgebra, n: usize) -> SparseMatrix {
    let dim = lie.dim();
    let src = exterior_basis(dim, n);
    let tgt = if n == 0 { Vec::new() } else { exterior_basis(dim, n - 1) };
    let pos: HashMap<&Vec<usize>, usize> = tgt.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let cols = src
        .iter()
        .map(|w| {
            let mut entries = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let rest: Vec<usize> = (0..n).filter(|&k| k != i && k != j).map(|k| w[k]).collect();
                    let s = if (i + j) % 2 == 0 { 1 } else { -1 };
                    for (k, c) in lie.bracket(w[i], w[j]) {
                        let wedge = [vec![*k], rest.clone()].concat();
                        if let Some((sorted, sg)) = normalize(wedge) {
                            entries.push((pos[&sorted], c.mul_int(s * sg)));
                        }
                    }
                }
            }
            accumulate(entries)
        })
        .collect();
    SparseMatrix::from_columns(tgt.len(), lie.field(), cols)
}

/// Coordinates of `X_{i_1} ∧ … ∧ X_{i_n}` (any order) in [`exterior_basis`].
pub fn wedge(dim: usize, factors: &[usize], field: &FieldSpec) -> SparseVec {
    match normalize(factors.to_vec()) {
        Some((sorted, s)) => {
            let k = exterior_basis(dim, factors.len()).iter().position(|w| *w == sorted).expect("in basis");
            vec![(k, Scalar::from_int(field, s))]
        }
        None => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::constructions::matrix_algebra;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ad(m2: &Algebra, label: &str) -> Derivation {
        Derivation::inner(m2, &Element::basis(Q, label)).unwrap()
    }

    #[test]
    fn nonabelian_two_dimensional() {
        // X = ad E11, Y = ad E12 satisfy [X, Y] = Y
        let m2 = matrix_algebra(Q, 2).unwrap();
        let lie = LieAlgebra::from_derivations(Q, &[ad(&m2, "E:1,1"), ad(&m2, "E:1,2")], m2.labels()).unwrap();
        assert_eq!(lie.bracket(0, 1), &vec![(1, Scalar::one(&Q))]);
        let d2 = chevalley_eilenberg_differential(&lie, 2);
        assert_eq!(d2.column(0), &[(1, Scalar::from_int(&Q, -1))]);
        assert!(chevalley_eilenberg_differential(&lie, 1).mul(&d2).is_zero());
        assert!(chevalley_eilenberg_differential(&lie, 1).is_zero());
    }

    #[test]
    fn bracket_closure_is_checked() {
        let m2 = matrix_algebra(Q, 2).unwrap();
        let res = LieAlgebra::from_derivations(Q, &[ad(&m2, "E:1,2"), ad(&m2, "E:2,1")], m2.labels());
        assert!(matches!(res, Err(Error::NotClosedUnderBracket { .. })));
    }
}
