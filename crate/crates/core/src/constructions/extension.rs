use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{axpy, SparseMatrix, SparseVec};
use crate::scalar::Scalar;

/// An `A`-bimodule: `left[i]` and `right[i]` are the matrices of
/// `m ↦ e_i·m` and `m ↦ m·e_i`.
#[derive(Clone, Debug)]
pub struct BimoduleData {
    pub labels: Vec<String>,
    pub left: Vec<SparseMatrix>,
    pub right: Vec<SparseMatrix>,
}

impl BimoduleData {
    /// `A` as a bimodule over itself; the copy of `a` is labelled `m:a` so
    /// that extensions keep distinct labels.
    pub fn regular(a: &Algebra) -> Self {
        let one = Scalar::one(&a.field());
        let left = (0..a.dim()).map(|i| a.left_mult(&[(i, one.clone())])).collect();
        let right = (0..a.dim()).map(|i| a.right_mult(&[(i, one.clone())])).collect();
        BimoduleData { labels: a.labels().iter().map(|l| format!("m:{l}")).collect(), left, right }
    }

    /// `k`-dimensional module on which only the unit acts, as the identity.
    pub fn augmentation(a: &Algebra, labels: Vec<String>, unit_coeff: impl Fn(usize) -> Scalar) -> Self {
        let m = labels.len();
        let act = |i: usize| SparseMatrix::identity(m, a.field()).scale(&unit_coeff(i));
        let left = (0..a.dim()).map(act).collect();
        let right = (0..a.dim()).map(act).collect();
        BimoduleData { labels, left, right }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn act(ms: &[SparseMatrix], x: &[(usize, Scalar)], m: usize, field: crate::scalar::FieldSpec) -> SparseMatrix {
        let mut acc = SparseMatrix::zeros(m, m, field);
        for (i, c) in x {
            acc = acc.lin_comb(c, &ms[*i]);
        }
        acc
    }

    /// Left action of a coordinate vector.
    pub fn left_of(&self, a: &Algebra, x: &[(usize, Scalar)]) -> SparseMatrix {
        Self::act(&self.left, x, self.dim(), a.field())
    }

    pub fn right_of(&self, a: &Algebra, x: &[(usize, Scalar)]) -> SparseMatrix {
        Self::act(&self.right, x, self.dim(), a.field())
    }

    /// Unital left and right actions that commute.
    pub fn validate(&self, a: &Algebra) -> Result<()> {
        let (d, m) = (a.dim(), self.dim());
        if self.left.len() != d || self.right.len() != d || self.left.iter().chain(&self.right).any(|x| x.rows != m || x.cols != m) {
            return Err(Error::Invalid("bimodule action matrices have the wrong shape".into()));
        }
        let id = SparseMatrix::identity(m, a.field());
        if self.left_of(a, a.unit_vec()) != id || self.right_of(a, a.unit_vec()) != id {
            return Err(Error::Invalid("the unit does not act as the identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let p = a.product(i, j);
                if self.left_of(a, p) != self.left[i].mul(&self.left[j])
                    || self.right_of(a, p) != self.right[j].mul(&self.right[i])
                    || self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i])
                {
                    return Err(Error::Invalid(format!("bimodule axioms fail at ({}, {})", a.label(i), a.label(j))));
                }
            }
        }
        Ok(())
    }
}

/// A bilinear map `A × A → M`; `values[i * dim A + j] = f(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCochain {
    pub values: Vec<SparseVec>,
}

impl TwoCochain {
    pub fn eval(&self, a: &Algebra, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut out = Vec::new();
        for (i, c) in x {
            for (j, e) in y {
                out = axpy(&out, &(c * e), &self.values[i * a.dim() + j]);
            }
        }
        out
    }
}

/// `A ⊕ M` with `(a,m)(a',m') = (aa', am' + ma' + f(a,a'))` and unit
/// `(1, −f(1,1))`. Associativity is checked on all triples of basis
/// elements of `A` (triples touching `M` are associative by the bimodule
/// axioms); a failure is reported as [`Error::NotACocycle`].
pub fn extension_from_2cocycle(a: &Algebra, m: &BimoduleData, f: &TwoCochain) -> Result<Algebra> {
    m.validate(a)?;
    let (d, k) = (a.dim(), m.dim());
    if f.values.len() != d * d || f.values.iter().any(|v| v.iter().any(|(i, _)| *i >= k)) {
        return Err(Error::Invalid("2-cochain has the wrong shape".into()));
    }
    let n = d + k;
    let field = a.field();
    let one = Scalar::one(&field);
    let lift_m = |v: &SparseVec| -> SparseVec { v.iter().map(|(i, c)| (i + d, c.clone())).collect() };
    let mut table = vec![Vec::new(); n * n];
    for i in 0..d {
        for j in 0..d {
            let mut v = a.product(i, j).clone();
            v.extend(lift_m(&f.values[i * d + j]));
            table[i * n + j] = v;
        }
        for j in 0..k {
            table[i * n + d + j] = lift_m(&m.left[i].column(j).to_vec());
            table[(d + j) * n + i] = lift_m(&m.right[i].column(j).to_vec());
        }
    }
    let e = |i: usize| vec![(i, one.clone())];
    let mul = |x: &SparseVec, y: &SparseVec| -> SparseVec {
        let mut out = Vec::new();
        for (i, c) in x {
            for (j, e) in y {
                out = axpy(&out, &(c * e), &table[i * n + j]);
            }
        }
        out
    };
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                if mul(&mul(&e(i), &e(j)), &e(l)) != mul(&e(i), &mul(&e(j), &e(l))) {
                    return Err(Error::NotACocycle { a: a.label(i).into(), b: a.label(j).into(), c: a.label(l).into() });
                }
            }
        }
    }
    let f11 = f.eval(a, a.unit_vec(), a.unit_vec());
    let mut unit = a.unit_vec().clone();
    unit.extend(lift_m(&f11).into_iter().map(|(i, c)| (i, -&c)));
    let labels = a.labels().iter().cloned().chain(m.labels.iter().cloned()).collect();
    Algebra::from_table(format!("{}+eps", a.name()), field, labels, unit, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_isomorphism;
    use crate::constructions::{matrix_algebra, truncated_poly};
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(&Q, n)
    }

    #[test]
    fn zero_cocycle_on_q_gives_dual_numbers() {
        let a = matrix_algebra(Q, 1).unwrap();
        let m = BimoduleData::regular(&a);
        let ext = extension_from_2cocycle(&a, &BimoduleData { labels: vec!["m".into()], ..m }, &TwoCochain { values: vec![vec![]] }).unwrap();
        let dual = truncated_poly(Q, 2).unwrap();
        assert!(is_isomorphism(&ext, &dual, &[vec![(0, q(1))], vec![(1, q(1))]]));
    }

    #[test]
    fn dual_numbers_extend_to_truncated_cubic() {
        let a = truncated_poly(Q, 2).unwrap();
        // x acts on M = ℚ·m by 0, the unit by 1
        let m = BimoduleData::augmentation(&a, vec!["m".into()], |i| q(if i == 0 { 1 } else { 0 }));
        let f = TwoCochain { values: vec![vec![], vec![], vec![], vec![(0, q(1))]] };
        let ext = extension_from_2cocycle(&a, &m, &f).unwrap();
        let cubic = truncated_poly(Q, 3).unwrap();
        // 1 ↦ 1, x ↦ x, m ↦ x²
        assert!(is_isomorphism(&ext, &cubic, &[vec![(0, q(1))], vec![(1, q(1))], vec![(2, q(1))]]));
    }

    #[test]
    fn unnormalized_coboundary_still_extends() {
        let a = matrix_algebra(Q, 1).unwrap();
        let m = BimoduleData::augmentation(&a, vec!["m".into()], |_| q(1));
        let ext = extension_from_2cocycle(&a, &m, &TwoCochain { values: vec![vec![(0, q(1))]] }).unwrap();
        assert_eq!(ext.unit_vec(), &vec![(0, q(1)), (1, q(-1))]);
    }

    #[test]
    fn non_cocycle_rejected() {
        let a = truncated_poly(Q, 2).unwrap();
        let m = BimoduleData::augmentation(&a, vec!["m".into()], |i| q(if i == 0 { 1 } else { 0 }));
        // f(1, x) = m breaks δf(1, 1, x) = f(1, x) − f(1, x) + f(1, x) − f(1, 1)x = m ≠ 0
        let f = TwoCochain { values: vec![vec![], vec![(0, q(1))], vec![], vec![]] };
        assert!(matches!(extension_from_2cocycle(&a, &m, &f), Err(Error::NotACocycle { .. })));
    }
}
