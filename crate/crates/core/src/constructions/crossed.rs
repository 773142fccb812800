use super::FiniteGroup;
use crate::algebra::{labels, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix, SparseVec};

/// A finite group acting on a finite algebra by automorphisms; `maps[g]`
/// has the image of the `j`-th basis element in column `j`.
#[derive(Clone, Debug)]
pub struct ActionData {
    group: FiniteGroup,
    maps: Vec<SparseMatrix>,
}

impl ActionData {
    /// Checks that each map is a unital automorphism and that `g ↦ α_g`
    /// is a homomorphism.
    pub fn new(a: &Algebra, group: FiniteGroup, maps: Vec<SparseMatrix>) -> Result<Self> {
        let d = a.dim();
        if maps.len() != group.order() {
            return Err(Error::Invalid(format!("{} action maps for a group of order {}", maps.len(), group.order())));
        }
        for (g, m) in maps.iter().enumerate() {
            let ok = m.rows == d
                && m.cols == d
                && m.field == a.field()
                && rank(m) == d
                && m.apply(a.unit_vec()) == *a.unit_vec()
                && (0..d).all(|i| (0..d).all(|j| m.apply(a.product(i, j)) == a.mul_vec(m.column(i), m.column(j))));
            if !ok {
                return Err(Error::NotAnAction(group.name(g).to_string()));
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if maps[g].mul(&maps[h]) != maps[group.mul(g, h)] {
                    return Err(Error::NotAHomomorphism { g: group.name(g).into(), h: group.name(h).into() });
                }
            }
        }
        Ok(ActionData { group, maps })
    }

    pub fn trivial(a: &Algebra, group: FiniteGroup) -> Self {
        let maps = vec![SparseMatrix::identity(a.dim(), a.field()); group.order()];
        Self::new(a, group, maps).expect("the trivial action is an action")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }
}

/// `A ⋊ G` with `(a⊗g)(b⊗h) = a·α_g(b) ⊗ gh`, labels `a|g:name`.
pub fn crossed_product(a: &Algebra, act: &ActionData) -> Result<Algebra> {
    let g = &act.group;
    let (d, n) = (a.dim(), g.order());
    let dim = d * n;
    let mut labels = Vec::with_capacity(dim);
    for l in a.labels() {
        for x in 0..n {
            labels.push(labels::pair(l, &g.label(x)));
        }
    }
    let lift = |v: &SparseVec, x: usize| -> SparseVec { v.iter().map(|(i, c)| (i * n + x, c.clone())).collect() };
    let mut table = vec![Vec::new(); dim * dim];
    for p in 0..dim {
        let (i, x) = (p / n, p % n);
        for q in 0..dim {
            let (j, y) = (q / n, q % n);
            let moved = act.maps[x].column(j);
            let prod = a.mul_vec(&[(i, crate::scalar::Scalar::one(&a.field()))], moved);
            table[p * dim + q] = lift(&prod, g.mul(x, y));
        }
    }
    let unit = lift(a.unit_vec(), g.identity());
    Algebra::from_table(format!("{}x|G{n}", a.name()), a.field(), labels, unit, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_sum, group_algebra, matrix_algebra, tensor_product, truncated_poly};
    use crate::scalar::{FieldSpec, Scalar};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn swap2() -> SparseMatrix {
        let one = Scalar::one(&Q);
        SparseMatrix::from_columns(2, Q, vec![vec![(1, one.clone())], vec![(0, one)]])
    }

    #[test]
    fn trivial_action_is_tensor_with_group_algebra() {
        let q = matrix_algebra(Q, 1).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let c = crossed_product(&q, &ActionData::trivial(&q, z2.clone())).unwrap();
        let t = tensor_product(&q, &group_algebra(Q, &z2).unwrap()).unwrap();
        assert_eq!(c.labels(), t.labels());
        assert_eq!(c.structure(), t.structure());
    }

    #[test]
    fn swap_action_on_two_points() {
        let q = matrix_algebra(Q, 1).unwrap();
        let qq = direct_sum(&q, &q).unwrap();
        let act = ActionData::new(&qq, FiniteGroup::cyclic(2), vec![SparseMatrix::identity(2, Q), swap2()]).unwrap();
        let c = crossed_product(&qq, &act).unwrap();
        assert_eq!(c.dim(), 4);
        assert_eq!(c.commutator_quotient_dim(), 1);
    }

    #[test]
    fn sign_action_on_dual_numbers() {
        let a = truncated_poly(Q, 2).unwrap();
        let flip = SparseMatrix::from_columns(2, Q, vec![vec![(0, Scalar::one(&Q))], vec![(1, Scalar::from_int(&Q, -1))]]);
        let act = ActionData::new(&a, FiniteGroup::cyclic(2), vec![SparseMatrix::identity(2, Q), flip]).unwrap();
        let c = crossed_product(&a, &act).unwrap();
        assert_eq!(c.dim(), 4);
        assert_eq!(c.commutator_quotient_dim(), 2);
    }

    #[test]
    fn non_actions_rejected() {
        let a = truncated_poly(Q, 2).unwrap();
        // x ↦ 2x is an automorphism of the dual numbers, but squares to x ↦ 4x ≠ id.
        let double = SparseMatrix::from_columns(2, Q, vec![vec![(0, Scalar::one(&Q))], vec![(1, Scalar::from_int(&Q, 2))]]);
        let r = ActionData::new(&a, FiniteGroup::cyclic(2), vec![SparseMatrix::identity(2, Q), double]);
        assert!(matches!(r, Err(Error::NotAHomomorphism { .. })));
        // the swap on the dual numbers' basis does not preserve the unit
        let r = ActionData::new(&a, FiniteGroup::cyclic(2), vec![SparseMatrix::identity(2, Q), swap2()]);
        assert_eq!(r.unwrap_err(), Error::NotAnAction("1".into()));
    }
}
