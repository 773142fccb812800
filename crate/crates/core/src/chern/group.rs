use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::cochain::{validate_cyclic_cocycle, CarrierRef, Cochain, CochainRule};
use crate::algebra::labels;
use crate::constructions::{group_algebra, lattice_group_algebra, FiniteGroup, GroupData};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// An element of a finite group (by index) or of `ℤᵏ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElem {
    Finite(usize),
    Lattice(Vec<i64>),
}

pub type GroupRule = Arc<dyn Fn(&[GroupElem]) -> Scalar + Send + Sync>;

/// A scalar-valued group `n`-cochain `c(g1, …, gn)` with trivial action.
#[derive(Clone)]
pub struct GroupCocycleData {
    name: String,
    field: FieldSpec,
    group: GroupData,
    degree: usize,
    rule: GroupRule,
    index: Arc<HashMap<String, usize>>,
}

impl fmt::Debug for GroupCocycleData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupCocycleData").field("name", &self.name).field("degree", &self.degree).finish()
    }
}

impl GroupCocycleData {
    pub fn new(name: impl Into<String>, field: FieldSpec, group: GroupData, degree: usize, rule: GroupRule) -> Self {
        let index = match &group {
            GroupData::Finite(g) => (0..g.order()).map(|x| (g.label(x), x)).collect(),
            GroupData::Lattice(_) => HashMap::new(),
        };
        GroupCocycleData { name: name.into(), field, group, degree, rule, index: Arc::new(index) }
    }

    /// `c(g, h) = g₁h₂ − g₂h₁` on `ℤ²`.
    pub fn determinant(field: FieldSpec) -> Self {
        let rule: GroupRule = Arc::new(move |g| match (&g[0], &g[1]) {
            (GroupElem::Lattice(a), GroupElem::Lattice(b)) => Scalar::from_int(&field, a[0] * b[1] - a[1] * b[0]),
            _ => Scalar::zero(&field),
        });
        Self::new("determinant", field, GroupData::Lattice(2), 2, rule)
    }

    /// The homomorphism `c(g) = g_i` on `ℤᵏ`.
    pub fn coordinate(field: FieldSpec, rank: usize, i: usize) -> Self {
        let rule: GroupRule = Arc::new(move |g| match &g[0] {
            GroupElem::Lattice(a) => Scalar::from_int(&field, a[i]),
            GroupElem::Finite(_) => Scalar::zero(&field),
        });
        Self::new(format!("coordinate_{i}"), field, GroupData::Lattice(rank), 1, rule)
    }

    /// The degree-0 cochain with value 1.
    pub fn unit(field: FieldSpec, group: GroupData) -> Self {
        Self::new("unit", field, group, 0, Arc::new(move |_| Scalar::one(&field)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn value(&self, g: &[GroupElem]) -> Scalar {
        (self.rule)(g)
    }

    pub fn identity(&self) -> GroupElem {
        match &self.group {
            GroupData::Finite(g) => GroupElem::Finite(g.identity()),
            GroupData::Lattice(k) => GroupElem::Lattice(vec![0; *k]),
        }
    }

    pub fn mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        match (&self.group, a, b) {
            (GroupData::Finite(g), GroupElem::Finite(x), GroupElem::Finite(y)) => GroupElem::Finite(g.mul(*x, *y)),
            (_, GroupElem::Lattice(x), GroupElem::Lattice(y)) => GroupElem::Lattice(x.iter().zip(y).map(|(p, q)| p + q).collect()),
            _ => panic!("group element of the wrong kind"),
        }
    }

    pub fn product(&self, gs: &[GroupElem]) -> GroupElem {
        gs.iter().fold(self.identity(), |acc, g| self.mul(&acc, g))
    }

    pub fn label(&self, g: &GroupElem) -> String {
        match (&self.group, g) {
            (GroupData::Finite(grp), GroupElem::Finite(x)) => grp.label(*x),
            (_, GroupElem::Lattice(v)) => labels::lattice(v),
            _ => panic!("group element of the wrong kind"),
        }
    }

    pub fn parse(&self, label: &str) -> Result<GroupElem> {
        match &self.group {
            GroupData::Finite(_) => self.index.get(label).map(|&x| GroupElem::Finite(x)),
            GroupData::Lattice(k) => labels::parse_lattice(label, *k).map(GroupElem::Lattice),
        }
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Every group element, for finite groups.
    pub fn elements(&self) -> Option<Vec<GroupElem>> {
        match &self.group {
            GroupData::Finite(g) => Some((0..g.order()).map(GroupElem::Finite).collect()),
            GroupData::Lattice(_) => None,
        }
    }

    /// The group algebra carrying the associated cyclic cochain.
    pub fn carrier(&self) -> Result<CarrierRef> {
        Ok(match &self.group {
            GroupData::Finite(g) => Arc::new(group_algebra(self.field, g)?),
            GroupData::Lattice(k) => Arc::new(lattice_group_algebra(self.field, *k)?),
        })
    }

    /// `φ_c(g0, …, gn) = c(g1, …, gn)` if `g0 g1 ⋯ gn = e`, else 0.
    pub(crate) fn eval_cyclic(&self, args: &[&str]) -> Result<Scalar> {
        let gs: Vec<GroupElem> = args.iter().map(|l| self.parse(l)).collect::<Result<_>>()?;
        if self.product(&gs) == self.identity() {
            Ok(self.value(&gs[1..]))
        } else {
            Ok(Scalar::zero(&self.field))
        }
    }

    /// Group coboundary with trivial coefficients,
    /// `(δc)(g1,…,g_{n+1}) = c(g2,…) + Σ_{i=1}^{n} (−1)^i c(…, g_i g_{i+1}, …) + (−1)^{n+1} c(g1,…,gn)`.
    pub fn coboundary_value(&self, g: &[GroupElem]) -> Scalar {
        let n = self.degree;
        let mut acc = self.value(&g[1..]);
        for i in 1..=n {
            let mut t: Vec<GroupElem> = g[..i - 1].to_vec();
            t.push(self.mul(&g[i - 1], &g[i]));
            t.extend_from_slice(&g[i + 1..]);
            acc = &acc + &self.value(&t).mul_int(if i % 2 == 0 { 1 } else { -1 });
        }
        &acc + &self.value(&g[..n]).mul_int(if (n + 1) % 2 == 0 { 1 } else { -1 })
    }
}

/// Calls `f` on every `len`-tuple of `elems`.
fn tuples(elems: &[GroupElem], len: usize, mut f: impl FnMut(&[GroupElem]) -> Result<()>) -> Result<()> {
    let mut idx = vec![0usize; len];
    if elems.is_empty() && len > 0 {
        return Ok(());
    }
    loop {
        let t: Vec<GroupElem> = idx.iter().map(|&i| elems[i].clone()).collect();
        f(&t)?;
        let mut k = len;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The cyclic cocycle `φ_c` on the group algebra. Normalization
/// (`c = 0` when some `g_i = e` or when `g1⋯gn = e`) and `δc = 0` are checked
/// on the window (all elements of a finite group when `window` is `None`),
/// then `φ_c` itself is validated on the same window. In degree 0 the
/// normalization condition is vacuous.
pub fn group_cocycle_to_cyclic(c: &GroupCocycleData, window: Option<Vec<String>>) -> Result<Cochain> {
    let elems = match &window {
        Some(w) => w.iter().map(|l| c.parse(l)).collect::<Result<Vec<_>>>()?,
        None => c.elements().ok_or_else(|| Error::Invalid("an infinite group needs a window".into()))?,
    };
    let n = c.degree;
    let e = c.identity();
    let names = |g: &[GroupElem]| g.iter().map(|x| c.label(x)).collect::<Vec<_>>();
    if n > 0 {
        tuples(&elems, n, |g| {
            let degenerate = g.contains(&e) || c.product(g) == e;
            if degenerate && !c.value(g).is_zero() {
                return Err(Error::NotNormalized(names(g)));
            }
            Ok(())
        })?;
    }
    tuples(&elems, n + 1, |g| {
        if !c.coboundary_value(g).is_zero() {
            return Err(Error::NotAGroupCocycle(names(g)));
        }
        Ok(())
    })?;
    let phi = Cochain::rule(c.carrier()?, n, CochainRule::FromGroupCocycle(c.clone()));
    let labels = elems.iter().map(|g| c.label(g)).collect();
    validate_cyclic_cocycle(phi, Some(labels))
}

/// `{g : |g_i| ≤ r}` in `ℤᵏ` as labels.
pub fn lattice_window(rank: usize, r: i64) -> Vec<String> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|v: Vec<i64>| (-r..=r).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.iter().map(|v| labels::lattice(v)).collect()
}

/// The group `ℤ/m` as cocycle data, for finite examples.
pub fn cyclic_group(m: usize) -> GroupData {
    GroupData::Finite(FiniteGroup::cyclic(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn determinant_cocycle_on_z2() {
        let c = GroupCocycleData::determinant(Q);
        let phi = group_cocycle_to_cyclic(&c, Some(lattice_window(2, 1))).unwrap();
        assert!(phi.is_verified());
        // φ(g0, g1, g2) = c(g1, g2) with g0 = −(g1 + g2)
        let v = phi.eval(&["g:(-1,-1)", "g:(1,0)", "g:(0,1)"]).unwrap();
        assert_eq!(v, Scalar::one(&Q));
    }

    #[test]
    fn bilinear_product_is_not_normalized() {
        // c(g, h) = g₁h₂ satisfies the cocycle identity but c(g, −g) ≠ 0
        let rule: GroupRule = Arc::new(|g| match (&g[0], &g[1]) {
            (GroupElem::Lattice(a), GroupElem::Lattice(b)) => Scalar::from_int(&Q, a[0] * b[1]),
            _ => unreachable!(),
        });
        let c = GroupCocycleData::new("g1h2", Q, GroupData::Lattice(2), 2, rule);
        let g = [GroupElem::Lattice(vec![1, 2]), GroupElem::Lattice(vec![3, -1]), GroupElem::Lattice(vec![0, 5])];
        assert!(c.coboundary_value(&g).is_zero());
        assert!(matches!(group_cocycle_to_cyclic(&c, Some(lattice_window(2, 1))), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn winding_and_unit() {
        let c = GroupCocycleData::coordinate(Q, 1, 0);
        let phi = group_cocycle_to_cyclic(&c, Some(lattice_window(1, 3))).unwrap();
        assert_eq!(phi.eval(&["g:(-1)", "g:(1)"]).unwrap(), Scalar::one(&Q));
        assert_eq!(phi.eval(&["g:(0)", "g:(1)"]).unwrap(), Scalar::zero(&Q));
        let tr = group_cocycle_to_cyclic(&GroupCocycleData::unit(Q, cyclic_group(3)), None).unwrap();
        assert_eq!(tr.eval(&["g:0"]).unwrap(), Scalar::one(&Q));
        assert_eq!(tr.eval(&["g:1"]).unwrap(), Scalar::zero(&Q));
    }

    #[test]
    fn non_cocycle_rejected() {
        // c(g) = g² is not additive
        let rule: GroupRule = Arc::new(|g| match &g[0] {
            GroupElem::Lattice(a) => Scalar::from_int(&Q, a[0] * a[0]),
            _ => unreachable!(),
        });
        let c = GroupCocycleData::new("square", Q, GroupData::Lattice(1), 1, rule);
        assert!(matches!(group_cocycle_to_cyclic(&c, Some(lattice_window(1, 2))), Err(Error::NotAGroupCocycle(_))));
    }
}
