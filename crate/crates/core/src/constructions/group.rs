use std::sync::Arc;

use crate::algebra::{labels, Algebra, BasedAlgebra, Element, LabelDomain, ProductRule};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A finite group by multiplication table, checked against the group
/// axioms on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroup {
    names: Vec<String>,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

/// A group given either by a finite table or as the lattice `ℤᵏ`.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupData {
    Finite(FiniteGroup),
    Lattice(usize),
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty element list".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::DuplicateLabel(a.clone()));
            }
        }
        if mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
            return Err(Error::NotAGroup("multiplication table is not n x n over the elements".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| mult[g][h] == identity && mult[h][g] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", names[g])))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, mult, identity, inverses })
    }

    /// `ℤ/n` on `0, …, n−1`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(names, mult).expect("cyclic group table")
    }

    /// The symmetric group on `{1, …, k}`; elements are named by their
    /// one-line notation, composition `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..k {
            let mut next = Vec::new();
            for p in &perms {
                for x in (0..k).filter(|x| !p.contains(x)) {
                    next.push([p.clone(), vec![x]].concat());
                }
            }
            perms = next;
        }
        let names: Vec<String> = perms.iter().map(|p| p.iter().map(|x| (x + 1).to_string()).collect()).collect();
        let pos = |q: &Vec<usize>| perms.iter().position(|p| p == q).expect("closed under composition");
        let mult = perms.iter().map(|s| perms.iter().map(|t| pos(&t.iter().map(|&i| s[i]).collect())).collect()).collect();
        Self::new(names, mult).expect("symmetric group table")
    }

    /// `G × H` with names `g,h`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order(), other.order());
        let mut names = Vec::with_capacity(n * m);
        for a in &self.names {
            for b in &other.names {
                names.push(format!("{a},{b}"));
            }
        }
        let mult = (0..n * m)
            .map(|x| (0..n * m).map(|y| self.mult[x / m][y / m] * m + other.mult[x % m][y % m]).collect())
            .collect();
        Self::new(names, mult).expect("product of groups")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mult[a][b] == self.mult[b][a]))
    }

    /// Basis label of `g` in the group algebra.
    pub fn label(&self, g: usize) -> String {
        labels::group_element(&self.names[g])
    }

    pub fn conjugacy_classes(&self) -> usize {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = 0;
        for g in 0..n {
            if seen[g] {
                continue;
            }
            classes += 1;
            for h in 0..n {
                seen[self.mul(self.mul(h, g), self.inverse(h))] = true;
            }
        }
        classes
    }
}

/// `F[G]` for a finite group: basis `g:name`, `e_g e_h = e_{gh}`.
pub fn group_algebra(field: FieldSpec, g: &FiniteGroup) -> Result<Algebra> {
    field.validate()?;
    let n = g.order();
    let one = Scalar::one(&field);
    let labels = (0..n).map(|a| g.label(a)).collect();
    let table = (0..n * n).map(|k| vec![(g.mul(k / n, k % n), one.clone())]).collect();
    Algebra::from_table(format!("{field}[G{n}]"), field, labels, vec![(g.identity(), one)], table)
}

/// `F[ℤᵏ]` as a based algebra on `g:(v1,…,vk)`.
pub fn lattice_group_algebra(field: FieldSpec, k: usize) -> Result<BasedAlgebra> {
    if k == 0 {
        return Err(Error::Invalid("lattice rank must be at least 1".into()));
    }
    field.validate()?;
    let rule: ProductRule = Arc::new(move |a, b| {
        let x = labels::parse_lattice(a, k).ok_or_else(|| Error::UnknownLabel(a.into()))?;
        let y = labels::parse_lattice(b, k).ok_or_else(|| Error::UnknownLabel(b.into()))?;
        let s: Vec<i64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        Ok(Element::basis(field, labels::lattice(&s)))
    });
    let unit = Element::basis(field, labels::lattice(&vec![0; k]));
    Ok(BasedAlgebra::new(format!("{field}[Z^{k}]"), field, LabelDomain::Lattice(k), unit, rule))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Carrier;

    #[test]
    fn small_groups() {
        let z2 = FiniteGroup::cyclic(2);
        let a = group_algebra(FieldSpec::Rationals, &z2).unwrap();
        let g = Element::basis(FieldSpec::Rationals, "g:1");
        assert_eq!(a.mul(&g, &g).unwrap(), a.unit());
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.conjugacy_classes(), 3);
        assert!(!group_algebra(FieldSpec::Rationals, &s3).unwrap().is_commutative());
    }

    #[test]
    fn bad_tables_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(matches!(FiniteGroup::new(names.clone(), vec![vec![0, 0], vec![0, 0]]), Err(Error::NotAGroup(_))));
        assert!(matches!(FiniteGroup::new(names, vec![vec![0, 1], vec![1, 1]]), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn laurent_monomials() {
        let a = lattice_group_algebra(FieldSpec::Rationals, 1).unwrap();
        let u = Element::basis(FieldSpec::Rationals, "g:(3)");
        let v = Element::basis(FieldSpec::Rationals, "g:(-3)");
        assert_eq!(a.mul(&u, &v).unwrap(), a.unit());
    }
}
