use std::collections::HashMap;

use super::FiniteGroup;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A finite groupoid. `compose[(a, b)]` is `a∘b`, defined exactly when
/// `source(a) = target(b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Groupoid {
    objects: Vec<String>,
    morphisms: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    identities: Vec<usize>,
    inverses: Vec<usize>,
}

/// Unvalidated groupoid data, by names.
#[derive(Clone, Debug, Default)]
pub struct GroupoidData {
    pub objects: Vec<String>,
    /// `(name, source, target)`.
    pub morphisms: Vec<(String, String, String)>,
    /// `(a, b, a∘b)`.
    pub compose: Vec<(String, String, String)>,
    /// `(object, identity morphism)`.
    pub identities: Vec<(String, String)>,
    /// `(morphism, inverse)`.
    pub inverses: Vec<(String, String)>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::NotAGroupoid(msg.into())
}

impl Groupoid {
    pub fn new(data: GroupoidData) -> Result<Self> {
        let obj = |o: &str| data.objects.iter().position(|x| x == o).ok_or_else(|| Error::UnknownLabel(o.into()));
        let names: Vec<String> = data.morphisms.iter().map(|m| m.0.clone()).collect();
        let mor = |m: &str| names.iter().position(|x| x == m).ok_or_else(|| Error::UnknownLabel(m.into()));
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateLabel(n.clone()));
            }
        }
        let mut source = Vec::new();
        let mut target = Vec::new();
        for (_, s, t) in &data.morphisms {
            source.push(obj(s)?);
            target.push(obj(t)?);
        }
        let mut compose = HashMap::new();
        for (a, b, c) in &data.compose {
            compose.insert((mor(a)?, mor(b)?), mor(c)?);
        }
        let mut identities = vec![usize::MAX; data.objects.len()];
        for (o, m) in &data.identities {
            identities[obj(o)?] = mor(m)?;
        }
        let mut inverses = vec![usize::MAX; names.len()];
        for (m, i) in &data.inverses {
            inverses[mor(m)?] = mor(i)?;
        }
        let g = Groupoid { objects: data.objects, morphisms: names, source, target, compose, identities, inverses };
        g.check()?;
        Ok(g)
    }

    fn check(&self) -> Result<()> {
        let n = self.morphisms.len();
        let name = |m: usize| &self.morphisms[m];
        for a in 0..n {
            for b in 0..n {
                let composable = self.source[a] == self.target[b];
                match (composable, self.compose.get(&(a, b))) {
                    (true, None) => return Err(bad(format!("{}∘{} missing", name(a), name(b)))),
                    (false, Some(_)) => return Err(bad(format!("{}∘{} defined but not composable", name(a), name(b)))),
                    (true, Some(&c)) if self.source[c] != self.source[b] || self.target[c] != self.target[a] => {
                        return Err(bad(format!("{}∘{} has the wrong endpoints", name(a), name(b))))
                    }
                    _ => {}
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let (Some(&ab), Some(&bc)) = (self.compose.get(&(a, b)), self.compose.get(&(b, c))) {
                        if self.compose.get(&(ab, c)) != self.compose.get(&(a, bc)) {
                            return Err(bad(format!("not associative at ({}, {}, {})", name(a), name(b), name(c))));
                        }
                    }
                }
            }
        }
        for (x, &id) in self.identities.iter().enumerate() {
            if id == usize::MAX || self.source[id] != x || self.target[id] != x {
                return Err(bad(format!("bad identity at object {}", self.objects[x])));
            }
            for g in 0..n {
                if (self.target[g] == x && self.compose[&(id, g)] != g) || (self.source[g] == x && self.compose[&(g, id)] != g) {
                    return Err(bad(format!("identity law fails for {}", name(g))));
                }
            }
        }
        for g in 0..n {
            let h = self.inverses[g];
            if h == usize::MAX
                || self.compose.get(&(g, h)) != Some(&self.identities[self.target[g]])
                || self.compose.get(&(h, g)) != Some(&self.identities[self.source[g]])
            {
                return Err(bad(format!("inverse law fails for {}", name(g))));
            }
        }
        Ok(())
    }

    fn from_parts(objects: Vec<String>, morphisms: Vec<(String, usize, usize)>, compose: impl Fn(usize, usize) -> usize) -> Self {
        let n = morphisms.len();
        let source: Vec<usize> = morphisms.iter().map(|m| m.1).collect();
        let target: Vec<usize> = morphisms.iter().map(|m| m.2).collect();
        let mut table = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if source[a] == target[b] {
                    table.insert((a, b), compose(a, b));
                }
            }
        }
        let identities =
            (0..objects.len()).map(|x| (0..n).find(|&g| source[g] == x && target[g] == x && table[&(g, g)] == g).expect("identity")).collect::<Vec<_>>();
        let inverses = (0..n)
            .map(|g| (0..n).find(|&h| table.get(&(g, h)) == Some(&identities[target[g]])).expect("inverse"))
            .collect();
        let g = Groupoid {
            objects,
            morphisms: morphisms.into_iter().map(|m| m.0).collect(),
            source,
            target,
            compose: table,
            identities,
            inverses,
        };
        g.check().expect("built-in groupoid satisfies the axioms");
        g
    }

    /// The pair groupoid on `n` objects: one morphism `(i,j)` from `j` to `i`.
    pub fn pairs(n: usize) -> Self {
        let objects = (1..=n).map(|i| i.to_string()).collect();
        let morphisms = (0..n * n).map(|k| (format!("m:({},{})", k / n + 1, k % n + 1), k % n, k / n)).collect();
        Self::from_parts(objects, morphisms, |a, b| (a / n) * n + b % n)
    }

    /// A group as a one-object groupoid.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let morphisms = (0..g.order()).map(|a| (format!("m:{}", g.name(a)), 0, 0)).collect();
        Self::from_parts(vec!["*".into()], morphisms, |a, b| g.mul(a, b))
    }

    /// Componentwise product; morphisms are named `a|b`.
    pub fn product(&self, other: &Groupoid) -> Self {
        let (n, m) = (self.morphisms.len(), other.morphisms.len());
        let k = other.objects.len();
        let mut objects = Vec::new();
        for x in &self.objects {
            for y in &other.objects {
                objects.push(format!("{x}|{y}"));
            }
        }
        let mut morphisms = Vec::new();
        for a in 0..n {
            for b in 0..m {
                let s = self.source[a] * k + other.source[b];
                let t = self.target[a] * k + other.target[b];
                morphisms.push((format!("{}|{}", self.morphisms[a], other.morphisms[b]), s, t));
            }
        }
        Self::from_parts(objects, morphisms, |x, y| self.compose[&(x / m, y / m)] * m + other.compose[&(x % m, y % m)])
    }

    /// The transitive groupoid on `n` objects with isotropy group `g`.
    pub fn transitive(n: usize, g: &FiniteGroup) -> Self {
        Self::pairs(n).product(&Self::from_group(g))
    }

    /// Disjoint union; objects and morphisms are tagged `s1:` / `s2:`.
    pub fn disjoint_union(&self, other: &Groupoid) -> Self {
        let (n, no) = (self.morphisms.len(), self.objects.len());
        let objects = self.objects.iter().map(|o| format!("s1:{o}")).chain(other.objects.iter().map(|o| format!("s2:{o}"))).collect();
        let mut morphisms: Vec<(String, usize, usize)> =
            (0..n).map(|a| (format!("s1:{}", self.morphisms[a]), self.source[a], self.target[a])).collect();
        morphisms.extend(
            (0..other.morphisms.len()).map(|b| (format!("s2:{}", other.morphisms[b]), other.source[b] + no, other.target[b] + no)),
        );
        Self::from_parts(objects, morphisms, |x, y| if x < n { self.compose[&(x, y)] } else { other.compose[&(x - n, y - n)] + n })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[String] {
        &self.morphisms
    }
}

/// The convolution algebra: `e_a e_b = e_{a∘b}` when composable, else 0;
/// the unit is the sum of the identities.
pub fn groupoid_algebra(field: FieldSpec, g: &Groupoid) -> Result<Algebra> {
    field.validate()?;
    let n = g.morphisms.len();
    let one = Scalar::one(&field);
    let table = (0..n * n).map(|k| g.compose.get(&(k / n, k % n)).map_or(Vec::new(), |&c| vec![(c, one.clone())])).collect();
    let mut unit: Vec<(usize, Scalar)> = g.identities.iter().map(|&i| (i, one.clone())).collect();
    unit.sort_by_key(|(i, _)| *i);
    Algebra::from_table(format!("{field}[groupoid:{n}]"), field, g.morphisms.clone(), unit, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_isomorphism, Carrier, Element};
    use crate::constructions::{direct_sum, matrix_algebra};
    use crate::linalg::SparseVec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn pair_groupoid_is_matrix_algebra() {
        let a = groupoid_algebra(Q, &Groupoid::pairs(2)).unwrap();
        let m = matrix_algebra(Q, 2).unwrap();
        // (i,j) ↦ E_{i,j}; both sides list their basis row-major.
        let one = Scalar::one(&Q);
        let images: Vec<SparseVec> = (0..4).map(|k| vec![(k, one.clone())]).collect();
        assert!(is_isomorphism(&a, &m, &images));
        assert_eq!(a.unit(), Element::basis(Q, "m:(1,1)").add(&Element::basis(Q, "m:(2,2)")));
    }

    #[test]
    fn isotropy_and_unions() {
        let g = Groupoid::transitive(2, &FiniteGroup::cyclic(2));
        let a = groupoid_algebra(Q, &g).unwrap();
        assert_eq!(a.dim(), 8);
        assert_eq!(a.commutator_quotient_dim(), 2);

        let (g1, g2) = (Groupoid::pairs(2), Groupoid::from_group(&FiniteGroup::cyclic(3)));
        let u = groupoid_algebra(Q, &g1.disjoint_union(&g2)).unwrap();
        let s = direct_sum(&groupoid_algebra(Q, &g1).unwrap(), &groupoid_algebra(Q, &g2).unwrap()).unwrap();
        assert_eq!(u.labels(), s.labels());
        assert_eq!(u.structure(), s.structure());
    }

    #[test]
    fn malformed_groupoid_rejected() {
        let s = |x: &str| x.to_string();
        let data = GroupoidData {
            objects: vec![s("x")],
            morphisms: vec![(s("id"), s("x"), s("x")), (s("g"), s("x"), s("x"))],
            compose: vec![(s("id"), s("id"), s("id")), (s("id"), s("g"), s("g")), (s("g"), s("id"), s("g"))],
            identities: vec![(s("x"), s("id"))],
            inverses: vec![(s("id"), s("id")), (s("g"), s("g"))],
        };
        assert!(matches!(Groupoid::new(data.clone()), Err(Error::NotAGroupoid(_))));
        let mut ok = data;
        ok.compose.push((s("g"), s("g"), s("id")));
        assert!(Groupoid::new(ok).is_ok());
    }
}
