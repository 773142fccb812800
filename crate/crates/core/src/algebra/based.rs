use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use super::{labels, Carrier, Element};
use crate::error::{Error, Result};
use crate::scalar::FieldSpec;

pub type ProductRule = Arc<dyn Fn(&str, &str) -> Result<Element> + Send + Sync>;

/// The (possibly infinite) set of basis labels of a based algebra.
#[derive(Clone, Debug, PartialEq)]
pub enum LabelDomain {
    Finite(Vec<String>),
    /// `g:(v1,...,vk)` for all of ℤᵏ.
    Lattice(usize),
    /// Words `w:...` over the named generators, restricted to those the
    /// given predicate accepts (normal forms of a rewriting system).
    Words(Vec<String>),
}

/// Outcome of the lazy associativity audit.
#[derive(Clone, Debug, PartialEq)]
pub struct AssocAudit {
    pub triples_checked: usize,
    pub failure: Option<(String, String, String)>,
}

/// An algebra on a labelled basis with a computable product rule.
///
/// Products are cached; the cache doubles as the log of queried pairs that
/// [`BasedAlgebra::audit_associativity`] checks.
pub struct BasedAlgebra {
    name: String,
    field: FieldSpec,
    domain: LabelDomain,
    rule: ProductRule,
    unit: Element,
    normal: Option<Arc<dyn Fn(&[usize]) -> bool + Send + Sync>>,
    log: Mutex<HashMap<(String, String), Element>>,
}

impl std::fmt::Debug for BasedAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BasedAlgebra").field("name", &self.name).field("field", &self.field).field("domain", &self.domain).finish()
    }
}

impl BasedAlgebra {
    pub fn new(name: impl Into<String>, field: FieldSpec, domain: LabelDomain, unit: Element, rule: ProductRule) -> Self {
        BasedAlgebra { name: name.into(), field, domain, rule, unit, normal: None, log: Mutex::new(HashMap::new()) }
    }

    /// Restricts a word domain to the words `accept` admits.
    pub fn with_normal_forms(mut self, accept: Arc<dyn Fn(&[usize]) -> bool + Send + Sync>) -> Self {
        self.normal = Some(accept);
        self
    }

    pub fn domain(&self) -> &LabelDomain {
        &self.domain
    }

    /// Number of distinct basis pairs multiplied so far.
    pub fn queried_pairs(&self) -> usize {
        self.log.lock().expect("product log poisoned").len()
    }

    /// Checks `(ab)c = a(bc)` for every triple where both `(a, b)` and
    /// `(b, c)` have been queried, at most `limit` triples.
    pub fn audit_associativity(&self, limit: usize) -> Result<AssocAudit> {
        let pairs: Vec<(String, String)> = {
            let log = self.log.lock().expect("product log poisoned");
            let mut p: Vec<_> = log.keys().cloned().collect();
            p.sort();
            p
        };
        let mut by_first: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
        for (a, b) in &pairs {
            by_first.entry(a.as_str()).or_default().insert(b.as_str());
        }
        let mut checked = 0;
        for (a, b) in &pairs {
            let Some(cs) = by_first.get(b.as_str()) else { continue };
            for c in cs {
                if checked >= limit {
                    return Ok(AssocAudit { triples_checked: checked, failure: None });
                }
                let (x, y, z) = (Element::basis(self.field, a.clone()), Element::basis(self.field, b.clone()), Element::basis(self.field, *c));
                let lhs = self.mul(&self.mul(&x, &y)?, &z)?;
                let rhs = self.mul(&x, &self.mul(&y, &z)?)?;
                checked += 1;
                if lhs != rhs {
                    return Ok(AssocAudit { triples_checked: checked, failure: Some((a.clone(), b.clone(), c.to_string())) });
                }
            }
        }
        Ok(AssocAudit { triples_checked: checked, failure: None })
    }
}

impl Carrier for BasedAlgebra {
    fn name(&self) -> &str {
        &self.name
    }

    fn field(&self) -> FieldSpec {
        self.field
    }

    fn unit(&self) -> Element {
        self.unit.clone()
    }

    fn contains(&self, label: &str) -> bool {
        match &self.domain {
            LabelDomain::Finite(ls) => ls.iter().any(|l| l == label),
            LabelDomain::Lattice(k) => labels::parse_lattice(label, *k).is_some(),
            LabelDomain::Words(gens) => match labels::parse_word(label, gens) {
                Some(w) => self.normal.as_ref().is_none_or(|accept| accept(&w)),
                None => false,
            },
        }
    }

    fn basis_product(&self, a: &str, b: &str) -> Result<Element> {
        let key = (a.to_string(), b.to_string());
        if let Some(p) = self.log.lock().expect("product log poisoned").get(&key) {
            return Ok(p.clone());
        }
        for l in [a, b] {
            if !self.contains(l) {
                return Err(Error::CarrierMismatch(format!("{l} is not a basis label of {}", self.name)));
            }
        }
        let p = (self.rule)(a, b)?;
        self.log.lock().expect("product log poisoned").insert(key, p.clone());
        Ok(p)
    }

    fn finite_labels(&self) -> Option<&[String]> {
        match &self.domain {
            LabelDomain::Finite(ls) => Some(ls),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn laurent() -> BasedAlgebra {
        let f = FieldSpec::Rationals;
        let rule: ProductRule = Arc::new(move |a, b| {
            let x = labels::parse_lattice(a, 1).unwrap()[0];
            let y = labels::parse_lattice(b, 1).unwrap()[0];
            Ok(Element::basis(f, labels::lattice(&[x + y])))
        });
        BasedAlgebra::new("Q[Z]", f, LabelDomain::Lattice(1), Element::basis(f, labels::lattice(&[0])), rule)
    }

    #[test]
    fn products_are_logged_and_audited() {
        let a = laurent();
        let u = Element::basis(a.field(), labels::lattice(&[1]));
        let v = Element::basis(a.field(), labels::lattice(&[-1]));
        assert_eq!(a.mul(&u, &v).unwrap(), a.unit());
        a.mul(&v, &u).unwrap();
        assert_eq!(a.queried_pairs(), 2);
        let audit = a.audit_associativity(100).unwrap();
        assert_eq!(audit.failure, None);
        assert_eq!(audit.triples_checked, 2);
    }

    #[test]
    fn broken_rule_is_caught_by_audit() {
        let f = FieldSpec::Rationals;
        // e_x e_y = e_{x+y} scaled by 2 when x = 1: not associative.
        let rule: ProductRule = Arc::new(move |a, b| {
            let x = labels::parse_lattice(a, 1).unwrap()[0];
            let y = labels::parse_lattice(b, 1).unwrap()[0];
            let c = if x == 1 && y != 0 { 2 } else { 1 };
            Ok(Element::term(labels::lattice(&[x + y]), Scalar::from_int(&f, c)))
        });
        let a = BasedAlgebra::new("bad", f, LabelDomain::Lattice(1), Element::basis(f, labels::lattice(&[0])), rule);
        let u = Element::basis(f, labels::lattice(&[1]));
        a.mul(&u, &u).unwrap();
        assert!(a.audit_associativity(100).unwrap().failure.is_some());
    }

    #[test]
    fn foreign_labels_rejected() {
        let a = laurent();
        assert!(matches!(a.basis_product("g:(1,2)", "g:(0)"), Err(Error::CarrierMismatch(_))));
    }
}
