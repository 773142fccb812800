use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::{labels, BasedAlgebra, Carrier, Element, LabelDomain, ProductRule};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A rule `xy → Σ c·w` on a two-letter word.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lhs: (usize, usize),
    pub rhs: Vec<(Vec<usize>, Scalar)>,
}

type Combination = BTreeMap<Vec<usize>, Scalar>;

struct System {
    field: FieldSpec,
    gens: Vec<String>,
    rules: HashMap<(usize, usize), Vec<(Vec<usize>, Scalar)>>,
    fuel: usize,
}

impl System {
    fn leftmost_redex(&self, w: &[usize]) -> Option<usize> {
        (0..w.len().saturating_sub(1)).find(|&i| self.rules.contains_key(&(w[i], w[i + 1])))
    }

    /// Reduces `c·w` to normal form, rewriting the leftmost redex first.
    fn reduce(&self, w: Vec<usize>, c: Scalar) -> Result<Combination> {
        let mut done = Combination::new();
        let mut pending: Vec<(Vec<usize>, Scalar)> = vec![(w, c)];
        let mut steps = 0;
        while let Some((w, c)) = pending.pop() {
            match self.leftmost_redex(&w) {
                None => {
                    let s = match done.remove(&w) {
                        Some(x) => &x + &c,
                        None => c,
                    };
                    if !s.is_zero() {
                        done.insert(w, s);
                    }
                }
                Some(i) => {
                    steps += 1;
                    if steps > self.fuel {
                        return Err(Error::FuelExhausted { fuel: self.fuel, word: labels::word(&w, &self.gens) });
                    }
                    for (r, k) in &self.rules[&(w[i], w[i + 1])] {
                        let next = [&w[..i], &r[..], &w[i + 2..]].concat();
                        pending.push((next, &c * k));
                    }
                }
            }
        }
        Ok(done)
    }
}

/// The algebra `F⟨generators⟩/(rules)` on irreducible words, with
/// products reduced leftmost-first under a per-product step budget.
/// No confluence check is made; a non-terminating system surfaces as
/// [`Error::FuelExhausted`].
pub fn rewriting_algebra(
    name: impl Into<String>,
    field: FieldSpec,
    generators: Vec<String>,
    rules: Vec<RewriteRule>,
    fuel: usize,
) -> Result<BasedAlgebra> {
    field.validate()?;
    if generators.is_empty() {
        return Err(Error::Invalid("at least one generator is required".into()));
    }
    for (i, g) in generators.iter().enumerate() {
        if generators[..i].contains(g) || g.is_empty() || g.contains('.') {
            return Err(Error::Invalid(format!("bad generator name {g:?}")));
        }
    }
    let mut table = HashMap::new();
    for r in rules {
        let n = generators.len();
        if r.lhs.0 >= n || r.lhs.1 >= n || r.rhs.iter().any(|(w, c)| w.iter().any(|&x| x >= n) || c.field() != field) {
            return Err(Error::Invalid("rewrite rule mentions an unknown generator or field".into()));
        }
        if table.insert(r.lhs, r.rhs).is_some() {
            return Err(Error::Invalid("two rules share a left-hand side".into()));
        }
    }
    let sys = Arc::new(System { field, gens: generators.clone(), rules: table, fuel });
    let rule_sys = sys.clone();
    let rule: ProductRule = Arc::new(move |a, b| {
        let s = &rule_sys;
        let x = labels::parse_word(a, &s.gens).ok_or_else(|| Error::UnknownLabel(a.into()))?;
        let y = labels::parse_word(b, &s.gens).ok_or_else(|| Error::UnknownLabel(b.into()))?;
        let red = s.reduce([x, y].concat(), Scalar::one(&s.field))?;
        Element::from_terms(s.field, red.into_iter().map(|(w, c)| (labels::word(&w, &s.gens), c)))
    });
    let unit = Element::basis(field, labels::word(&[], &generators));
    let normal_sys = sys;
    Ok(BasedAlgebra::new(name, field, LabelDomain::Words(generators), unit, rule)
        .with_normal_forms(Arc::new(move |w| normal_sys.leftmost_redex(w).is_none())))
}

/// Parses a word given as generator names joined by `.` or, when every
/// generator is a single character, as a plain string.
pub fn parse_word_spec(spec: &str, gens: &[String]) -> Result<Vec<usize>> {
    labels::parse_word(&format!("w:{spec}"), gens).ok_or_else(|| Error::Parse(format!("cannot read word {spec:?}")))
}

/// The generator `g` as an element.
pub fn generator(alg: &BasedAlgebra, g: &str) -> Result<Element> {
    let LabelDomain::Words(gens) = alg.domain() else {
        return Err(Error::Invalid("not a word algebra".into()));
    };
    let i = gens.iter().position(|x| x == g).ok_or_else(|| Error::UnknownLabel(g.into()))?;
    let label = labels::word(&[i], gens);
    if !alg.contains(&label) {
        return Err(Error::Invalid(format!("generator {g} is itself reducible")));
    }
    Ok(Element::basis(alg.field(), label))
}

fn gens_of(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Coordinate algebra of the round 2-sphere over `ℚ(ζ₄)`: commuting
/// `x1, x2, x3` with `x3·x3 → 1 − x1·x1 − x2·x2`.
pub fn sphere_coordinates(fuel: usize) -> Result<BasedAlgebra> {
    let field = FieldSpec::Cyclotomic(4);
    let one = Scalar::one(&field);
    let minus = Scalar::from_int(&field, -1);
    let mut rules = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            rules.push(RewriteRule { lhs: (j, i), rhs: vec![(vec![i, j], one.clone())] });
        }
    }
    rules.push(RewriteRule {
        lhs: (2, 2),
        rhs: vec![(vec![], one.clone()), (vec![0, 0], minus.clone()), (vec![1, 1], minus)],
    });
    rewriting_algebra("sphere", field, gens_of(&["x1", "x2", "x3"]), rules, fuel)
}

/// The Podleś sphere over `ℚ(q)` on `a, a*, b`:
/// `ab → q⁻²ba`, `a*b → q²ba*`, `aa* → 1 − q⁻⁴b²`, `a*a → 1 − b²`.
pub fn podles_sphere(fuel: usize) -> Result<BasedAlgebra> {
    let field = FieldSpec::rational_functions();
    let q = Scalar::t(&field)?;
    let one = Scalar::one(&field);
    let minus = Scalar::from_int(&field, -1);
    let (a, astar, b) = (0, 1, 2);
    let rules = vec![
        RewriteRule { lhs: (a, b), rhs: vec![(vec![b, a], q.pow(-2))] },
        RewriteRule { lhs: (astar, b), rhs: vec![(vec![b, astar], q.pow(2))] },
        RewriteRule { lhs: (a, astar), rhs: vec![(vec![], one.clone()), (vec![b, b], -&q.pow(-4))] },
        RewriteRule { lhs: (astar, a), rhs: vec![(vec![], one), (vec![b, b], minus)] },
    ];
    rewriting_algebra("podles_sphere", field, gens_of(&["a", "a*", "b"]), rules, fuel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_algebra_concatenates() {
        let f = FieldSpec::Rationals;
        let alg = rewriting_algebra("free", f, gens_of(&["x", "y"]), vec![], 10).unwrap();
        let x = generator(&alg, "x").unwrap();
        let y = generator(&alg, "y").unwrap();
        assert_eq!(alg.mul(&x, &y).unwrap(), Element::basis(f, "w:xy"));
        assert_ne!(alg.mul(&x, &y).unwrap(), alg.mul(&y, &x).unwrap());
    }

    #[test]
    fn sphere_relation_reduces() {
        let s = sphere_coordinates(1000).unwrap();
        let x3 = generator(&s, "x3").unwrap();
        let sq = s.mul(&x3, &x3).unwrap();
        assert_eq!(sq.coeff("w:"), Scalar::one(&s.field()));
        assert_eq!(sq.coeff("w:x1.x1"), Scalar::from_int(&s.field(), -1));
        let x1 = generator(&s, "x1").unwrap();
        assert_eq!(s.mul(&x3, &x1).unwrap(), s.mul(&x1, &x3).unwrap());
    }

    #[test]
    fn fuel_exhaustion_is_reported() {
        let f = FieldSpec::Rationals;
        let one = Scalar::one(&f);
        // xy → yx and yx → xy loop forever.
        let rules = vec![
            RewriteRule { lhs: (0, 1), rhs: vec![(vec![1, 0], one.clone())] },
            RewriteRule { lhs: (1, 0), rhs: vec![(vec![0, 1], one)] },
        ];
        let alg = rewriting_algebra("loop", f, gens_of(&["x", "y"]), rules, 50).unwrap();
        let x = Element::basis(f, "w:x");
        let y = Element::basis(f, "w:y");
        assert!(matches!(alg.mul(&x, &y), Err(Error::FuelExhausted { fuel: 50, .. })));
    }
}
