use std::sync::Arc;

use num_integer::Integer;

use crate::algebra::{labels, validate_derivation, validate_trace, Algebra, BasedAlgebra, Carrier, Derivation, Element, LabelDomain, ProductRule, Trace};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Label of `U^m V^n` in the finite Weyl torus.
pub fn uv_label(m: i64, n: i64) -> String {
    format!("UV:({m},{n})")
}

/// `ζ^k` for the primitive `q`-th root of unity in the Weyl torus field.
fn root_power(field: &FieldSpec, q: i64, k: i64) -> Scalar {
    match q {
        1 => Scalar::one(field),
        2 => Scalar::from_int(field, if k.rem_euclid(2) == 0 { 1 } else { -1 }),
        _ => Scalar::zeta_pow(field, k.rem_euclid(q)).expect("cyclotomic field"),
    }
}

/// The field of the Weyl torus with denominator `q`.
pub fn weyl_field(q: i64) -> FieldSpec {
    if q <= 2 {
        FieldSpec::Rationals
    } else {
        FieldSpec::Cyclotomic(q as u32)
    }
}

/// The rational rotation algebra at `θ = p/q`, made finite by
/// `U^q = V^q = 1`: basis `U^m V^n` with `0 ≤ m, n < q` and `VU = ζ^p UV`.
pub fn weyl_torus(p: i64, q: i64) -> Result<Algebra> {
    if q < 1 || p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let field = weyl_field(q);
    let d = (q * q) as usize;
    let idx = |m: i64, n: i64| (m.rem_euclid(q) * q + n.rem_euclid(q)) as usize;
    let labels = (0..q).flat_map(|m| (0..q).map(move |n| uv_label(m, n))).collect();
    let mut table = vec![Vec::new(); d * d];
    for m in 0..q {
        for n in 0..q {
            for r in 0..q {
                for s in 0..q {
                    // U^m V^n U^r V^s = ζ^{p n r} U^{m+r} V^{n+s}
                    table[idx(m, n) * d + idx(r, s)] = vec![(idx(m + r, n + s), root_power(&field, q, p * n * r))];
                }
            }
        }
    }
    Algebra::from_table(format!("weyl_torus({p},{q})"), field, labels, vec![(0, Scalar::one(&field))], table)
}

/// `τ(U^m V^n) = δ_{m0} δ_{n0}` on the finite Weyl torus.
pub fn weyl_trace(a: &Algebra) -> Result<Trace> {
    let f = a.field();
    validate_trace(a, Trace::table(f, [(uv_label(0, 0), Scalar::one(&f))]), None)
}

/// The polynomial noncommutative torus over `ℚ(t)` with its canonical
/// trace and the two basic derivations.
pub struct PolynomialTorus {
    pub algebra: Arc<BasedAlgebra>,
    pub tau: Trace,
    pub x1: Derivation,
    pub x2: Derivation,
}

/// Labels `g:(m,n)` with `|m|, |n| ≤ r`.
pub fn torus_window(r: i64) -> Vec<String> {
    (-r..=r).flat_map(|m| (-r..=r).map(move |n| labels::lattice(&[m, n]))).collect()
}

/// `(m,n)·(r,s) = t^{nr} (m+r, n+s)` on `ℤ²`, i.e. `VU = t·UV`.
pub fn polynomial_torus() -> Result<PolynomialTorus> {
    let field = FieldSpec::rational_functions();
    let t = Scalar::t(&field)?;
    let rule: ProductRule = Arc::new(move |a, b| {
        let x = labels::parse_lattice(a, 2).ok_or_else(|| Error::UnknownLabel(a.into()))?;
        let y = labels::parse_lattice(b, 2).ok_or_else(|| Error::UnknownLabel(b.into()))?;
        Ok(Element::term(labels::lattice(&[x[0] + y[0], x[1] + y[1]]), t.pow(x[1] * y[0])))
    });
    let unit = Element::basis(field, labels::lattice(&[0, 0]));
    let algebra = Arc::new(BasedAlgebra::new("polynomial_torus", field, LabelDomain::Lattice(2), unit, rule));

    let window = torus_window(2);
    let origin = labels::lattice(&[0, 0]);
    let tau = Trace::rule(field, move |l| if l == origin { Scalar::one(&field) } else { Scalar::zero(&field) });
    let tau = validate_trace(algebra.as_ref(), tau, Some(window.clone()))?;
    let grading = |k: usize| {
        Derivation::rule(field, move |l| {
            let v = labels::parse_lattice(l, 2).expect("torus label");
            Element::term(l.to_string(), Scalar::from_int(&field, v[k]))
        })
    };
    let x1 = validate_derivation(algebra.as_ref(), grading(0), Some(window.clone()))?;
    let x2 = validate_derivation(algebra.as_ref(), grading(1), Some(window))?;
    Ok(PolynomialTorus { algebra, tau, x1, x2 })
}

impl PolynomialTorus {
    pub fn u(&self, m: i64) -> Element {
        Element::basis(self.algebra.field(), labels::lattice(&[m, 0]))
    }

    pub fn v(&self, n: i64) -> Element {
        Element::basis(self.algebra.field(), labels::lattice(&[0, n]))
    }

    pub fn monomial(&self, m: i64, n: i64) -> Element {
        Element::basis(self.algebra.field(), labels::lattice(&[m, n]))
    }
}
