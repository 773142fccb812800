//! Named algebras, cocycles, idempotents and invertibles shared by the
//! gallery, the acceptance suite and the examples.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{labels, Algebra, Carrier, Element};
use crate::chern::{
    group_cocycle_to_cyclic, lattice_window, lie_action_to_cyclic, validate_cyclic_cocycle, AlgMatrix, CarrierRef, Cochain,
    GroupCocycleData,
};
use crate::constructions::{
    build, generator, podles_sphere, polynomial_torus, sphere_coordinates, torus_window, truncated_poly, BimoduleData, TwoCochain,
};
use crate::engine::wedge;
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar, Q};

/// Rewriting budget for the sphere fixtures.
pub const SPHERE_FUEL: usize = 10_000;

/// Construction specs of the finite gallery algebras, by entry name.
pub fn finite_specs() -> Vec<(&'static str, Value)> {
    vec![
        ("rationals", json!({"field": "Q", "labels": ["1"], "unit": {"1": "1"}, "structure": [{"i": "1", "j": "1", "k": "1", "c": "1"}]})),
        ("matrix2", json!({"construct": "matrix", "n": 2})),
        ("dual_numbers", json!({"construct": "truncated_poly", "m": 2})),
        ("groupZ2", json!({"construct": "group", "cyclic": 2})),
        ("groupS3", json!({"construct": "group", "symmetric": 3})),
        ("pairs_groupoid_3", json!({"construct": "groupoid", "pairs": 3})),
        ("groupoid_z2_pairs", json!({"construct": "groupoid", "objects": 2, "isotropy": {"cyclic": 2}})),
        ("weyl_torus_1_3", json!({"construct": "weyl_torus", "p": 1, "q": 3})),
        ("extension_x3", extension_x3_spec()),
        ("conjugation_family", json!({"construct": "matrix", "n": 2, "field": {"rational_function": "Q"}})),
    ]
}

/// Dual numbers extended by `ℚ·m` along `f(x, x) = m`, with `x` acting by
/// zero on `m`.
pub fn extension_x3_spec() -> Value {
    json!({
        "construct": "extension",
        "base": {"construct": "truncated_poly", "m": 2},
        "module": {"labels": ["m"], "left": {"1": [["1"]]}, "right": {"1": [["1"]]}},
        "cocycle": [{"a": "x", "b": "x", "value": {"m": "1"}}]
    })
}

pub fn finite_spec(name: &str) -> Result<Value> {
    finite_specs().into_iter().find(|(n, _)| *n == name).map(|(_, s)| s).ok_or_else(|| Error::UnknownEntry(name.into()))
}

/// A finite gallery algebra, named after its entry.
pub fn finite(name: &str) -> Result<Algebra> {
    Ok(build(&finite_spec(name)?)?.into_finite()?.with_name(name))
}

pub fn carrier(a: &Algebra) -> CarrierRef {
    Arc::new(a.clone())
}

fn q(field: &FieldSpec, n: i64, d: i64) -> Scalar {
    Scalar::from_q(field, Q::new(n, d))
}

/// `Σ E_ii` as a verified 0-cocycle on `M_k(F)`.
pub fn matrix_trace(a: &Algebra) -> Result<Cochain> {
    let f = a.field();
    let table = a
        .labels()
        .iter()
        .filter(|l| labels::parse_matrix_unit(l).is_some_and(|(i, j)| i == j))
        .map(|l| (vec![l.clone()], Scalar::one(&f)))
        .collect();
    validate_cyclic_cocycle(Cochain::explicit(carrier(a), 0, table)?, None)
}

/// The `E₁₂`-coefficient functional, which is not a trace.
pub fn off_diagonal_functional(a: &Algebra) -> Result<Cochain> {
    let f = a.field();
    Cochain::explicit(carrier(a), 0, BTreeMap::from([(vec![labels::matrix_unit(1, 2)], Scalar::one(&f))]))
}

/// `E₁₁` in `M₂(F)` as a certified 1×1 idempotent.
pub fn e11(a: &Algebra) -> Result<AlgMatrix> {
    AlgMatrix::element(carrier(a), Element::basis(a.field(), labels::matrix_unit(1, 1)))?.certify_idempotent()
}

/// `u_t = 1 + tE₁₂` over `M₂(ℚ(t))` with witness `1 − tE₁₂`.
pub fn conjugation_unitriangular(a: &Algebra) -> Result<AlgMatrix> {
    let f = a.field();
    let t = Scalar::t(&f)?;
    let e12 = Element::basis(f, labels::matrix_unit(1, 2)).scale(&t);
    let u = AlgMatrix::element(carrier(a), a.unit().add(&e12))?;
    let w = AlgMatrix::element(carrier(a), a.unit().sub(&e12))?;
    u.certify_invertible(&w)
}

/// `(1 + U + ⋯ + U^{q−1})/q` on the Weyl torus `weyl_torus(p, q)`.
pub fn weyl_projection(a: &Algebra, order: i64) -> Result<AlgMatrix> {
    let f = a.field();
    let mut x = Element::zero(f);
    for m in 0..order {
        x.add_term(crate::constructions::uv_label(m, 0), q(&f, 1, order));
    }
    AlgMatrix::element(carrier(a), x)?.certify_idempotent()
}

/// The canonical trace on a Weyl torus as a verified 0-cocycle.
pub fn weyl_cocycle(a: &Algebra) -> Result<Cochain> {
    validate_cyclic_cocycle(Cochain::from_trace(carrier(a), crate::constructions::weyl_trace(a)?), None)
}

/// The torus cocycle `φ_n` (`n ≤ 2`) from the action of `X₁, X₂` on the
/// polynomial torus, validated on lattice radius `radius`.
pub fn torus_cocycle(n: usize, radius: i64) -> Result<Cochain> {
    let t = polynomial_torus()?;
    let f = t.algebra.field();
    let c = match n {
        0 => vec![(0, Scalar::one(&f))],
        1 => wedge(2, &[0], &f),
        2 => wedge(2, &[0, 1], &f),
        _ => return Err(Error::Invalid("the torus carries cocycles of degree 0, 1 and 2".into())),
    };
    let window = torus_window(radius);
    let phi = lie_action_to_cyclic(t.algebra.clone(), t.tau, vec![t.x1, t.x2], c, n, Some(window.clone()))?;
    validate_cyclic_cocycle(phi, Some(window))
}

/// `φ₁` with the sign of every rotated value flipped: an explicit table on
/// radius `radius` with `ψ(a₁, a₀) = +ψ(a₀, a₁)` where `φ₁` has `−`.
pub fn flipped_torus_cocycle(radius: i64) -> Result<Cochain> {
    let phi = torus_cocycle(1, radius)?;
    let window = torus_window(radius);
    let mut table = BTreeMap::new();
    for a in &window {
        for b in &window {
            let v = phi.eval(&[a, b])?;
            if !v.is_zero() {
                table.insert(vec![a.clone(), b.clone()], if a <= b { v } else { -&v });
            }
        }
    }
    Cochain::explicit(phi.carrier().clone(), 1, table)
}

/// The lattice basis element `g` of a based group algebra.
pub fn lattice_element(carrier: &CarrierRef, g: &[i64]) -> Element {
    Element::basis(carrier.field(), labels::lattice(g))
}

/// `g` as a certified invertible 1×1 matrix with witness `g⁻¹`.
pub fn lattice_unit(carrier: &CarrierRef, g: &[i64]) -> Result<AlgMatrix> {
    let inv: Vec<i64> = g.iter().map(|x| -x).collect();
    let u = AlgMatrix::element(carrier.clone(), lattice_element(carrier, g))?;
    let w = AlgMatrix::element(carrier.clone(), lattice_element(carrier, &inv))?;
    u.certify_invertible(&w)
}

/// The winding cocycle `c(n) = n` on `ℤ`, as a cyclic 1-cocycle on `ℚ[ℤ]`
/// verified on radius `radius`.
pub fn winding_cocycle(radius: i64) -> Result<Cochain> {
    group_cocycle_to_cyclic(&GroupCocycleData::coordinate(FieldSpec::Rationals, 1, 0), Some(lattice_window(1, radius)))
}

fn matrix2(carrier: &CarrierRef, m: [[&Element; 2]; 2]) -> Result<AlgMatrix> {
    AlgMatrix::new(carrier.clone(), m.iter().map(|r| r.iter().map(|x| (*x).clone()).collect()).collect())
}

/// The sphere algebra with `F = [[x3, x1 + i x2], [x1 − i x2, −x3]]` and
/// `e = (1 + F)/2` (uncertified).
pub fn hopf_fixture() -> Result<(CarrierRef, AlgMatrix, AlgMatrix)> {
    let alg = sphere_coordinates(SPHERE_FUEL)?;
    let (x1, x2, x3) = (generator(&alg, "x1")?, generator(&alg, "x2")?, generator(&alg, "x3")?);
    let s: CarrierRef = Arc::new(alg);
    let f = s.field();
    let i = Scalar::zeta_pow(&f, 1)?;
    let (p, m) = (x1.add(&x2.scale(&i)), x1.sub(&x2.scale(&i)));
    let big_f = matrix2(&s, [[&x3, &p], [&m, &x3.neg()]])?;
    let half = q(&f, 1, 2);
    let one = s.unit();
    let e = matrix2(&s, [[&one.add(&x3).scale(&half), &p.scale(&half)], [&m.scale(&half), &one.sub(&x3).scale(&half)]])?;
    Ok((s, big_f, e))
}

/// The Podleś sphere and `e_q = ½[[1 + q⁻²b, q·a], [q⁻¹·a*, 1 − b]]`
/// (uncertified).
pub fn podles_fixture() -> Result<(CarrierRef, AlgMatrix)> {
    let alg = podles_sphere(SPHERE_FUEL)?;
    let (a, astar, b) = (generator(&alg, "a")?, generator(&alg, "a*")?, generator(&alg, "b")?);
    let s: CarrierRef = Arc::new(alg);
    let f = s.field();
    let qv = Scalar::t(&f)?;
    let half = q(&f, 1, 2);
    let one = s.unit();
    let e = matrix2(
        &s,
        [
            [&one.add(&b.scale(&qv.pow(-2))).scale(&half), &a.scale(&(&qv * &half))],
            [&astar.scale(&(&qv.pow(-1) * &half)), &one.sub(&b).scale(&half)],
        ],
    )?;
    Ok((s, e))
}

/// The data of the `extension_x3` construction, for independent checks.
pub fn extension_x3_data() -> Result<(Algebra, BimoduleData, TwoCochain)> {
    let a = truncated_poly(FieldSpec::Rationals, 2)?;
    let f = a.field();
    let m = BimoduleData::augmentation(&a, vec!["m".into()], |i| Scalar::from_int(&f, i64::from(i == 0)));
    let cocycle = TwoCochain { values: vec![vec![], vec![], vec![], vec![(0, Scalar::one(&f))]] };
    Ok((a, m, cocycle))
}
