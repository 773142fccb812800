use serde_json::{json, Value};

use super::fixtures::*;
use super::{show, Check, Provenance, Settings};
use crate::algebra::{is_isomorphism, Algebra};
use crate::chern::{
    chern_even, conjugation_invariance_test, dimension_function, mvn_check, pair_even, pair_odd, validate_cyclic_cocycle, AlgMatrix,
};
use crate::constructions::{build, torus_window, truncated_poly, weyl_trace};
use crate::engine::{
    bimodule_cochain_differential, cyclic_homology, hochschild_homology, morita_audit, operator_identity_audit, sbi_audit,
    two_cochain_vector, Engine, HcMethod,
};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

use Provenance::*;

/// A named example: what it builds and how to check it.
pub struct GalleryEntry {
    pub name: &'static str,
    /// One line on what the entry demonstrates.
    pub about: &'static str,
    /// Construction spec of the underlying algebra.
    pub spec: Value,
    pub run: fn(&Settings) -> Result<Vec<Check>>,
}

/// Every entry, sorted by name.
pub fn entries() -> Vec<GalleryEntry> {
    let spec = |n: &str| finite_spec(n).expect("finite gallery spec");
    let mut out = vec![
        GalleryEntry { name: "rationals", about: "HC of the ground field: 1 in even degrees, 0 in odd", spec: spec("rationals"), run: rationals },
        GalleryEntry { name: "matrix2", about: "Morita invariance: M2(Q) has the homology of Q; the matrix trace", spec: spec("matrix2"), run: matrix2 },
        GalleryEntry { name: "dual_numbers", about: "Q[x]/(x^2): HH periodic in degree >= 1, HC alternating, SBI exact", spec: spec("dual_numbers"), run: dual_numbers },
        GalleryEntry { name: "groupZ2", about: "Q[Z/2] = Q x Q by additivity", spec: spec("groupZ2"), run: group_z2 },
        GalleryEntry { name: "groupS3", about: "HH_0 of Q[S3] counts conjugacy classes", spec: spec("groupS3"), run: group_s3 },
        GalleryEntry { name: "pairs_groupoid_3", about: "pair groupoid on 3 objects: a copy of M3(Q)", spec: spec("pairs_groupoid_3"), run: pairs_groupoid },
        GalleryEntry { name: "groupoid_z2_pairs", about: "connected 2-object groupoid with Z/2 isotropy: M2(Q[Z/2])", spec: spec("groupoid_z2_pairs"), run: groupoid_z2 },
        GalleryEntry { name: "weyl_torus_1_3", about: "finite Weyl torus at a cube root of unity: tau pairs 1/3 with (1+U+U^2)/3", spec: spec("weyl_torus_1_3"), run: weyl },
        GalleryEntry { name: "polynomial_torus", about: "torus cocycles phi_0, phi_1, phi_2 from the action of X1, X2; odd pairing with U", spec: json!({"construct": "polynomial_torus"}), run: torus },
        GalleryEntry { name: "hopf_sphere", about: "Hopf projection e = (1+F)/2 over the sphere, F^2 = 1", spec: json!({"construct": "rewriting", "name": "sphere"}), run: hopf },
        GalleryEntry { name: "podles_sphere", about: "Podles projection e_q over Q(q)", spec: json!({"construct": "rewriting", "name": "podles_sphere"}), run: podles },
        GalleryEntry { name: "extension_x3", about: "square-zero extension of the dual numbers by f(x,x) = m is Q[x]/(x^3)", spec: spec("extension_x3"), run: extension },
        GalleryEntry { name: "winding_z", about: "group cocycle c(n) = n on Z gives the winding number pairing", spec: json!({"construct": "group", "lattice": 1}), run: winding },
        GalleryEntry { name: "conjugation_family", about: "<tr, u_t E11 u_t^-1> is constant in t; a non-trace functional is not", spec: spec("conjugation_family"), run: conjugation },
    ];
    out.sort_by_key(|e| e.name);
    out
}

pub(crate) fn hh(a: &Algebra, max_n: usize, s: &Settings) -> Result<Vec<usize>> {
    Ok(hochschild_homology(&Engine::with_cap(a, s.size_cap), max_n)?.dims_vec())
}

/// HC dimensions by the quotient route together with the number of other
/// routes that reproduced them.
pub(crate) fn hc(a: &Algebra, max_n: usize, s: &Settings) -> Result<(Vec<usize>, usize)> {
    let r = cyclic_homology(&Engine::with_cap(a, s.size_cap), max_n, HcMethod::Quotient)?;
    Ok((r.dims_vec(), r.cross_checked.len()))
}

fn hc_checks(a: &Algebra, max_n: usize, expected: &[usize], prov: Provenance, s: &Settings) -> Result<Vec<Check>> {
    let (dims, agreeing) = hc(a, max_n, s)?;
    Ok(vec![
        Check::equal(format!("HC_0..{max_n}"), prov, expected.to_vec(), dims),
        Check::equal("HC routes agreeing with the quotient complex", Trivial, 2, agreeing),
    ])
}

fn identities(a: &Algebra, max_n: usize, s: &Settings) -> Result<Check> {
    let audit = operator_identity_audit(&Engine::with_cap(a, s.size_cap), max_n)?;
    let failed: Vec<String> = audit.iter().filter(|c| !c.passed).map(|c| format!("{} @ {}", c.identity, c.degree)).collect();
    Ok(Check::equal(format!("operator identities up to degree {max_n}"), Literature, Vec::<String>::new(), failed))
}

fn rationals(s: &Settings) -> Result<Vec<Check>> {
    let a = finite("rationals")?;
    let mut out = hc_checks(&a, 6, &[1, 0, 1, 0, 1, 0, 1], Literature, s)?;
    out.push(Check::equal("HH_0..3", Trivial, vec![1, 0, 0, 0], hh(&a, 3, s)?));
    Ok(out)
}

fn matrix2(s: &Settings) -> Result<Vec<Check>> {
    let a = finite("matrix2")?;
    let mut out = vec![Check::equal("HH_0..3", Literature, vec![1, 0, 0, 0], hh(&a, 3, s)?)];
    out.extend(hc_checks(&a, 4, &[1, 0, 1, 0, 1], Literature, s)?);
    let m = morita_audit(2, &finite("rationals")?, 2, s.size_cap)?;
    out.push(Check::holds("Tr o i_* = id and HH(Q) = HH(M2(Q)) up to degree 2", Literature, m.passed));
    out.push(identities(&a, 3, s)?);
    let tr = matrix_trace(&a)?;
    out.push(Check::equal("<tr, E11>", Trivial, "1".to_string(), show(&pair_even(&tr, &e11(&a)?)?.value)));
    Ok(out)
}

fn dual_numbers(s: &Settings) -> Result<Vec<Check>> {
    let a = finite("dual_numbers")?;
    let mut out = vec![Check::equal("HH_0..4", Derived, vec![2, 1, 1, 1, 1], hh(&a, 4, s)?)];
    out.extend(hc_checks(&a, 4, &[2, 0, 2, 0, 2], Derived, s)?);
    let sbi = sbi_audit(&Engine::with_cap(&a, s.size_cap), 3)?;
    out.push(Check::holds("SBI sequence exact up to degree 3", Literature, sbi.exact));
    Ok(out)
}

fn group_z2(s: &Settings) -> Result<Vec<Check>> {
    let a = finite("groupZ2")?;
    let mut out = vec![Check::equal("HH_0..3", Derived, vec![2, 0, 0, 0], hh(&a, 3, s)?)];
    out.extend(hc_checks(&a, 4, &[2, 0, 2, 0, 2], Derived, s)?);
    Ok(out)
}

fn group_s3(s: &Settings) -> Result<Vec<Check>> {
    let a = finite("groupS3")?;
    let dims = hh(&a, 2, s)?;
    let classes = crate::constructions::FiniteGroup::symmetric(3).conjugacy_classes();
    Ok(vec![Check::equal("HH_0..2", Derived, vec![3, 0, 0], dims.clone()), Check::equal("HH_0 = number of conjugacy classes", Literature, classes, dims[0])])
}

fn pairs_groupoid(s: &Settings) -> Result<Vec<Check>> {
    let a = finite("pairs_groupoid_3")?;
    let mut out = vec![Check::equal("dimension", Trivial, 9, a.dim()), Check::equal("HH_0", Derived, 1, hh(&a, 0, s)?[0])];
    out.extend(hc_checks(&a, 2, &[1, 0, 1], Derived, s)?);
    Ok(out)
}

fn groupoid_z2(s: &Settings) -> Result<Vec<Check>> {
    let a = finite("groupoid_z2_pairs")?;
    let tensor = build(&json!({"construct": "matrix", "n": 2, "base": {"construct": "group", "cyclic": 2}}))?.into_finite()?;
    Ok(vec![
        Check::equal("dimension", Trivial, 8, a.dim()),
        Check::equal("HH_0", Derived, 2, hh(&a, 0, s)?[0]),
        Check::equal("HH_0..2 equal to those of M2(Q[Z/2])", Derived, hh(&tensor, 2, s)?, hh(&a, 2, s)?),
    ])
}

fn weyl(s: &Settings) -> Result<Vec<Check>> {
    let a = finite("weyl_torus_1_3")?;
    let tau = weyl_cocycle(&a)?;
    let e = weyl_projection(&a, 3)?;
    let third = "1/3".to_string();
    Ok(vec![
        Check::equal("<tau, (1+U+U^2)/3>", Derived, third.clone(), show(&pair_even(&tau, &e)?.value)),
        Check::equal("dim_tau((1+U+U^2)/3)", Derived, third, show(&dimension_function(weyl_trace(&a)?).apply(&e))),
        Check::equal("HH_0", Derived, 1, hh(&a, 0, s)?[0]),
    ])
}

fn torus(_: &Settings) -> Result<Vec<Check>> {
    let phi0 = torus_cocycle(0, 1)?;
    let phi1 = torus_cocycle(1, 1)?;
    let carrier = phi1.carrier().clone();
    let u = lattice_unit(&carrier, &[1, 0])?;
    let v = lattice_unit(&carrier, &[0, 1])?;
    let one = AlgMatrix::identity(carrier.clone(), 1).certify_idempotent()?;
    let stab = u.direct_sum(&AlgMatrix::identity(carrier.clone(), 1).certify_invertible(&AlgMatrix::identity(carrier.clone(), 1))?)?;
    let phi2 = torus_cocycle(2, 3);
    Ok(vec![
        Check::equal("<phi_0, 1>", Trivial, "1".to_string(), show(&pair_even(&phi0, &one)?.value)),
        Check::equal("<phi_1, U>", Derived, "1".to_string(), show(&pair_odd(&phi1, &u)?.value)),
        Check::equal("<phi_1, V>", Derived, "0".to_string(), show(&pair_odd(&phi1, &v)?.value)),
        Check::equal("<phi_1, diag(U, 1)>", Derived, "1".to_string(), show(&pair_odd(&phi1, &stab)?.value)),
        Check::holds("phi_2 cyclic and closed on |m|, |n| <= 3", Literature, phi2.is_ok()),
        Check::fails("phi_1 with flipped cyclic sign", Trivial, |e| matches!(e, Error::NotCyclic(_)), "NotCyclic", {
            validate_cyclic_cocycle(flipped_torus_cocycle(1)?, Some(torus_window(1)))
        }),
    ])
}

fn hopf(_: &Settings) -> Result<Vec<Check>> {
    let (s, big_f, e) = hopf_fixture()?;
    let id = AlgMatrix::identity(s.clone(), 2);
    let f2 = big_f.mul(&big_f)?;
    let e = e.certify_idempotent();
    let mut out = vec![Check::holds("F^2 = 1 over Q(zeta_4)", Literature, f2 == id), Check::holds("e^2 = e", Literature, e.is_ok())];
    if let Ok(e) = e {
        out.push(Check::holds("Tr e = 1", Derived, e.trace_element() == s.unit()));
        let ch = chern_even(&e, 1)?;
        out.push(Check::holds("Ch^2(e) is invariant under the cyclic operator", Trivial, ch.rotate() == ch));
    }
    Ok(out)
}

fn podles(_: &Settings) -> Result<Vec<Check>> {
    let (_, e) = podles_fixture()?;
    Ok(vec![Check::holds("e_q^2 = e_q over Q(q)", Literature, e.certify_idempotent().is_ok())])
}

fn extension(s: &Settings) -> Result<Vec<Check>> {
    let ext = finite("extension_x3")?;
    let cubic = truncated_poly(FieldSpec::Rationals, 3)?;
    let q1 = |i| vec![(i, Scalar::one(&FieldSpec::Rationals))];
    let (a, m, f) = extension_x3_data()?;
    let delta = bimodule_cochain_differential(&a, &m, 2, s.size_cap)?;
    Ok(vec![
        Check::holds("isomorphic to Q[x]/(x^3) via 1, x, m -> 1, x, x^2", Derived, is_isomorphism(&ext, &cubic, &[q1(0), q1(1), q1(2)])),
        Check::holds("delta f = 0 by the cochain differential", Derived, delta.apply(&two_cochain_vector(&a, &m, &f)).is_empty()),
        Check::equal("HH_0 (commutative)", Trivial, 3, hh(&ext, 0, s)?[0]),
    ])
}

fn winding(_: &Settings) -> Result<Vec<Check>> {
    let c = winding_cocycle(3)?;
    let carrier = c.carrier().clone();
    let val = |g: i64| -> Result<String> { Ok(show(&pair_odd(&c, &lattice_unit(&carrier, &[g])?)?.value)) };
    Ok(vec![
        Check::equal("<c, U>", Derived, "1".to_string(), val(1)?),
        Check::equal("<c, U^2>", Derived, "2".to_string(), val(2)?),
        Check::equal("<c, U^-1>", Derived, "-1".to_string(), val(-1)?),
    ])
}

fn conjugation(_: &Settings) -> Result<Vec<Check>> {
    let a = finite("conjugation_family")?;
    let u = conjugation_unitriangular(&a)?;
    let e = e11(&a)?;
    let v = conjugation_invariance_test(&matrix_trace(&a)?, &e, &u)?;
    let w = conjugation_invariance_test(&off_diagonal_functional(&a)?, &e, &u)?;
    let f = a.field();
    let minus_t = -&Scalar::t(&f)?;
    let g = u.clone();
    let w_inv = u.witness().ok_or(Error::NoCertificate)?;
    let mvn = mvn_check(&e, &g.mul(&e)?.mul(&w_inv)?, &e.mul(&w_inv)?, &g.mul(&e)?)?;
    Ok(vec![
        Check::equal("<tr, u_t E11 u_t^-1>", Literature, "1".to_string(), show(&v.value)),
        Check::holds("constant in t", Literature, v.passed),
        Check::equal("E12-coefficient functional on the family", Trivial, show(&minus_t), show(&w.value)),
        Check::holds("E11 and u_t E11 u_t^-1 are Murray-von Neumann equivalent", Trivial, mvn.equivalent),
    ])
}
