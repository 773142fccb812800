//! The acceptance suite: thirteen numbered criteria, each a list of checks
//! with provenance. `hochcyc gallery --all` runs exactly this.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::entries::{hc, hh};
use super::fixtures::*;
use super::{show, Check, Outcome, Provenance, Settings};
use crate::algebra::{Algebra, Element};
use crate::chern::{
    chern_even, check_cyclic, conjugation_invariance_test, mvn_check, pair_even, pair_odd, AlgMatrix, CarrierRef, Cochain,
};
use crate::constructions::{build, extension_from_2cocycle, truncated_poly, BimoduleData, TwoCochain};
use crate::engine::{
    bimodule_cochain_differential, hochschild_cohomology, operator_identity_audit, sbi_audit, two_cochain_vector, Coefficients,
    Engine,
};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

use Provenance::*;

/// Seed of every random draw in criterion 13.
pub const SEED: u64 = 0x5eed_c0c1;

pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub run: fn(&Settings) -> Result<Vec<Check>>,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "HC of Q in degrees 0-6 by three routes", run: c1 },
        Criterion { id: 2, title: "M2(Q): HH and HC equal those of Q", run: c2 },
        Criterion { id: 3, title: "dual numbers: HH and HC", run: c3 },
        Criterion { id: 4, title: "Q[Z/2]: HH and HC", run: c4 },
        Criterion { id: 5, title: "Q[S3]: HH_0 counts conjugacy classes", run: c5 },
        Criterion { id: 6, title: "operator identities on every finite gallery algebra", run: c6 },
        Criterion { id: 7, title: "SBI sequence exact", run: c7 },
        Criterion { id: 8, title: "duality H^n(A, A*) = H_n(A, A)", run: c8 },
        Criterion { id: 9, title: "pairings", run: c9 },
        Criterion { id: 10, title: "conjugation invariance over Q(t)", run: c10 },
        Criterion { id: 11, title: "Hopf and Podles idempotents", run: c11 },
        Criterion { id: 12, title: "groupoid algebras", run: c12 },
        Criterion { id: 13, title: "property checks: coboundary annihilation, MvN invariance, extensions", run: c13 },
    ]
}

/// Runs every criterion in order.
pub fn run_all(settings: &Settings) -> Vec<Outcome> {
    criteria().iter().map(|c| run_one(c, settings)).collect()
}

pub fn run_one(c: &Criterion, settings: &Settings) -> Outcome {
    Outcome::run(&format!("{:02} {}", c.id, c.title), || (c.run)(settings))
}

fn within(what: &str, budget: Duration, start: Instant) -> Check {
    let took = start.elapsed();
    Check { what: format!("{what} within {} s", budget.as_secs()), provenance: Trivial, expected: format!("<= {budget:?}"), actual: format!("{took:?}"), passed: took <= budget }
}

fn all_routes(what: &str, a: &Algebra, max_n: usize, expected: &[usize], prov: Provenance, s: &Settings) -> Result<Vec<Check>> {
    let (dims, agreeing) = hc(a, max_n, s)?;
    Ok(vec![Check::equal(what, prov, expected.to_vec(), dims), Check::equal(format!("{what}: routes agreeing"), Trivial, 2, agreeing)])
}

fn c1(s: &Settings) -> Result<Vec<Check>> {
    let start = Instant::now();
    let mut out = all_routes("HC_0..6(Q)", &finite("rationals")?, 6, &[1, 0, 1, 0, 1, 0, 1], Literature, s)?;
    out.push(within("HC of Q", Duration::from_secs(1), start));
    Ok(out)
}

fn c2(s: &Settings) -> Result<Vec<Check>> {
    let start = Instant::now();
    let (q, m2) = (finite("rationals")?, finite("matrix2")?);
    let mut out = vec![Check::equal("HH_0..3(M2)", Literature, vec![1, 0, 0, 0], hh(&m2, 3, s)?)];
    out.extend(all_routes("HC_0..4(M2)", &m2, 4, &[1, 0, 1, 0, 1], Literature, s)?);
    out.push(Check::equal("HH_0..3(M2) = HH_0..3(Q)", Literature, hh(&q, 3, s)?, hh(&m2, 3, s)?));
    out.push(Check::equal("HC_0..4(M2) = HC_0..4(Q)", Literature, hc(&q, 4, s)?.0, hc(&m2, 4, s)?.0));
    out.push(within("M2(Q)", Duration::from_secs(60), start));
    Ok(out)
}

fn c3(s: &Settings) -> Result<Vec<Check>> {
    let start = Instant::now();
    let a = finite("dual_numbers")?;
    let mut out = vec![Check::equal("HH_0..4", Derived, vec![2, 1, 1, 1, 1], hh(&a, 4, s)?)];
    out.extend(all_routes("HC_0..4", &a, 4, &[2, 0, 2, 0, 2], Derived, s)?);
    out.push(within("dual numbers", Duration::from_secs(60), start));
    Ok(out)
}

fn c4(s: &Settings) -> Result<Vec<Check>> {
    let start = Instant::now();
    let a = finite("groupZ2")?;
    let mut out = vec![Check::equal("HH_0..3", Derived, vec![2, 0, 0, 0], hh(&a, 3, s)?)];
    out.extend(all_routes("HC_0..4", &a, 4, &[2, 0, 2, 0, 2], Derived, s)?);
    out.push(within("Q[Z/2]", Duration::from_secs(60), start));
    Ok(out)
}

fn c5(s: &Settings) -> Result<Vec<Check>> {
    let start = Instant::now();
    let a = finite("groupS3")?;
    let mut out = vec![Check::equal("HH_0..2", Derived, vec![3, 0, 0], hh(&a, 2, s)?)];
    match hh(&a, 3, s) {
        Ok(d) => out.push(Check::equal("HH_3 (semisimple)", Derived, 0, d[3])),
        Err(Error::DegreeTooLarge { .. }) => {}
        Err(e) => return Err(e),
    }
    out.push(within("Q[S3]", Duration::from_secs(300), start));
    Ok(out)
}

fn c6(s: &Settings) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, _) in finite_specs() {
        let a = finite(name)?;
        let max_n = if a.dim() == 6 { 3 } else { 4 };
        let audit = operator_identity_audit(&Engine::with_cap(&a, s.size_cap), max_n)?;
        let failed: Vec<String> = audit.iter().filter(|c| !c.passed).map(|c| format!("{} @ {}", c.identity, c.degree)).collect();
        out.push(Check::equal(format!("{name}: identities up to degree {max_n}"), Literature, Vec::<String>::new(), failed));
    }
    Ok(out)
}

fn c7(s: &Settings) -> Result<Vec<Check>> {
    ["rationals", "matrix2", "dual_numbers", "groupZ2"]
        .iter()
        .map(|n| Ok(Check::holds(format!("{n}: SBI exact up to degree 3"), Literature, sbi_audit(&Engine::with_cap(&finite(n)?, s.size_cap), 3)?.exact)))
        .collect()
}

fn c8(s: &Settings) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, _) in finite_specs() {
        let a = finite(name)?;
        let eng = Engine::with_cap(&a, s.size_cap);
        let co = hochschild_cohomology(&eng, Coefficients::Dual, 3)?.dims_vec();
        out.push(Check::equal(format!("{name}: dim H^n(A, A*) = dim HH_n, n <= 3"), Literature, hh(&a, 3, s)?, co));
    }
    Ok(out)
}

fn c9(_: &Settings) -> Result<Vec<Check>> {
    let w = finite("weyl_torus_1_3")?;
    let phi1 = torus_cocycle(1, 1)?;
    let u = lattice_unit(phi1.carrier(), &[1, 0])?;
    let wind = winding_cocycle(2)?;
    let wu = lattice_unit(wind.carrier(), &[1])?;
    let m2 = finite("matrix2")?;
    Ok(vec![
        Check::equal("<tau, (1+U+U^2)/3> on weyl_torus(1,3)", Derived, "1/3".to_string(), show(&pair_even(&weyl_cocycle(&w)?, &weyl_projection(&w, 3)?)?.value)),
        Check::equal("<phi_1, U> on the polynomial torus", Derived, "1".to_string(), show(&pair_odd(&phi1, &u)?.value)),
        Check::equal("winding pairing on Q[Z]", Derived, "1".to_string(), show(&pair_odd(&wind, &wu)?.value)),
        Check::equal("<tr, E11> on M2(Q)", Trivial, "1".to_string(), show(&pair_even(&matrix_trace(&m2)?, &e11(&m2)?)?.value)),
    ])
}

fn c10(_: &Settings) -> Result<Vec<Check>> {
    let a = finite("conjugation_family")?;
    let v = conjugation_invariance_test(&matrix_trace(&a)?, &e11(&a)?, &conjugation_unitriangular(&a)?)?;
    Ok(vec![
        Check::equal("<tr, u_t E11 u_t^-1>", Literature, "1".to_string(), show(&v.value)),
        Check::equal("d/dt", Literature, "0".to_string(), show(&v.derivative)),
        Check::holds("constant and equal to <tr, E11>", Literature, v.passed),
    ])
}

fn c11(_: &Settings) -> Result<Vec<Check>> {
    let (_, _, e) = hopf_fixture()?;
    let (_, eq) = podles_fixture()?;
    Ok(vec![
        Check::holds("Hopf e^2 = e over Q(zeta_4)", Literature, e.certify_idempotent().is_ok()),
        Check::holds("Podles e_q^2 = e_q over Q(q)", Literature, eq.certify_idempotent().is_ok()),
    ])
}

fn c12(s: &Settings) -> Result<Vec<Check>> {
    let p = finite("pairs_groupoid_3")?;
    let g = finite("groupoid_z2_pairs")?;
    let tensor = build(&json!({"construct": "matrix", "n": 2, "base": {"construct": "group", "cyclic": 2}}))?.into_finite()?;
    let mut out = vec![Check::equal("pairs groupoid: dimension", Trivial, 9, p.dim()), Check::equal("pairs groupoid: HH_0", Derived, 1, hh(&p, 0, s)?[0])];
    out.extend(all_routes("pairs groupoid: HC_0..2", &p, 2, &[1, 0, 1], Derived, s)?);
    out.push(Check::equal("Z/2 groupoid: HH_0", Derived, 2, hh(&g, 0, s)?[0]));
    out.push(Check::equal("Z/2 groupoid: HH_0 = HH_0(Q[Z/2] (x) M2)", Derived, hh(&tensor, 0, s)?[0], hh(&g, 0, s)?[0]));
    Ok(out)
}

fn small_int(rng: &mut ChaCha8Rng, f: &FieldSpec) -> Scalar {
    Scalar::from_int(f, rng.gen_range(-3..=3))
}

/// Cyclic symmetrization `Σ_k ε^k ψ∘rot^k` with `ε = (−1)^m`, where
/// `rot(a₀,…,a_m) = (a_m, a₀, …, a_{m−1})`.
fn random_cyclic(carrier: &CarrierRef, degree: usize, rng: &mut ChaCha8Rng) -> Result<Cochain> {
    let f = carrier.field();
    let d = carrier.finite_labels().map_or(0, <[String]>::len);
    let raw: Vec<Scalar> = (0..d.pow(degree as u32 + 1)).map(|_| small_int(rng, &f)).collect();
    let idx = |t: &[usize]| t.iter().fold(0, |acc, &x| acc * d + x);
    Cochain::dense_from(carrier.clone(), degree, |t| {
        let mut acc = Scalar::zero(&f);
        let mut cur = t.to_vec();
        for k in 0..=degree {
            let sign = if degree % 2 == 1 && k % 2 == 1 { -1 } else { 1 };
            acc = &acc + &raw[idx(&cur)].mul_int(sign);
            cur.rotate_right(1);
        }
        acc
    })
}

fn matrix_of(carrier: &CarrierRef, rows: Vec<Vec<Element>>) -> Result<AlgMatrix> {
    AlgMatrix::new(carrier.clone(), rows)
}

fn coboundary_annihilation(rng: &mut ChaCha8Rng) -> Result<Check> {
    let (m2, dual) = (finite("matrix2")?, finite("dual_numbers")?);
    let q = FieldSpec::Rationals;
    let b = |l: &str| Element::basis(q, l);
    let (cm, cd) = (carrier(&m2), carrier(&dual));
    let zero = Element::zero(q);
    let idempotents = vec![
        (cm.clone(), AlgMatrix::element(cm.clone(), b("E:1,1"))?),
        (cm.clone(), AlgMatrix::element(cm.clone(), b("E:1,1").add(&b("E:1,2")))?),
        (cm.clone(), AlgMatrix::element(cm.clone(), b("E:2,2").add(&b("E:2,1")))?),
        (cd.clone(), AlgMatrix::element(cd.clone(), b("1"))?),
        (cd.clone(), matrix_of(&cd, vec![vec![b("1"), b("x")], vec![zero.clone(), zero.clone()]])?),
        (cd.clone(), matrix_of(&cd, vec![vec![b("1"), zero.clone()], vec![b("x").scale(&Scalar::from_int(&q, 2)), zero]])?),
    ];
    let idempotents = idempotents.into_iter().map(|(c, e)| Ok((c, e.certify_idempotent()?))).collect::<Result<Vec<_>>>()?;
    let (mut trials, mut failures, mut not_cyclic) = (0, Vec::new(), 0);
    for carrier in [&cm, &cd] {
        for n in [1usize, 2] {
            for _ in 0..30 {
                let psi = random_cyclic(carrier, 2 * n - 1, rng)?;
                if check_cyclic(&psi, None).is_err() {
                    not_cyclic += 1;
                }
                let bpsi = psi.coboundary();
                for (_, e) in idempotents.iter().filter(|(c, _)| std::sync::Arc::ptr_eq(c, carrier)) {
                    let v = bpsi.eval_chain(&chern_even(e, n)?)?;
                    trials += 1;
                    if !v.is_zero() {
                        failures.push(format!("degree {} value {v}", 2 * n - 1));
                    }
                }
            }
        }
    }
    Ok(Check {
        what: format!("(b psi)(e, ..., e) = 0 for 120 random cyclic psi ({trials} evaluations, {not_cyclic} symmetrizations not cyclic)"),
        provenance: Literature,
        expected: "no nonzero value".into(),
        actual: if failures.is_empty() && not_cyclic == 0 { "no nonzero value".into() } else { format!("{failures:?}") },
        passed: failures.is_empty() && not_cyclic == 0,
    })
}

fn random_element(carrier: &CarrierRef, pool: &[String], rng: &mut ChaCha8Rng) -> Element {
    let f = carrier.field();
    let mut x = Element::zero(f);
    for _ in 0..rng.gen_range(1..=2) {
        x.add_term(pool[rng.gen_range(0..pool.len())].clone(), small_int(rng, &f));
    }
    x
}

/// `g = [[1, a], [0, 1]]·[[1, 0], [b, 1]]` with its inverse.
fn random_invertible(carrier: &CarrierRef, pool: &[String], rng: &mut ChaCha8Rng) -> Result<AlgMatrix> {
    let (one, zero) = (carrier.unit(), Element::zero(carrier.field()));
    let (a, b) = (random_element(carrier, pool, rng), random_element(carrier, pool, rng));
    let upper = |x: &Element| matrix_of(carrier, vec![vec![one.clone(), x.clone()], vec![zero.clone(), one.clone()]]);
    let lower = |x: &Element| matrix_of(carrier, vec![vec![one.clone(), zero.clone()], vec![x.clone(), one.clone()]]);
    let g = upper(&a)?.mul(&lower(&b)?)?;
    let w = lower(&b.neg())?.mul(&upper(&a.neg())?)?;
    g.certify_invertible(&w)
}

fn mvn_invariance(rng: &mut ChaCha8Rng) -> Result<Check> {
    let (m2, weyl, fam) = (finite("matrix2")?, finite("weyl_torus_1_3")?, finite("conjugation_family")?);
    let torus0 = torus_cocycle(0, 1)?;
    let torus2 = torus_cocycle(2, 1)?;
    let tc = torus0.carrier().clone();
    let torus_pool: Vec<String> = crate::constructions::torus_window(1);
    let diag = |c: &CarrierRef, x: Element| -> Result<AlgMatrix> {
        let z = Element::zero(c.field());
        matrix_of(c, vec![vec![x, z.clone()], vec![z.clone(), z]])?.certify_idempotent()
    };
    let weyl_e = weyl_projection(&weyl, 3)?.entry(0, 0).clone();
    let cases: Vec<(&str, Cochain, AlgMatrix, Vec<String>)> = vec![
        ("tr on M2(Q)", matrix_trace(&m2)?, diag(&carrier(&m2), Element::basis(m2.field(), "E:1,1"))?, m2.labels().to_vec()),
        ("tau on weyl_torus(1,3)", weyl_cocycle(&weyl)?, diag(&carrier(&weyl), weyl_e)?, weyl.labels().to_vec()),
        ("tr on M2(Q(t))", matrix_trace(&fam)?, diag(&carrier(&fam), Element::basis(fam.field(), "E:1,1"))?, fam.labels().to_vec()),
        ("phi_0 on the polynomial torus", torus0.clone(), diag(&tc, tc.unit())?, torus_pool.clone()),
        ("phi_2 on the polynomial torus", torus2.clone(), diag(&tc, tc.unit())?, torus_pool),
    ];
    let mut mismatches = Vec::new();
    let mut trials = 0;
    for (name, phi, e, pool) in &cases {
        for _ in 0..8 {
            let g = random_invertible(phi.carrier(), pool, rng)?;
            let w = g.witness().ok_or(Error::NoCertificate)?;
            let f = g.mul(e)?.mul(&w)?.certify_idempotent()?;
            let (u, v) = (e.mul(&w)?, g.mul(e)?);
            let verdict = mvn_check(e, &f, &u, &v)?;
            let (pe, pf) = (pair_even(phi, e)?.value, pair_even(phi, &f)?.value);
            trials += 1;
            if !verdict.equivalent || pe != pf {
                mismatches.push(format!("{name}: {pe} vs {pf}, equivalent {}", verdict.equivalent));
            }
        }
    }
    Ok(Check::equal(format!("MvN-equivalent idempotents pair equally ({trials} pairs over {} even cocycles)", cases.len()), Literature, Vec::<String>::new(), mismatches))
}

fn extension_agreement(rng: &mut ChaCha8Rng, cap: usize) -> Result<Check> {
    let q = FieldSpec::Rationals;
    let scalar = |i: usize| Scalar::from_int(&q, i64::from(i == 0));
    let mut setups: Vec<(String, Algebra, BimoduleData)> = Vec::new();
    for m in 1..=3 {
        let a = truncated_poly(q, m)?;
        setups.push((format!("Q[x]/(x^{m}), augmentation"), a.clone(), BimoduleData::augmentation(&a, vec!["m".into()], scalar)));
        setups.push((format!("Q[x]/(x^{m}), regular"), a.clone(), BimoduleData::regular(&a)));
    }
    let z2 = finite("groupZ2")?;
    setups.push(("Q[Z/2], regular".into(), z2.clone(), BimoduleData::regular(&z2)));
    let (mut trials, mut cocycles, mut disagreements) = (0, 0, Vec::new());
    for (name, a, m) in &setups {
        let (d, k) = (a.dim(), m.dim());
        let delta1 = bimodule_cochain_differential(a, m, 1, cap)?;
        let delta2 = bimodule_cochain_differential(a, m, 2, cap)?;
        for _ in 0..18 {
            let vec2 = if rng.gen_bool(0.5) {
                let g: Vec<(usize, Scalar)> = (0..d * k).map(|i| (i, small_int(rng, &q))).filter(|(_, c)| !c.is_zero()).collect();
                delta1.apply(&g)
            } else {
                (0..d * d * k).filter_map(|i| rng.gen_bool(0.3).then(|| (i, small_int(rng, &q)))).filter(|(_, c)| !c.is_zero()).collect()
            };
            let mut values = vec![Vec::new(); d * d];
            for (i, c) in &vec2 {
                values[i / k].push((i % k, c.clone()));
            }
            let f = TwoCochain { values };
            let closed = delta2.apply(&two_cochain_vector(a, m, &f)).is_empty();
            let built = match extension_from_2cocycle(a, m, &f) {
                Ok(_) => true,
                Err(Error::NotACocycle { .. }) => false,
                Err(e) => return Err(e),
            };
            trials += 1;
            cocycles += usize::from(closed);
            if closed != built {
                disagreements.push(format!("{name}: delta f = 0 is {closed}, extension built {built}"));
            }
        }
    }
    Ok(Check::equal(
        format!("extension verdict agrees with delta f = 0 ({trials} random f, {cocycles} cocycles)"),
        Derived,
        Vec::<String>::new(),
        disagreements,
    ))
}

fn c13(s: &Settings) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    Ok(vec![coboundary_annihilation(&mut rng)?, mvn_invariance(&mut rng)?, extension_agreement(&mut rng, s.size_cap)?])
}
