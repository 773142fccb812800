use hochcyc::algebra::Element;
use hochcyc::chern::{chern_even, check_cyclic, group_cocycle_to_cyclic, lattice_window, pair_even, pair_odd, AlgMatrix, Cochain, GroupCocycleData};
use hochcyc::gallery::fixtures::{carrier, finite, lattice_unit, matrix_trace, torus_cocycle, winding_cocycle};
use hochcyc::scalar::{FieldSpec, Scalar};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn lat(m: i64, n: i64) -> String {
    format!("g:({m},{n})")
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `τ(g0 g1 ⋯ gk)` on the polynomial torus, where `(m,n)(r,s) = t^{nr}(m+r, n+s)`.
fn torus_trace(gs: &[(i64, i64)]) -> Scalar {
    let f = FieldSpec::rational_functions();
    let (mut m, mut n, mut e) = (0, 0, 0);
    for &(r, s) in gs {
        e += n * r;
        m += r;
        n += s;
    }
    if (m, n) == (0, 0) {
        Scalar::t(&f).unwrap().pow(e)
    } else {
        Scalar::zero(&f)
    }
}

#[test]
fn torus_cocycles_match_closed_forms() {
    let f = FieldSpec::rational_functions();
    let phi0 = torus_cocycle(0, 1).unwrap();
    let phi1 = torus_cocycle(1, 1).unwrap();
    let phi2 = torus_cocycle(2, 1).unwrap();
    let pts: Vec<(i64, i64)> = (-2..=2).flat_map(|m| (-2..=2).map(move |n| (m, n))).collect();
    for &g0 in &pts {
        let expected = if g0 == (0, 0) { Scalar::one(&f) } else { Scalar::zero(&f) };
        assert_eq!(phi0.eval(&[&lat(g0.0, g0.1)]).unwrap(), expected);
        for &g1 in &pts {
            // φ₁(g0, g1) = τ(g0 X₁(g1)) = m₁ τ(g0 g1)
            let v = phi1.eval(&[&lat(g0.0, g0.1), &lat(g1.0, g1.1)]).unwrap();
            assert_eq!(v, torus_trace(&[g0, g1]).mul_int(g1.0));
        }
    }
    let small: Vec<(i64, i64)> = (-1..=1).flat_map(|m| (-1..=1).map(move |n| (m, n))).collect();
    for &g0 in &pts {
        for &g1 in &small {
            for &g2 in &small {
                // φ₂ = τ(g0 (X₁g1 X₂g2 − X₂g1 X₁g2)) = (m₁n₂ − n₁m₂) τ(g0 g1 g2)
                let v = phi2.eval(&[&lat(g0.0, g0.1), &lat(g1.0, g1.1), &lat(g2.0, g2.1)]).unwrap();
                assert_eq!(v, torus_trace(&[g0, g1, g2]).mul_int(g1.0 * g2.1 - g1.1 * g2.0));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn determinant_cocycle_is_the_group_formula(g in proptest::collection::vec(-3i64..=3, 6)) {
        let phi = group_cocycle_to_cyclic(&GroupCocycleData::determinant(Q), Some(lattice_window(2, 1))).unwrap();
        let v = phi.eval(&[&lat(g[0], g[1]), &lat(g[2], g[3]), &lat(g[4], g[5])]).unwrap();
        let closed = g[0] + g[2] + g[4] == 0 && g[1] + g[3] + g[5] == 0;
        let expected = if closed { g[2] * g[5] - g[3] * g[4] } else { 0 };
        prop_assert_eq!(v, Scalar::from_int(&Q, expected));
    }

    #[test]
    fn winding_number_is_additive(k in -3i64..=3) {
        let phi = winding_cocycle(3).unwrap();
        let u = lattice_unit(phi.carrier(), &[k]).unwrap();
        prop_assert_eq!(pair_odd(&phi, &u).unwrap().value, Scalar::from_int(&Q, k));
    }

    #[test]
    fn symmetrized_cochains_are_cyclic_and_kill_idempotents(
        which in 0usize..2,
        n in 1usize..=2,
        raw in proptest::collection::vec(-3i64..=3, 256),
    ) {
        let (name, es) = idempotents(which);
        let a = finite(name).unwrap();
        let c = carrier(&a);
        let deg = 2 * n - 1;
        let psi = symmetrized(&c, a.dim(), deg, &raw);
        prop_assert!(check_cyclic(&psi, None).is_ok());
        let bpsi = psi.coboundary();
        for e in &es {
            prop_assert!(bpsi.eval_chain(&chern_even(e, n).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_of_a_projection_is_its_trace_pairing(mask in 1u8..16) {
        // diag of E11 / E22 blocks chosen by mask inside M₂(M₂)
        let m2 = finite("matrix2").unwrap();
        let c = carrier(&m2);
        let tr = matrix_trace(&m2).unwrap();
        let pick = |bit: u8, l: &str| if mask & bit != 0 { Element::basis(Q, l) } else { Element::zero(Q) };
        let z = Element::zero(Q);
        let e = AlgMatrix::new(c, vec![
            vec![pick(1, "E:1,1").add(&pick(2, "E:2,2")), z.clone()],
            vec![z, pick(4, "E:1,1").add(&pick(8, "E:2,2"))],
        ]).unwrap().certify_idempotent().unwrap();
        let rank = mask.count_ones() as i64;
        prop_assert_eq!(pair_even(&tr, &e).unwrap().value, Scalar::from_int(&Q, rank));
    }
}

/// `Σ_k ε^k ψ∘rot^k` with `ε = (−1)^deg`, from raw integer values.
fn symmetrized(c: &hochcyc::chern::CarrierRef, d: usize, deg: usize, raw: &[i64]) -> Cochain {
    let value = |t: &[usize]| raw[t.iter().fold(0, |acc, &x| acc * d + x) % raw.len()];
    Cochain::dense_from(c.clone(), deg, |t| {
        let mut cur = t.to_vec();
        let mut acc = 0;
        for k in 0..=deg {
            acc += sign((deg * k) as i64) * value(&cur);
            cur.rotate_right(1);
        }
        Scalar::from_int(&Q, acc)
    })
    .unwrap()
}

fn idempotents(which: usize) -> (&'static str, Vec<AlgMatrix>) {
    let b = |l: &str| Element::basis(Q, l);
    let z = Element::zero(Q);
    let name = ["matrix2", "dual_numbers"][which];
    let c = carrier(&finite(name).unwrap());
    let raw = match which {
        0 => vec![
            vec![vec![b("E:1,1")]],
            vec![vec![b("E:1,1").add(&b("E:1,2"))]],
            vec![vec![b("E:2,2"), z.clone()], vec![z.clone(), b("E:1,1")]],
        ],
        _ => vec![
            vec![vec![b("1")]],
            vec![vec![b("1"), b("x")], vec![z.clone(), z.clone()]],
            vec![vec![b("1"), z.clone()], vec![b("x").scale(&Scalar::from_int(&Q, -3)), z]],
        ],
    };
    (name, raw.into_iter().map(|m| AlgMatrix::new(c.clone(), m).unwrap().certify_idempotent().unwrap()).collect())
}

#[test]
fn unsymmetrized_cochains_can_fail_annihilation() {
    // the property above is not vacuous: basis-delta 1-cochains on the dual
    // numbers are not cyclic, and some of their coboundaries see e.
    let a = finite("dual_numbers").unwrap();
    let c = carrier(&a);
    let (_, es) = idempotents(1);
    let mut nonzero = 0;
    for hot in 0..4 {
        let psi = Cochain::dense_from(c.clone(), 1, |t| Scalar::from_int(&Q, i64::from(t[0] * 2 + t[1] == hot))).unwrap();
        assert!(check_cyclic(&psi, None).is_err());
        let bpsi = psi.coboundary();
        nonzero += es.iter().filter(|e| !bpsi.eval_chain(&chern_even(e, 1).unwrap()).unwrap().is_zero()).count();
    }
    assert!(nonzero > 0);
}
