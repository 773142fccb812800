//! Algebras given by rewriting rules: the sphere with its Hopf projection
//! and the Podleś sphere.
use hochcyc::chern::chern_even;
use hochcyc::gallery::fixtures::{hopf_fixture, podles_fixture};

fn main() -> hochcyc::Result<()> {
    let (_, f, e) = hopf_fixture()?;
    println!("F² = 1: {}", f.mul(&f)?.sub(&hochcyc::chern::AlgMatrix::identity(f.carrier().clone(), 2))?.is_zero());
    let e = e.certify_idempotent()?;
    println!("Hopf projection: trace {:?}", e.trace_element().to_json());
    println!("Ch^1 support size {}", chern_even(&e, 1)?.support().len());
    let (_, eq) = podles_fixture()?;
    println!("Podleś projection certified idempotent: {}", eq.certify_idempotent().is_ok());
    Ok(())
}
