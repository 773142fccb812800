//! Cyclic cocycles on the polynomial torus from the derivations X1, X2.
use hochcyc::chern::{pair_odd, validate_cyclic_cocycle};
use hochcyc::gallery::fixtures::{flipped_torus_cocycle, lattice_unit, torus_cocycle};

fn main() -> hochcyc::Result<()> {
    let phi1 = torus_cocycle(1, 1)?;
    let phi2 = torus_cocycle(2, 1)?;
    println!("phi2(U⁻¹V⁻¹, U, V) = {}", phi2.eval(&["g:(-1,-1)", "g:(1,0)", "g:(0,1)"])?);
    for g in [[1, 0], [0, 1], [-1, 0]] {
        let u = lattice_unit(phi1.carrier(), &g)?;
        println!("<phi1, {:?}> = {}", g, pair_odd(&phi1, &u)?.value);
    }
    let flipped = flipped_torus_cocycle(1)?;
    println!("sign-flipped phi1: {:?}", validate_cyclic_cocycle(flipped, Some(hochcyc::constructions::torus_window(1))).err());
    Ok(())
}
