//! Group cocycles on Z and Z² as cyclic cocycles on the group algebra.
use hochcyc::chern::{group_cocycle_to_cyclic, lattice_window, pair_odd, GroupCocycleData};
use hochcyc::gallery::fixtures::{lattice_unit, winding_cocycle};
use hochcyc::scalar::FieldSpec;

fn main() -> hochcyc::Result<()> {
    let w = winding_cocycle(3)?;
    for k in -2..=3 {
        println!("winding <c, U^{k}> = {}", pair_odd(&w, &lattice_unit(w.carrier(), &[k])?)?.value);
    }
    let det = group_cocycle_to_cyclic(&GroupCocycleData::determinant(FieldSpec::Rationals), Some(lattice_window(2, 1)))?;
    println!("determinant cocycle phi(g0, g1, g2) at ((-1,-1), (1,0), (0,1)) = {}", det.eval(&["g:(-1,-1)", "g:(1,0)", "g:(0,1)"])?);
    Ok(())
}
