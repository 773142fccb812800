//! The trace on a finite Weyl torus pairs to 1/q with a spectral projection.
use hochcyc::chern::{dimension_function, pair_even};
use hochcyc::constructions::{weyl_torus, weyl_trace};
use hochcyc::gallery::fixtures::{weyl_cocycle, weyl_projection};

fn main() -> hochcyc::Result<()> {
    for q in [2, 3, 5] {
        let a = weyl_torus(1, q)?;
        let e = weyl_projection(&a, q)?;
        let tau = weyl_cocycle(&a)?;
        let p = pair_even(&tau, &e)?;
        println!("q = {q}: <tau, e> = {}  (dimension function {})", p.value, dimension_function(weyl_trace(&a)?).apply(&e));
    }
    Ok(())
}
