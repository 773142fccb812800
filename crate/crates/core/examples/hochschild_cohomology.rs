//! Hochschild cohomology with coefficients in A and in the dual A*.
use hochcyc::constructions::truncated_poly;
use hochcyc::engine::{hochschild_cohomology, Coefficients, Engine};
use hochcyc::scalar::FieldSpec;

fn main() -> hochcyc::Result<()> {
    let a = truncated_poly(FieldSpec::Rationals, 2)?;
    let eng = Engine::new(&a);
    for coeff in [Coefficients::Regular, Coefficients::Dual] {
        let r = hochschild_cohomology(&eng, coeff, 3)?;
        println!("{coeff:?}: {:?}", r.dims_vec());
    }
    Ok(())
}
