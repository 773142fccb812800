//! Cyclic homology by the three routes, which must agree.
use hochcyc::constructions::build;
use hochcyc::engine::{cyclic_homology, Engine, HcMethod};
use serde_json::json;

fn main() -> hochcyc::Result<()> {
    let a = build(&json!({"construct": "truncated_poly", "m": 2}))?.into_finite()?;
    let eng = Engine::new(&a);
    for method in HcMethod::ALL {
        let r = cyclic_homology(&eng, 4, method)?;
        println!("{:<28} HC = {:?}  cross-checked by {:?}", r.theory.to_string(), r.dims_vec(), r.cross_checked);
    }
    Ok(())
}
