//! Hochschild homology with the raw ranks behind each dimension.
use hochcyc::constructions::build;
use hochcyc::engine::{hochschild_homology, Engine};
use serde_json::json;

fn main() -> hochcyc::Result<()> {
    for spec in [
        json!({"construct": "truncated_poly", "m": 3}),
        json!({"construct": "matrix", "n": 2}),
        json!({"construct": "group", "symmetric": 3}),
    ] {
        let a = build(&spec)?.into_finite()?;
        let r = hochschild_homology(&Engine::new(&a), 2)?;
        println!("{}: HH = {:?}  ranks {:?}", a.name(), r.dims_vec(), r.ranks);
    }
    Ok(())
}
