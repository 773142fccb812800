//! Validating a structure-constant table: a good one and two broken ones.
use hochcyc::algebra::json::algebra_from_json;
use serde_json::json;

fn main() {
    let good = json!({
        "field": "Q", "labels": ["1", "x"], "unit": {"1": "1"},
        "structure": [
            {"i": "1", "j": "1", "k": "1", "c": "1"},
            {"i": "1", "j": "x", "k": "x", "c": "1"},
            {"i": "x", "j": "1", "k": "x", "c": "1"}
        ]
    });
    match algebra_from_json(&good) {
        Ok(a) => println!("valid: {} of dimension {}, commutative {}", a.name(), a.dim(), a.is_commutative()),
        Err(e) => println!("unexpected: {e}"),
    }
    let mut no_unit = good.clone();
    no_unit["unit"] = json!({"x": "1"});
    println!("unit x: {:?}", algebra_from_json(&no_unit).err());
    let mut unknown = good.clone();
    unknown["structure"][0]["k"] = json!("y");
    println!("unknown label: {:?}", algebra_from_json(&unknown).err());
}
