//! Building algebras from construction specs.
use hochcyc::constructions::build;
use serde_json::json;

fn main() -> hochcyc::Result<()> {
    let specs = [
        json!({"construct": "matrix", "n": 3}),
        json!({"construct": "truncated_poly", "m": 4}),
        json!({"construct": "group", "symmetric": 3}),
        json!({"construct": "groupoid", "pairs": 3}),
        json!({"construct": "groupoid", "objects": 2, "isotropy": {"cyclic": 2}}),
        json!({"construct": "tensor", "factors": [{"construct": "matrix", "n": 2}, {"construct": "truncated_poly", "m": 2}]}),
        json!({"construct": "crossed_product", "base": {"construct": "truncated_poly", "m": 2}, "group": {"cyclic": 2}, "maps": {"1": {"x": {"x": "-1"}}}}),
        json!({"construct": "weyl_torus", "p": 1, "q": 3}),
        hochcyc::gallery::fixtures::extension_x3_spec(),
    ];
    for spec in specs {
        let a = build(&spec)?.into_finite()?;
        println!("{:<40} dim {:>2}  dim A/[A,A] = {}", a.name(), a.dim(), a.commutator_quotient_dim());
    }
    let torus = build(&json!({"construct": "polynomial_torus"}))?;
    println!("{:<40} infinite-dimensional, field {}", torus.carrier().name(), torus.carrier().field());
    Ok(())
}
