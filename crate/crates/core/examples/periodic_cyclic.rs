//! Periodic cyclic homology read off the stabilizing ranks of S.
use hochcyc::constructions::build;
use hochcyc::engine::{periodic_cyclic, Engine, Parity};
use serde_json::json;

fn main() -> hochcyc::Result<()> {
    for spec in [json!({"construct": "group", "cyclic": 3}), json!({"construct": "truncated_poly", "m": 2})] {
        let a = build(&spec)?.into_finite()?;
        let eng = Engine::new(&a);
        for parity in [Parity::Even, Parity::Odd] {
            let r = periodic_cyclic(&eng, parity, 5)?;
            println!("{} {:?}: stable {:?} {}", a.name(), parity, r.stable, r.status.unwrap_or_default());
        }
    }
    Ok(())
}
