//! Exactness of the long exact sequence relating HH and HC.
use hochcyc::constructions::truncated_poly;
use hochcyc::engine::{sbi_audit, Engine};
use hochcyc::scalar::FieldSpec;

fn main() -> hochcyc::Result<()> {
    let a = truncated_poly(FieldSpec::Rationals, 3)?;
    let audit = sbi_audit(&Engine::new(&a), 3)?;
    for node in &audit.nodes {
        println!("{:<10} dim {}  in {}  out {}  exact {}", node.node, node.dim, node.rank_in, node.rank_out, node.exact);
    }
    println!("induced map ranks {:?}", audit.maps);
    Ok(())
}
