//! Morita invariance through the generalized trace, and triviality of
//! inner actions on HH.
use hochcyc::algebra::Element;
use hochcyc::constructions::truncated_poly;
use hochcyc::engine::{inner_action_audit, morita_audit, Engine, DEFAULT_SIZE_CAP};
use hochcyc::scalar::{FieldSpec, Scalar};

fn main() -> hochcyc::Result<()> {
    let q = FieldSpec::Rationals;
    let a = truncated_poly(q, 2)?;
    let m = morita_audit(2, &a, 2, DEFAULT_SIZE_CAP)?;
    println!("HH(A) {:?}, HH(M2(A)) {:?}, Tr rank {:?}, passed {}", m.hh_a, m.hh_mk, m.tr_rank, m.passed);

    // u = 1 + x is invertible; conjugation by u and L_x act trivially on HH
    let u = Element::basis(q, "1").add(&Element::basis(q, "x"));
    let x = Element::term("x", Scalar::one(&q));
    let r = inner_action_audit(&Engine::new(&a), &u, &x, 2)?;
    println!("inner actions: {:?}", r);
    Ok(())
}
