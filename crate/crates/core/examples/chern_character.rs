//! Chern characters of idempotents and unitaries, and their pairings.
use hochcyc::algebra::Element;
use hochcyc::chern::{chern_even, conjugation_invariance_test, pair_even, AlgMatrix};
use hochcyc::gallery::fixtures::{carrier, conjugation_unitriangular, e11, finite, matrix_trace, off_diagonal_functional};
use hochcyc::scalar::FieldSpec;

fn main() -> hochcyc::Result<()> {
    let q = FieldSpec::Rationals;
    let m2 = finite("matrix2")?;
    let c = carrier(&m2);
    let e = AlgMatrix::element(c.clone(), Element::basis(q, "E:1,1").add(&Element::basis(q, "E:1,2")))?.certify_idempotent()?;
    println!("Ch^1(e) has support {:?}", chern_even(&e, 1)?.support());
    println!("<tr, e> = {}", pair_even(&matrix_trace(&m2)?, &e)?.value);

    let fam = finite("conjugation_family")?;
    let (e, u) = (e11(&fam)?, conjugation_unitriangular(&fam)?);
    let tr = conjugation_invariance_test(&matrix_trace(&fam)?, &e, &u)?;
    let off = conjugation_invariance_test(&off_diagonal_functional(&fam)?, &e, &u)?;
    println!("trace along u_t e u_t⁻¹: {} (constant {})", tr.value, tr.constant);
    println!("E12 coefficient along the family: {} (constant {})", off.value, off.constant);
    Ok(())
}
