//! Exact arithmetic in ℚ, ℚ(ζₙ) and ℚ(t).
use hochcyc::scalar::{FieldSpec, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::Rationals;
    let a = Scalar::parse(&q, "3/4")?;
    let b = Scalar::parse(&q, "-2/3")?;
    println!("Q:      (3/4)·(-2/3) = {}, inverse of 3/4 = {}", &a * &b, a.inv());

    let c8 = FieldSpec::cyclotomic(8)?;
    let z = Scalar::zeta_pow(&c8, 1)?;
    let sqrt2 = &z + &Scalar::zeta_pow(&c8, -1)?;
    println!("Q(ζ8):  ζ + ζ⁻¹ = {sqrt2}, squared = {}", &sqrt2 * &sqrt2);
    println!("Q(ζ8):  ζ^8 = {}", z.pow(8));

    let rf = FieldSpec::rational_functions();
    let t = Scalar::t(&rf)?;
    let r = (&t.pow(2) - &Scalar::one(&rf)).try_div(&(&t - &Scalar::one(&rf)))?;
    println!("Q(t):   (t²−1)/(t−1) = {r}, d/dt = {}", r.derivative_t());
    Ok(())
}
