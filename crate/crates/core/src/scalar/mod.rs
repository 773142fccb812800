//! Exact coefficient fields: ℚ, cyclotomic fields ℚ(ζₙ), and rational
//! function fields over either.

pub mod cyclotomic;
mod literal;
pub mod poly;
pub mod ratfunc;
pub mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cyclotomic::Cyc;
pub use poly::{Coeff, Poly};
pub use ratfunc::RatFn;
pub use rational::Q;

use cyclotomic::QTerm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar literal {literal:?} over {field}: {reason}")]
    Parse { literal: String, field: FieldSpec, reason: String },
}

/// Base of a rational function field; function fields do not nest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseField {
    Rationals,
    Cyclotomic(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic(u32),
    RationalFunctions(BaseField),
}

impl FieldSpec {
    pub fn cyclotomic(n: u32) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidField("cyclotomic order must be at least 1".into()));
        }
        Ok(FieldSpec::Cyclotomic(n))
    }

    /// ℚ(t).
    pub fn rational_functions() -> Self {
        FieldSpec::RationalFunctions(BaseField::Rationals)
    }

    pub fn validate(&self) -> Result<(), ScalarError> {
        match self {
            FieldSpec::Cyclotomic(0) | FieldSpec::RationalFunctions(BaseField::Cyclotomic(0)) => {
                Err(ScalarError::InvalidField("cyclotomic order must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// JSON form used by every file format: `"Q"`, `{"cyclotomic": n}` or
    /// `{"rational_function": "Q" | {"cyclotomic": n}}`.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            FieldSpec::Rationals => json!("Q"),
            FieldSpec::Cyclotomic(n) => json!({ "cyclotomic": n }),
            FieldSpec::RationalFunctions(BaseField::Rationals) => json!({ "rational_function": "Q" }),
            FieldSpec::RationalFunctions(BaseField::Cyclotomic(n)) => {
                json!({ "rational_function": { "cyclotomic": n } })
            }
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, ScalarError> {
        let bad = || ScalarError::InvalidField(v.to_string());
        let field = match v {
            serde_json::Value::String(s) if s == "Q" => FieldSpec::Rationals,
            serde_json::Value::Object(m) if m.len() == 1 => {
                if let Some(n) = m.get("cyclotomic") {
                    FieldSpec::Cyclotomic(n.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(bad)?)
                } else if let Some(b) = m.get("rational_function") {
                    match FieldSpec::from_json(b)? {
                        FieldSpec::Rationals => FieldSpec::RationalFunctions(BaseField::Rationals),
                        FieldSpec::Cyclotomic(n) => FieldSpec::RationalFunctions(BaseField::Cyclotomic(n)),
                        FieldSpec::RationalFunctions(_) => {
                            return Err(ScalarError::InvalidField("rational function fields do not nest".into()))
                        }
                    }
                } else {
                    return Err(bad());
                }
            }
            _ => return Err(bad()),
        };
        field.validate()?;
        Ok(field)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
            FieldSpec::RationalFunctions(BaseField::Rationals) => write!(f, "Q(t)"),
            FieldSpec::RationalFunctions(BaseField::Cyclotomic(n)) => write!(f, "Q(zeta_{n})(t)"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        FieldSpec::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// An exact field element in canonical form, so `==` is value equality.
#[derive(Clone, PartialEq)]
pub enum Scalar {
    Q(Q),
    Cyc(Cyc),
    RatQ(RatFn<Q>),
    RatCyc(RatFn<Cyc>),
}

impl Scalar {
    pub fn zero(field: &FieldSpec) -> Self {
        Self::from_q(field, Q::zero())
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::from_q(field, Q::one())
    }

    pub fn from_int(field: &FieldSpec, n: i64) -> Self {
        Self::from_q(field, Q::from_int(n))
    }

    pub fn from_q(field: &FieldSpec, q: Q) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Q(q),
            FieldSpec::Cyclotomic(n) => Scalar::Cyc(Cyc::from_q(cyclotomic::context(*n), q)),
            FieldSpec::RationalFunctions(BaseField::Rationals) => Scalar::RatQ(RatFn::constant(q)),
            FieldSpec::RationalFunctions(BaseField::Cyclotomic(n)) => {
                let one = Cyc::from_q(cyclotomic::context(*n), Q::one());
                Scalar::RatCyc(RatFn::constant(one.mul(&Cyc::from_q(one.ctx.clone(), q))))
            }
        }
    }

    /// ζₙᵏ in a field containing ζ.
    pub fn zeta_pow(field: &FieldSpec, k: i64) -> Result<Self, ScalarError> {
        match field {
            FieldSpec::Cyclotomic(n) => Ok(Scalar::Cyc(Cyc::zeta_pow(cyclotomic::context(*n), k))),
            FieldSpec::RationalFunctions(BaseField::Cyclotomic(n)) => {
                Ok(Scalar::RatCyc(RatFn::constant(Cyc::zeta_pow(cyclotomic::context(*n), k))))
            }
            _ => Err(ScalarError::InvalidField(format!("{field} has no root of unity generator"))),
        }
    }

    /// The function-field generator t.
    pub fn t(field: &FieldSpec) -> Result<Self, ScalarError> {
        match field {
            FieldSpec::RationalFunctions(BaseField::Rationals) => Ok(Scalar::RatQ(RatFn::t(Q::one()))),
            FieldSpec::RationalFunctions(BaseField::Cyclotomic(n)) => {
                Ok(Scalar::RatCyc(RatFn::t(Cyc::from_q(cyclotomic::context(*n), Q::one()))))
            }
            _ => Err(ScalarError::InvalidField(format!("{field} has no transcendental generator"))),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Cyc(c) => FieldSpec::Cyclotomic(c.order()),
            Scalar::RatQ(_) => FieldSpec::RationalFunctions(BaseField::Rationals),
            Scalar::RatCyc(r) => FieldSpec::RationalFunctions(BaseField::Cyclotomic(r.one.order())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Cyc(c) => c.is_zero(),
            Scalar::RatQ(r) => r.is_zero(),
            Scalar::RatCyc(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one(&self.field())
    }

    /// The value as a rational number when it lies in the prime field.
    pub fn as_rational(&self) -> Option<Q> {
        match self {
            Scalar::Q(q) => Some(q.clone()),
            Scalar::Cyc(c) => c.as_rational(),
            Scalar::RatQ(r) if r.is_constant() => {
                Some(r.num.c.first().cloned().unwrap_or_else(Q::zero))
            }
            Scalar::RatCyc(r) if r.is_constant() => match r.num.c.first() {
                None => Some(Q::zero()),
                Some(c) => c.as_rational(),
            },
            _ => None,
        }
    }

    /// True when the value does not involve the function-field generator.
    pub fn is_constant_in_t(&self) -> bool {
        match self {
            Scalar::RatQ(r) => r.is_constant(),
            Scalar::RatCyc(r) => r.is_constant(),
            _ => true,
        }
    }

    /// d/dt; zero outside function fields.
    pub fn derivative_t(&self) -> Scalar {
        match self {
            Scalar::RatQ(r) => Scalar::RatQ(r.derivative()),
            Scalar::RatCyc(r) => Scalar::RatCyc(r.derivative()),
            other => Scalar::zero(&other.field()),
        }
    }

    fn mismatch(&self, other: &Scalar) -> ScalarError {
        ScalarError::FieldMismatch(self.field(), other.field())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) if a.order() == b.order() => Scalar::Cyc(a.add(b)),
            (Scalar::RatQ(a), Scalar::RatQ(b)) => Scalar::RatQ(a.add(b)),
            (Scalar::RatCyc(a), Scalar::RatCyc(b)) if a.one.order() == b.one.order() => Scalar::RatCyc(a.add(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) if a.order() == b.order() => Scalar::Cyc(a.mul(b)),
            (Scalar::RatQ(a), Scalar::RatQ(b)) => Scalar::RatQ(a.mul(b)),
            (Scalar::RatCyc(a), Scalar::RatCyc(b)) if a.one.order() == b.one.order() => Scalar::RatCyc(a.mul(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn try_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.inv()),
            Scalar::Cyc(a) => Scalar::Cyc(a.inv()),
            Scalar::RatQ(a) => Scalar::RatQ(a.inv()),
            Scalar::RatCyc(a) => Scalar::RatCyc(a.inv()),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        self.try_mul(&other.try_inv()?)
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Cyc(a) => Scalar::Cyc(a.neg()),
            Scalar::RatQ(a) => Scalar::RatQ(a.neg()),
            Scalar::RatCyc(a) => Scalar::RatCyc(a.neg()),
        }
    }

    /// Inverse of a value known to be nonzero.
    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("inverse of zero scalar")
    }

    pub fn mul_int(&self, n: i64) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.mul(&Q::from_int(n))),
            Scalar::Cyc(a) => Scalar::Cyc(a.mul_int(n)),
            Scalar::RatQ(a) => Scalar::RatQ(a.mul_int(n)),
            Scalar::RatCyc(a) => Scalar::RatCyc(a.mul_int(n)),
        }
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one(&self.field());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Parse a literal in the scalar grammar over `field`.
    pub fn parse(field: &FieldSpec, literal: &str) -> Result<Scalar, ScalarError> {
        literal::parse(field, literal).map_err(|reason| ScalarError::Parse {
            literal: literal.to_string(),
            field: *field,
            reason,
        })
    }
}

// Operator impls assume operands share a field; mixing fields is an
// internal bug and panics. Fallible entry points use the `try_*` methods.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

fn cyc_term(c: &Cyc) -> QTerm {
    match c.as_rational() {
        Some(q) => QTerm::Rational(q),
        None => QTerm::Compound(c.to_string()),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Cyc(c) => write!(f, "{c}"),
            Scalar::RatQ(r) => f.write_str(&r.render(|q| QTerm::Rational(q.clone()))),
            Scalar::RatCyc(r) => f.write_str(&r.render(cyc_term)),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let f = FieldSpec::Rationals;
        let a = Scalar::parse(&f, "1/2").unwrap();
        let b = Scalar::parse(&f, "1/3").unwrap();
        assert_eq!(&a + &b, Scalar::parse(&f, "5/6").unwrap());
    }

    #[test]
    fn zeta_four_squares_to_minus_one() {
        let f = FieldSpec::Cyclotomic(4);
        let z = Scalar::zeta_pow(&f, 1).unwrap();
        assert_eq!(&z * &z, Scalar::from_int(&f, -1));
    }

    #[test]
    fn function_field_cancellation() {
        let f = FieldSpec::rational_functions();
        let x = Scalar::parse(&f, "(t^2 - 1)/(t - 1)").unwrap();
        assert_eq!(x, Scalar::parse(&f, "t + 1").unwrap());
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let f = FieldSpec::Rationals;
        assert_eq!(Scalar::one(&f).try_div(&Scalar::zero(&f)), Err(ScalarError::DivisionByZero));
        let g = FieldSpec::Cyclotomic(3);
        assert!(matches!(Scalar::one(&f).try_add(&Scalar::one(&g)), Err(ScalarError::FieldMismatch(..))));
        let h = FieldSpec::Cyclotomic(4);
        assert!(matches!(Scalar::one(&g).try_mul(&Scalar::one(&h)), Err(ScalarError::FieldMismatch(..))));
    }

    #[test]
    fn field_json_roundtrip_and_nesting_rejected() {
        for f in [
            FieldSpec::Rationals,
            FieldSpec::Cyclotomic(5),
            FieldSpec::rational_functions(),
            FieldSpec::RationalFunctions(BaseField::Cyclotomic(4)),
        ] {
            assert_eq!(FieldSpec::from_json(&f.to_json()).unwrap(), f);
        }
        let nested = serde_json::json!({"rational_function": {"rational_function": "Q"}});
        assert!(FieldSpec::from_json(&nested).is_err());
        assert!(FieldSpec::from_json(&serde_json::json!({"cyclotomic": 0})).is_err());
    }

    #[test]
    fn display_parses_back() {
        let fields = [
            FieldSpec::Rationals,
            FieldSpec::Cyclotomic(7),
            FieldSpec::rational_functions(),
            FieldSpec::RationalFunctions(BaseField::Cyclotomic(3)),
        ];
        let lits = ["-3/4", "1/2*z^2 - z + 1", "(t^2 + 1)/(t - 2)", "(z)*t^2 + (1 - z)"];
        for (f, lit) in fields.iter().zip(lits) {
            let v = Scalar::parse(f, lit).unwrap();
            assert_eq!(Scalar::parse(f, &v.to_string()).unwrap(), v, "{lit}");
        }
    }
}
