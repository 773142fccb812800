//! JSON algebra definitions:
//!
//! ```json
//! { "field": "Q", "labels": ["1", "x"], "unit": {"1": "1"},
//!   "structure": [ {"i": "x", "j": "x", "k": "1", "c": "0"} ] }
//! ```
//!
//! Omitted `(i, j, k)` triples have coefficient 0.

use serde_json::{json, Value};

use super::{validate_algebra, Algebra, AlgebraData};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

pub(crate) fn parse_scalar(field: &FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Ok(Scalar::parse(field, s)?),
        Value::Number(n) => Ok(Scalar::parse(field, &n.to_string())?),
        other => Err(Error::Parse(format!("expected a scalar literal, got {other}"))),
    }
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v.get(key).and_then(Value::as_str).ok_or_else(|| Error::Parse(format!("missing string field {key:?}")))
}

pub fn parse_field(v: &Value) -> Result<FieldSpec> {
    match v.get("field") {
        None => Ok(FieldSpec::Rationals),
        Some(f) => Ok(FieldSpec::from_json(f)?),
    }
}

/// Reads raw data without validating the algebra axioms.
pub fn algebra_data_from_json(v: &Value) -> Result<AlgebraData> {
    let field = parse_field(v)?;
    let labels = v
        .get("labels")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"labels\" array".into()))?
        .iter()
        .map(|l| l.as_str().map(str::to_string).ok_or_else(|| Error::Parse(format!("label {l} is not a string"))))
        .collect::<Result<Vec<_>>>()?;
    let unit = v
        .get("unit")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("missing \"unit\" object".into()))?
        .iter()
        .map(|(l, c)| Ok((l.clone(), parse_scalar(&field, c)?)))
        .collect::<Result<Vec<_>>>()?;
    let structure = v
        .get("structure")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"structure\" array".into()))?
        .iter()
        .map(|e| {
            let c = e.get("c").ok_or_else(|| Error::Parse("structure entry without \"c\"".into()))?;
            Ok((
                str_field(e, "i")?.to_string(),
                str_field(e, "j")?.to_string(),
                str_field(e, "k")?.to_string(),
                parse_scalar(&field, c)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let name = v.get("name").and_then(Value::as_str).unwrap_or("algebra").to_string();
    Ok(AlgebraData { name, field, labels, unit, structure })
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    validate_algebra(algebra_data_from_json(v)?)
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    let data = a.to_data();
    let unit: serde_json::Map<String, Value> =
        data.unit.iter().map(|(l, c)| (l.clone(), Value::String(c.to_string()))).collect();
    let structure: Vec<Value> = data
        .structure
        .iter()
        .map(|(i, j, k, c)| json!({"i": i, "j": j, "k": k, "c": c.to_string()}))
        .collect();
    json!({
        "name": data.name,
        "field": data.field.to_json(),
        "labels": data.labels,
        "unit": unit,
        "structure": structure,
    })
}
