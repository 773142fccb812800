//! Cocycle specs:
//!
//! ```json
//! {"kind": "trace", "algebra": <spec>, "trace": "standard" | {label: scalar}}
//! {"kind": "lie", "algebra": <spec>, "degree": 1,
//!  "derivations": "torus" | [{"inner": element} | {"values": {label: element}}],
//!  "c": {"1": "1"}}
//! {"kind": "group_cocycle", "group": {"lattice": 2}, "cocycle": "determinant"}
//! {"kind": "explicit", "algebra": <spec>, "degree": 1,
//!  "values": [{"tensor": [label, label], "value": scalar}]}
//! ```
//!
//! Every kind accepts `"window": [label, …]` or `"window_radius": r` (lattice
//! labels of a rank-`k` group or the torus) and `"verify": false` to skip
//! validation. Keys of `"c"` list 1-based derivation indices separated by
//! commas; `"cocycle"` is one of `determinant`, `coordinate` (with a 1-based
//! `"index"`) or `unit`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use super::cochain::{validate_cyclic_cocycle, CarrierRef, Cochain};
use super::group::{group_cocycle_to_cyclic, lattice_window, GroupCocycleData};
use super::lie::lie_action_to_cyclic;
use super::matrix::AlgMatrix;
use crate::algebra::json::{parse_field, parse_scalar};
use crate::algebra::{labels, validate_derivation, validate_trace, Derivation, Element, Trace};
use crate::constructions::spec::group_from_json;
use crate::constructions::{build, polynomial_torus, weyl_trace, Built, GroupData};
use crate::engine::wedge;
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("cocycle spec needs {key:?}")))
}

fn construct(v: &Value) -> Option<&str> {
    v.get("construct").and_then(Value::as_str)
}

/// The carrier a spec describes, as a shared handle.
pub fn carrier_from_spec(spec: &Value) -> Result<CarrierRef> {
    Ok(match build(spec)? {
        Built::Finite(a) => Arc::new(a),
        Built::Based(b) => b,
    })
}

fn strings(v: &Value) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array of labels, got {v}")))?
        .iter()
        .map(|s| s.as_str().map(str::to_string).ok_or_else(|| Error::Parse(format!("{s} is not a label"))))
        .collect()
}

fn window(v: &Value, rank: Option<usize>) -> Result<Option<Vec<String>>> {
    if let Some(w) = v.get("window") {
        return strings(w).map(Some);
    }
    let Some(r) = v.get("window_radius") else { return Ok(None) };
    let r = r.as_i64().filter(|&r| r >= 0).ok_or_else(|| Error::Parse("\"window_radius\" must be a non-negative integer".into()))?;
    let rank = rank.ok_or_else(|| Error::Invalid("\"window_radius\" needs a lattice carrier".into()))?;
    Ok(Some(lattice_window(rank, r)))
}

fn standard_trace(spec: &Value, carrier: &CarrierRef) -> Result<Trace> {
    let field = carrier.field();
    match construct(spec) {
        Some("polynomial_torus") => Ok(polynomial_torus()?.tau),
        Some("weyl_torus") => match build(spec)? {
            Built::Finite(a) => weyl_trace(&a),
            Built::Based(_) => unreachable!("weyl tori are finite"),
        },
        Some("matrix") if spec.get("base").is_none() => {
            let labels = carrier.finite_labels().unwrap_or(&[]);
            let diag = labels.iter().filter(|l| labels::parse_matrix_unit(l).is_some_and(|(i, j)| i == j));
            validate_trace(carrier.as_ref(), Trace::table(field, diag.map(|l| (l.clone(), Scalar::one(&field)))), None)
        }
        _ => Err(Error::Invalid("a standard trace is known for matrix, weyl_torus and polynomial_torus only".into())),
    }
}

fn trace(v: &Value, spec: &Value, carrier: &CarrierRef, win: Option<Vec<String>>) -> Result<Trace> {
    let field = carrier.field();
    match get(v, "trace")? {
        Value::String(s) if s == "standard" => standard_trace(spec, carrier),
        Value::Object(m) => {
            let values = m.iter().map(|(l, c)| Ok((l.clone(), parse_scalar(&field, c)?))).collect::<Result<Vec<_>>>()?;
            validate_trace(carrier.as_ref(), Trace::table(field, values), win)
        }
        other => Err(Error::Parse(format!("\"trace\" must be \"standard\" or a table, got {other}"))),
    }
}

fn derivations(v: &Value, spec: &Value, carrier: &CarrierRef, win: Option<Vec<String>>) -> Result<Vec<Derivation>> {
    let field = carrier.field();
    match get(v, "derivations")? {
        Value::String(s) if s == "torus" && construct(spec) == Some("polynomial_torus") => {
            let t = polynomial_torus()?;
            Ok(vec![t.x1, t.x2])
        }
        Value::Array(ds) => ds
            .iter()
            .map(|d| {
                if let Some(a) = d.get("inner") {
                    let a = Element::from_json(field, a)?;
                    let images = match carrier.finite_labels() {
                        Some(ls) => ls.to_vec(),
                        None => win.clone().ok_or_else(|| Error::Invalid("inner derivations of an infinite carrier need a window".into()))?,
                    };
                    let table = images
                        .into_iter()
                        .map(|l| {
                            let x = Element::basis(field, l.clone());
                            Ok((l, carrier.commutator(&a, &x)?))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    return validate_derivation(carrier.as_ref(), Derivation::table(field, table), win.clone());
                }
                let m = get(d, "values")?.as_object().ok_or_else(|| Error::Parse("\"values\" must be an object".into()))?;
                let table = m.iter().map(|(l, x)| Ok((l.clone(), Element::from_json(field, x)?))).collect::<Result<Vec<_>>>()?;
                validate_derivation(carrier.as_ref(), Derivation::table(field, table), win.clone())
            })
            .collect(),
        other => Err(Error::Parse(format!("unsupported \"derivations\" {other}"))),
    }
}

fn lie_class(v: &Value, dim: usize, n: usize, field: &crate::scalar::FieldSpec) -> Result<SparseVec> {
    let m = get(v, "c")?.as_object().ok_or_else(|| Error::Parse("\"c\" must be an object".into()))?;
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (key, coeff) in m {
        let idx = if key.is_empty() {
            Vec::new()
        } else {
            key.split(',')
                .map(|s| s.trim().parse::<usize>().ok().filter(|&i| (1..=dim).contains(&i)).map(|i| i - 1))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Parse(format!("bad exterior index {key:?}")))?
        };
        if idx.len() != n {
            return Err(Error::DegreeMismatch { expected: n, found: idx.len() });
        }
        let c = parse_scalar(field, coeff)?;
        for (k, s) in wedge(dim, &idx, field) {
            let e = acc.entry(k).or_insert_with(|| Scalar::zero(field));
            *e = &*e + &(&s * &c);
        }
    }
    Ok(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect())
}

fn degree(v: &Value) -> Result<usize> {
    get(v, "degree")?.as_u64().map(|d| d as usize).ok_or_else(|| Error::Parse("\"degree\" must be a non-negative integer".into()))
}

fn lattice_rank(spec: Option<&Value>) -> Option<usize> {
    match spec.and_then(construct) {
        Some("polynomial_torus") => Some(2),
        Some("group") => match spec.map(group_from_json) {
            Some(Ok(GroupData::Lattice(k))) => Some(k),
            _ => None,
        },
        _ => None,
    }
}

fn group_cocycle(v: &Value) -> Result<GroupCocycleData> {
    let field = parse_field(v)?;
    let group = group_from_json(get(v, "group")?)?;
    let name = get(v, "cocycle")?.as_str().ok_or_else(|| Error::Parse("\"cocycle\" must be a string".into()))?;
    match (name, &group) {
        ("determinant", GroupData::Lattice(2)) => Ok(GroupCocycleData::determinant(field)),
        ("coordinate", GroupData::Lattice(k)) => {
            let i = v.get("index").and_then(Value::as_u64).unwrap_or(1) as usize;
            if !(1..=*k).contains(&i) {
                return Err(Error::Parse(format!("\"index\" must lie in 1..={k}")));
            }
            Ok(GroupCocycleData::coordinate(field, *k, i - 1))
        }
        ("unit", _) => Ok(GroupCocycleData::unit(field, group)),
        _ => Err(Error::Invalid(format!("unknown group cocycle {name:?} for this group"))),
    }
}

/// Reads a cocycle spec. Unless `"verify": false`, the result is validated
/// (cyclic and closed) on its window and carries the stamp.
pub fn cocycle_from_json(v: &Value) -> Result<Cochain> {
    let kind = get(v, "kind")?.as_str().ok_or_else(|| Error::Parse("\"kind\" must be a string".into()))?;
    let verify = v.get("verify").and_then(Value::as_bool).unwrap_or(true);
    if kind == "group_cocycle" {
        let c = group_cocycle(v)?;
        let rank = match c.group() {
            GroupData::Lattice(k) => Some(*k),
            GroupData::Finite(_) => None,
        };
        let win = window(v, rank)?;
        if verify {
            return group_cocycle_to_cyclic(&c, win);
        }
        return Ok(Cochain::rule(c.carrier()?, c.degree(), super::cochain::CochainRule::FromGroupCocycle(c)));
    }
    let spec = get(v, "algebra")?;
    let carrier = carrier_from_spec(spec)?;
    let win = window(v, lattice_rank(Some(spec)))?;
    let phi = match kind {
        "trace" => Cochain::from_trace(carrier.clone(), trace(v, spec, &carrier, win.clone())?),
        "lie" => {
            let n = degree(v)?;
            let tau = match v.get("trace") {
                Some(_) => trace(v, spec, &carrier, win.clone())?,
                None => standard_trace(spec, &carrier)?,
            };
            let ds = derivations(v, spec, &carrier, win.clone())?;
            let c = lie_class(v, ds.len(), n, &carrier.field())?;
            lie_action_to_cyclic(carrier.clone(), tau, ds, c, n, win.clone())?
        }
        "explicit" => {
            let n = degree(v)?;
            let field = carrier.field();
            let rows = get(v, "values")?.as_array().ok_or_else(|| Error::Parse("\"values\" must be an array".into()))?;
            let table = rows
                .iter()
                .map(|r| Ok((strings(get(r, "tensor")?)?, parse_scalar(&field, get(r, "value")?)?)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            Cochain::explicit(carrier.clone(), n, table)?
        }
        other => return Err(Error::Parse(format!("unknown cocycle kind {other:?}"))),
    };
    if verify {
        validate_cyclic_cocycle(phi, win)
    } else {
        Ok(phi)
    }
}

/// Reads an `AlgMatrix` over the cocycle's carrier; see [`AlgMatrix::from_json`].
pub fn matrix_from_json(carrier: CarrierRef, v: &Value) -> Result<AlgMatrix> {
    AlgMatrix::from_json(carrier, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::{pair_even, pair_odd};
    use serde_json::json;

    #[test]
    fn trace_spec_pairs_with_projection() {
        let phi = cocycle_from_json(&json!({"kind": "trace", "algebra": {"construct": "weyl_torus", "p": 1, "q": 3}, "trace": "standard"})).unwrap();
        assert!(phi.is_verified());
        let e = matrix_from_json(
            phi.carrier().clone(),
            &json!({"entries": [[{"UV:(0,0)": "1/3", "UV:(1,0)": "1/3", "UV:(2,0)": "1/3"}]], "certificate": "idempotent"}),
        );
        assert_eq!(pair_even(&phi, &e.unwrap()).unwrap().value.to_string(), "1/3");
    }

    #[test]
    fn lie_and_group_specs() {
        let phi = cocycle_from_json(&json!({
            "kind": "lie", "algebra": {"construct": "polynomial_torus"}, "degree": 1,
            "derivations": "torus", "c": {"1": "1"}, "window_radius": 1
        }))
        .unwrap();
        let u = matrix_from_json(phi.carrier().clone(), &json!({"entries": [[{"g:(1,0)": "1"}]], "witness": [[{"g:(-1,0)": "1"}]]})).unwrap();
        assert_eq!(pair_odd(&phi, &u).unwrap().value.to_string(), "1");
        let w = cocycle_from_json(&json!({"kind": "group_cocycle", "group": {"lattice": 1}, "cocycle": "coordinate", "window_radius": 2})).unwrap();
        let u = matrix_from_json(w.carrier().clone(), &json!({"entries": [[{"g:(1)": "1"}]], "witness": [[{"g:(-1)": "1"}]]})).unwrap();
        assert_eq!(pair_odd(&w, &u).unwrap().value.to_string(), "1");
    }

    #[test]
    fn explicit_spec_and_errors() {
        let bad = cocycle_from_json(&json!({
            "kind": "explicit", "algebra": {"construct": "matrix", "n": 2}, "degree": 0,
            "values": [{"tensor": ["E:1,2"], "value": "1"}]
        }));
        assert!(matches!(bad, Err(Error::NotClosed(_))));
        let raw = cocycle_from_json(&json!({
            "kind": "explicit", "algebra": {"construct": "matrix", "n": 2}, "degree": 0, "verify": false,
            "values": [{"tensor": ["E:1,2"], "value": "1"}]
        }))
        .unwrap();
        assert!(!raw.is_verified());
        assert!(cocycle_from_json(&json!({"kind": "nope", "algebra": {"construct": "matrix", "n": 1}})).unwrap_err().is_input_error());
        assert!(matches!(
            cocycle_from_json(&json!({"kind": "lie", "algebra": {"construct": "polynomial_torus"}, "degree": 2, "derivations": "torus", "c": {"1": "1"}})),
            Err(Error::DegreeMismatch { expected: 2, found: 1 })
        ));
    }
}
