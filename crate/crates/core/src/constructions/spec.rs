//! JSON construction specs, composable by nesting:
//!
//! ```json
//! {"construct": "matrix", "n": 2, "field": "Q"}
//! {"construct": "matrix", "n": 2, "base": {"construct": "truncated_poly", "m": 2}}
//! {"construct": "group", "cyclic": 2}
//! {"construct": "groupoid", "objects": 2, "isotropy": {"cyclic": 2}}
//! {"construct": "crossed_product", "base": <spec>, "group": {"cyclic": 2},
//!  "maps": {"1": {"x": {"x": "-1"}}}}
//! {"construct": "weyl_torus", "p": 1, "q": 3}
//! {"construct": "polynomial_torus"}
//! {"construct": "rewriting", "generators": ["x", "y"],
//!  "rules": [{"lhs": "yx", "rhs": {"xy": "1"}}], "fuel": 1000}
//! {"construct": "extension", "base": <spec>, "module": {...}, "cocycle": [...]}
//! ```
//!
//! A spec without `"construct"` is read as a plain algebra definition.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use super::*;
use crate::algebra::json::{algebra_from_json, parse_field};
use crate::algebra::{BasedAlgebra, Carrier};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::scalar::{FieldSpec, Scalar};

/// The result of a construction: finite or based.
#[derive(Clone, Debug)]
pub enum Built {
    Finite(Algebra),
    Based(Arc<BasedAlgebra>),
}

impl Built {
    pub fn carrier(&self) -> &dyn Carrier {
        match self {
            Built::Finite(a) => a,
            Built::Based(b) => b.as_ref(),
        }
    }

    pub fn finite(&self) -> Result<&Algebra> {
        match self {
            Built::Finite(a) => Ok(a),
            Built::Based(b) => Err(Error::Invalid(format!("{} is not finite-dimensional", b.name()))),
        }
    }

    pub fn into_finite(self) -> Result<Algebra> {
        match self {
            Built::Finite(a) => Ok(a),
            Built::Based(b) => Err(Error::Invalid(format!("{} is not finite-dimensional", b.name()))),
        }
    }
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("construction spec needs {key:?}")))
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    get(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse(format!("{key:?} must be a non-negative integer")))
}

fn get_i64(v: &Value, key: &str) -> Result<i64> {
    get(v, key)?.as_i64().ok_or_else(|| Error::Parse(format!("{key:?} must be an integer")))
}

fn strings(v: &Value) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array of strings, got {v}")))?
        .iter()
        .map(|s| s.as_str().map(str::to_string).ok_or_else(|| Error::Parse(format!("{s} is not a string"))))
        .collect()
}

fn literal(field: &FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Ok(Scalar::parse(field, s)?),
        Value::Number(n) => Ok(Scalar::parse(field, &n.to_string())?),
        other => Err(Error::Parse(format!("expected a scalar literal, got {other}"))),
    }
}

fn sub_finite(v: &Value, key: &str) -> Result<Algebra> {
    build(get(v, key)?)?.into_finite()
}

/// Group specs: `{"cyclic": n}`, `{"symmetric": k}`, `{"lattice": k}` or
/// `{"elements": [...], "mult": [[name, ...], ...]}`.
pub fn group_from_json(v: &Value) -> Result<GroupData> {
    if let Some(n) = v.get("cyclic") {
        let n = n.as_u64().filter(|&n| n >= 1).ok_or_else(|| Error::Parse("\"cyclic\" needs a positive order".into()))?;
        return Ok(GroupData::Finite(FiniteGroup::cyclic(n as usize)));
    }
    if let Some(k) = v.get("symmetric") {
        let k = k.as_u64().filter(|&k| (1..=5).contains(&k)).ok_or_else(|| Error::Parse("\"symmetric\" needs 1..=5".into()))?;
        return Ok(GroupData::Finite(FiniteGroup::symmetric(k as usize)));
    }
    if let Some(k) = v.get("lattice") {
        let k = k.as_u64().filter(|&k| k >= 1).ok_or_else(|| Error::Parse("\"lattice\" needs a positive rank".into()))?;
        return Ok(GroupData::Lattice(k as usize));
    }
    let names = strings(get(v, "elements")?)?;
    let rows = get(v, "mult")?.as_array().ok_or_else(|| Error::Parse("\"mult\" must be an array".into()))?;
    let pos = |s: &Value| -> Result<usize> {
        let s = s.as_str().ok_or_else(|| Error::Parse("table entries must be element names".into()))?;
        names.iter().position(|n| n == s).ok_or_else(|| Error::UnknownLabel(s.into()))
    };
    let mult = rows
        .iter()
        .map(|r| r.as_array().ok_or_else(|| Error::Parse("table rows must be arrays".into()))?.iter().map(pos).collect())
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Ok(GroupData::Finite(FiniteGroup::new(names, mult)?))
}

fn finite_group(v: &Value) -> Result<FiniteGroup> {
    match group_from_json(v)? {
        GroupData::Finite(g) => Ok(g),
        GroupData::Lattice(_) => Err(Error::Invalid("a finite group is required here".into())),
    }
}

fn groupoid_from_json(v: &Value) -> Result<Groupoid> {
    if let Some(n) = v.get("pairs") {
        let n = n.as_u64().filter(|&n| n >= 1).ok_or_else(|| Error::Parse("\"pairs\" needs a positive count".into()))?;
        return Ok(Groupoid::pairs(n as usize));
    }
    if let Some(iso) = v.get("isotropy") {
        return Ok(Groupoid::transitive(get_usize(v, "objects")?.max(1), &finite_group(iso)?));
    }
    let s = |x: &Value| x.as_str().map(str::to_string).ok_or_else(|| Error::Parse(format!("{x} is not a string")));
    let mut data = GroupoidData { objects: strings(get(v, "objects")?)?, ..Default::default() };
    for m in get(v, "morphisms")?.as_array().ok_or_else(|| Error::Parse("\"morphisms\" must be an array".into()))? {
        data.morphisms.push((s(get(m, "name")?)?, s(get(m, "source")?)?, s(get(m, "target")?)?));
    }
    for c in get(v, "compose")?.as_array().ok_or_else(|| Error::Parse("\"compose\" must be an array".into()))? {
        let t = strings(c)?;
        if t.len() != 3 {
            return Err(Error::Parse("compose entries are [a, b, a∘b]".into()));
        }
        data.compose.push((t[0].clone(), t[1].clone(), t[2].clone()));
    }
    let pairs = |key: &str| -> Result<Vec<(String, String)>> {
        get(v, key)?
            .as_object()
            .ok_or_else(|| Error::Parse(format!("{key:?} must be an object")))?
            .iter()
            .map(|(k, x)| Ok((k.clone(), s(x)?)))
            .collect()
    };
    data.identities = pairs("identities")?;
    data.inverses = pairs("inverses")?;
    Groupoid::new(data)
}

/// Image of each basis label, as `{label: element}`; unlisted labels are fixed.
fn linear_map(a: &Algebra, v: &Value) -> Result<SparseMatrix> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("an action map must be an object".into()))?;
    let one = Scalar::one(&a.field());
    let mut cols: Vec<_> = (0..a.dim()).map(|j| vec![(j, one.clone())]).collect();
    for (l, img) in obj {
        let j = a.index_of(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
        cols[j] = a.coords(&Element::from_json(a.field(), img)?)?;
    }
    Ok(SparseMatrix::from_columns(a.dim(), a.field(), cols))
}

fn matrix_from_rows(field: FieldSpec, v: &Value, n: usize) -> Result<SparseMatrix> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("a matrix is an array of rows".into()))?;
    let dense = rows
        .iter()
        .map(|r| r.as_array().ok_or_else(|| Error::Parse("matrix rows are arrays".into()))?.iter().map(|x| literal(&field, x)).collect())
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    if dense.len() != n || dense.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("expected a {n}x{n} matrix")));
    }
    Ok(SparseMatrix::from_dense(field, &dense))
}

fn bimodule_from_json(a: &Algebra, v: &Value) -> Result<BimoduleData> {
    if v.as_str() == Some("regular") {
        return Ok(BimoduleData::regular(a));
    }
    let labels = strings(get(v, "labels")?)?;
    let k = labels.len();
    let side = |key: &str| -> Result<Vec<SparseMatrix>> {
        let obj = get(v, key)?.as_object().ok_or_else(|| Error::Parse(format!("{key:?} must be an object")))?;
        let mut out = vec![SparseMatrix::zeros(k, k, a.field()); a.dim()];
        for (l, m) in obj {
            let i = a.index_of(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            out[i] = matrix_from_rows(a.field(), m, k)?;
        }
        Ok(out)
    };
    Ok(BimoduleData { labels, left: side("left")?, right: side("right")? })
}

fn cochain_from_json(a: &Algebra, m: &BimoduleData, v: &Value) -> Result<TwoCochain> {
    let d = a.dim();
    let mut values = vec![Vec::new(); d * d];
    for e in v.as_array().ok_or_else(|| Error::Parse("\"cocycle\" must be an array".into()))? {
        let look = |key: &str| -> Result<usize> {
            let l = get(e, key)?.as_str().ok_or_else(|| Error::Parse(format!("{key:?} must be a label")))?;
            a.index_of(l).ok_or_else(|| Error::UnknownLabel(l.into()))
        };
        let (i, j) = (look("a")?, look("b")?);
        let obj = get(e, "value")?.as_object().ok_or_else(|| Error::Parse("\"value\" must be an object".into()))?;
        let mut vals = BTreeMap::new();
        for (l, c) in obj {
            let k = m.labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            vals.insert(k, literal(&a.field(), c)?);
        }
        values[i * d + j] = vals.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    Ok(TwoCochain { values })
}

fn word_key(key: &str, gens: &[String]) -> Result<Vec<usize>> {
    if key.is_empty() || key == "1" {
        return Ok(Vec::new());
    }
    parse_word_spec(key, gens)
}

fn rewriting_from_json(v: &Value) -> Result<BasedAlgebra> {
    let field = parse_field(v)?;
    let gens = strings(get(v, "generators")?)?;
    let mut rules = Vec::new();
    for r in get(v, "rules")?.as_array().ok_or_else(|| Error::Parse("\"rules\" must be an array".into()))? {
        let lhs = get(r, "lhs")?.as_str().ok_or_else(|| Error::Parse("\"lhs\" must be a word".into()))?;
        let lhs = parse_word_spec(lhs, &gens)?;
        if lhs.len() != 2 {
            return Err(Error::Parse("rule left-hand sides are two-letter words".into()));
        }
        let rhs = get(r, "rhs")?
            .as_object()
            .ok_or_else(|| Error::Parse("\"rhs\" must be an object".into()))?
            .iter()
            .map(|(w, c)| Ok((word_key(w, &gens)?, literal(&field, c)?)))
            .collect::<Result<Vec<_>>>()?;
        rules.push(RewriteRule { lhs: (lhs[0], lhs[1]), rhs });
    }
    let fuel = v.get("fuel").and_then(Value::as_u64).unwrap_or(10_000) as usize;
    let name = v.get("name").and_then(Value::as_str).unwrap_or("rewriting");
    rewriting_algebra(name, field, gens, rules, fuel)
}

/// Builds the algebra a spec describes.
pub fn build(v: &Value) -> Result<Built> {
    let Some(kind) = v.get("construct") else {
        return Ok(Built::Finite(algebra_from_json(v)?));
    };
    let kind = kind.as_str().ok_or_else(|| Error::Parse("\"construct\" must be a string".into()))?;
    let field = parse_field(v)?;
    Ok(match kind {
        "algebra" => Built::Finite(algebra_from_json(get(v, "definition")?)?),
        "matrix" => {
            let n = get_usize(v, "n")?;
            match v.get("base") {
                None => Built::Finite(matrix_algebra(field, n)?),
                Some(b) => {
                    let base = build(b)?.into_finite()?;
                    Built::Finite(tensor_product(&matrix_algebra(base.field(), n)?, &base)?)
                }
            }
        }
        "truncated_poly" => Built::Finite(truncated_poly(field, get_usize(v, "m")?)?),
        "group" => match group_from_json(v)? {
            GroupData::Finite(g) => Built::Finite(group_algebra(field, &g)?),
            GroupData::Lattice(k) => Built::Based(Arc::new(lattice_group_algebra(field, k)?)),
        },
        "groupoid" => Built::Finite(groupoid_algebra(field, &groupoid_from_json(v)?)?),
        "direct_sum" | "tensor" => {
            let key = if kind == "tensor" { "factors" } else { "summands" };
            let parts = get(v, key)?.as_array().ok_or_else(|| Error::Parse(format!("{key:?} must be an array")))?;
            let algs = parts.iter().map(|p| build(p)?.into_finite()).collect::<Result<Vec<_>>>()?;
            let (first, rest) = algs.split_first().ok_or_else(|| Error::Parse(format!("{key:?} is empty")))?;
            let mut acc = first.clone();
            for b in rest {
                acc = if kind == "tensor" { tensor_product(&acc, b)? } else { direct_sum(&acc, b)? };
            }
            Built::Finite(acc)
        }
        "opposite" => Built::Finite(opposite(&sub_finite(v, "base")?)?),
        "crossed_product" => {
            let base = sub_finite(v, "base")?;
            let g = finite_group(get(v, "group")?)?;
            let empty = serde_json::Map::new();
            let maps_json = v.get("maps").and_then(Value::as_object).unwrap_or(&empty);
            let mut maps = Vec::with_capacity(g.order());
            for x in 0..g.order() {
                maps.push(match maps_json.get(g.name(x)) {
                    Some(m) => linear_map(&base, m)?,
                    None => SparseMatrix::identity(base.dim(), base.field()),
                });
            }
            Built::Finite(crossed_product(&base, &ActionData::new(&base, g, maps)?)?)
        }
        "weyl_torus" => Built::Finite(weyl_torus(get_i64(v, "p")?, get_i64(v, "q")?)?),
        "polynomial_torus" => Built::Based(polynomial_torus()?.algebra),
        "rewriting" => Built::Based(Arc::new(rewriting_from_json(v)?)),
        "extension" => {
            let base = sub_finite(v, "base")?;
            let m = bimodule_from_json(&base, get(v, "module")?)?;
            let f = cochain_from_json(&base, &m, get(v, "cocycle")?)?;
            Built::Finite(extension_from_2cocycle(&base, &m, &f)?)
        }
        other => return Err(Error::Parse(format!("unknown construction {other:?}"))),
    })
}
