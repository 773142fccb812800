use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A finite linear combination of basis labels with no stored zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Element {
    field: FieldSpec,
    terms: BTreeMap<String, Scalar>,
}

impl Element {
    pub fn zero(field: FieldSpec) -> Self {
        Element { field, terms: BTreeMap::new() }
    }

    pub fn basis(field: FieldSpec, label: impl Into<String>) -> Self {
        Self::term(label, Scalar::one(&field))
    }

    pub fn term(label: impl Into<String>, c: Scalar) -> Self {
        let field = c.field();
        let mut e = Element::zero(field);
        e.add_term(label.into(), c);
        e
    }

    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (String, Scalar)>) -> Result<Self> {
        let mut e = Element::zero(field);
        for (l, c) in terms {
            if c.field() != field {
                return Err(Error::FieldMismatch { expected: field, found: c.field() });
            }
            e.add_term(l, c);
        }
        Ok(e)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&String, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &str) -> Scalar {
        self.terms.get(label).cloned().unwrap_or_else(|| Scalar::zero(&self.field))
    }

    /// Adds `c·label` in place.
    pub fn add_term(&mut self, label: String, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(x) => {
                let s = &*x + &c;
                if s.is_zero() {
                    self.terms.remove(&label);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(label, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        for (l, x) in &other.terms {
            self.add_term(l.clone(), c * x);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(&self.field), other);
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(&self.field, -1), other);
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero(self.field);
        out.add_scaled(c, self);
        out
    }

    pub fn neg(&self) -> Element {
        self.scale(&Scalar::from_int(&self.field, -1))
    }

    /// Sparse `{label: literal}` JSON object.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self.terms.iter().map(|(l, c)| (l.clone(), serde_json::Value::String(c.to_string()))).collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(field: FieldSpec, v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse(format!("element must be an object, got {v}")))?;
        let mut e = Element::zero(field);
        for (l, lit) in obj {
            let c = match lit {
                serde_json::Value::String(s) => Scalar::parse(&field, s)?,
                serde_json::Value::Number(n) => Scalar::parse(&field, &n.to_string())?,
                other => return Err(Error::Parse(format!("coefficient of {l} must be a literal, got {other}"))),
            };
            e.add_term(l.clone(), c);
        }
        Ok(e)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c})*[{l}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
