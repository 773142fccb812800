use std::fmt;

use serde_json::{json, Value};

use super::cochain::CarrierRef;
use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Proof obligations checked exactly when a matrix is stamped.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// `E·E = E`.
    Idempotent,
    /// `E·W = W·E = 1` for the stored witness.
    Invertible { witness: Vec<Vec<Element>> },
}

/// A square matrix over a carrier algebra.
#[derive(Clone)]
pub struct AlgMatrix {
    carrier: CarrierRef,
    entries: Vec<Vec<Element>>,
    certificate: Option<Certificate>,
}

impl fmt::Debug for AlgMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgMatrix")
            .field("carrier", &self.carrier.name())
            .field("entries", &self.entries)
            .field("certificate", &self.certificate)
            .finish()
    }
}

impl PartialEq for AlgMatrix {
    fn eq(&self, other: &Self) -> bool {
        same_carrier(&self.carrier, &other.carrier) && self.entries == other.entries
    }
}

/// Carriers agree when they are the same object or have the same name,
/// field and (finite) basis.
pub fn same_carrier(a: &CarrierRef, b: &CarrierRef) -> bool {
    std::sync::Arc::ptr_eq(a, b) || (a.name() == b.name() && a.field() == b.field() && a.finite_labels() == b.finite_labels())
}

impl AlgMatrix {
    pub fn new(carrier: CarrierRef, entries: Vec<Vec<Element>>) -> Result<Self> {
        let k = entries.len();
        if k == 0 || entries.iter().any(|r| r.len() != k) {
            return Err(Error::Invalid("matrix must be square and nonempty".into()));
        }
        for x in entries.iter().flatten() {
            carrier.check_element(x)?;
        }
        Ok(AlgMatrix { carrier, entries, certificate: None })
    }

    /// A `1×1` matrix.
    pub fn element(carrier: CarrierRef, x: Element) -> Result<Self> {
        Self::new(carrier, vec![vec![x]])
    }

    pub fn identity(carrier: CarrierRef, k: usize) -> Self {
        let f = carrier.field();
        let entries = (0..k).map(|i| (0..k).map(|j| if i == j { carrier.unit() } else { Element::zero(f) }).collect()).collect();
        AlgMatrix { carrier, entries, certificate: None }
    }

    pub fn carrier(&self) -> &CarrierRef {
        &self.carrier
    }

    pub fn field(&self) -> FieldSpec {
        self.carrier.field()
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Element {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Element>] {
        &self.entries
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    pub fn is_idempotent_certified(&self) -> bool {
        matches!(self.certificate, Some(Certificate::Idempotent))
    }

    /// The inverse recorded by an invertibility certificate.
    pub fn witness(&self) -> Option<AlgMatrix> {
        match &self.certificate {
            Some(Certificate::Invertible { witness }) => {
                Some(AlgMatrix { carrier: self.carrier.clone(), entries: witness.clone(), certificate: None })
            }
            _ => None,
        }
    }

    fn check_compatible(&self, other: &AlgMatrix) -> Result<()> {
        if !same_carrier(&self.carrier, &other.carrier) {
            return Err(Error::CarrierMismatch(format!("{} vs {}", self.carrier.name(), other.carrier.name())));
        }
        if self.size() != other.size() {
            return Err(Error::CarrierMismatch(format!("sizes {} and {} differ", self.size(), other.size())));
        }
        Ok(())
    }

    pub fn mul(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        self.check_compatible(other)?;
        let k = self.size();
        let mut entries = vec![vec![Element::zero(self.field()); k]; k];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                for l in 0..k {
                    let p = self.carrier.mul(&self.entries[i][l], &other.entries[l][j])?;
                    out.add_scaled(&Scalar::one(&self.field()), &p);
                }
            }
        }
        Ok(AlgMatrix { carrier: self.carrier.clone(), entries, certificate: None })
    }

    pub fn lin_comb(&self, c: &Scalar, other: &AlgMatrix) -> Result<AlgMatrix> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(&y.scale(c))).collect())
            .collect();
        Ok(AlgMatrix { carrier: self.carrier.clone(), entries, certificate: None })
    }

    pub fn sub(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        self.lin_comb(&Scalar::from_int(&self.field(), -1), other)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Element::is_zero)
    }

    /// Block diagonal `diag(self, other)`; certificates combine when both
    /// sides carry the same kind.
    pub fn direct_sum(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        if !same_carrier(&self.carrier, &other.carrier) {
            return Err(Error::CarrierMismatch(format!("{} vs {}", self.carrier.name(), other.carrier.name())));
        }
        let zero = Element::zero(self.field());
        let block = |a: &[Vec<Element>], b: &[Vec<Element>]| -> Vec<Vec<Element>> {
            let (p, q) = (a.len(), b.len());
            (0..p + q)
                .map(|i| {
                    (0..p + q)
                        .map(|j| match (i < p, j < p) {
                            (true, true) => a[i][j].clone(),
                            (false, false) => b[i - p][j - p].clone(),
                            _ => zero.clone(),
                        })
                        .collect()
                })
                .collect()
        };
        let certificate = match (&self.certificate, &other.certificate) {
            (Some(Certificate::Idempotent), Some(Certificate::Idempotent)) => Some(Certificate::Idempotent),
            (Some(Certificate::Invertible { witness: w1 }), Some(Certificate::Invertible { witness: w2 })) => {
                Some(Certificate::Invertible { witness: block(w1, w2) })
            }
            _ => None,
        };
        Ok(AlgMatrix { carrier: self.carrier.clone(), entries: block(&self.entries, &other.entries), certificate })
    }

    /// Stamps the idempotent certificate after checking `E·E = E`.
    pub fn certify_idempotent(mut self) -> Result<AlgMatrix> {
        if self.mul(&self)? != self {
            return Err(Error::NotIdempotent);
        }
        self.certificate = Some(Certificate::Idempotent);
        Ok(self)
    }

    /// Stamps the invertible certificate after checking `E·W = W·E = 1`.
    pub fn certify_invertible(mut self, witness: &AlgMatrix) -> Result<AlgMatrix> {
        let id = AlgMatrix::identity(self.carrier.clone(), self.size());
        if self.mul(witness)? != id || witness.mul(&self)? != id {
            return Err(Error::NotInvertible);
        }
        self.certificate = Some(Certificate::Invertible { witness: witness.entries.clone() });
        Ok(self)
    }

    /// `Σ e_ii` as an element of the carrier.
    pub fn trace_element(&self) -> Element {
        let mut acc = Element::zero(self.field());
        for i in 0..self.size() {
            acc = acc.add(&self.entries[i][i]);
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        let rows = |m: &[Vec<Element>]| -> Value { m.iter().map(|r| r.iter().map(Element::to_json).collect::<Vec<_>>()).collect() };
        let mut out = json!({ "carrier": self.carrier.name(), "entries": rows(&self.entries) });
        match &self.certificate {
            Some(Certificate::Idempotent) => out["certificate"] = json!("idempotent"),
            Some(Certificate::Invertible { witness }) => {
                out["certificate"] = json!("invertible");
                out["witness"] = rows(witness);
            }
            None => {}
        }
        out
    }

    /// Reads `{"entries": [[element, …], …], "witness"?: …, "certificate"?:
    /// "idempotent" | "invertible"}`. A witness requests the invertible
    /// certificate; `"certificate": "idempotent"` requests the other.
    pub fn from_json(carrier: CarrierRef, v: &Value) -> Result<AlgMatrix> {
        let f = carrier.field();
        let rows = |key: &str| -> Result<Option<Vec<Vec<Element>>>> {
            let Some(m) = v.get(key) else { return Ok(None) };
            let m = m.as_array().ok_or_else(|| Error::Parse(format!("{key:?} must be an array of rows")))?;
            m.iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| Error::Parse(format!("rows of {key:?} must be arrays")))?
                        .iter()
                        .map(|x| Element::from_json(f, x))
                        .collect()
                })
                .collect::<Result<Vec<_>>>()
                .map(Some)
        };
        let entries = rows("entries")?.ok_or_else(|| Error::Parse("missing \"entries\"".into()))?;
        let m = AlgMatrix::new(carrier.clone(), entries).map_err(|e| match e {
            Error::Invalid(s) => Error::Parse(s),
            other => other,
        })?;
        if let Some(w) = rows("witness")? {
            let w = AlgMatrix::new(carrier, w)?;
            return m.certify_invertible(&w);
        }
        match v.get("certificate").and_then(Value::as_str) {
            Some("idempotent") => m.certify_idempotent(),
            Some("invertible") => Err(Error::NoCertificate),
            Some(other) => Err(Error::Parse(format!("unknown certificate {other:?}"))),
            None => Ok(m),
        }
    }
}

/// Outcome of a Murray–von Neumann check with the residuals `uv − e` and
/// `vu − f`.
#[derive(Clone, Debug)]
pub struct MvnVerdict {
    pub equivalent: bool,
    pub uv_minus_e: AlgMatrix,
    pub vu_minus_f: AlgMatrix,
}

impl MvnVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "equivalent": self.equivalent,
            "uv_minus_e": self.uv_minus_e.to_json()["entries"],
            "vu_minus_f": self.vu_minus_f.to_json()["entries"],
        })
    }
}

/// Whether `uv = e` and `vu = f` hold exactly.
pub fn mvn_check(e: &AlgMatrix, f: &AlgMatrix, u: &AlgMatrix, v: &AlgMatrix) -> Result<MvnVerdict> {
    let r1 = u.mul(v)?.sub(e)?;
    let r2 = v.mul(u)?.sub(f)?;
    Ok(MvnVerdict { equivalent: r1.is_zero() && r2.is_zero(), uv_minus_e: r1, vu_minus_f: r2 })
}
