use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Algebra, Carrier, Element};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::scalar::{FieldSpec, Scalar};

pub type ScalarRule = Arc<dyn Fn(&str) -> Scalar + Send + Sync>;
pub type ElementRule = Arc<dyn Fn(&str) -> Element + Send + Sync>;

#[derive(Clone)]
enum TraceValues {
    Table(BTreeMap<String, Scalar>),
    Rule(ScalarRule),
}

/// A linear functional given on basis labels; a trace once validated.
#[derive(Clone)]
pub struct Trace {
    field: FieldSpec,
    values: TraceValues,
    window: Option<Vec<String>>,
}

impl std::fmt::Debug for Trace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Trace").field("field", &self.field).field("window", &self.window).finish()
    }
}

impl Trace {
    /// Values on listed labels; every other label maps to zero.
    pub fn table(field: FieldSpec, values: impl IntoIterator<Item = (String, Scalar)>) -> Self {
        let values = values.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Trace { field, values: TraceValues::Table(values), window: None }
    }

    pub fn rule(field: FieldSpec, f: impl Fn(&str) -> Scalar + Send + Sync + 'static) -> Self {
        Trace { field, values: TraceValues::Rule(Arc::new(f)), window: None }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Labels on which the trace property was verified, if it was.
    pub fn window(&self) -> Option<&[String]> {
        self.window.as_deref()
    }

    pub fn value(&self, label: &str) -> Scalar {
        match &self.values {
            TraceValues::Table(t) => t.get(label).cloned().unwrap_or_else(|| Scalar::zero(&self.field)),
            TraceValues::Rule(f) => f(label),
        }
    }

    pub fn apply(&self, x: &Element) -> Scalar {
        let mut acc = Scalar::zero(&self.field);
        for (l, c) in x.terms() {
            acc = &acc + &(c * &self.value(l));
        }
        acc
    }

    /// `a·self + b·other`; the verified window is dropped.
    pub fn lin_comb(&self, a: &Scalar, other: &Trace, b: &Scalar) -> Trace {
        let (s, o, a, b) = (self.clone(), other.clone(), a.clone(), b.clone());
        Trace::rule(self.field, move |l| &(&a * &s.value(l)) + &(&b * &o.value(l)))
    }
}

/// Checks `τ(ab) = τ(ba)` on all pairs from the window (the whole basis
/// of a finite carrier when `window` is `None`) and stamps the window.
pub fn validate_trace(carrier: &dyn Carrier, mut raw: Trace, window: Option<Vec<String>>) -> Result<Trace> {
    let window = resolve_window(carrier, window)?;
    for (n, i) in window.iter().enumerate() {
        for j in &window[n + 1..] {
            let (a, b) = (Element::basis(carrier.field(), i.clone()), Element::basis(carrier.field(), j.clone()));
            let c = carrier.commutator(&a, &b)?;
            if !raw.apply(&c).is_zero() {
                return Err(Error::NotATrace { i: i.clone(), j: j.clone() });
            }
        }
    }
    raw.window = Some(window);
    Ok(raw)
}

fn resolve_window(carrier: &dyn Carrier, window: Option<Vec<String>>) -> Result<Vec<String>> {
    match window {
        Some(w) => {
            for l in &w {
                if !carrier.contains(l) {
                    return Err(Error::UnknownLabel(l.clone()));
                }
            }
            Ok(w)
        }
        None => carrier
            .finite_labels()
            .map(<[String]>::to_vec)
            .ok_or_else(|| Error::Invalid(format!("{} has an infinite basis; a window is required", carrier.name()))),
    }
}

#[derive(Clone)]
enum DerivationValues {
    Table(BTreeMap<String, Element>),
    Rule(ElementRule),
}

/// A linear map given on basis labels; a derivation once validated.
#[derive(Clone)]
pub struct Derivation {
    field: FieldSpec,
    values: DerivationValues,
    window: Option<Vec<String>>,
}

impl std::fmt::Debug for Derivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Derivation").field("field", &self.field).field("window", &self.window).finish()
    }
}

impl Derivation {
    pub fn table(field: FieldSpec, values: impl IntoIterator<Item = (String, Element)>) -> Self {
        Derivation { field, values: DerivationValues::Table(values.into_iter().collect()), window: None }
    }

    pub fn rule(field: FieldSpec, f: impl Fn(&str) -> Element + Send + Sync + 'static) -> Self {
        Derivation { field, values: DerivationValues::Rule(Arc::new(f)), window: None }
    }

    /// Column `j` of `m` is the image of the `j`-th basis element.
    pub fn from_matrix(alg: &Algebra, m: &SparseMatrix) -> Self {
        let values = (0..alg.dim()).map(|j| (alg.label(j).to_string(), alg.to_element(m.column(j))));
        Self::table(alg.field(), values)
    }

    /// `ad_a: x ↦ ax − xa` on a finite algebra.
    pub fn inner(alg: &Algebra, a: &Element) -> Result<Self> {
        let mut values = Vec::new();
        for l in alg.labels() {
            let x = Element::basis(alg.field(), l.clone());
            values.push((l.clone(), alg.commutator(a, &x)?));
        }
        Ok(Self::table(alg.field(), values))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn window(&self) -> Option<&[String]> {
        self.window.as_deref()
    }

    pub fn value(&self, label: &str) -> Element {
        match &self.values {
            DerivationValues::Table(t) => t.get(label).cloned().unwrap_or_else(|| Element::zero(self.field)),
            DerivationValues::Rule(f) => f(label),
        }
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero(self.field);
        for (l, c) in x.terms() {
            out.add_scaled(c, &self.value(l));
        }
        out
    }

    /// `[self, other] = self∘other − other∘self`; the verified window is dropped.
    pub fn bracket(&self, other: &Derivation) -> Derivation {
        let (s, o) = (self.clone(), other.clone());
        Derivation::rule(self.field, move |l| s.apply(&o.value(l)).sub(&o.apply(&s.value(l))))
    }

    pub fn lin_comb(&self, a: &Scalar, other: &Derivation, b: &Scalar) -> Derivation {
        let (s, o, a, b) = (self.clone(), other.clone(), a.clone(), b.clone());
        Derivation::rule(self.field, move |l| s.value(l).scale(&a).add(&o.value(l).scale(&b)))
    }

    /// Matrix on a finite algebra, columns indexed by the basis.
    pub fn matrix(&self, alg: &Algebra) -> Result<SparseMatrix> {
        let cols = alg.labels().iter().map(|l| alg.coords(&self.value(l))).collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(alg.dim(), alg.field(), cols))
    }
}

/// Checks the Leibniz rule `D(ab) = D(a)b + aD(b)` on window pairs.
pub fn validate_derivation(carrier: &dyn Carrier, mut raw: Derivation, window: Option<Vec<String>>) -> Result<Derivation> {
    let window = resolve_window(carrier, window)?;
    for i in &window {
        for j in &window {
            let (a, b) = (Element::basis(carrier.field(), i.clone()), Element::basis(carrier.field(), j.clone()));
            let lhs = raw.apply(&carrier.mul(&a, &b)?);
            let rhs = carrier.mul(&raw.apply(&a), &b)?.add(&carrier.mul(&a, &raw.apply(&b))?);
            if lhs != rhs {
                return Err(Error::NotADerivation { i: i.clone(), j: j.clone() });
            }
        }
    }
    raw.window = Some(window);
    Ok(raw)
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceVerdict {
    pub invariant: bool,
    /// `(derivation index, label)` with `τ(D(label)) ≠ 0`.
    pub counterexample: Option<(usize, String)>,
    pub window: Vec<String>,
}

/// Whether `τ(D(e)) = 0` for each listed derivation and each label in the
/// window.
pub fn check_invariant_trace(
    carrier: &dyn Carrier,
    tau: &Trace,
    ds: &[Derivation],
    window: Option<Vec<String>>,
) -> Result<InvarianceVerdict> {
    let window = resolve_window(carrier, window)?;
    for (k, d) in ds.iter().enumerate() {
        for l in &window {
            if !tau.apply(&d.value(l)).is_zero() {
                return Ok(InvarianceVerdict { invariant: false, counterexample: Some((k, l.clone())), window });
            }
        }
    }
    Ok(InvarianceVerdict { invariant: true, counterexample: None, window })
}
