//! Associative unital algebras: finite structure-constant algebras, based
//! algebras with a product rule on a possibly infinite basis, their
//! elements, traces and derivations.

mod based;
mod element;
mod finite;
mod functional;
pub mod json;
pub mod labels;

pub use based::{AssocAudit, BasedAlgebra, LabelDomain, ProductRule};
pub use element::Element;
pub use finite::{is_isomorphism, validate_algebra, Algebra, AlgebraData};
pub use functional::{
    check_invariant_trace, validate_derivation, validate_trace, Derivation, ElementRule, InvarianceVerdict,
    ScalarRule, Trace,
};

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Anything that can multiply basis labels: the common surface of
/// [`Algebra`] and [`BasedAlgebra`].
pub trait Carrier: Send + Sync {
    fn name(&self) -> &str;
    fn field(&self) -> FieldSpec;
    fn unit(&self) -> Element;
    /// Whether `label` names a basis element.
    fn contains(&self, label: &str) -> bool;
    fn basis_product(&self, a: &str, b: &str) -> Result<Element>;
    /// The whole basis, when it is finite.
    fn finite_labels(&self) -> Option<&[String]>;

    fn check_element(&self, x: &Element) -> Result<()> {
        if x.field() != self.field() {
            return Err(Error::FieldMismatch { expected: self.field(), found: x.field() });
        }
        for (l, _) in x.terms() {
            if !self.contains(l) {
                return Err(Error::CarrierMismatch(format!("{l} is not a basis label of {}", self.name())));
            }
        }
        Ok(())
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut out = Element::zero(self.field());
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let p = self.basis_product(a, b)?;
                out.add_scaled(&(ca * cb), &p);
            }
        }
        Ok(out)
    }

    fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(self.mul(x, y)?.sub(&self.mul(y, x)?))
    }

    fn scalar(&self, c: Scalar) -> Element {
        self.unit().scale(&c)
    }

    /// `x^n` for `n ≥ 0`.
    fn pow(&self, x: &Element, n: u32) -> Result<Element> {
        let mut acc = self.unit();
        for _ in 0..n {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }
}
