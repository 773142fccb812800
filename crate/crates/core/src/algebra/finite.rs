use std::collections::HashMap;

use super::{Carrier, Element};
use crate::error::{Error, Result};
use crate::linalg::{accumulate, axpy, rank, SparseMatrix, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

/// Raw structure-constant data before validation.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub name: String,
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub unit: Vec<(String, Scalar)>,
    /// `(i, j, k, c)`: the coefficient of `e_k` in `e_i e_j`.
    pub structure: Vec<(String, String, String, Scalar)>,
}

/// A validated finite-dimensional associative unital algebra.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    field: FieldSpec,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    unit: SparseVec,
    /// `table[i * dim + j]` is `e_i e_j` in basis coordinates.
    table: Vec<SparseVec>,
}

pub fn validate_algebra(raw: AlgebraData) -> Result<Algebra> {
    raw.field.validate()?;
    let index = index_labels(&raw.labels)?;
    let look = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let check = |c: &Scalar| {
        if c.field() == raw.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch { expected: raw.field, found: c.field() })
        }
    };
    let d = raw.labels.len();
    let mut unit = Vec::new();
    for (l, c) in &raw.unit {
        check(c)?;
        unit.push((look(l)?, c.clone()));
    }
    let mut cells: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d * d];
    for (i, j, k, c) in &raw.structure {
        check(c)?;
        cells[look(i)? * d + look(j)?].push((look(k)?, c.clone()));
    }
    let table = cells.into_iter().map(accumulate).collect();
    Algebra::from_table(raw.name, raw.field, raw.labels, accumulate(unit), table)
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    if labels.is_empty() {
        return Err(Error::Invalid("an algebra needs at least one basis element".into()));
    }
    Ok(index)
}

impl Algebra {
    /// Builds and validates from index-based data; every construction goes
    /// through here.
    pub fn from_table(
        name: impl Into<String>,
        field: FieldSpec,
        labels: Vec<String>,
        unit: SparseVec,
        table: Vec<SparseVec>,
    ) -> Result<Algebra> {
        let index = index_labels(&labels)?;
        let d = labels.len();
        assert_eq!(table.len(), d * d, "structure table has the wrong size");
        let alg = Algebra { name: name.into(), field, labels, index, unit, table };
        alg.check_unit()?;
        alg.check_associative()?;
        Ok(alg)
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let e = vec![(i, Scalar::one(&self.field))];
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                return Err(Error::BadUnit(self.labels[i].clone()));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.product(i, j);
                for l in 0..d {
                    let e_l = [(l, Scalar::one(&self.field))];
                    let lhs = self.mul_vec(ij, &e_l);
                    let e_i = [(i, Scalar::one(&self.field))];
                    let rhs = self.mul_vec(&e_i, self.product(j, l));
                    if lhs != rhs {
                        return Err(Error::NotAssociative {
                            i: self.labels[i].clone(),
                            j: self.labels[j].clone(),
                            l: self.labels[l].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn unit_vec(&self) -> &SparseVec {
        &self.unit
    }

    /// `e_i e_j` in coordinates.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn mul_vec(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut out = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                out = axpy(&out, &(a * b), self.product(*i, *j));
            }
        }
        out
    }

    pub fn to_element(&self, v: &[(usize, Scalar)]) -> Element {
        let mut e = Element::zero(self.field);
        for (i, c) in v {
            e.add_term(self.labels[*i].clone(), c.clone());
        }
        e
    }

    pub fn coords(&self, x: &Element) -> Result<SparseVec> {
        self.check_element(x)?;
        let mut v: SparseVec = x.terms().map(|(l, c)| (self.index[l.as_str()], c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        Ok(v)
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[(usize, Scalar)]) -> SparseMatrix {
        let d = self.dim();
        let cols = (0..d).map(|j| self.mul_vec(x, &[(j, Scalar::one(&self.field))])).collect();
        SparseMatrix::from_columns(d, self.field, cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[(usize, Scalar)]) -> SparseMatrix {
        let d = self.dim();
        let cols = (0..d).map(|j| self.mul_vec(&[(j, Scalar::one(&self.field))], x)).collect();
        SparseMatrix::from_columns(d, self.field, cols)
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..i).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// `dim A/[A,A]`, straight from the structure constants.
    pub fn commutator_quotient_dim(&self) -> usize {
        let d = self.dim();
        let minus = Scalar::from_int(&self.field, -1);
        let mut cols = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                let c = axpy(self.product(i, j), &minus, self.product(j, i));
                if !c.is_empty() {
                    cols.push(c);
                }
            }
        }
        d - rank(&SparseMatrix::from_columns(d, self.field, cols))
    }

    /// `A^op`: the same space with `a·b := ba`.
    pub fn opposite(&self) -> Result<Algebra> {
        let d = self.dim();
        let table = (0..d * d).map(|k| self.table[(k % d) * d + k / d].clone()).collect();
        Algebra::from_table(format!("{}^op", self.name), self.field, self.labels.clone(), self.unit.clone(), table)
    }

    /// Structure constants as `(i, j, k, c)` label quadruples.
    pub fn structure(&self) -> Vec<(String, String, String, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.product(i, j) {
                    out.push((self.labels[i].clone(), self.labels[j].clone(), self.labels[*k].clone(), c.clone()));
                }
            }
        }
        out
    }

    pub fn to_data(&self) -> AlgebraData {
        AlgebraData {
            name: self.name.clone(),
            field: self.field,
            labels: self.labels.clone(),
            unit: self.unit.iter().map(|(i, c)| (self.labels[*i].clone(), c.clone())).collect(),
            structure: self.structure(),
        }
    }

    /// Same algebra with basis labels renamed by `f`.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Algebra> {
        let labels = self.labels.iter().map(|l| f(l)).collect();
        Algebra::from_table(self.name.clone(), self.field, labels, self.unit.clone(), self.table.clone())
    }
}

impl Carrier for Algebra {
    fn name(&self) -> &str {
        &self.name
    }

    fn field(&self) -> FieldSpec {
        self.field
    }

    fn unit(&self) -> Element {
        self.to_element(&self.unit)
    }

    fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    fn basis_product(&self, a: &str, b: &str) -> Result<Element> {
        let i = self.index_of(a).ok_or_else(|| Error::UnknownLabel(a.into()))?;
        let j = self.index_of(b).ok_or_else(|| Error::UnknownLabel(b.into()))?;
        Ok(self.to_element(self.product(i, j)))
    }

    fn finite_labels(&self) -> Option<&[String]> {
        Some(&self.labels)
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        let (a, b) = (self.coords(x)?, self.coords(y)?);
        Ok(self.to_element(&self.mul_vec(&a, &b)))
    }
}

/// Whether `images[i] = φ(e_i)` (coordinates in `b`) defines an algebra
/// isomorphism `a → b`: multiplicative, unital and bijective.
pub fn is_isomorphism(a: &Algebra, b: &Algebra, images: &[SparseVec]) -> bool {
    if a.dim() != b.dim() || images.len() != a.dim() || a.field() != b.field() {
        return false;
    }
    let phi = SparseMatrix::from_columns(b.dim(), b.field(), images.to_vec());
    if rank(&phi) != a.dim() || phi.apply(a.unit_vec()) != *b.unit_vec() {
        return false;
    }
    (0..a.dim()).all(|i| (0..a.dim()).all(|j| phi.apply(a.product(i, j)) == b.mul_vec(&images[i], &images[j])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(&FieldSpec::Rationals, n)
    }

    fn dual(x_squared: i64) -> AlgebraData {
        AlgebraData {
            name: "dual".into(),
            field: FieldSpec::Rationals,
            labels: vec!["1".into(), "x".into()],
            unit: vec![("1".into(), q(1))],
            structure: vec![
                ("1".into(), "1".into(), "1".into(), q(1)),
                ("1".into(), "x".into(), "x".into(), q(1)),
                ("x".into(), "1".into(), "x".into(), q(1)),
                ("x".into(), "x".into(), "1".into(), q(x_squared)),
            ],
        }
    }

    #[test]
    fn dual_numbers_validate() {
        let a = validate_algebra(dual(0)).unwrap();
        assert_eq!(a.dim(), 2);
        let one_plus_x = a.unit().add(&Element::basis(a.field(), "x"));
        let one_minus_x = a.unit().sub(&Element::basis(a.field(), "x"));
        assert_eq!(a.mul(&one_plus_x, &one_minus_x).unwrap(), a.unit());
    }

    #[test]
    fn corrupted_constants_are_not_associative() {
        // ℚ[x]/(x³) with x·x² tampered to 1 while x²·x stays 0.
        let l = |s: &str| s.to_string();
        let mut raw = AlgebraData {
            name: "tampered".into(),
            field: FieldSpec::Rationals,
            labels: vec![l("1"), l("x"), l("x^2")],
            unit: vec![(l("1"), q(1))],
            structure: vec![],
        };
        for (i, a) in ["1", "x", "x^2"].iter().enumerate() {
            for (j, b) in ["1", "x", "x^2"].iter().enumerate() {
                if i + j < 3 {
                    raw.structure.push((l(a), l(b), l(["1", "x", "x^2"][i + j]), q(1)));
                }
            }
        }
        assert!(validate_algebra(raw.clone()).is_ok());
        raw.structure.push((l("x"), l("x^2"), l("1"), q(1)));
        assert_eq!(
            validate_algebra(raw).unwrap_err(),
            Error::NotAssociative { i: l("x"), j: l("x"), l: l("x") }
        );
    }

    #[test]
    fn bad_unit_detected() {
        let mut raw = dual(0);
        raw.unit = vec![("x".into(), q(1))];
        assert_eq!(validate_algebra(raw).unwrap_err(), Error::BadUnit("1".into()));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let mut raw = dual(0);
        raw.labels[1] = "1".into();
        assert_eq!(validate_algebra(raw).unwrap_err(), Error::DuplicateLabel("1".into()));
    }

    #[test]
    fn carrier_mismatch_on_foreign_label() {
        let a = validate_algebra(dual(0)).unwrap();
        let foreign = Element::basis(FieldSpec::Rationals, "y");
        assert!(matches!(a.mul(&foreign, &a.unit()), Err(Error::CarrierMismatch(_))));
    }
}
