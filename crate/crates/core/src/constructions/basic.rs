use crate::algebra::{labels, Algebra};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::{FieldSpec, Scalar};

/// `M_n(F)` on matrix units `E:i,j` (1-based, row-major).
pub fn matrix_algebra(field: FieldSpec, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::Invalid("matrix size must be at least 1".into()));
    }
    field.validate()?;
    let one = Scalar::one(&field);
    let idx = |i: usize, j: usize| i * n + j;
    let labels = (0..n * n).map(|k| labels::matrix_unit(k / n + 1, k % n + 1)).collect();
    let mut table = vec![Vec::new(); n.pow(4)];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                table[idx(i, j) * n * n + idx(j, l)] = vec![(idx(i, l), one.clone())];
            }
        }
    }
    let unit = (0..n).map(|i| (idx(i, i), one.clone())).collect();
    Algebra::from_table(format!("M{n}({field})"), field, labels, unit, table)
}

fn power_label(i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => "x".into(),
        _ => format!("x^{i}"),
    }
}

/// `F[x]/(x^m)` on `1, x, x^2, …`.
pub fn truncated_poly(field: FieldSpec, m: usize) -> Result<Algebra> {
    if m == 0 {
        return Err(Error::Invalid("truncation degree must be at least 1".into()));
    }
    field.validate()?;
    let one = Scalar::one(&field);
    let labels = (0..m).map(power_label).collect();
    let mut table = vec![Vec::new(); m * m];
    for i in 0..m {
        for j in 0..m - i {
            table[i * m + j] = vec![(i + j, one.clone())];
        }
    }
    Algebra::from_table(format!("{field}[x]/(x^{m})"), field, labels, vec![(0, one)], table)
}

fn same_field(a: &Algebra, b: &Algebra) -> Result<FieldSpec> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch { expected: a.field(), found: b.field() });
    }
    Ok(a.field())
}

fn shift(v: &SparseVec, by: usize) -> SparseVec {
    v.iter().map(|(i, c)| (i + by, c.clone())).collect()
}

/// `A ⊕ B` with labels `s1:…` and `s2:…`.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let field = same_field(a, b)?;
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let labels = a.labels().iter().map(|l| format!("s1:{l}")).chain(b.labels().iter().map(|l| format!("s2:{l}"))).collect();
    let mut table = vec![Vec::new(); d * d];
    for i in 0..da {
        for j in 0..da {
            table[i * d + j] = a.product(i, j).clone();
        }
    }
    for i in 0..db {
        for j in 0..db {
            table[(da + i) * d + da + j] = shift(b.product(i, j), da);
        }
    }
    let mut unit = a.unit_vec().clone();
    unit.extend(shift(b.unit_vec(), da));
    Algebra::from_table(format!("{}+{}", a.name(), b.name()), field, labels, unit, table)
}

fn kron(x: &SparseVec, y: &SparseVec, db: usize) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for (i, a) in x {
        for (j, b) in y {
            out.push((i * db + j, a * b));
        }
    }
    out
}

/// `A ⊗ B` with labels `a|b`, ordered lexicographically.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let field = same_field(a, b)?;
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut labels = Vec::with_capacity(d);
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(labels::pair(la, lb));
        }
    }
    let mut table = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            table[i * d + j] = kron(a.product(i / db, j / db), b.product(i % db, j % db), db);
        }
    }
    let unit = kron(a.unit_vec(), b.unit_vec(), db);
    Algebra::from_table(format!("{}(x){}", a.name(), b.name()), field, labels, unit, table)
}

pub fn opposite(a: &Algebra) -> Result<Algebra> {
    a.opposite()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_isomorphism, Carrier, Element};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn matrix_units_multiply() {
        let m = matrix_algebra(Q, 2).unwrap();
        assert_eq!(m.dim(), 4);
        let e11 = Element::basis(Q, "E:1,1");
        let e12 = Element::basis(Q, "E:1,2");
        assert_eq!(m.mul(&e11, &e12).unwrap(), e12);
        assert_eq!(m.unit(), e11.add(&Element::basis(Q, "E:2,2")));
        assert_eq!(matrix_algebra(FieldSpec::Cyclotomic(3), 3).unwrap().dim(), 9);
    }

    #[test]
    fn truncated_polynomials() {
        assert_eq!(truncated_poly(Q, 1).unwrap().dim(), 1);
        let a = truncated_poly(Q, 3).unwrap();
        let x = Element::basis(Q, "x");
        let x2 = Element::basis(Q, "x^2");
        assert!(a.mul(&x, &x2).unwrap().is_zero());
        assert_eq!(a.mul(&x, &x).unwrap(), x2);
    }

    #[test]
    fn sums_tensors_opposites() {
        let q = matrix_algebra(Q, 1).unwrap();
        let s = direct_sum(&q, &q).unwrap();
        assert!(s.is_commutative());
        let e1 = Element::basis(Q, "s1:E:1,1");
        assert_eq!(s.mul(&e1, &e1).unwrap(), e1);
        assert!(s.mul(&e1, &Element::basis(Q, "s2:E:1,1")).unwrap().is_zero());

        let m2 = matrix_algebra(Q, 2).unwrap();
        let z2 = crate::constructions::group_algebra(Q, &crate::constructions::FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(tensor_product(&m2, &z2).unwrap().dim(), 8);

        // transpose: E_ij ↦ E_ji is an isomorphism M₂^op → M₂
        let op = opposite(&m2).unwrap();
        let one = Scalar::one(&Q);
        let images: Vec<SparseVec> = (0..4).map(|k| vec![((k % 2) * 2 + k / 2, one.clone())]).collect();
        assert!(is_isomorphism(&op, &m2, &images));
    }

    #[test]
    fn field_mismatch_rejected() {
        let a = matrix_algebra(Q, 1).unwrap();
        let b = matrix_algebra(FieldSpec::Cyclotomic(3), 1).unwrap();
        assert!(matches!(direct_sum(&a, &b), Err(Error::FieldMismatch { .. })));
    }
}
