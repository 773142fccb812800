use std::collections::BTreeMap;

use crate::scalar::{FieldSpec, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `a + c·b` for sorted sparse vectors.
pub fn axpy(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale_vec(v: &[(usize, Scalar)], c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, c * x)).collect()
}

/// Collect `(index, value)` contributions into a sorted sparse vector,
/// summing duplicates and dropping zeros.
pub fn accumulate(entries: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, v) in entries {
        match acc.get_mut(&i) {
            Some(x) => *x = &*x + &v,
            None => {
                acc.insert(i, v);
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Column-major sparse matrix over a single exact field.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        SparseMatrix { rows, cols, field, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let one = Scalar::one(&field);
        SparseMatrix { rows: n, cols: n, field, columns: (0..n).map(|i| vec![(i, one.clone())]).collect() }
    }

    /// Columns must be sorted, zero-free and within `rows`.
    pub fn from_columns(rows: usize, field: FieldSpec, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|(i, v)| *i < rows && !v.is_zero())));
        SparseMatrix { rows, cols: columns.len(), field, columns }
    }

    pub fn from_triplets(rows: usize, cols: usize, field: FieldSpec, triplets: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of range");
            per_col[c].push((r, v));
        }
        let columns = per_col.into_iter().map(accumulate).collect();
        SparseMatrix { rows, cols, field, columns }
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.columns[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(k) => self.columns[c][k].1.clone(),
            Err(_) => Scalar::zero(&self.field),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, field: self.field, columns: cols }
    }

    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (j, x) in v {
            out = axpy(&out, x, &self.columns[*j]);
        }
        out
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let columns = rhs.columns.iter().map(|c| self.apply(c)).collect();
        SparseMatrix { rows: self.rows, cols: rhs.cols, field: self.field, columns }
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.lin_comb(&Scalar::one(&self.field), rhs)
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.lin_comb(&Scalar::from_int(&self.field, -1), rhs)
    }

    /// `self + c·rhs`.
    pub fn lin_comb(&self, c: &Scalar, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        let columns = self.columns.iter().zip(&rhs.columns).map(|(a, b)| axpy(a, c, b)).collect();
        SparseMatrix { rows: self.rows, cols: self.cols, field: self.field, columns }
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        let columns = self.columns.iter().map(|v| scale_vec(v, c)).collect();
        SparseMatrix { rows: self.rows, cols: self.cols, field: self.field, columns }
    }

    pub fn neg(&self) -> SparseMatrix {
        self.scale(&Scalar::from_int(&self.field, -1))
    }

    /// Block matrix from a grid of optional blocks; `None` is a zero block.
    /// Row heights and column widths are taken from the given sizes.
    pub fn block(row_sizes: &[usize], col_sizes: &[usize], field: FieldSpec, blocks: &[Vec<Option<&SparseMatrix>>]) -> SparseMatrix {
        let rows: usize = row_sizes.iter().sum();
        let mut columns: Vec<SparseVec> = Vec::with_capacity(col_sizes.iter().sum());
        for (bj, &w) in col_sizes.iter().enumerate() {
            for j in 0..w {
                let mut col = Vec::new();
                let mut offset = 0;
                for (bi, &h) in row_sizes.iter().enumerate() {
                    if let Some(m) = blocks[bi][bj] {
                        assert_eq!((m.rows, m.cols), (h, w), "block shape mismatch at ({bi},{bj})");
                        col.extend(m.columns[j].iter().map(|(i, v)| (i + offset, v.clone())));
                    }
                    offset += h;
                }
                columns.push(col);
            }
        }
        SparseMatrix { rows, cols: columns.len(), field, columns }
    }

    /// Kronecker product; column `(i, j)` sits at `i·rhs.cols + j`.
    pub fn kron(&self, rhs: &SparseMatrix) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols * rhs.cols);
        for a in &self.columns {
            for b in &rhs.columns {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (r, x) in a {
                    col.extend(b.iter().map(|(s, y)| (r * rhs.rows + s, x * y)));
                }
                columns.push(col);
            }
        }
        SparseMatrix { rows: self.rows * rhs.rows, cols: columns.len(), field: self.field, columns }
    }

    pub fn hstack(parts: &[&SparseMatrix]) -> SparseMatrix {
        let rows = parts[0].rows;
        let field = parts[0].field;
        let mut columns = Vec::new();
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            columns.extend(p.columns.iter().cloned());
        }
        SparseMatrix { rows, cols: columns.len(), field, columns }
    }

    /// Dense rendering for small matrices in reports and tests.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(&self.field); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    pub fn from_dense(field: FieldSpec, rows: &[Vec<Scalar>]) -> SparseMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let trip = rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(j, v)| (i, j, v.clone())));
        SparseMatrix::from_triplets(r, c, field, trip)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(&FieldSpec::Rationals, n)
    }

    #[test]
    fn product_and_transpose() {
        let f = FieldSpec::Rationals;
        let a = SparseMatrix::from_dense(f, &[vec![q(1), q(2)], vec![q(0), q(1)]]);
        let b = SparseMatrix::from_dense(f, &[vec![q(1), q(0)], vec![q(-1), q(1)]]);
        let ab = a.mul(&b);
        assert_eq!(ab, SparseMatrix::from_dense(f, &[vec![q(-1), q(2)], vec![q(-1), q(1)]]));
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn cancellation_drops_zeros() {
        let f = FieldSpec::Rationals;
        let a = SparseMatrix::identity(3, f);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a).nnz(), 0);
    }

    #[test]
    fn block_assembly() {
        let f = FieldSpec::Rationals;
        let i2 = SparseMatrix::identity(2, f);
        let m = SparseMatrix::block(&[2, 2], &[2, 2], f, &[vec![Some(&i2), None], vec![None, Some(&i2)]]);
        assert_eq!(m, SparseMatrix::identity(4, f));
    }
}
