use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{rank, LinalgError, SparseMatrix};

/// A bounded chain complex `C_0 ← C_1 ← … ← C_top`; `boundaries[n]` is
/// `d_n: C_n → C_{n−1}` and `d_0` is the zero map to the zero space.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// Checks shapes and `d_{n−1} d_n = 0` exactly.
    pub fn new(boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if boundaries.is_empty() {
            return Err(Error::Invalid("a chain complex needs at least one space".into()));
        }
        if boundaries[0].rows != 0 {
            return Err(LinalgError::ShapeMismatch("d_0 must map to the zero space".into()).into());
        }
        for n in 1..boundaries.len() {
            if boundaries[n].rows != boundaries[n - 1].cols {
                return Err(LinalgError::ShapeMismatch(format!("d_{n} lands in a space of dimension {}", boundaries[n].rows)).into());
            }
            if !boundaries[n - 1].mul(&boundaries[n]).is_zero() {
                return Err(LinalgError::NotAComplex.into());
            }
        }
        let dims = boundaries.iter().map(|d| d.cols).collect();
        Ok(ChainComplex { dims, boundaries })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundary(&self, n: usize) -> &SparseMatrix {
        &self.boundaries[n]
    }

    /// Homology dimensions in degrees `0 ..= top−1` (the top degree has no
    /// incoming boundary recorded).
    pub fn homology(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.par_iter().map(rank).collect();
        (0..self.dims.len() - 1).map(|n| self.dims[n] - ranks[n] - ranks[n + 1]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    #[test]
    fn rejects_non_complex() {
        let f = FieldSpec::Rationals;
        let one = SparseMatrix::identity(1, f);
        let d0 = SparseMatrix::zeros(0, 1, f);
        assert!(matches!(ChainComplex::new(vec![d0.clone(), one.clone(), one.clone()]), Err(Error::Linalg(LinalgError::NotAComplex))));
        let zero = SparseMatrix::zeros(1, 1, f);
        let c = ChainComplex::new(vec![d0, one, zero]).unwrap();
        assert_eq!(c.homology(), vec![0, 0]);
    }
}
