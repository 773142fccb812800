use std::sync::Arc;

use super::Engine;
use crate::error::Result;
use crate::linalg::SparseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BicomplexKind {
    /// Columns `p ≥ 0` all equal to `C_•`; vertical `b` on even and `−b′`
    /// on odd columns; horizontal `1−λ` out of odd and `N` out of even
    /// columns `p ≥ 2`.
    Cyclic,
    /// `C_n ⊕ C_{n−2} ⊕ …` with `b` down and `B` across.
    BB,
}

/// The total complex of one of the two bicomplexes, built degree by degree
/// from the engine's operators.
pub struct Bicomplex<'e, 'a> {
    eng: &'e Engine<'a>,
    kind: BicomplexKind,
}

fn assemble(rows: &[usize], cols: &[usize], field: crate::scalar::FieldSpec, parts: Vec<(usize, usize, SparseMatrix)>) -> SparseMatrix {
    let mut grid: Vec<Vec<Option<&SparseMatrix>>> = vec![vec![None; cols.len()]; rows.len()];
    for (r, c, m) in &parts {
        grid[*r][*c] = Some(m);
    }
    SparseMatrix::block(rows, cols, field, &grid)
}

impl<'e, 'a> Bicomplex<'e, 'a> {
    pub fn new(eng: &'e Engine<'a>, kind: BicomplexKind) -> Self {
        Bicomplex { eng, kind }
    }

    pub fn kind(&self) -> BicomplexKind {
        self.kind
    }

    /// Chain degree of each summand of `Tot_n`, in block order.
    pub fn blocks(&self, n: usize) -> Vec<usize> {
        match self.kind {
            BicomplexKind::Cyclic => (0..=n).map(|p| n - p).collect(),
            BicomplexKind::BB => (0..=n / 2).map(|k| n - 2 * k).collect(),
        }
    }

    fn block_dims(&self, n: usize) -> Result<Vec<usize>> {
        self.blocks(n).into_iter().map(|q| self.eng.dim(q)).collect()
    }

    pub fn total_dim(&self, n: usize) -> Result<usize> {
        Ok(self.block_dims(n)?.iter().sum())
    }

    /// Total differential `D_n: Tot_n → Tot_{n−1}` (`D_0` maps to zero).
    pub fn differential(&self, n: usize) -> Result<SparseMatrix> {
        let field = self.eng.field();
        let cols = self.block_dims(n)?;
        if n == 0 {
            return Ok(SparseMatrix::zeros(0, cols.iter().sum(), field));
        }
        let rows = self.block_dims(n - 1)?;
        let own = |m: Arc<SparseMatrix>| (*m).clone();
        let mut parts = Vec::new();
        match self.kind {
            BicomplexKind::Cyclic => {
                for p in 0..=n {
                    let q = n - p;
                    if q >= 1 {
                        let v = if p % 2 == 0 { own(self.eng.b(q)?) } else { self.eng.b_prime(q)?.neg() };
                        parts.push((p, p, v));
                    }
                    if p % 2 == 1 {
                        parts.push((p - 1, p, own(self.eng.one_minus_lambda(q)?)));
                    } else if p >= 2 {
                        parts.push((p - 1, p, own(self.eng.norm(q)?)));
                    }
                }
            }
            BicomplexKind::BB => {
                for (k, q) in self.blocks(n).into_iter().enumerate() {
                    if q >= 1 {
                        parts.push((k, k, own(self.eng.b(q)?)));
                    }
                    if k >= 1 {
                        parts.push((k - 1, k, own(self.eng.connes_b(q)?)));
                    }
                }
            }
        }
        Ok(assemble(&rows, &cols, field, parts))
    }

    /// Periodicity `S: Tot_n → Tot_{n−2}`, dropping the first two columns
    /// (cyclic) or the top summand (`(b,B)`).
    pub fn truncation(&self, n: usize) -> Result<SparseMatrix> {
        let field = self.eng.field();
        let cols = self.block_dims(n)?;
        if n < 2 {
            return Ok(SparseMatrix::zeros(0, cols.iter().sum(), field));
        }
        let rows = self.block_dims(n - 2)?;
        let shift = match self.kind {
            BicomplexKind::Cyclic => 2,
            BicomplexKind::BB => 1,
        };
        let parts = (shift..cols.len()).map(|c| (c - shift, c, SparseMatrix::identity(cols[c], field))).collect();
        Ok(assemble(&rows, &cols, field, parts))
    }

    /// Inclusion `I: C_n → Tot_n` into the top summand of the `(b,B)` total
    /// complex (the column `p = 0` of the cyclic one).
    pub fn inclusion(&self, n: usize) -> Result<SparseMatrix> {
        let field = self.eng.field();
        let rows = self.block_dims(n)?;
        let id = SparseMatrix::identity(rows[0], field);
        Ok(assemble(&rows, &[rows[0]], field, vec![(0, 0, id)]))
    }

    /// `D_{n−1} D_n = 0`, checked exactly.
    pub fn squares_to_zero(&self, n: usize) -> Result<bool> {
        if n < 2 {
            return Ok(true);
        }
        Ok(self.differential(n - 1)?.mul(&self.differential(n)?).is_zero())
    }

    /// `rank D_n`, memoized in the engine under `D{kind}_n`.
    pub fn rank_differential(&self, n: usize) -> Result<usize> {
        let tag = match self.kind {
            BicomplexKind::Cyclic => "Dcyc",
            BicomplexKind::BB => "DbB",
        };
        self.eng.rank_named(&format!("{tag}_{n}"), || self.differential(n))
    }

    /// `dim H_n(Tot)`.
    pub fn homology_dim(&self, n: usize) -> Result<usize> {
        Ok(self.total_dim(n)? - self.rank_differential(n)? - self.rank_differential(n + 1)?)
    }
}
