//! Exact sparse linear algebra.

pub mod elim;
pub mod sparse;

pub use elim::{homology_dim, induced_rank, joint_rank, kernel, rank, rank_and_kernel, solve};
pub use sparse::{accumulate, axpy, scale_vec, SparseMatrix, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("not a complex: consecutive maps do not compose to zero")]
    NotAComplex,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}
