pub mod algebra;
pub mod chern;
pub mod cli;
pub mod constructions;
pub mod engine;
pub mod gallery;
pub mod error;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
