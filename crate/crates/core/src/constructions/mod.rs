//! Builders for the example algebras: matrices, groups and groupoids,
//! crossed products, truncated polynomials, sums and tensor products,
//! finite and polynomial noncommutative tori, rewriting presentations and
//! square-zero extensions.

mod basic;
mod crossed;
mod extension;
mod group;
mod groupoid;
mod rewriting;
pub mod spec;
mod torus;

pub use basic::{direct_sum, matrix_algebra, opposite, tensor_product, truncated_poly};
pub use crossed::{crossed_product, ActionData};
pub use extension::{extension_from_2cocycle, BimoduleData, TwoCochain};
pub use group::{group_algebra, lattice_group_algebra, FiniteGroup, GroupData};
pub use groupoid::{groupoid_algebra, Groupoid, GroupoidData};
pub use rewriting::{generator, parse_word_spec, podles_sphere, rewriting_algebra, sphere_coordinates, RewriteRule};
pub use spec::{build, Built};
pub use torus::{polynomial_torus, torus_window, uv_label, weyl_field, weyl_torus, weyl_trace, PolynomialTorus};

pub(crate) use crate::algebra::{Algebra, Element};
