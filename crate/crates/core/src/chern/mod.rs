//! Cyclic cocycles, Chern characters of idempotents and invertibles, and
//! their pairings.
//!
//! Cochains are dense tables over a finite basis or rules evaluated on
//! demand; either kind is verified on an explicit window of basis labels
//! and carries that window as a stamp. Pairings are raw: no factorial or
//! `2πi` normalization is applied.

mod character;
mod cochain;
mod group;
pub mod json;
mod lie;
mod matrix;

pub use character::{
    chern_even, chern_odd, conjugation_invariance_test, dimension_function, pair_even, pair_odd, ConjugationVerdict,
    DimensionFunction, Pairing,
};
pub use cochain::{check_closed, check_cyclic, validate_cyclic_cocycle, CarrierRef, Chain, Cochain, CochainRule, Representation, Window};
pub use group::{cyclic_group, group_cocycle_to_cyclic, lattice_window, GroupCocycleData, GroupElem, GroupRule};
pub use lie::lie_action_to_cyclic;
pub use matrix::{mvn_check, same_carrier, AlgMatrix, Certificate, MvnVerdict};
