//! Exact computations on Brauer symmetry classes of tensors for the
//! dihedral, dicyclic and semidihedral families.
//!
//! The crate is layered bottom-up:
//!
//! * [`cyclo`]: exact arithmetic in cyclotomic fields and rank computations.
//! * [`group`]: the three group families as permutation groups, with classes,
//!   stabilizers and orbit representatives.
//! * [`brauer`]: ordinary character tables and irreducible Brauer characters.
//! * [`tensor`]: symmetrized tensors, inner products, orbital dimensions and
//!   orthogonal-basis search.
//! * [`theorems`]: closed-form predicates and the harness that checks them
//!   against the tensor oracles.
//! * [`report`]: sweep records and their JSON/CSV encodings.

pub mod brauer;
pub mod cyclo;
mod error;
pub mod group;
pub mod report;
pub mod tensor;
pub mod theorems;

pub use error::{Error, Result};
