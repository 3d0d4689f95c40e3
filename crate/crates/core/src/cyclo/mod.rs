//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Every zero test made elsewhere in the crate goes through [`CycNum::is_zero`],
//! which compares reduced coefficient vectors. There is no tolerance anywhere on
//! the verdict path; [`CycNum::to_complex`] exists only for display and sanity
//! checks.

mod matrix;
mod number;
mod poly;

pub use matrix::{circulant, circulant_nullity, CycMatrix};
pub use number::{root_of_unity, two_cos, CycNum, Rational};
pub use poly::{cyclotomic_polynomial, euler_phi};
