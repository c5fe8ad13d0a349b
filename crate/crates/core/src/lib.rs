//! Exact enumeration of twenty-vertex ice configurations on the triangular
//! lattice, together with the Schroder-path determinants, domino tilings and
//! alternating phase matrices that count the same objects.
//!
//! Everything is exact: counts are big integers, weights live in rational
//! cyclotomic fields, and determinants are computed fraction-free.

pub mod apm;
pub mod error;
pub mod exactalg;
pub mod genfun;
pub mod icemodel;
pub mod report;
pub mod tilings;

pub use error::{Error, Result};
