//! Exact-arithmetic computer algebra for finite-dimensional Hopf algebras
//! acting on finite k-linear categories.
//!
//! Everything is carried by structure constants over an exact field (the
//! rationals or a prime field): Hopf algebras, k-linear (semi)categories,
//! partial and global actions on their hom spaces, globalizations, smash
//! products and the Morita contexts relating them. All verifiers decide
//! algebraic identities exactly, with no tolerances, and report the first
//! violating basis indices on failure.

pub mod error;
pub mod field;
pub mod linalg;
pub mod report;
pub mod group;
pub mod algebra;
pub mod hopf;
pub mod lincat;
pub mod action;
pub mod globalization;
pub mod smash;
pub mod morita;
pub mod samples;
pub mod io;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
