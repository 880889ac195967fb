//! Exact computations with Weyl-averaged characters, determinant polynomial
//! families, branching to subgroups, and affine root systems.

pub mod affine;
pub mod branch;
pub mod charalg;
pub mod error;
pub mod lattice;
pub mod polyfam;
pub mod rational;
pub mod rootsys;
pub mod suites;

pub use error::{Error, Result};
