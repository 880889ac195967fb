//! Irreducible characters of classical compact groups, branching to subgroups,
//! τ-dimension data and Laplace spectra of homogeneous bundles.

pub mod branching;
pub mod cache;
pub mod freudenthal;
pub mod group;
pub mod spectrum;

pub use branching::{theorem_setup, Brancher, Decomposition, Embedding, IrrepLabel};
pub use cache::{CacheStats, WeightCache};
pub use group::{Factor, GroupDesc, Simple};
pub use spectrum::{bundle_spectrum, casimir_eigenvalue, irreps_below, spectra_equal, Spectrum};
