//! Affine root systems on generalized tori: axioms, the classical catalog,
//! `A_R` and `F_{R,W}`, and the density function with its numeric checks.

pub mod catalog;
pub mod character;
pub mod density;
pub mod system;

pub use catalog::{CatalogEntry, CatalogKind};
pub use character::{a_r, a_r_full, averaged_f, density_character, density_product, two_delta, Lifting};
pub use density::{
    density_at, density_samples, exact_density_check, exact_fiber_law, fiber_law_error, random_points,
    weyl_inner, weyl_integration_check, DensityForms, DensityRow, Point,
};
pub use system::{
    AffineAut, AffineCharacter, AffineGroup, AffineRootSystem, AffineValidation, AffineWeight, GeneralizedTorus,
    Multiplicity,
};
