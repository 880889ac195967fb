//! Polynomials in `x_0, x_1, ...`, the determinant families `a, b, b′, c, d`,
//! their factorization identities and the inductive irreducibility check.

pub mod families;
pub mod irreducible;
pub mod matrix;
pub mod polynomial;

pub use families::{
    admissible_weights, build_det_matrix, encode, weight_parity, factorization_sides, family_poly, split_admissible,
    verify_det_equals_weylsum, verify_factorization, weyl_sum_poly, Family, Parity,
};
pub use irreducible::{verify_irreducible_inductive, Certificate, Verdict};
pub use matrix::SymbolicMatrix;
pub use polynomial::{Monomial, Polynomial};
