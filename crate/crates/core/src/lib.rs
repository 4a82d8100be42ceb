//! Exact verification of the multi-integral closed form and the
//! critical-value Jacobian determinant identity.

pub mod critpoly;
pub mod exact_poly;
pub mod identity_engine;
pub mod poly_linalg;
