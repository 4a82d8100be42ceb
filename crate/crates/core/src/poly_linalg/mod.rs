//! Determinants over polynomial and rational-function entries, plus the
//! closed-form Vandermonde and Cauchy alternant products.

mod alternant;
mod det;
mod matrix;

use thiserror::Error;

pub use alternant::{
    cauchy_alternant, cauchy_closed_form, cauchy_numerator, cauchy_row_scaled, vandermonde_product,
};
pub use det::{det_bareiss, det_cofactor, det_exact, det_rational};
pub use matrix::{PolyMatrix, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("matrix dimension must be at least 1")]
    Empty,
    #[error("a denominator is the zero polynomial at ({0}, {1})")]
    ZeroDenominator(usize, usize),
    #[error("fraction-free elimination produced an inexact division at step {0}")]
    ExactDivisionFailed(usize),
}
