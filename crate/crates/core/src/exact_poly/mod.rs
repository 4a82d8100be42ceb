//! Exact scalar and sparse multivariate polynomial arithmetic.

mod monomial;
mod polynomial;
pub mod rational;
mod rational_function;
mod text;
mod variable;

use thiserror::Error;

pub use monomial::Monomial;
pub use polynomial::{Assignment, Polynomial};
pub use rational::{factorial, ExactRational};
pub use rational_function::{rf_equal, RationalFunction};
pub use variable::{Family, VariableId};


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("integration bound mentions the integration variable {0}")]
    BoundContainsVariable(VariableId),
    #[error("unbound variables: {}", display_vars(.0))]
    UnboundVariable(Vec<VariableId>),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    ExactDivisionFailed,
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

fn display_vars(vars: &[VariableId]) -> String {
    vars.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
