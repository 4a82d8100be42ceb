//! Builders for both sides of each identity, and checks comparing them
//! symbolically or at random exact rational points.

mod calibrate;
mod check;
mod differential;
mod instance;
mod recurrence;
mod reduction;
mod region;
mod theorem_a;

use thiserror::Error;

use crate::exact_poly::PolyError;
use crate::poly_linalg::LinalgError;

pub use calibrate::{
    calibrate_sign_rule, CalibratedIdentity, CalibrationRow, CalibrationVerdict, SignCalibration,
    CALIBRATION_MAX_N, DIFFERENTIAL_RULE, REGION_RULE,
};
pub use check::{default_points, CheckMode, CheckOutcome, PointSampler, Status, Witness};
pub(crate) use check::{compare, pointwise, CheckMeta};
pub use differential::{differential_identity_sides, verify_differential};
pub use instance::{Budget, IdentityInstance, SignRule};
pub use recurrence::{
    recurrence_denominator, recurrence_multiplier, recurrence_rhs_value, verify_recurrence,
    RecurrenceBuilder, RecurrenceLevel,
};
pub use reduction::{
    a_implies_b_chain_check, boundary_term_check, chain_lhs, reduction_step_check, verify_cauchy,
};
pub use region::{
    box_integral, monomial_basis, permutation_sign, region_identity_check, region_integrand,
    signed_box_sides, symmetrized_box_sides,
};
pub use theorem_a::{
    multiplicity_polynomial, theorem_a_coefficient, theorem_a_degree, theorem_a_integrand,
    theorem_a_lhs, theorem_a_lhs_at, theorem_a_lhs_in_order, theorem_a_lhs_within,
    theorem_a_rhs, theorem_a_rhs_at, theorem_a_rhs_within, verify_theorem_a,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("intermediate polynomial has {terms} terms, over the budget of {limit}")]
    BudgetExceeded { terms: usize, limit: usize },
    #[error("multiplicity a_{index} is 0; the determinant identity needs every a_i >= 1")]
    TheoremBRequiresPositiveMultiplicity { index: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("no sign rule passes every case of the {identity} identity")]
    NoConsistentRule { identity: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
