//! The checks reachable from the command line, one per engine operation.

use std::fmt;
use std::str::FromStr;

use critval_core::critpoly::{verify_jacobian_paths, verify_theorem_b};
use critval_core::identity_engine::{
    a_implies_b_chain_check, boundary_term_check, reduction_step_check, region_identity_check,
    verify_cauchy, verify_differential, verify_recurrence, verify_theorem_a, Budget, CheckMode,
    CheckOutcome, EngineError, IdentityInstance, RecurrenceLevel, SignRule,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    TheoremA,
    TheoremB,
    JacobianPaths,
    RecurrenceValue,
    RecurrenceIntegrand,
    Differential,
    Region,
    Reduction,
    Boundary,
    Chain,
    Cauchy,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::TheoremA,
        CheckKind::TheoremB,
        CheckKind::JacobianPaths,
        CheckKind::RecurrenceValue,
        CheckKind::RecurrenceIntegrand,
        CheckKind::Differential,
        CheckKind::Region,
        CheckKind::Reduction,
        CheckKind::Boundary,
        CheckKind::Chain,
        CheckKind::Cauchy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::TheoremA => "theorem-a",
            CheckKind::TheoremB => "theorem-b",
            CheckKind::JacobianPaths => "jacobian-paths",
            CheckKind::RecurrenceValue => "recurrence-value",
            CheckKind::RecurrenceIntegrand => "recurrence-integrand",
            CheckKind::Differential => "differential",
            CheckKind::Region => "region",
            CheckKind::Reduction => "reduction",
            CheckKind::Boundary => "boundary",
            CheckKind::Chain => "chain",
            CheckKind::Cauchy => "cauchy",
        }
    }

    /// Which identity the check verifies.
    pub fn tag(self) -> &'static str {
        match self {
            CheckKind::TheoremA => "multi-integral closed form",
            CheckKind::TheoremB => "critical-value Jacobian determinant",
            CheckKind::JacobianPaths => "Jacobian entries: direct partials vs integral rewrite",
            CheckKind::RecurrenceValue => "recurrence in b on closed-form values",
            CheckKind::RecurrenceIntegrand => "recurrence in b on integrands",
            CheckKind::Differential => "differential identity for the integrand",
            CheckKind::Region => "signed box-region identity",
            CheckKind::Reduction => "induction step n-1 -> n via shifted boxes",
            CheckKind::Boundary => "boundary term of the integration by parts",
            CheckKind::Chain => "determinant closed form from the multi-integral form",
            CheckKind::Cauchy => "Cauchy alternant determinant",
        }
    }

    pub fn operation(self) -> &'static str {
        match self {
            CheckKind::TheoremA => "identity_engine::verify_theorem_a",
            CheckKind::TheoremB => "critpoly::verify_theorem_b",
            CheckKind::JacobianPaths => "critpoly::verify_jacobian_paths",
            CheckKind::RecurrenceValue | CheckKind::RecurrenceIntegrand => {
                "identity_engine::verify_recurrence"
            }
            CheckKind::Differential => "identity_engine::verify_differential",
            CheckKind::Region => "identity_engine::region_identity_check",
            CheckKind::Reduction => "identity_engine::reduction_step_check",
            CheckKind::Boundary => "identity_engine::boundary_term_check",
            CheckKind::Chain => "identity_engine::a_implies_b_chain_check",
            CheckKind::Cauchy => "identity_engine::verify_cauchy",
        }
    }

    /// Whether the check honours evaluate mode; the others always run symbolically.
    pub fn supports_evaluate(self) -> bool {
        matches!(
            self,
            CheckKind::TheoremA
                | CheckKind::TheoremB
                | CheckKind::RecurrenceValue
                | CheckKind::RecurrenceIntegrand
        )
    }

    /// Whether the check needs every `a_i >= 1`.
    pub fn needs_positive_a(self) -> bool {
        matches!(
            self,
            CheckKind::TheoremB | CheckKind::JacobianPaths | CheckKind::Chain
        )
    }

    pub fn min_n(self) -> usize {
        match self {
            CheckKind::Region | CheckKind::Reduction => 2,
            _ => 1,
        }
    }

    /// Whether the instance's `b` is meaningful for the check.
    pub fn uses_b(self) -> bool {
        matches!(
            self,
            CheckKind::TheoremA | CheckKind::RecurrenceValue | CheckKind::RecurrenceIntegrand
        )
    }

    /// Whether only `a = (0, .., 0)` is meaningful for the check.
    pub fn only_n(self) -> bool {
        matches!(self, CheckKind::Cauchy)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// One concrete invocation of a check.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CheckRequest {
    pub kind: CheckKind,
    pub a: Vec<u32>,
    pub b: u32,
    /// Boundary index for `Boundary`.
    pub index: usize,
}

/// Per-run knobs shared by every request.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub mode: CheckMode,
    pub budget: Budget,
    pub max_degree: u32,
    pub differential_rule: SignRule,
    pub region_rule: SignRule,
}

impl CheckRequest {
    pub fn run(&self, opts: &RunOptions) -> Result<CheckOutcome, EngineError> {
        let mode = if self.kind.supports_evaluate() {
            opts.mode
        } else {
            CheckMode::Symbolic
        };
        let budget = &opts.budget;
        let a = &self.a;
        match self.kind {
            CheckKind::TheoremA => {
                verify_theorem_a(&IdentityInstance::new(a.clone(), self.b)?, mode, budget)
            }
            CheckKind::TheoremB => verify_theorem_b(a, mode, budget),
            CheckKind::JacobianPaths => verify_jacobian_paths(a, budget),
            CheckKind::RecurrenceValue => verify_recurrence(
                &IdentityInstance::new(a.clone(), self.b)?,
                RecurrenceLevel::Value,
                mode,
                budget,
            ),
            CheckKind::RecurrenceIntegrand => verify_recurrence(
                &IdentityInstance::new(a.clone(), self.b)?,
                RecurrenceLevel::Integrand,
                mode,
                budget,
            ),
            CheckKind::Differential => verify_differential(a, opts.differential_rule, budget),
            CheckKind::Region => region_identity_check(a, opts.max_degree, opts.region_rule, budget),
            CheckKind::Reduction => reduction_step_check(a, budget),
            CheckKind::Boundary => boundary_term_check(a, self.index, budget),
            CheckKind::Chain => a_implies_b_chain_check(a, budget),
            CheckKind::Cauchy => verify_cauchy(a.len(), budget),
        }
    }
}
