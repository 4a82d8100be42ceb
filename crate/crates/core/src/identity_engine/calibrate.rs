//! Empirical choice of the alternating sign in the differential and region
//! identities: every candidate rule is run on small cases for n = 1..4.

use std::fmt::Write as _;

use super::differential::{differential_parts, signed_sum};
use super::region::{basis_monomial, monomial_basis, region_integrand, signed_box_sides, symmetrized_box_sides};
use super::{Budget, EngineError, SignRule};
use crate::exact_poly::Polynomial;

pub const CALIBRATION_MAX_N: usize = 4;
/// The rule found for the differential identity on `n = 1..4`.
pub const DIFFERENTIAL_RULE: SignRule = SignRule::PowNMinusI;
/// The rule found for the region identity on `n = 1..4`.
pub const REGION_RULE: SignRule = SignRule::PowIPlusOne;
const REGION_BASIS_DEGREE: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CalibratedIdentity {
    Differential,
    Region,
}

impl CalibratedIdentity {
    pub fn label(self) -> &'static str {
        match self {
            CalibratedIdentity::Differential => "differential",
            CalibratedIdentity::Region => "region",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "differential" | "diff" => Some(CalibratedIdentity::Differential),
            "region" => Some(CalibratedIdentity::Region),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationRow {
    pub n: usize,
    pub rule: SignRule,
    pub passed: usize,
    pub total: usize,
}

impl CalibrationRow {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CalibrationVerdict {
    /// Exactly one rule passes every case.
    Unique(SignRule),
    /// More than one rule passes every case.
    Several(Vec<SignRule>),
    /// No rule passes at every n; the rules passing at each n.
    PerN(Vec<(usize, Vec<SignRule>)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCalibration {
    pub identity: CalibratedIdentity,
    pub rows: Vec<CalibrationRow>,
    pub verdict: CalibrationVerdict,
}

impl SignCalibration {
    /// Rules passing every case at every n.
    pub fn passing_rules(&self) -> Vec<SignRule> {
        SignRule::ALL
            .iter()
            .copied()
            .filter(|&r| self.rows.iter().filter(|row| row.rule == r).all(|row| row.all_passed()))
            .collect()
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "identity: {}", self.identity.label()).unwrap();
        writeln!(out, "{:<3}{:<13}{:<8}result", "n", "rule", "cases").unwrap();
        for row in &self.rows {
            writeln!(
                out,
                "{:<3}{:<13}{:<8}{}",
                row.n,
                row.rule.label(),
                format!("{}/{}", row.passed, row.total),
                if row.all_passed() { "pass" } else { "fail" }
            )
            .unwrap();
        }
        let verdict = match &self.verdict {
            CalibrationVerdict::Unique(r) => format!("unique {}", r.label()),
            CalibrationVerdict::Several(rs) => format!("several {}", labels(rs)),
            CalibrationVerdict::PerN(per) => {
                let parts: Vec<String> = per
                    .iter()
                    .map(|(n, rs)| format!("n={n}: {}", labels(rs)))
                    .collect();
                format!("per-n {}", parts.join("; "))
            }
        };
        writeln!(out, "verdict: {verdict}").unwrap();
        out
    }
}

fn labels(rules: &[SignRule]) -> String {
    rules.iter().map(|r| r.label()).collect::<Vec<_>>().join(", ")
}

/// Exponent vectors in {0,1}^n with at most two ones.
fn differential_cases(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    for i in 0..n {
        let mut a = vec![0; n];
        a[i] = 1;
        out.push(a.clone());
        for j in i + 1..n {
            let mut b = a.clone();
            b[j] = 1;
            out.push(b);
        }
    }
    out
}

/// Per case, the difference of both sides under each rule, in `SignRule::ALL` order.
fn differential_differences(n: usize, budget: &Budget) -> Result<Vec<[bool; 3]>, EngineError> {
    let mut results = Vec::new();
    for a in differential_cases(n) {
        let (left, summands) = differential_parts(&a, budget)?;
        let mut row = [false; 3];
        for (k, &rule) in SignRule::ALL.iter().enumerate() {
            row[k] = left == signed_sum(&summands, rule);
        }
        results.push(row);
    }
    Ok(results)
}

fn holds(pair: (Polynomial, Polynomial)) -> bool {
    pair.0 == pair.1
}

/// Symmetrized sides on monomials up to degree 2, plus the plain sides on
/// the antisymmetric integrand for `a = 0` and `a = 1`; `n = 1` is the
/// degenerate case where both sides are the integrand itself.
fn region_results(n: usize, budget: &Budget) -> Result<Vec<[bool; 3]>, EngineError> {
    let mut results = Vec::new();
    for e in monomial_basis(n - 1, REGION_BASIS_DEGREE) {
        let f = basis_monomial(&e);
        let mut row = [false; 3];
        for (k, &rule) in SignRule::ALL.iter().enumerate() {
            row[k] = holds(symmetrized_box_sides(n, &f, rule, budget)?);
        }
        results.push(row);
    }
    if n >= 2 {
        for fill in [0, 1] {
            let f = region_integrand(&vec![fill; n], budget)?;
            let mut row = [false; 3];
            for (k, &rule) in SignRule::ALL.iter().enumerate() {
                row[k] = holds(signed_box_sides(n, &f, rule, budget)?);
            }
            results.push(row);
        }
    }
    Ok(results)
}

pub fn calibrate_sign_rule(identity: CalibratedIdentity) -> Result<SignCalibration, EngineError> {
    let budget = Budget::default();
    let mut rows = Vec::new();
    let mut per_n = Vec::new();
    for n in 1..=CALIBRATION_MAX_N {
        let results = match identity {
            CalibratedIdentity::Differential => differential_differences(n, &budget)?,
            CalibratedIdentity::Region => region_results(n, &budget)?,
        };
        let mut passing = Vec::new();
        for (k, &rule) in SignRule::ALL.iter().enumerate() {
            let passed = results.iter().filter(|r| r[k]).count();
            let row = CalibrationRow {
                n,
                rule,
                passed,
                total: results.len(),
            };
            if row.all_passed() {
                passing.push(rule);
            }
            rows.push(row);
        }
        if results.iter().any(|r| !r.iter().any(|&ok| ok)) {
            return Err(EngineError::NoConsistentRule {
                identity: identity.label().to_string(),
            });
        }
        per_n.push((n, passing));
    }
    let mut calibration = SignCalibration {
        identity,
        rows,
        verdict: CalibrationVerdict::PerN(per_n.clone()),
    };
    let global = calibration.passing_rules();
    calibration.verdict = match global.len() {
        0 => CalibrationVerdict::PerN(per_n),
        1 => CalibrationVerdict::Unique(global[0]),
        _ => CalibrationVerdict::Several(global),
    };
    Ok(calibration)
}
