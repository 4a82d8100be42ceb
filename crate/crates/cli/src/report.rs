//! The JSON report document and its reader and writer.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use critval_core::exact_poly::rational::format_rational;
use critval_core::identity_engine::{CheckOutcome, Status, Witness};

pub const WITNESS_LIMIT: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub version: String,
    pub seed: u64,
    pub config: ConfigEcho,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigEcho {
    pub checks: Vec<String>,
    pub n_min: usize,
    pub n_max: usize,
    pub a_max: u32,
    pub b_max: u32,
    pub mode: String,
    pub points: Option<usize>,
    pub budget: usize,
    pub max_degree: u32,
    pub differential_rule: String,
    pub region_rule: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Skipped,
}

impl From<Status> for CaseStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Pass => CaseStatus::Pass,
            Status::Fail => CaseStatus::Fail,
            Status::Skipped => CaseStatus::Skipped,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    /// Canonical text, cut to the first `WITNESS_LIMIT` characters.
    pub text: String,
    /// Character count of the full text.
    pub length: usize,
    /// SHA-256 of the full text, hex encoded.
    pub sha256: String,
}

impl WitnessRecord {
    pub fn from_text(full: &str) -> Self {
        let digest = Sha256::digest(full.as_bytes());
        Self {
            text: full.chars().take(WITNESS_LIMIT).collect(),
            length: full.chars().count(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseRecord {
    pub check: String,
    pub n: usize,
    pub a: Vec<u32>,
    pub b: Option<u32>,
    pub mode: String,
    pub points: Option<usize>,
    pub status: CaseStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(cases: &[CaseRecord]) -> Self {
        let mut s = Summary::default();
        for c in cases {
            match c.status {
                CaseStatus::Pass => s.pass += 1,
                CaseStatus::Fail => s.fail += 1,
                CaseStatus::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

/// Human-readable form of a failure witness.
pub fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Difference(p) => format!("lhs - rhs = {p}"),
        Witness::Point { assignment, lhs, rhs } => {
            let at: Vec<String> = assignment
                .iter()
                .map(|(v, x)| format!("{v}={}", format_rational(x)))
                .collect();
            format!(
                "at {}: lhs = {}, rhs = {}",
                at.join(", "),
                format_rational(lhs),
                format_rational(rhs)
            )
        }
    }
}

impl CaseRecord {
    pub fn from_outcome(o: &CheckOutcome, timings: bool) -> Self {
        Self {
            check: o.check.clone(),
            n: o.n,
            a: o.a.clone(),
            b: o.b,
            mode: o.mode.label().to_string(),
            points: o.mode.points(),
            status: o.status.into(),
            witness: o
                .witness
                .as_ref()
                .map(|w| WitnessRecord::from_text(&witness_text(w))),
            reason: o.reason.clone(),
            elapsed_ms: if timings { o.elapsed.as_millis() as u64 } else { 0 },
        }
    }
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed report {} at line {line}, column {column}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
}

pub fn to_json(report: &SuiteReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn write_report(report: &SuiteReport, path: &Path) -> Result<(), ReportError> {
    fs::write(path, to_json(report)).map_err(|source| ReportError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn parse_report(text: &str, path: &Path) -> Result<SuiteReport, ReportError> {
    serde_json::from_str(text).map_err(|e| ReportError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn read_report(path: &Path) -> Result<SuiteReport, ReportError> {
    let text = fs::read_to_string(path).map_err(|source| ReportError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_report(&text, path)
}
