//! Grid sweeps over instances, run in parallel and reported in a fixed order.

use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use critval_core::identity_engine::{
    Budget, CheckMode, EngineError, SignRule, DIFFERENTIAL_RULE, REGION_RULE,
};

use crate::checks::{CheckKind, CheckRequest, RunOptions};
use crate::report::{CaseRecord, ConfigEcho, Summary, SuiteReport};

pub const SYMBOLIC_N_CAP: usize = 6;
pub const EVALUATE_N_CAP: usize = 8;
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_MAX_DEGREE: u32 = 3;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub checks: Vec<CheckKind>,
    pub n_min: usize,
    pub n_max: usize,
    pub a_max: u32,
    pub b_max: u32,
    pub mode: CheckMode,
    pub budget: Budget,
    pub max_degree: u32,
    pub differential_rule: SignRule,
    pub region_rule: SignRule,
    /// Record wall-clock times; off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            checks: CheckKind::ALL.to_vec(),
            n_min: 1,
            n_max: 3,
            a_max: 2,
            b_max: 2,
            mode: CheckMode::Symbolic,
            budget: Budget::default(),
            max_degree: DEFAULT_MAX_DEGREE,
            differential_rule: DIFFERENTIAL_RULE,
            region_rule: REGION_RULE,
            timings: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("--n range {0}..{1} is empty or starts at 0")]
    BadRange(usize, usize),
    #[error("--n {n} is over the cap of {cap} for {mode} mode")]
    OverCap { n: usize, cap: usize, mode: &'static str },
    #[error("{check} {instance}: {source}")]
    Engine {
        check: String,
        instance: String,
        source: EngineError,
    },
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(SuiteError::BadRange(self.n_min, self.n_max));
        }
        let (cap, mode) = match self.mode {
            CheckMode::Symbolic => (SYMBOLIC_N_CAP, "symbolic"),
            CheckMode::Evaluate { .. } => (EVALUATE_N_CAP, "evaluate"),
        };
        if self.n_max > cap {
            return Err(SuiteError::OverCap {
                n: self.n_max,
                cap,
                mode,
            });
        }
        Ok(())
    }

    pub fn options(&self) -> RunOptions {
        RunOptions {
            mode: self.mode,
            budget: self.budget,
            max_degree: self.max_degree,
            differential_rule: self.differential_rule,
            region_rule: self.region_rule,
        }
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            checks: self.checks.iter().map(|c| c.name().to_string()).collect(),
            n_min: self.n_min,
            n_max: self.n_max,
            a_max: self.a_max,
            b_max: self.b_max,
            mode: self.mode.label().to_string(),
            points: self.mode.points(),
            budget: self.budget.max_terms,
            max_degree: self.max_degree,
            differential_rule: self.differential_rule.label().to_string(),
            region_rule: self.region_rule.label().to_string(),
        }
    }

    /// Every request of the grid, sorted by check and instance.
    pub fn requests(&self) -> Vec<CheckRequest> {
        let mut out = Vec::new();
        for &kind in &self.checks {
            for n in self.n_min.max(kind.min_n())..=self.n_max {
                let vectors = if kind.only_n() {
                    vec![vec![0; n]]
                } else if kind.needs_positive_a() {
                    exponent_vectors(n, 1, self.a_max.max(1))
                } else {
                    exponent_vectors(n, 0, self.a_max)
                };
                let bs: Vec<u32> = match kind {
                    CheckKind::TheoremA => (0..=self.b_max).collect(),
                    // X(a; b+1) must stay inside the b range
                    CheckKind::RecurrenceValue | CheckKind::RecurrenceIntegrand => {
                        (0..self.b_max.max(1)).collect()
                    }
                    _ => vec![0],
                };
                for a in &vectors {
                    for &b in &bs {
                        if kind == CheckKind::Boundary {
                            for index in 1..=n {
                                out.push(CheckRequest {
                                    kind,
                                    a: a.clone(),
                                    b,
                                    index,
                                });
                            }
                        } else {
                            out.push(CheckRequest {
                                kind,
                                a: a.clone(),
                                b,
                                index: 0,
                            });
                        }
                    }
                }
            }
        }
        out.sort_by(|x, y| {
            (x.kind.name(), x.a.len(), &x.a, x.b, x.index).cmp(&(
                y.kind.name(),
                y.a.len(),
                &y.a,
                y.b,
                y.index,
            ))
        });
        out.dedup();
        out
    }
}

/// All vectors of length `n` with entries in `lo..=hi`, lexicographic.
pub fn exponent_vectors(n: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

fn describe(r: &CheckRequest) -> String {
    let a: Vec<String> = r.a.iter().map(|e| e.to_string()).collect();
    format!("n={} a=({}) b={}", r.a.len(), a.join(","), r.b)
}

/// Runs the requests in parallel; records come back in request order.
pub fn run_requests(
    requests: &[CheckRequest],
    opts: &RunOptions,
    timings: bool,
) -> Result<Vec<CaseRecord>, SuiteError> {
    requests
        .par_iter()
        .map(|r| {
            r.run(opts)
                .map(|o| CaseRecord::from_outcome(&o, timings))
                .map_err(|source| SuiteError::Engine {
                    check: r.kind.name().to_string(),
                    instance: describe(r),
                    source,
                })
        })
        .collect()
}

pub fn assemble(
    seed: u64,
    config: ConfigEcho,
    cases: Vec<CaseRecord>,
    elapsed_ms: u64,
) -> SuiteReport {
    SuiteReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed,
        summary: Summary::of(&cases),
        config,
        cases,
        elapsed_ms,
    }
}

pub fn run_suite(cfg: &SuiteConfig, seed: u64) -> Result<SuiteReport, SuiteError> {
    cfg.validate()?;
    let start = Instant::now();
    let mut opts = cfg.options();
    if let CheckMode::Evaluate { points, .. } = opts.mode {
        opts.mode = CheckMode::Evaluate { points, seed };
    }
    let cases = run_requests(&cfg.requests(), &opts, cfg.timings)?;
    let elapsed = if cfg.timings {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let mut echo = cfg.echo();
    echo.mode = opts.mode.label().to_string();
    Ok(assemble(seed, echo, cases, elapsed))
}
