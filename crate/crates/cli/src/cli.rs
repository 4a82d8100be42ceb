//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use critval_core::critpoly::{
    build_p, critical_values, jacobian_direct, rational_point_determinants, theorem_b_rhs,
    CriticalSpec,
};
use critval_core::exact_poly::rational::{format_rational, parse_rational};
use critval_core::exact_poly::ExactRational;
use critval_core::identity_engine::{
    calibrate_sign_rule, Budget, CalibratedIdentity, CheckMode, EngineError, SignRule,
    DIFFERENTIAL_RULE, REGION_RULE,
};
use critval_core::poly_linalg::det_cofactor;

use crate::checks::{CheckKind, CheckRequest, RunOptions};
use crate::report::{read_report, write_report, CaseRecord, CaseStatus, ConfigEcho, ReportError, SuiteReport};
use crate::suite::{assemble, run_requests, run_suite, SuiteConfig, SuiteError, DEFAULT_SEED};

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "critval", version, about = "Exact verifier for multi-integral and critical-value determinant identities")]
pub struct Cli {
    /// List every check with the identity it verifies, then exit.
    #[arg(long)]
    pub list_checks: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

/// Comma-separated exponents such as `1,0,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents(pub Vec<u32>);

impl FromStr for Exponents {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("`{t}` is not a non-negative integer"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Exponents)
    }
}

/// `--n` for sweeps: a single value or an inclusive range `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange(pub usize, pub usize);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        match s.split_once("..") {
            Some((lo, hi)) => Ok(NRange(parse(lo)?, parse(hi.trim_start_matches('='))?)),
            None => {
                let n = parse(s)?;
                Ok(NRange(n, n))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symbolic,
    Evaluate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Value,
    Integrand,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Differential,
    Region,
    Both,
}

fn parse_sign(s: &str) -> Result<SignRule, String> {
    SignRule::parse(s).ok_or_else(|| format!("unknown sign rule `{s}` (use i, i+1 or n-i)"))
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value = "symbolic")]
    pub mode: ModeArg,
    /// Evaluation points in evaluate mode (default: max(10, degree + 1)).
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, env = "CRITVAL_SEED")]
    pub seed: Option<u64>,
    /// Largest number of terms allowed in any intermediate polynomial.
    #[arg(long, default_value_t = Budget::DEFAULT_MAX_TERMS)]
    pub budget: usize,
    /// Write a JSON report to this path.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Record wall-clock times in the report.
    #[arg(long)]
    pub timings: bool,
}

impl Common {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    fn mode(&self) -> CheckMode {
        match self.mode {
            ModeArg::Symbolic => CheckMode::Symbolic,
            ModeArg::Evaluate => CheckMode::Evaluate {
                points: self.points,
                seed: self.seed(),
            },
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct Instance {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<Exponents>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The multi-integral closed form.
    VerifyA {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, default_value_t = 0)]
        b: u32,
        #[command(flatten)]
        common: Common,
    },
    /// The critical-value Jacobian determinant.
    VerifyB {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        common: Common,
    },
    /// Both constructions of the Jacobian entries.
    VerifyJacobian {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        common: Common,
    },
    /// The recurrence in b.
    VerifyRecurrence {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, default_value_t = 0)]
        b: u32,
        #[arg(long, value_enum, default_value = "value")]
        level: LevelArg,
        #[command(flatten)]
        common: Common,
    },
    /// The differential identity for the integrand.
    VerifyDiff {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_parser = parse_sign)]
        sign: Option<SignRule>,
        #[command(flatten)]
        common: Common,
    },
    /// The signed box-region identity.
    VerifyRegion {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_parser = parse_sign)]
        sign: Option<SignRule>,
        #[arg(long, default_value_t = crate::suite::DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[command(flatten)]
        common: Common,
    },
    /// The Cauchy alternant determinant.
    VerifyCauchy {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The determinant closed form derived from the multi-integral form.
    VerifyChain {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        common: Common,
    },
    /// The induction step from n-1 to n.
    VerifyReduction {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        common: Common,
    },
    /// The boundary term of the integration by parts in x_i.
    VerifyBoundary {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        i: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Try every sign rule on small cases and print the table.
    CalibrateSigns {
        #[arg(long, value_enum, default_value = "both")]
        identity: IdentityArg,
        /// Also write the table to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show p(Z), its critical values and the Jacobian.
    Critpoly {
        #[command(flatten)]
        inst: Instance,
        /// Comma-separated distinct rational critical points.
        #[arg(long)]
        at: Option<String>,
    },
    /// Read a JSON report back and print its cases.
    Report {
        path: PathBuf,
    },
    /// Run a grid of checks.
    Sweep {
        #[arg(long, default_value = "1..3")]
        n: NRange,
        #[arg(long, default_value_t = 2)]
        a_max: u32,
        #[arg(long, default_value_t = 2)]
        b_max: u32,
        /// Comma-separated check names (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckKind>,
        #[arg(long, default_value_t = crate::suite::DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{flag}: {message}")]
    Usage { flag: &'static str, message: String },
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let bad_instance = |e: &EngineError| {
            matches!(
                e,
                EngineError::InvalidInstance(_)
                    | EngineError::TheoremBRequiresPositiveMultiplicity { .. }
            )
        };
        match self {
            CliError::Usage { .. }
            | CliError::Suite(SuiteError::BadRange(..))
            | CliError::Suite(SuiteError::OverCap { .. }) => EXIT_USAGE,
            CliError::Engine(e) | CliError::Suite(SuiteError::Engine { source: e, .. })
                if bad_instance(e) =>
            {
                EXIT_USAGE
            }
            _ => EXIT_ERROR,
        }
    }
}

fn usage(flag: &'static str, message: impl Into<String>) -> CliError {
    CliError::Usage {
        flag,
        message: message.into(),
    }
}

/// The exponent vector from `--n` and `--a`; `n` alone means `fill` repeated.
pub fn resolve_exponents(inst: &Instance, fill: u32) -> Result<Vec<u32>, CliError> {
    match (inst.n, &inst.a) {
        (Some(0), _) => Err(usage("--n", "must be at least 1")),
        (Some(n), Some(a)) if a.0.len() != n => Err(usage(
            "--n",
            format!("--n {n} does not match the {} entries of --a", a.0.len()),
        )),
        (_, Some(a)) => Ok(a.0.clone()),
        (Some(n), None) => Ok(vec![fill; n]),
        (None, None) => Err(usage("--a", "give --a (or --n)")),
    }
}

fn render_case(c: &CaseRecord) -> String {
    let status = match c.status {
        CaseStatus::Pass => "pass",
        CaseStatus::Fail => "FAIL",
        CaseStatus::Skipped => "skipped",
    };
    let a: Vec<String> = c.a.iter().map(|e| e.to_string()).collect();
    let mut line = format!("{status:<8}{} n={} a=({})", c.check, c.n, a.join(","));
    if let Some(b) = c.b {
        line += &format!(" b={b}");
    }
    line += &format!(" {}", c.mode);
    if let Some(p) = c.points {
        line += &format!(" points={p}");
    }
    if let Some(w) = &c.witness {
        line += &format!("\n  witness: {}", w.text);
        if w.length > w.text.chars().count() {
            line += &format!(" ... ({} chars, sha256 {})", w.length, w.sha256);
        }
    }
    if let Some(r) = &c.reason {
        line += &format!("\n  reason: {r}");
    }
    line
}

fn finish(report: &SuiteReport, json: Option<&PathBuf>, out: &mut dyn Write) -> Result<i32, CliError> {
    for c in &report.cases {
        writeln!(out, "{}", render_case(c))?;
    }
    let s = report.summary;
    writeln!(out, "summary: {} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped)?;
    if let Some(path) = json {
        write_report(report, path)?;
    }
    Ok(if s.fail == 0 { 0 } else { EXIT_FAIL })
}

fn single(
    request: CheckRequest,
    common: &Common,
    max_degree: u32,
    differential_rule: SignRule,
    region_rule: SignRule,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let opts = RunOptions {
        mode: common.mode(),
        budget: Budget::new(common.budget),
        max_degree,
        differential_rule,
        region_rule,
    };
    let cases = run_requests(std::slice::from_ref(&request), &opts, common.timings)?;
    let n = request.a.len();
    let echo = ConfigEcho {
        checks: vec![request.kind.name().to_string()],
        n_min: n,
        n_max: n,
        a_max: request.a.iter().copied().max().unwrap_or(0),
        b_max: request.b,
        mode: opts.mode.label().to_string(),
        points: opts.mode.points(),
        budget: common.budget,
        max_degree,
        differential_rule: differential_rule.label().to_string(),
        region_rule: region_rule.label().to_string(),
    };
    let elapsed = cases.iter().map(|c| c.elapsed_ms).sum();
    let report = assemble(common.seed(), echo, cases, elapsed);
    finish(&report, common.json.as_ref(), out)
}

fn request(kind: CheckKind, a: Vec<u32>, b: u32) -> CheckRequest {
    CheckRequest { kind, a, b, index: 0 }
}

fn list_checks(out: &mut dyn Write) -> Result<i32, CliError> {
    for k in CheckKind::ALL {
        let modes = if k.supports_evaluate() {
            "symbolic|evaluate"
        } else {
            "symbolic"
        };
        writeln!(out, "{:<22}{:<19}{:<46}{}", k.name(), modes, k.operation(), k.tag())?;
    }
    Ok(0)
}

fn calibrate(identity: IdentityArg, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<i32, CliError> {
    let which: Vec<CalibratedIdentity> = match identity {
        IdentityArg::Differential => vec![CalibratedIdentity::Differential],
        IdentityArg::Region => vec![CalibratedIdentity::Region],
        IdentityArg::Both => vec![CalibratedIdentity::Differential, CalibratedIdentity::Region],
    };
    let mut text = String::new();
    for (k, id) in which.into_iter().enumerate() {
        if k > 0 {
            text.push('\n');
        }
        text += &calibrate_sign_rule(id)?.render_table();
    }
    out.write_all(text.as_bytes())?;
    if let Some(p) = path {
        std::fs::write(p, &text).map_err(|source| ReportError::Write {
            path: p.clone(),
            source,
        })?;
    }
    Ok(0)
}

fn critpoly(inst: &Instance, at: Option<&str>, out: &mut dyn Write) -> Result<i32, CliError> {
    let a = resolve_exponents(inst, 1)?;
    let spec = match at {
        None => CriticalSpec::symbolic(a.clone())?,
        Some(text) => {
            let points = text
                .split(',')
                .map(|t| parse_rational(t.trim()).ok_or_else(|| usage("--at", format!("`{t}` is not a rational"))))
                .collect::<Result<Vec<ExactRational>, _>>()?;
            if points.len() != a.len() {
                return Err(usage("--at", format!("{} points for n = {}", points.len(), a.len())));
            }
            CriticalSpec::rational(a.clone(), points)?
        }
    };
    writeln!(out, "p(Z) = {}", build_p(&spec))?;
    for (j, v) in critical_values(&spec).iter().enumerate() {
        writeln!(out, "p(z{}) = {v}", j + 1)?;
    }
    let jac = jacobian_direct(&a)?;
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            writeln!(out, "J[{},{}] = {}", i + 1, j + 1, jac.get(i, j))?;
        }
    }
    let det = det_cofactor(&jac);
    let rhs = theorem_b_rhs(&a)?;
    writeln!(out, "det J = {det}")?;
    writeln!(out, "closed form = {rhs}")?;
    let mut ok = det == rhs;
    if let Some((symbolic, numeric)) = rational_point_determinants(&spec)? {
        writeln!(out, "det J at points = {}", format_rational(&symbolic))?;
        writeln!(out, "det of evaluated J = {}", format_rational(&numeric))?;
        ok &= symbolic == numeric;
    }
    writeln!(out, "{}", if ok { "pass" } else { "FAIL" })?;
    Ok(if ok { 0 } else { EXIT_FAIL })
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    if cli.list_checks {
        return list_checks(out);
    }
    let Some(command) = cli.command else {
        return Err(usage("<command>", "no subcommand given; try --help"));
    };
    let (d, r) = (DIFFERENTIAL_RULE, REGION_RULE);
    let deg = crate::suite::DEFAULT_MAX_DEGREE;
    match command {
        Command::VerifyA { inst, b, common } => {
            let a = resolve_exponents(&inst, 0)?;
            single(request(CheckKind::TheoremA, a, b), &common, deg, d, r, out)
        }
        Command::VerifyB { inst, common } => {
            let a = resolve_exponents(&inst, 1)?;
            single(request(CheckKind::TheoremB, a, 0), &common, deg, d, r, out)
        }
        Command::VerifyJacobian { inst, common } => {
            let a = resolve_exponents(&inst, 1)?;
            single(request(CheckKind::JacobianPaths, a, 0), &common, deg, d, r, out)
        }
        Command::VerifyRecurrence { inst, b, level, common } => {
            let a = resolve_exponents(&inst, 0)?;
            let kind = match level {
                LevelArg::Value => CheckKind::RecurrenceValue,
                LevelArg::Integrand => CheckKind::RecurrenceIntegrand,
            };
            single(request(kind, a, b), &common, deg, d, r, out)
        }
        Command::VerifyDiff { inst, sign, common } => {
            let a = resolve_exponents(&inst, 0)?;
            single(request(CheckKind::Differential, a, 0), &common, deg, sign.unwrap_or(d), r, out)
        }
        Command::VerifyRegion { inst, sign, max_degree, common } => {
            let a = resolve_exponents(&inst, 0)?;
            if a.len() < 2 {
                return Err(usage("--n", "the region identity needs n >= 2"));
            }
            single(request(CheckKind::Region, a, 0), &common, max_degree, d, sign.unwrap_or(r), out)
        }
        Command::VerifyCauchy { n, common } => {
            if n == 0 {
                return Err(usage("--n", "must be at least 1"));
            }
            single(request(CheckKind::Cauchy, vec![0; n], 0), &common, deg, d, r, out)
        }
        Command::VerifyChain { inst, common } => {
            let a = resolve_exponents(&inst, 1)?;
            single(request(CheckKind::Chain, a, 0), &common, deg, d, r, out)
        }
        Command::VerifyReduction { inst, common } => {
            let a = resolve_exponents(&inst, 0)?;
            if a.len() < 2 {
                return Err(usage("--n", "the reduction step needs n >= 2"));
            }
            single(request(CheckKind::Reduction, a, 0), &common, deg, d, r, out)
        }
        Command::VerifyBoundary { inst, i, common } => {
            let a = resolve_exponents(&inst, 0)?;
            if i == 0 || i > a.len() {
                return Err(usage("--i", format!("must lie in 1..={}", a.len())));
            }
            let req = CheckRequest { kind: CheckKind::Boundary, a, b: 0, index: i };
            single(req, &common, deg, d, r, out)
        }
        Command::CalibrateSigns { identity, out: path } => calibrate(identity, path.as_ref(), out),
        Command::Critpoly { inst, at } => critpoly(&inst, at.as_deref(), out),
        Command::Report { path } => finish(&read_report(&path)?, None, out),
        Command::Sweep { n, a_max, b_max, checks, max_degree, common } => {
            let cfg = SuiteConfig {
                checks: if checks.is_empty() { CheckKind::ALL.to_vec() } else { checks },
                n_min: n.0,
                n_max: n.1,
                a_max,
                b_max,
                mode: common.mode(),
                budget: Budget::new(common.budget),
                max_degree,
                differential_rule: d,
                region_rule: r,
                timings: common.timings,
            };
            let report = run_suite(&cfg, common.seed())?;
            finish(&report, common.json.as_ref(), out)
        }
    }
}
