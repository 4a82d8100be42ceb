use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use critval_cli::report::{read_report, CaseStatus};

fn critval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critval"))
        .args(args)
        .env_remove("CRITVAL_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn single_theorem_a_check() {
    let o = critval(&["verify-a", "--n", "2", "--a", "0,0", "--b", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass    theorem-a n=2 a=(0,0) b=0 symbolic"));
}

#[test]
fn n_is_inferred_and_mismatch_is_a_usage_error() {
    let o = critval(&["verify-a", "--a", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n=2"));
    let o = critval(&["verify-a", "--n", "3", "--a", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--n"));
}

#[test]
fn malformed_flags_name_the_flag() {
    let o = critval(&["verify-a", "--a", "1,x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--a"));
    let o = critval(&["verify-a", "--a", "1", "--mode", "numeric"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--mode"));
    let o = critval(&["verify-b", "--a", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn evaluate_mode_and_seed_sources() {
    let o = critval(&["verify-b", "--a", "1,1,1", "--mode", "evaluate", "--points", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("theorem-b n=3 a=(1,1,1) evaluate points=10"));

    let dir = tempfile::tempdir().unwrap();
    let (p1, p2) = (dir.path().join("flag.json"), dir.path().join("env.json"));
    let flag = critval(&["verify-a", "--a", "1,2", "--mode", "evaluate", "--seed", "42", "--json", path_str(&p1)]);
    assert_eq!(flag.status.code(), Some(0));
    let env = Command::new(env!("CARGO_BIN_EXE_critval"))
        .args(["verify-a", "--a", "1,2", "--mode", "evaluate", "--json", path_str(&p2)])
        .env("CRITVAL_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(0));
    assert_eq!(read_report(&p1).unwrap().seed, 42);
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    let both = Command::new(env!("CARGO_BIN_EXE_critval"))
        .args(["verify-a", "--a", "1", "--seed", "5", "--json", path_str(&p2)])
        .env("CRITVAL_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(both.status.code(), Some(0));
    assert_eq!(read_report(&p2).unwrap().seed, 5);
}

#[test]
fn wrong_sign_rule_fails_with_witness() {
    let o = critval(&["verify-region", "--a", "0,0", "--sign", "i"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert!(stdout(&o).contains("witness: lhs - rhs = "));
}

#[test]
fn every_subcommand_runs() {
    for args in [
        &["verify-recurrence", "--a", "1,0", "--b", "1", "--level", "integrand"][..],
        &["verify-recurrence", "--a", "1,1,1", "--b", "1", "--mode", "evaluate", "--points", "10"],
        &["verify-diff", "--a", "1,0,1"],
        &["verify-region", "--n", "3", "--max-degree", "2"],
        &["verify-cauchy", "--n", "3"],
        &["verify-chain", "--a", "2,1"],
        &["verify-reduction", "--a", "1,2"],
        &["verify-boundary", "--a", "1,0", "--i", "2"],
        &["verify-jacobian", "--a", "1,2"],
        &["critpoly", "--a", "1,2"],
        &["critpoly", "--a", "1,1", "--at", "2,-1/3"],
        &["calibrate-signs", "--identity", "differential"],
    ] {
        let o = critval(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}{}", stdout(&o), stderr(&o));
    }
}

#[test]
fn critpoly_prints_the_simple_case() {
    let o = critval(&["critpoly", "--a", "1"]);
    let text = stdout(&o);
    assert!(text.contains("p(Z) = -z1*Z + 1/2*Z^2"), "{text}");
    assert!(text.contains("det J = -z1"));
    let o = critval(&["critpoly", "--a", "1", "--at", "2"]);
    assert!(stdout(&o).contains("p(z1) = -2"));
    let o = critval(&["critpoly", "--a", "1,1", "--at", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn list_checks_names_operations() {
    let o = critval(&["--list-checks"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("theorem-a"));
    assert!(text.contains("critpoly::verify_theorem_b"));
}

#[test]
fn tiny_budget_sweep_skips_but_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = critval(&["sweep", "--n", "2..3", "--a-max", "1", "--b-max", "1", "--budget", "10", "--json", path_str(&path)]);
    assert_eq!(o.status.code(), Some(0));
    let r = read_report(&path).unwrap();
    assert_eq!(r.summary.fail, 0);
    assert!(r.summary.skipped > r.summary.pass);
    assert!(r.cases.iter().any(|c| c.status == CaseStatus::Skipped && c.reason.is_some()));
}

#[test]
fn over_cap_sweep_is_rejected() {
    let o = critval(&["sweep", "--n", "1..7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"));
}

#[test]
fn report_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let o = critval(&["verify-a", "--a", "1", "--json", path_str(&good)]);
    assert_eq!(o.status.code(), Some(0));
    let o = critval(&["report", path_str(&good)]);
    assert_eq!(o.status.code(), Some(0));

    let text = std::fs::read_to_string(&good).unwrap();
    let cut = dir.path().join("cut.json");
    std::fs::write(&cut, &text[..text.len() / 2]).unwrap();
    let o = critval(&["report", path_str(&cut)]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("line"));

    let missing = dir.path().join("nope/out.json");
    let o = critval(&["verify-a", "--a", "1", "--json", path_str(&missing)]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("nope"));
}

fn golden() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/default_sweep.json")
}

/// Set `UPDATE_GOLDEN=1` to rewrite the file.
#[test]
fn default_sweep_matches_golden_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let o = critval(&["sweep", "--json", path_str(&path)]);
    assert_eq!(o.status.code(), Some(0));
    let report = read_report(&path).unwrap();
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.skipped, 0);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::copy(&path, golden()).unwrap();
    }
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(golden()).unwrap());
}
