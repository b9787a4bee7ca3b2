//! The `verify` binary: exit codes, report layout and reproducibility.

use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn config_errors_exit_with_2() {
    for args in [
        &["--suite", "orbits", "--backend", "exact"][..],
        &["--suite", "nonsense"],
        &["--backend", "symbolic"],
        &["--format", "xml"],
        &["--suite", "dims", "--tol=-1"],
        &["--suite", "dims", "--tol", "0"],
    ] {
        let out = verify(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn spin10_report_has_the_documented_layout() {
    let out = verify(&["--suite", "spin10"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["version"], "1.0");
    assert_eq!(v["config"]["suite"], "spin10");
    assert_eq!(v["config"]["backend"], "exact");
    let checks = v["checks"].as_array().unwrap();
    for c in checks {
        for key in ["id", "anchor", "quote", "status", "expected", "actual"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
    let brackets = checks.iter().filter(|c| c["id"].as_str().unwrap().starts_with("spin10.bracket.")).count();
    assert_eq!(brackets, 990);
    assert_eq!(v["summary"]["failed"], 0);
    let r01 = checks.iter().find(|c| c["id"] == "spin10.bracket.R01.R02").unwrap();
    assert_eq!(r01["expected"], "-R12");
}

#[test]
fn exact_reports_are_byte_identical() {
    let a = verify(&["--suite", "spin10", "--seed", "5"]);
    let b = verify(&["--suite", "spin10", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn approx_reports_repeat_under_the_same_seed() {
    let args = ["--suite", "orbits", "--backend", "approx", "--samples", "3", "--seed", "9"];
    let (a, b) = (verify(&args), verify(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn zero_samples_pass_vacuously_with_a_warning() {
    let out = verify(&["--suite", "orbits", "--backend", "approx", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let warnings = v["summary"]["warnings"].as_array().unwrap();
    assert!(warnings.iter().any(|w| w.as_str().unwrap().contains("vacuously")));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn failing_checks_exit_with_1() {
    // Rounding alone exceeds this tolerance.
    let out = verify(&["--suite", "orbits", "--backend", "approx", "--samples", "2", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn markdown_output_goes_to_the_requested_file() {
    let path = std::env::temp_dir().join(format!("verify-{}.md", std::process::id()));
    let p = path.to_str().unwrap();
    let out = verify(&["--suite", "spin10", "--format", "markdown", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("# Verification report"));
    assert!(text.contains("| spin10.bracket.R01.R02 |"));
}

#[test]
fn unwritable_output_is_a_config_error() {
    let out = verify(&["--suite", "spin10", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(out.status.code(), Some(2));
}
