//! The ten acceptance criteria, one pass/fail line each.
//!
//! Criteria 7 and 8 run on the approximate backend, all others on the exact
//! one. Criteria run concurrently; lines are printed in order.

use e8kit::report::{criterion, criterion_name, Backend, Check, RunConfig, Status, CRITERIA};

struct Outcome {
    n: u8,
    checks: Vec<Check>,
    error: Option<String>,
    extra: Option<String>,
}

fn config(n: u8) -> RunConfig {
    let backend = if matches!(n, 7 | 8) { Backend::Approx } else { Backend::Exact };
    RunConfig { backend, seed: 2024, ..RunConfig::default() }
}

/// Requirements beyond "every check passes".
fn extra_requirement(n: u8, checks: &[Check]) -> Option<String> {
    let count = |prefix: &str| checks.iter().filter(|c| c.id.starts_with(prefix) && c.status == Status::Pass).count();
    match n {
        1 if checks.len() != 16 => Some(format!("expected 16 dimension checks, got {}", checks.len())),
        2 if count("spin10.bracket.") != 990 => Some(format!("{} of 990 commutators pass", count("spin10.bracket."))),
        2 if count("spin10.member.") != 45 => Some(format!("{} of 45 members pass", count("spin10.member."))),
        8 if count("orbits.") != 9 => Some(format!("{} of 9 reduction families pass", count("orbits."))),
        _ => None,
    }
}

fn run_one(n: u8) -> Outcome {
    let mut warnings = Vec::new();
    match criterion(n, &config(n), &mut warnings) {
        Ok(checks) => {
            let extra = extra_requirement(n, &checks);
            Outcome { n, checks, error: None, extra }
        }
        Err(e) => Outcome { n, checks: Vec::new(), error: Some(e.to_string()), extra: None },
    }
}

#[test]
fn acceptance() {
    let outcomes: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=CRITERIA).map(|n| s.spawn(move || run_one(n))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    });
    let mut failed = Vec::new();
    for o in &outcomes {
        let bad: Vec<&Check> = o.checks.iter().filter(|c| c.status == Status::Fail).collect();
        let ok = o.error.is_none() && o.extra.is_none() && bad.is_empty() && !o.checks.is_empty();
        let detail = if let Some(e) = &o.error {
            e.clone()
        } else if let Some(x) = &o.extra {
            x.clone()
        } else if !bad.is_empty() {
            bad.iter().take(3).map(|c| format!("{}: {}", c.id, c.actual)).collect::<Vec<_>>().join("; ")
        } else {
            format!("{} checks", o.checks.len())
        };
        println!("criterion {:>2} {:<40} {} ({detail})", o.n, criterion_name(o.n), if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(o.n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
