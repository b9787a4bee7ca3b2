//! Batch verification runner.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for
//! configuration errors (including unparsable arguments).

use std::process::ExitCode;

use clap::Parser;
use e8kit::report::{run, Backend, Format, RunConfig, Suite};
use e8kit::Error;

#[derive(Parser, Debug)]
#[command(name = "verify", version, about = "Run the e8 verification suites and emit a report")]
struct Args {
    /// identities, dims, spin10, orbits, wspace or all
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// exact (rational) or approx (floating point)
    #[arg(long, default_value = "exact")]
    backend: Backend,
    /// Tolerance of the approximate backend
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Seed of every random draw
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random draws per sampled check (default: per-check minimum)
    #[arg(long)]
    samples: Option<usize>,
    /// json or markdown
    #[arg(long, default_value = "json")]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = RunConfig {
        suite: args.suite,
        backend: args.backend,
        tol: args.tol,
        seed: args.seed,
        samples: args.samples,
        format: args.format,
        out: args.out,
    };
    let report = match run(&cfg) {
        Ok(r) => r,
        Err(Error::Config(msg)) => {
            eprintln!("verify: configuration error: {msg}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(1);
        }
    };
    let text = report.render();
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("verify: cannot write {path}: {e}");
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    for w in &report.summary.warnings {
        eprintln!("verify: warning: {w}");
    }
    let s = &report.summary;
    eprintln!("verify: {} checks, {} passed, {} failed, {} info", s.total, s.passed, s.failed, s.info);
    ExitCode::from(report.exit_code() as u8)
}
