//! Command-line front end for `graph-energy-core`: graph-spec files, run
//! reports in text, CSV and JSON, and the exit-status contract.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod report;

pub use args::Cli;
pub use error::{CliError, ExitStatus};
pub use report::RunReport;

use std::io::Write;

use clap::Parser;

/// Parses `argv`, runs the command and writes the report to `out`.
/// Errors go to `err`. Returns the exit status.
pub fn main_with(argv: Vec<String>, out: &mut impl Write, err: &mut impl Write) -> ExitStatus {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() {
                ExitStatus::Usage
            } else {
                let _ = write!(out, "{}", e.render());
                ExitStatus::Success
            };
        }
    };
    let echo = argv.iter().skip(1).cloned().collect();
    let report = match commands::run(&cli, echo) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "graph-energy: {e}");
            return e.status();
        }
    };
    let written = if cli.global.json {
        report::to_json(&report)
            .map_err(|e| e.to_string())
            .and_then(|s| writeln!(out, "{s}").map_err(|e| e.to_string()))
    } else if cli.global.csv {
        report::write_csv(&report, &mut *out).map_err(|e| e.to_string())
    } else {
        report::write_text(&report, out).map_err(|e| e.to_string())
    };
    if let Err(e) = written {
        let _ = writeln!(err, "graph-energy: cannot write report: {e}");
        return ExitStatus::Usage;
    }
    if report.passed() {
        ExitStatus::Success
    } else {
        for v in &report.violations {
            let _ = writeln!(err, "graph-energy: violation: {v}");
        }
        ExitStatus::Violation
    }
}
