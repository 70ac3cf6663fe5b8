use std::io::Write;
use std::path::Path;

use clap::Parser;
use rayon::prelude::*;

use crate::args::Cli;
use crate::report::{CliError, Report, Status};

fn run_line(line: &str) -> Report {
    let Some(words) = shlex::split(line) else {
        return Report::failed("", line, &CliError::input("unbalanced quotes"));
    };
    let name = words.first().cloned().unwrap_or_default();
    let cli = match Cli::try_parse_from(std::iter::once("cbord".to_string()).chain(words)) {
        Ok(cli) => cli,
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid command").trim_start_matches("error: ");
            return Report::failed(&name, line, &CliError::input(first));
        }
    };
    let (name, input, outcome) = crate::execute(&cli.command);
    match outcome {
        Ok(o) => o.report,
        Err(e) => Report::failed(name, input, &e),
    }
}

/// Evaluates lines in parallel and prints the reports in input order.
/// Blank lines and `#` comments are skipped.
pub fn run(path: &Path) -> Status {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Status::InputError;
        }
    };
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let reports: Vec<Report> = lines.par_iter().map(|l| run_line(l)).collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut failed = false;
    for r in &reports {
        failed |= r.error.is_some();
        let _ = writeln!(out, "{}", r.to_json());
    }
    if failed {
        Status::PartialFailure
    } else {
        Status::Success
    }
}
