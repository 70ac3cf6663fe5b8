mod args;
mod batch;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use report::{CliError, Outcome, Report, Status};

/// Runs a non-batch command. Returns the command name with the outcome so
/// failures can still be reported.
pub(crate) fn execute(cmd: &Command) -> (&'static str, String, Result<Outcome, CliError>) {
    match cmd {
        Command::Homfly { braid, .. } => ("homfly", braid.clone(), commands::homfly(braid)),
        Command::Signature { link, .. } => ("signature", link_text(link), commands::signature_cmd(link)),
        Command::Alexander { link, .. } => ("alexander", link_text(link), commands::alexander_cmd(link)),
        Command::Obstruct {
            link,
            genus_lb,
            auto_sigma,
            ..
        } => (
            "obstruct",
            link_text(link),
            commands::obstruct(link, genus_lb.as_deref(), *auto_sigma),
        ),
        Command::Plumbing { tree, .. } => ("plumbing", tree.clone(), commands::plumbing(tree)),
        Command::Certify { rule, values, .. } => ("certify", rule.clone(), commands::certify(rule, values)),
        Command::Batch { file } => (
            "batch",
            file.display().to_string(),
            Err(CliError::input("batch files cannot contain batch commands")),
        ),
    }
}

fn link_text(link: &args::LinkInput) -> String {
    link.braid.clone().or_else(|| link.tree.clone()).unwrap_or_default()
}

fn wants_json(cmd: &Command) -> bool {
    match cmd {
        Command::Homfly { out, .. }
        | Command::Signature { out, .. }
        | Command::Alexander { out, .. }
        | Command::Obstruct { out, .. }
        | Command::Plumbing { out, .. }
        | Command::Certify { out, .. } => out.json,
        Command::Batch { .. } => true,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Batch { file } = &cli.command {
        return batch::run(file).into();
    }
    let json = wants_json(&cli.command);
    let (name, input, outcome) = execute(&cli.command);
    match outcome {
        Ok(o) => {
            if json {
                println!("{}", o.report.to_json());
            } else {
                print!("{}", o.text);
                for w in &o.report.warnings {
                    eprintln!("warning: {w}");
                }
            }
            Status::Success.into()
        }
        Err(e) => {
            if json {
                println!("{}", Report::failed(name, input, &e).to_json());
            }
            eprintln!("error: {e}");
            e.status.into()
        }
    }
}
