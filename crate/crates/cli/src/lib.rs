//! Command-line front end: verification suites and JSON reports.

pub mod cli;
pub mod commands;
pub mod config;
pub mod report;
pub mod suites;

use cli::{Cli, Command};
use commands::{CmdError, Output};
use config::{Overrides, Params, PRECISION_ENV};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let file = match &cli.config {
        Some(path) => match Overrides::from_file(path) {
            Ok(o) => o,
            Err(e) => return usage_error(&e),
        },
        None => Overrides::default(),
    };
    let overrides = cli.common.overrides().over(&file);
    let env = std::env::var(PRECISION_ENV).ok();
    let params = match Params::resolve(&overrides, env.as_deref()) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let result = match &cli.command {
        Command::Verify { suite } => match suites::run_suite(suite, &params) {
            Ok(r) => {
                if cli.table {
                    use std::io::Write;
                    let _ = write!(std::io::stdout().lock(), "{}", r.table());
                }
                Ok(Output { ok: r.passed(), json: r.to_json() })
            }
            Err(e) => Err(CmdError::Usage(e)),
        },
        Command::Rigidity(c) => commands::rigidity(c),
        Command::Gt(c) => commands::gt(c, &overrides, &params),
        Command::Kz(c) => commands::kz(c, &params),
        Command::Cyclo(c) => commands::cyclo(c, &overrides, &params),
    };
    match result {
        Ok(out) => {
            let to_stdout = cli.out.is_none() && !(cli.table && matches!(cli.command, Command::Verify { .. }));
            if cli.out.is_some() || to_stdout {
                if let Err(e) = commands::write_output(&out.json, cli.out.as_deref()) {
                    eprintln!("error: {e}");
                    return EXIT_FAIL;
                }
            }
            if out.ok {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(CmdError::Usage(e)) => usage_error(&e),
        Err(CmdError::Failed(e)) => {
            eprintln!("error: {e}");
            EXIT_FAIL
        }
    }
}

fn usage_error(e: &str) -> i32 {
    eprintln!("usage error: {e}");
    EXIT_USAGE
}
