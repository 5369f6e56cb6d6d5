//! `gft` — check derivative bounds for normalized analytic functions on
//! the unit disk from the command line.

mod args;
mod commands;
mod parse;

use clap::Parser;
use gft::{Error, Result};

use crate::args::{Cli, Command};

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return 0;
            }
            eprint!("{err}");
            return 64;
        }
    };
    if let Err(err) = init_thread_pool() {
        return emit_error(&err);
    }
    let outcome = match &cli.command {
        Command::Verify(a) => commands::cmd_verify(a),
        Command::Example(a) => commands::cmd_example(a),
        Command::JackProbe(a) => commands::cmd_jack_probe(a),
        Command::Sup(a) => commands::cmd_sup(a),
        Command::Field(a) => commands::cmd_field(a),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => emit_error(&err),
    }
}

/// Print a machine-readable error object and map the error class to an
/// exit code: configuration and parsing problems are usage errors (64),
/// everything else is an evaluation error (1).
fn emit_error(err: &Error) -> i32 {
    let body = serde_json::json!({
        "error_code": err.code(),
        "message": err.to_string(),
    });
    println!("{body}");
    if err.is_config() {
        64
    } else {
        1
    }
}

/// Honor GFT_THREADS: a positive integer pins the worker count, 0 or
/// unset leaves it automatic. Results do not depend on the thread count;
/// the variable only caps resource usage.
fn init_thread_pool() -> Result<()> {
    let raw = match std::env::var("GFT_THREADS") {
        Err(std::env::VarError::NotPresent) => return Ok(()),
        Err(e) => return Err(Error::Config(format!("GFT_THREADS is unreadable: {e}"))),
        Ok(raw) => raw,
    };
    let trimmed = raw.trim();
    let threads: usize = trimmed.parse().map_err(|_| {
        Error::Config(format!(
            "GFT_THREADS must be a nonnegative integer, got {trimmed:?}"
        ))
    })?;
    if threads == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::Config(format!("cannot size the thread pool: {e}")))
}
