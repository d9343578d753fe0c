//! Command-line front end. [`run`] parses arguments, computes, and returns
//! everything the process would print, so tests can call it in-process.
//!
//! Exit codes: 0 when the answer is true (or the command has no boolean
//! answer), 1 when it is false, 2 on any error.

mod args;
mod commands;
mod report;

use std::ffi::OsString;

use clap::Parser;

pub use args::{ArithCommand, Check, ClassKind, Cli, Command};

pub const SCHEMA_VERSION: u64 = 1;

pub const EXIT_TRUE: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hall_verdict::Error),
    #[error(transparent)]
    Oracle(#[from] hall_oracle::OracleError),
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.use_stderr() {
                true => Output { code: EXIT_ERROR, stdout: String::new(), stderr: text },
                false => Output { code: EXIT_TRUE, stdout: text, stderr: String::new() },
            };
        }
    };
    match commands::dispatch(&cli.command) {
        Ok((answer, json)) => Output {
            code: if answer { EXIT_TRUE } else { EXIT_FALSE },
            stdout: report::render(json),
            stderr: String::new(),
        },
        Err(e) => Output { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
