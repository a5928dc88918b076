//! Library side of the `polyweyl` command-line tool: argument definitions,
//! configuration files and the report types written by each command.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{CommandFactory, FromArgMatches};

use crate::args::Cli;
use crate::error::CliError;

/// Parses `args` (program name first), merging any `--config` file.
pub fn parse_cli(args: Vec<OsString>) -> Result<Cli, CliError> {
    let cmd = Cli::command();
    let args = config::expand_config(&cmd, args)?;
    let mut cmd = cmd.args_override_self(true);
    let names: Vec<String> = cmd.get_subcommands().map(|s| s.get_name().to_string()).collect();
    for name in names {
        cmd = cmd.mut_subcommand(name, |s| s.args_override_self(true));
    }
    let matches = cmd.try_get_matches_from(args)?;
    Ok(Cli::from_arg_matches(&matches)?)
}

/// Parses, runs and writes the artifact.
pub fn main_with_args(args: Vec<OsString>) -> Result<(), CliError> {
    let cli = parse_cli(args)?;
    let bytes = commands::run(&cli)?;
    match &cli.output {
        Some(path) => fs::write(path, &bytes)
            .map_err(|source| CliError::Io { context: format!("writing {}", path.display()), source }),
        None => std::io::stdout()
            .lock()
            .write_all(&bytes)
            .map_err(|source| CliError::Io { context: "writing standard output".into(), source }),
    }
}
