//! Command-line front end for `graphspec-core`: argument handling, the five
//! subcommands and their CSV / JSON artifacts.

pub mod artifact;
pub mod commands;
pub mod config;
pub mod error;

use std::io::Write;

pub use artifact::{config_from_artifact, Artifact, Cell, Table};
pub use commands::execute;
pub use config::{Cli, Command, OutputFormat, RunConfig, Subcommand};
pub use error::{CliError, Status};

/// Executes `config`, writes its artifact to `--out` (or stdout) and returns
/// the exit status.
pub fn run(config: &RunConfig) -> Result<Status, CliError> {
    let (artifact, status) = execute(config)?;
    let bytes = artifact.render()?;
    match &config.out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(&bytes)?,
    }
    Ok(status)
}
