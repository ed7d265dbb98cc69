use std::process::ExitCode;

use clap::Parser;
use graphspec_cli::{run, Cli, RunConfig, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            // clap's own code 2 would read as an oracle mismatch
            return if err.use_stderr() { Status::Validation.into() } else { Status::Success.into() };
        }
    };
    let config = RunConfig::from_command(cli.command);
    match run(&config) {
        Ok(status) => status.into(),
        Err(err) => {
            eprintln!("graphspec: {err}");
            err.status().into()
        }
    }
}
