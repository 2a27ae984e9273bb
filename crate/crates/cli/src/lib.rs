//! Command-line front end for the `wbext` extension engine.

pub mod args;
pub mod commands;
pub mod record;
pub mod render;

use args::{Cli, Command};
pub use commands::{CliError, Report};

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Solve(a) => commands::solve(a),
        Command::Scan(a) => commands::scan(a),
        Command::Classify(a) => commands::classify(a),
        Command::Replay(a) => commands::replay(a),
        Command::CheckAxioms(a) => commands::check_axioms(a),
        Command::Verify(a) => commands::verify(a),
    }
}
