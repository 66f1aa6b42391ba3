use std::process::ExitCode;

use clap::Parser;
use saltbox_roof::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(outcome) => ExitCode::from(outcome.exit_code() as u8),
        Err(e) => {
            eprintln!("saltbox: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
