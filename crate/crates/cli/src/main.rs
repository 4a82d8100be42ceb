use std::io;
use std::process::ExitCode;

use clap::Parser;
use critval_cli::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("critval: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
