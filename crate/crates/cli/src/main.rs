use std::process::ExitCode;

use clap::Parser;
use genlogistic_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.into_config() {
        Ok(cfg) => execute(&cfg),
        Err(e) => {
            eprintln!("genlogistic: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
