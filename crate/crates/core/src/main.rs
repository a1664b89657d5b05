use clap::Parser;
use std::process::ExitCode;
use zx_core::cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stderr = std::io::stderr();
    match run(&cli, &mut stderr) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zx: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
