mod cli;
mod commands;
mod error;
mod fuzz;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = cli::Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let status = match commands::run(args.command, &mut out) {
        Ok(status) => status,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.status()
        }
    };
    if out.flush().is_err() {
        return error::Status::Failed.into();
    }
    status.into()
}
