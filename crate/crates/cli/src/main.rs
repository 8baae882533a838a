use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use su3poly_cli::{run, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(&cfg) {
        Ok(outcome) => {
            if cfg.output.is_none() {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(outcome.output.as_bytes()).is_err() {
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
