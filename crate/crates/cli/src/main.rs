use std::io::{self, Write};
use std::process::ExitCode;

use anfnl::{run, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(config) => config,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let status = run(&config, &mut out);
    let _ = out.flush();
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("anfnl: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
