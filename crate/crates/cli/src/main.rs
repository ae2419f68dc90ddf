use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gz_floer_cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = RunConfig::from_cli(cli).and_then(|config| run(&config));
    match outcome {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("gz-floer: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
