use std::io::Write;
use std::process::ExitCode;

use cechpers_cli::{run, Args, RunConfig, RunError};
use clap::Parser;

fn main() -> ExitCode {
    let args = Args::parse();
    let result = RunConfig::try_from(args).map_err(RunError::from).and_then(|config| {
        let text = run(&config)?;
        match &config.output {
            Some(path) => std::fs::write(path, &text)
                .map_err(|e| RunError::Input(format!("{}: {e}", path.display()))),
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| RunError::Input(e.to_string())),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
