mod args;
mod commands;
mod error;
mod input;
mod render;
mod report;
mod verify;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::Cli;
use error::{CliError, CliResult};

fn emit(report: &report::RunReport, json: Option<&Path>) -> CliResult<()> {
    let text = serde_json::to_string_pretty(report).expect("reports serialize") + "\n";
    match json {
        Some(p) if p == Path::new("-") => {
            print!("{text}");
        }
        Some(p) => {
            std::fs::write(p, text).map_err(|source| CliError::Write {
                path: p.to_path_buf(),
                source,
            })?;
            print!("{}", render::render(report));
        }
        None => print!("{}", render::render(report)),
    }
    std::io::stdout().flush().ok();
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let result = commands::run(&cli.command, &cli.common, argv).and_then(|mut outcome| {
        outcome.report.wall_time_ms = start.elapsed().as_millis() as u64;
        emit(&outcome.report, cli.common.json.as_deref())?;
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
