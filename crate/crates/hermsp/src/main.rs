use std::process::ExitCode;

use clap::Parser;
use hermsp::cli::{error_json, run, Cli};
use hermsp::Error;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let table = outcome.report.render();
            match &outcome.document {
                Some(doc) => {
                    eprint!("{table}");
                    print!("{doc}");
                }
                None => print!("{table}"),
            }
            if outcome.report.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}", error_json(&Error::Verification { failed: outcome.report.failed() }));
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(2)
        }
    }
}
