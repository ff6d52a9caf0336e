use std::process::ExitCode;

use clap::Parser;
use supercatalan::cli::{self, Cli, EXIT_INTERNAL, EXIT_USAGE};

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    let outcome = match cli::run(&args) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = outcome.document.render(args.format);
    let written = match &args.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INTERNAL as u8);
    }
    ExitCode::from(outcome.exit_code as u8)
}
