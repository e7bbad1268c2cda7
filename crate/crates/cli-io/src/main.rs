use clap::Parser;
use cli_io::cli::{run, Cli, Format};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.output),
    }
    if cli.format != Some(Format::Text) {
        eprintln!("{}", outcome.summary);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
