use std::fs::File;
use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;

use multdisc_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::FAILURE;
        }
    };
    if let Some(table) = &outcome.table {
        let written = match &cli.out {
            Some(path) => File::create(path)
                .map_err(anyhow::Error::from)
                .and_then(|f| table.write(BufWriter::new(f))),
            None => table.write(io::stdout().lock()),
        };
        if let Err(e) = written {
            eprintln!("error: writing output: {e:#}");
            return ExitCode::FAILURE;
        }
    }
    for line in &outcome.summary {
        eprintln!("{line}");
    }
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
