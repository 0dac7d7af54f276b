//! Command-line front end: generate a system, compute its lex basis, solve,
//! classify and verify, with every artifact written as JSON.

pub mod check;
pub mod config;
pub mod error;
pub mod gen;
pub mod groebner;
pub mod io;
pub mod solve;

use std::path::PathBuf;
use std::time::Instant;

use config::{Cli, Command, Format};
use error::{exit, CliError};

/// Human and machine forms of a command's result line.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub text: String,
    pub json: serde_json::Value,
}

/// What a command produced: the artifact text, its summary and whether a
/// verification failed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub artifact: String,
    pub summary: Summary,
    pub failure: Option<String>,
}

impl Command {
    pub fn out(&self) -> Option<&PathBuf> {
        match self {
            Command::Gen(a) => a.out.as_ref(),
            Command::Groebner(a) => a.out.as_ref(),
            Command::Solve(a) => a.out.as_ref(),
            Command::Verify(a) => a.out.as_ref(),
            Command::Overlaps(a) => a.out.as_ref(),
            Command::Gram(a) => a.out.as_ref(),
        }
    }
}

fn done<T: serde::Serialize>((artifact, summary): (T, Summary)) -> Outcome {
    Outcome { artifact: io::to_pretty(&artifact), summary, failure: None }
}

/// Run one command without touching stdout or the output file.
pub fn run(command: &Command) -> Result<Outcome, CliError> {
    Ok(match command {
        Command::Gen(a) => done(gen::cmd_gen(a)?),
        Command::Groebner(a) => done(groebner::cmd_groebner(a)?),
        Command::Solve(a) => done(solve::cmd_solve(a)?),
        Command::Verify(a) => {
            let (report, summary) = check::cmd_verify(a)?;
            let failure =
                (!report.ok).then(|| format!("max deviation {:e} exceeds {:e}", report.max_dev, report.tolerance));
            Outcome { failure, ..done((report, summary)) }
        }
        Command::Overlaps(a) => done(check::cmd_overlaps(a)?),
        Command::Gram(a) => done(check::cmd_gram(a)?),
    })
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<(), CliError> {
    match cli.command.out() {
        Some(path) => {
            io::write_text(path, &outcome.artifact)?;
            match cli.format {
                Format::Text => println!("{}", outcome.summary.text),
                Format::Json => println!("{}", outcome.summary.json),
            }
        }
        None => {
            print!("{}", outcome.artifact);
            eprintln!("{}", outcome.summary.text);
        }
    }
    Ok(())
}

/// Parse-free entry point used by the binary; returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    let started = Instant::now();
    let result = equilines::par::with_threads(cli.threads, || run(&cli.command));
    let code = match result.and_then(|outcome| {
        emit(cli, &outcome)?;
        outcome.failure.map_or(Ok(()), |f| Err(CliError::VerificationFailed(f)))
    }) {
        Ok(()) => exit::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    code
}
