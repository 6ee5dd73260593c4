mod commands;
mod spec;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use constacyclic::Error;

use crate::commands::{ChainArgs, Output};
use crate::spec::RingSpec;

/// Constacyclic codes over finite fields and finite chain rings.
#[derive(Parser)]
#[command(name = "constacyclic", version)]
struct Cli {
    /// Bound on enumerations, tables and searches (overrides the defaults).
    #[arg(long, global = true)]
    cap: Option<u64>,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - lambda into monic basic irreducibles.
    Factor {
        #[arg(long)]
        ring: RingSpec,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        /// Write integer coefficients in the symmetric range, e.g. x-1.
        #[arg(long)]
        signed: bool,
    },
    /// An n-th root of lambda.
    Root {
        #[arg(long)]
        ring: RingSpec,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Every ideal of R[x]/(x^n - lambda), by exhaustive enumeration.
    Ideals {
        #[arg(long)]
        ring: RingSpec,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// The ideals <pi^i> of GR(p^e, r)[x]/(x^{p^s} - (alpha + p beta)).
    Chaincodes {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        beta: String,
    },
    /// Run a verification suite (or all of them).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Inapplicable(_) => 2,
        Error::CapExceeded { .. } => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Factor {
            ring,
            n,
            lambda,
            signed,
        } => commands::factor(&ring, n, &lambda, signed, cli.cap),
        Command::Root { ring, n, lambda } => commands::root(&ring, n, &lambda, cli.cap),
        Command::Ideals { ring, n, lambda } => commands::ideals(&ring, n, &lambda, cli.cap),
        Command::Chaincodes {
            p,
            e,
            r,
            s,
            alpha,
            beta,
        } => commands::chaincodes(
            &ChainArgs {
                p,
                e,
                r,
                s,
                alpha: &alpha,
                beta: &beta,
            },
            cli.cap,
        ),
        Command::Verify { suite } => commands::verify(&suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                print!("{}", out.human);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "error": err.to_string(), "exit_code": exit_code(&err) })
                );
            }
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
