use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;
use solvrad_cli::{cmd_info, cmd_sharpness, cmd_suite, cmd_verify, RunFlags, Theorem, EXIT_USAGE};

/// Checks radical criteria on finite permutation groups.
#[derive(Parser)]
#[command(name = "solvrad", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, order, classes and structure of a group.
    Info {
        /// Group spec, e.g. `S(5)`, `direct(C(5),A(5))`, `file:sz8.json`.
        spec: String,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Compare a criterion with its oracle on one group.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        spec: String,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Transposition triples of S(n), 5 <= n <= 8.
    Sharpness {
        n: usize,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Run every entry of a JSON config.
    Suite {
        config: PathBuf,
        #[command(flatten)]
        flags: RunFlags,
    },
}

fn emit<T: Serialize>(report: &T, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    println!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let (code, written) = match &cli.command {
        Command::Info { spec, flags } => {
            let r = cmd_info(spec, flags, None);
            (r.exit_code, emit(&r, flags.out.as_deref()))
        }
        Command::Verify { theorem, spec, flags } => {
            let r = cmd_verify(*theorem, spec, flags, None);
            (r.exit_code, emit(&r, flags.out.as_deref()))
        }
        Command::Sharpness { n, flags } => {
            let r = cmd_sharpness(*n, flags);
            (r.exit_code, emit(&r, flags.out.as_deref()))
        }
        Command::Suite { config, flags } => {
            let r = cmd_suite(config, flags);
            (r.exit_code, emit(&r, flags.out.as_deref()))
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(code as u8)
}
