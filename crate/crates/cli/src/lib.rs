//! Command-line front end: the JSON input document, the `check`, `at`,
//! `phi` and `bundle` commands, and their exit-code contract.
//!
//! Exit codes: 0 when every verdict passes, 1 when one fails, 2 on input or
//! schema errors, 3 when a verdict is undecided and none fails.

pub mod commands;
pub mod document;
pub mod error;
pub mod render;

use std::num::NonZeroUsize;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::{CheckKind, KSelection};
use crate::document::{Document, DEFAULT_MAX_DIM};
use crate::error::{CliError, Result};
use crate::render::{exit_code, Format, Output};

pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hopfgal",
    version,
    about = "Exact checks for Hopf–Galois extensions and K-ring tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the structures of one kind defined in a document.
    Check {
        kind: CheckKind,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Tabulate line classes in the shifted basis of K⁰(ℂPⁿ).
    At {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "k_range")]
        k: Option<i64>,
        /// Inclusive range `A..B`; defaults to `0..n`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        k_range: Option<RangeInclusive<i64>>,
        /// Cross-check products and both identities; exits 1 on a mismatch.
        #[arg(long)]
        self_check: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the distributive law of every extension morphism.
    Phi {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compute the associated bundles of every bundle request.
    Bundle {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = (parse(a)?, parse(b)?);
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// Reads `HOPFGAL_MAX_DIM`, falling back to the default when unset.
pub fn max_dim_from_env() -> Result<usize> {
    match std::env::var("HOPFGAL_MAX_DIM") {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(v) => v
            .trim()
            .parse::<NonZeroUsize>()
            .map(NonZeroUsize::get)
            .map_err(|_| {
                CliError::input(format!(
                    "HOPFGAL_MAX_DIM: expected a positive integer, got {v:?}"
                ))
            }),
    }
}

pub fn load(path: &PathBuf, max_dim: usize) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    document::parse(&text, max_dim)
}

fn report_run(
    file: &PathBuf,
    format: Format,
    max_dim: usize,
    f: impl FnOnce(&Document) -> Result<Output>,
) -> Result<Execution> {
    let doc = load(file, max_dim)?;
    let stderr: String = doc
        .warnings
        .iter()
        .map(|w| format!("warning: ignoring unknown key {w}\n"))
        .collect();
    let out = f(&doc)?;
    Ok(Execution {
        stdout: out.render(format),
        stderr,
        code: exit_code(out.report.overall()),
    })
}

pub fn run(cli: &Cli, max_dim: usize) -> Execution {
    let result = match &cli.command {
        Command::Check { kind, file, format } => {
            report_run(file, *format, max_dim, |d| commands::check(d, *kind))
        }
        Command::Phi { file, format } => report_run(file, *format, max_dim, commands::phi),
        Command::Bundle { file, format } => report_run(file, *format, max_dim, commands::bundle),
        Command::At {
            n,
            k,
            k_range,
            self_check,
            format,
        } => {
            let ks = match (k, k_range) {
                (Some(k), _) => KSelection::Single(*k),
                (None, Some(r)) => KSelection::Range(r.clone()),
                (None, None) => KSelection::Range(0..=*n as i64),
            };
            let (stdout, code) = commands::at(*n, ks, *self_check, *format);
            Ok(Execution {
                stdout,
                stderr: String::new(),
                code,
            })
        }
    };
    result.unwrap_or_else(|e| Execution {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: EXIT_INPUT,
    })
}
