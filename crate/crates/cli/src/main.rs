//! `p4rat`: generate, verify and transform exact rational Painlevé IV
//! solutions.
//!
//! Exit codes: 0 success, 1 nonzero residual, 2 domain error, 3 parse
//! failure, 4 degenerate transformation step.

mod commands;
mod records;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "p4rat", version, about = "Exact rational solutions of Painlevé IV")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Hierarchy {
    #[value(name = "2x")]
    TwoX,
    #[value(name = "2x-hat")]
    TwoXHat,
    #[value(name = "1x")]
    OneX,
    #[value(name = "1x-hat")]
    OneXHat,
    #[value(name = "2x3")]
    TwoXThird,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    P4,
    Rho,
    Multiplet,
    Frame,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Latex,
}

#[derive(clap::Args, Clone, Debug)]
pub struct MemberArgs {
    /// Hierarchy to draw from.
    #[arg(long, value_enum)]
    pub hierarchy: Hierarchy,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub n: Option<i64>,
    /// Variant 1 or 2 (`1x` and `2x3` hierarchies).
    #[arg(long)]
    pub variant: Option<String>,
    /// Direction + or - (`2x3` hierarchy).
    #[arg(long, allow_hyphen_values = true)]
    pub dir: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build one hierarchy member and verify it.
    Generate {
        #[command(flatten)]
        member: MemberArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify candidates read from a file (`-` for standard input).
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Integration constant of the second-order ρ-equation.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        c: String,
    },
    /// Apply a generator word to a multiplet, streaming every step.
    Transform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Walk a word from the multiplet of a hierarchy member (default: the
    /// cubic seed 8x³/27).
    Orbit {
        #[arg(long, value_enum)]
        hierarchy: Option<Hierarchy>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        dir: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the group relations on parameters and on a seed multiplet.
    Relations {
        /// Multiplet file; defaults to the multiplet of the cubic seed.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Additional random parameter triples to test.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Convert generated records into verifier inputs or LaTeX.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Sign of ε for `--kind frame`.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        epsilon: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate { member, out, format } => commands::generate(&member, out.as_deref(), format),
        Command::Verify { input, kind, c } => commands::verify(&input, kind, &c),
        Command::Transform { input, word, out } => commands::transform(&input, &word, out.as_deref()),
        Command::Orbit { hierarchy, k, n, variant, dir, word, out } => {
            let member = hierarchy.map(|hierarchy| MemberArgs { hierarchy, k, n, variant, dir });
            commands::orbit(member.as_ref(), &word, out.as_deref())
        }
        Command::Relations { input, random, seed, format } => {
            commands::relations(input.as_deref(), random, seed, format)
        }
        Command::Export { input, kind, format, epsilon, out } => {
            commands::export(&input, kind, format, &epsilon, out.as_deref())
        }
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(failure) => {
            eprintln!("p4rat: {}", failure.message);
            ExitCode::from(failure.status as u8)
        }
    }
}
