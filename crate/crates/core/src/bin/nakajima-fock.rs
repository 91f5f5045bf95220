use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nakajima_fock::report::{render, Format};
use nakajima_fock::verify::{Command, RankRange, RunConfig};

#[derive(Parser)]
#[command(name = "nakajima-fock", version, about = "Exact verification suites for the Heisenberg Fock model")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generating-function identities among E(z), H(z) and P(z)
    VerifyGenfun(Flags),
    /// Pieri rule against brute-force polynomial multiplication
    VerifyPieri(Flags),
    /// Heisenberg commutation relations on the Fock space
    VerifyCommutators(Flags),
    /// Vertex-operator identity for C_-(z) and exp C_+(z)
    VerifyVertex(Flags),
    /// Solve for the structure constants c_{r,n}
    SolveConstants(Flags),
    /// Grassmannian intersection numbers and the excess-intersection identity
    VerifySchubert(Flags),
    /// Subdivision sums against the binomial generating function
    VerifyPairing(Flags),
    /// Dimension and degree bookkeeping
    VerifyNumerology(Flags),
    /// Every suite with default parameters
    All(Flags),
}

#[derive(Args)]
struct Flags {
    /// Rank or inclusive rank range, e.g. 2 or 1..3
    #[arg(long)]
    rank: Option<RankRange>,
    /// Intersection pairing q
    #[arg(long, allow_hyphen_values = true)]
    pairing: Option<i64>,
    /// Truncation order N
    #[arg(long)]
    order: Option<usize>,
    /// Largest degree of basis vectors or symmetric functions
    #[arg(long)]
    degree_cap: Option<usize>,
    /// json, csv or text
    #[arg(long, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, flags) = match cli.command {
        Cmd::VerifyGenfun(f) => (Command::Genfun, f),
        Cmd::VerifyPieri(f) => (Command::Pieri, f),
        Cmd::VerifyCommutators(f) => (Command::Commutators, f),
        Cmd::VerifyVertex(f) => (Command::Vertex, f),
        Cmd::SolveConstants(f) => (Command::SolveConstants, f),
        Cmd::VerifySchubert(f) => (Command::Schubert, f),
        Cmd::VerifyPairing(f) => (Command::Pairing, f),
        Cmd::VerifyNumerology(f) => (Command::Numerology, f),
        Cmd::All(f) => (Command::All, f),
    };
    let config = RunConfig {
        command,
        ranks: flags.rank,
        pairing: flags.pairing,
        order: flags.order,
        degree_cap: flags.degree_cap,
        format: flags.format,
        out: flags.out,
    };

    let reports = match config.run() {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            // clap already uses 2 for malformed flags
            return ExitCode::from(3);
        }
    };
    let text = render(&reports, config.format);
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    if reports.iter().all(|r| r.all_pass()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
