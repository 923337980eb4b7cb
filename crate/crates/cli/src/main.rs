//! `quasiramsey` — find, in a graph or its complement, an induced subgraph
//! on exactly k vertices of minimum degree at least (k-1)/2, plus the
//! supporting oracle and experiment commands.
//!
//! Exit codes: 0 success / all verified; 1 honest not-found or unverified;
//! 2 input error; 3 resource guard exceeded.

mod commands;
mod errors;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "quasiramsey",
    version,
    about = "Dense induced subgraphs in a graph or its complement, with verified certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline on graph6 input, one JSON certificate per line.
    Extract(commands::ExtractArgs),
    /// Re-check certificates (JSON lines) against a graph.
    Verify(commands::VerifyArgs),
    /// Exhaustive best min-degree k-subset on both sides.
    Oracle(commands::OracleArgs),
    /// Exact fixed quasi-Ramsey number for tiny parameters.
    Rstar(commands::RstarArgs),
    /// Emit seeded G(n, p) samples as graph6.
    Gen(commands::GenArgs),
    /// Set-system discrepancy via the exact or randomized backend.
    Disc(commands::DiscArgs),
    /// Batch experiments with CSV output.
    Experiment(commands::ExperimentArgs),
}

fn main() {
    init_thread_pool();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Extract(args) => commands::extract(args),
        Command::Verify(args) => commands::verify(args),
        Command::Oracle(args) => commands::oracle(args),
        Command::Rstar(args) => commands::rstar(args),
        Command::Gen(args) => commands::gen(args),
        Command::Disc(args) => commands::disc(args),
        Command::Experiment(args) => commands::experiment(args),
    };
    match result {
        Ok(()) => {}
        Err(e) => {
            if !e.message().is_empty() {
                eprintln!("quasiramsey: {}", e.message());
            }
            std::process::exit(e.exit_code());
        }
    }
}

/// Caps the rayon pool from QUASIRAMSEY_THREADS (unset or invalid = default).
fn init_thread_pool() {
    if let Ok(value) = std::env::var("QUASIRAMSEY_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}
