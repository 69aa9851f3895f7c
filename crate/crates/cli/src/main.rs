use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use workbench_cli::commands::{self, Failure, Outcome};

/// Batch workbench for incidence algebras of finite connected posets over
/// exact fields: structural reports, Lie/algebra/anti-automorphism
/// verification, inner-times-elementary decomposition, construction of
/// elementary automorphisms from triple files, and bijection enumeration.
#[derive(Parser)]
#[command(name = "workbench", version)]
struct Cli {
    /// Worker threads for candidate enumeration (default: sequential).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Line-oriented `key=value` output for harnesses.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report: size, field, chains, cycles, radical filtration,
    /// radical centre, anti-isomorphism existence.
    Report { poset: PathBuf },
    /// Verify predicates of a map file; exits 0 iff all requested hold.
    Verify {
        poset: PathBuf,
        map: PathBuf,
        /// Check that the map is a Lie automorphism.
        #[arg(long)]
        lie: bool,
        /// Check that the map preserves every level space.
        #[arg(long)]
        elementary: bool,
        /// Check that the map is proper.
        #[arg(long)]
        proper: bool,
    },
    /// Split a Lie automorphism into an inner unit and an elementary triple.
    Decompose { poset: PathBuf, map: PathBuf },
    /// Build the elementary automorphism of a triple file as a map file.
    BuildTau {
        poset: PathBuf,
        triple: PathBuf,
        /// Treat sigma lines as cover-pair seeds and complete them.
        #[arg(long)]
        complete_sigma: bool,
        /// Write the map file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List (or count) the admissible chain-monotone basis bijections.
    EnumerateTheta {
        poset: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
}

fn theta_limit() -> Result<usize, Failure> {
    match std::env::var("WORKBENCH_THETA_LIMIT") {
        Ok(raw) => raw.parse().map_err(|_| {
            Failure::parse(format!("WORKBENCH_THETA_LIMIT: bad value `{raw}`"))
        }),
        Err(_) => Ok(workbench_core::DEFAULT_THETA_LIMIT),
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Report { poset } => commands::cmd_report(&poset, cli.machine),
        Command::Verify {
            poset,
            map,
            lie,
            elementary,
            proper,
        } => commands::cmd_verify(&poset, &map, lie, elementary, proper, cli.machine),
        Command::Decompose { poset, map } => commands::cmd_decompose(&poset, &map, cli.machine),
        Command::BuildTau {
            poset,
            triple,
            complete_sigma,
            output,
        } => commands::cmd_build_tau(&poset, &triple, complete_sigma, output.as_deref()),
        Command::EnumerateTheta { poset, count_only } => {
            commands::cmd_enumerate_theta(&poset, count_only, theta_limit()?, cli.machine)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build_global();
    match run(cli) {
        Ok((stdout_text, exit)) => {
            print!("{stdout_text}");
            ExitCode::from(exit as u8)
        }
        Err(Failure { exit, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(exit as u8)
        }
    }
}
