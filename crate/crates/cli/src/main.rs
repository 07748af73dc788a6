use clap::{Parser, Subcommand, ValueEnum};
use specdist_cli::commands::{
    cmd_distance, cmd_seminorm, cmd_table, cmd_verify, SolverFlags, TableFormat,
};
use std::path::PathBuf;
use std::process::ExitCode;

/// Connes spectral distances on finite spectral triples.
///
/// Triples, states and elements are JSON files; complex numbers are
/// `[re, im]` pairs. Distances follow the convention without the ½ factor,
/// so qubit distances equal Euclidean Bloch-vector distances. Exit codes:
/// 0 success, 2 parse error, 3 solver diagnostic.
#[derive(Parser)]
#[command(name = "specdist", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two states; prints a JSON record.
    Distance {
        /// Triple description (JSON).
        triple: PathBuf,
        /// First state (JSON).
        state1: PathBuf,
        /// Second state (JSON).
        state2: PathBuf,
        /// Target absolute accuracy of the solver.
        #[arg(long)]
        tol: Option<f64>,
        /// Seed for the solver's random restarts.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random restarts of the inner ascent.
        #[arg(long)]
        restarts: Option<usize>,
        /// Skip the closed form even when certified (debug cross-check).
        #[arg(long)]
        force_bisection: bool,
    },
    /// Lipschitz seminorm of an element; prints a JSON record.
    Seminorm {
        triple: PathBuf,
        element: PathBuf,
    },
    /// Run verification suites and write a JSON report array.
    Verify {
        /// Comma-separated suite names, or "all".
        #[arg(long, default_value = "all")]
        suites: String,
        /// Trials per suite.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Base seed; each suite derives its own stream.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report file path (stdout summary is printed either way).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairwise distance table for a list of states.
    Table {
        triple: PathBuf,
        states: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        restarts: Option<usize>,
        #[arg(long)]
        force_bisection: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Distance {
            triple,
            state1,
            state2,
            tol,
            seed,
            restarts,
            force_bisection,
        } => cmd_distance(
            &triple,
            &state1,
            &state2,
            SolverFlags {
                tol,
                seed,
                restarts,
                force_bisection,
            },
        )
        .map(|record| println!("{}", serde_json::to_string_pretty(&record).expect("json"))),
        Command::Seminorm { triple, element } => cmd_seminorm(&triple, &element)
            .map(|record| println!("{}", serde_json::to_string_pretty(&record).expect("json"))),
        Command::Verify {
            suites,
            trials,
            seed,
            out,
        } => match cmd_verify(&suites, trials, seed, out.as_deref()) {
            Ok((reports, all_pass)) => {
                for r in &reports {
                    println!(
                        "{} {} (trials {}, max deviation {:.3e}, tol {:.1e})",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.suite_name,
                        r.trials,
                        r.max_deviation,
                        r.tolerance
                    );
                }
                if all_pass {
                    Ok(())
                } else {
                    eprintln!("error: some suites failed");
                    return ExitCode::from(1);
                }
            }
            Err(e) => Err(e),
        },
        Command::Table {
            triple,
            states,
            format,
            tol,
            seed,
            restarts,
            force_bisection,
        } => cmd_table(
            &triple,
            &states,
            SolverFlags {
                tol,
                seed,
                restarts,
                force_bisection,
            },
            match format {
                Format::Csv => TableFormat::Csv,
                Format::Json => TableFormat::Json,
            },
        )
        .map(|table| print!("{table}")),
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
