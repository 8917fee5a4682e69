use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ehrlace_cli::commands::{
    cmd_certify, cmd_count, cmd_eval, cmd_recurrence_discover, cmd_recurrence_favard,
    cmd_recurrence_verify, cmd_roots, CertifyArgs, CountArgs, RootFormat, VerifyArgs,
};
use ehrlace_cli::{suite, CommandResult};

/// Exact Ehrhart polynomials, critical-line certificates and recurrence
/// checks for reflexive polytope families.
#[derive(Parser)]
#[command(name = "ehrlace", version, about)]
struct Cli {
    /// Run the seed suite (same as the `seed-suite` subcommand).
    #[arg(long)]
    seed_suite: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact polynomial, δ-vector and reflexivity checks of a family member
    /// (`k3n:n=3`) or a literal `poly:c0,c1,...`.
    Eval { subject: String },
    /// Certify that all roots lie on Re z = -1/2, optionally with an
    /// interlacing certificate against a second subject.
    Certify {
        subject: Option<String>,
        /// Polynomial coefficients (or a graph with --via-oracle) from a file.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        interlace_with: Option<String>,
        /// Treat subjects as graphs and count their Ehrhart polynomial.
        #[arg(long)]
        via_oracle: bool,
        /// Real part of the line, default -1/2.
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
    },
    /// Numeric roots to 6 decimals.
    Roots {
        subject: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: RootFormat,
        #[arg(long)]
        via_oracle: bool,
    },
    /// Verify or discover recurrences.
    Recurrence {
        #[command(subcommand)]
        action: RecurrenceAction,
    },
    /// Lattice-point and correct-graph counts.
    Count {
        /// Built-in graph: tree:d, cycle:n, complete:n, kab:a,b.
        graph: Option<String>,
        /// GraphSpec text file.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Points in the s-th dilate.
        #[arg(long)]
        dilate: Option<i64>,
        /// Correct (a,b) graphs of total weight k, as `a,b,k`.
        #[arg(long)]
        correct: Option<String>,
        /// Interpolate the Ehrhart polynomial from counts.
        #[arg(long)]
        interpolate: bool,
    },
    /// Run the twelve end-to-end checks.
    SeedSuite {
        /// Comma-separated criterion ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
        /// One JSON document instead of PASS/FAIL lines.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RecurrenceAction {
    /// Exact pass/fail table for a named relation.
    Verify {
        /// crossrec, stasheff, roota, rootc, relh2n1, relh2n2, rech3n, bank,
        /// hdj, hdj-printed, glemmas, f3nk, hs3n
        id: String,
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Solve for relation coefficients over Q(n): rech3n, relh2n1, relh2n2, h1n.
    Discover {
        ansatz: String,
        /// Number of series coefficients used to set up the system.
        #[arg(long)]
        probe: Option<usize>,
        /// Variable name used when printing coefficients.
        #[arg(long, default_value = "n")]
        var: String,
    },
    /// M_j window and Favard coefficients of a three-term rule.
    Favard {
        rule: String,
        #[arg(long, default_value_t = 30)]
        jmax: usize,
    },
}

fn seed_suite(only: &[usize], as_json: bool) -> ExitCode {
    let ids: Vec<usize> = if only.is_empty() {
        suite::criteria().iter().map(|c| c.id).collect()
    } else {
        only.to_vec()
    };
    let mut outcomes = Vec::new();
    for id in ids {
        let Some(o) = suite::run(id) else {
            eprintln!("no criterion {id}");
            return ExitCode::from(2);
        };
        if !as_json {
            println!("{}", o.line());
        }
        outcomes.push(o);
    }
    let all = outcomes.iter().all(|o| o.passed);
    if as_json {
        let doc = serde_json::json!({
            "schema": ehrlace_cli::SCHEMA,
            "command": "seed-suite",
            "status": if all { "ok" } else { "fail" },
            "payload": outcomes.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
    }
    ExitCode::from(if all { 0 } else { 1 })
}

fn emit(res: CommandResult) -> ExitCode {
    println!("{}", res.render());
    ExitCode::from(res.status.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.seed_suite {
        return seed_suite(&[], false);
    }
    let Some(command) = cli.command else {
        eprintln!("no subcommand given; see --help");
        return ExitCode::from(2);
    };
    match command {
        Command::Eval { subject } => emit(cmd_eval(&subject)),
        Command::Certify { subject, file, interlace_with, via_oracle, center } => {
            emit(cmd_certify(&CertifyArgs { subject, file, interlace_with, via_oracle, center }))
        }
        Command::Roots { subject, format, via_oracle } => {
            emit(cmd_roots(&subject, format, via_oracle))
        }
        Command::Recurrence { action } => match action {
            RecurrenceAction::Verify { id, dmax, nmax, kmax } => {
                emit(cmd_recurrence_verify(&VerifyArgs { id, dmax, nmax, kmax }))
            }
            RecurrenceAction::Discover { ansatz, probe, var } => {
                emit(cmd_recurrence_discover(&ansatz, probe, &var))
            }
            RecurrenceAction::Favard { rule, jmax } => emit(cmd_recurrence_favard(&rule, jmax)),
        },
        Command::Count { graph, file, dilate, correct, interpolate } => {
            emit(cmd_count(&CountArgs { graph, file, dilate, correct, interpolate }))
        }
        Command::SeedSuite { only, json } => seed_suite(&only, json),
    }
}
