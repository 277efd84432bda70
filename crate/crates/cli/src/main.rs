use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use periswarm::benchmarks::{all, verify_optima};
use periswarm::experiment::{
    emit_results, format_summary, format_table, reproduce_table, run_case, CaseSpec, Destination, EngineKind,
    OutputFormat, TableId,
};
use periswarm::{BoundaryMode, Error};

const CONFIG_ERROR: u8 = 1;
const IO_ERROR: u8 = 2;
const SELF_CHECK_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "periswarm", version, about = "Constrained particle swarm experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the benchmark registry.
    ListProblems,
    /// Check every benchmark's recorded optimum; exits 3 if any check fails.
    VerifyOptima,
    /// Run one case and emit per-run results.
    Run(RunArgs),
    /// Re-run a published table and print it beside the published values.
    Reproduce {
        #[arg(long)]
        table: TableId,
        #[arg(long, default_value_t = 30)]
        runs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long)]
    problem: String,
    #[arg(long)]
    engine: EngineKind,
    #[arg(long)]
    mode: BoundaryMode,
    #[arg(long)]
    particles: usize,
    #[arg(long)]
    generations: usize,
    #[arg(long, default_value_t = 30)]
    runs: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Per-run results go here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the aggregate summary to this file.
    #[arg(long)]
    summary: Option<PathBuf>,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::Serialization(_) => IO_ERROR,
        _ => CONFIG_ERROR,
    }
}

fn list_problems() {
    println!("{:<8} {:>3} {:>3} {:<9} {:>14}  location", "name", "D", "m", "sense", "F*");
    for entry in all() {
        let p = &entry.problem;
        let best = p.known_best_value().map(|v| v.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{:<8} {:>3} {:>3} {:<9} {:>14}  {}",
            p.name(),
            p.dim(),
            p.num_constraints(),
            p.sense().to_string(),
            best,
            entry.location
        );
    }
}

fn verify() -> u8 {
    let checks = verify_optima();
    let mut failed = 0;
    for c in &checks {
        let status = if c.passed { "ok" } else { "FAILED" };
        println!(
            "{:<8} {:<6} value={:<22} known={:<10} error={:.3e} violation={:.3e}",
            c.name, status, c.value, c.known_best, c.value_error, c.violation
        );
        if !c.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} of {} optima failed verification", checks.len());
        SELF_CHECK_FAILED
    } else {
        0
    }
}

fn run(args: RunArgs) -> Result<(), Error> {
    let spec = CaseSpec {
        problem: args.problem,
        engine: args.engine,
        mode: args.mode,
        particles: args.particles,
        generations: args.generations,
        runs: args.runs,
        base_seed: args.seed,
    };
    let stats = run_case(&spec, args.jobs)?;
    let cases = [stats];
    let destination = match &args.out {
        Some(path) => Destination::File(path.clone()),
        None => Destination::Stdout,
    };
    emit_results(&cases, args.format, &destination)?;
    let summary = format_summary(&cases);
    match (&args.summary, &args.out) {
        (Some(path), _) => fs::write(path, summary)?,
        (None, Some(_)) => print!("{summary}"),
        // keep standard output machine-readable when it carries the results
        (None, None) => eprint!("{summary}"),
    }
    Ok(())
}

fn reproduce(table: TableId, runs: usize, seed: u64, jobs: usize) -> Result<(), Error> {
    let cells = reproduce_table(table, runs, seed, jobs)?;
    let mut out = std::io::stdout().lock();
    out.write_all(format_table(&cells).as_bytes())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { CONFIG_ERROR } else { 0 });
        }
    };
    let result = match cli.command {
        Command::ListProblems => {
            list_problems();
            Ok(())
        }
        Command::VerifyOptima => return ExitCode::from(verify()),
        Command::Run(args) => run(args),
        Command::Reproduce { table, runs, seed, jobs } => reproduce(table, runs, seed, jobs),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
