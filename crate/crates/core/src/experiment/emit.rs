use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{EngineKind, RunStats};
use crate::boundary::BoundaryMode;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidConfig(format!("unknown format `{other}` (expected csv or json)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Destination {
    Stdout,
    File(PathBuf),
}

/// One per-run row. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub problem: String,
    pub engine: EngineKind,
    pub mode: BoundaryMode,
    pub particles: usize,
    pub generations: usize,
    pub run_index: usize,
    pub seed: u64,
    pub best_value: f64,
    pub violation: f64,
    pub feasible: bool,
    pub evaluations: u64,
}

/// Aggregate of one case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub problem: String,
    pub engine: EngineKind,
    pub mode: BoundaryMode,
    pub particles: usize,
    pub generations: usize,
    pub runs: usize,
    pub base_seed: u64,
    pub mean_best: Option<f64>,
    pub failure_rate: f64,
    pub n_succeeded: usize,
}

impl Summary {
    pub fn of(stats: &RunStats) -> Self {
        let s = &stats.spec;
        Self {
            problem: s.problem.clone(),
            engine: s.engine,
            mode: s.mode,
            particles: s.particles,
            generations: s.generations,
            runs: stats.per_run.len(),
            base_seed: s.base_seed,
            mean_best: stats.mean_best,
            failure_rate: stats.failure_rate,
            n_succeeded: stats.n_succeeded,
        }
    }

    /// Recomputes `mean_best`, `failure_rate` and `n_succeeded` from emitted rows.
    /// `base_seed` is taken from the row with the lowest `run_index`.
    pub fn from_rows(rows: &[CsvRow]) -> Option<Self> {
        let first = rows.iter().min_by_key(|r| r.run_index)?;
        let mut sorted: Vec<&CsvRow> = rows.iter().collect();
        sorted.sort_by_key(|r| r.run_index);
        let feasible: Vec<f64> = sorted.iter().filter(|r| r.feasible).map(|r| r.best_value).collect();
        let n_succeeded = feasible.len();
        Some(Self {
            problem: first.problem.clone(),
            engine: first.engine,
            mode: first.mode,
            particles: first.particles,
            generations: first.generations,
            runs: rows.len(),
            base_seed: first.seed.wrapping_sub(first.run_index as u64),
            mean_best: (n_succeeded > 0).then(|| feasible.iter().sum::<f64>() / n_succeeded as f64),
            failure_rate: (rows.len() - n_succeeded) as f64 / rows.len() as f64 * 100.0,
            n_succeeded,
        })
    }
}

fn rows_of(stats: &RunStats) -> impl Iterator<Item = CsvRow> + '_ {
    let s = &stats.spec;
    stats.per_run.iter().map(move |r| CsvRow {
        problem: s.problem.clone(),
        engine: s.engine,
        mode: s.mode,
        particles: s.particles,
        generations: s.generations,
        run_index: r.run_index,
        seed: r.result.seed,
        best_value: r.best_value,
        violation: r.result.best_fitness.violation(),
        feasible: r.result.entered_feasible,
        evaluations: r.result.evaluations_used,
    })
}

/// JSON document for one case: the aggregate plus every per-run row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub summary: Summary,
    pub runs: Vec<CsvRow>,
}

pub fn write_csv<W: Write>(cases: &[RunStats], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let mut wrote_any = false;
    for stats in cases {
        for row in rows_of(stats) {
            w.serialize(row)?;
            wrote_any = true;
        }
    }
    if !wrote_any {
        w.write_record([
            "problem",
            "engine",
            "mode",
            "particles",
            "generations",
            "run_index",
            "seed",
            "best_value",
            "violation",
            "feasible",
            "evaluations",
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(reader: R) -> Result<Vec<CsvRow>> {
    let mut r = csv::Reader::from_reader(reader);
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn write_json<W: Write>(cases: &[RunStats], mut writer: W) -> Result<()> {
    let reports: Vec<CaseReport> =
        cases.iter().map(|s| CaseReport { summary: Summary::of(s), runs: rows_of(s).collect() }).collect();
    serde_json::to_writer_pretty(&mut writer, &reports)?;
    writer.write_all(b"\n")?;
    writer.flush()?;
    Ok(())
}

pub fn read_json<R: Read>(reader: R) -> Result<Vec<CaseReport>> {
    Ok(serde_json::from_reader(reader)?)
}

pub fn emit_results(cases: &[RunStats], format: OutputFormat, destination: &Destination) -> Result<()> {
    match destination {
        Destination::Stdout => {
            let stdout = io::stdout();
            let lock = stdout.lock();
            match format {
                OutputFormat::Csv => write_csv(cases, lock),
                OutputFormat::Json => write_json(cases, lock),
            }
        }
        Destination::File(path) => {
            let file = BufWriter::new(File::create(path)?);
            match format {
                OutputFormat::Csv => write_csv(cases, file),
                OutputFormat::Json => write_json(cases, file),
            }
        }
    }
}

/// Six significant digits.
pub(crate) fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Human-readable aggregate block.
pub fn format_summary(cases: &[RunStats]) -> String {
    let mut out = String::new();
    for stats in cases {
        let s = Summary::of(stats);
        let mean = s.mean_best.map(sig6).unwrap_or_else(|| "n/a".into());
        out.push_str(&format!(
            "{} {} {} N={} T={} runs={} seed={}: mean_best={} failure_rate={}% succeeded={}\n",
            s.problem,
            s.engine,
            s.mode,
            s.particles,
            s.generations,
            s.runs,
            s.base_seed,
            mean,
            s.failure_rate,
            s.n_succeeded
        ));
    }
    out
}
