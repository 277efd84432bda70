//! Multi-run experiment cases, aggregate statistics and result emission.

mod emit;
mod reproduce;

pub use emit::{
    emit_results, format_summary, read_csv, read_json, write_csv, write_json, CaseReport, CsvRow, Destination,
    OutputFormat, Summary,
};
pub use reproduce::{format_table, published_cells, reproduce_table, PublishedCell, TableCell, TableId};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::benchmarks::get_problem;
use crate::boundary::BoundaryMode;
use crate::problem::Problem;
use crate::swarm::{run, DepsConfig, EngineConfig, LpsConfig, RunResult};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    Lps,
    Deps,
}

impl EngineKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EngineKind::Lps => "lps",
            EngineKind::Deps => "deps",
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EngineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lps" => Ok(EngineKind::Lps),
            "deps" => Ok(EngineKind::Deps),
            other => Err(Error::InvalidConfig(format!("unknown engine `{other}` (expected lps or deps)"))),
        }
    }
}

/// One experiment case: `runs` independent runs seeded `base_seed + run_index`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseSpec {
    pub problem: String,
    pub engine: EngineKind,
    pub mode: BoundaryMode,
    pub particles: usize,
    pub generations: usize,
    pub runs: usize,
    pub base_seed: u64,
}

impl CaseSpec {
    pub fn engine_config(&self) -> EngineConfig {
        match self.engine {
            EngineKind::Lps => EngineConfig::Lps(LpsConfig::new(self.particles, self.generations, self.mode)),
            EngineKind::Deps => EngineConfig::Deps(DepsConfig::new(self.particles, self.generations, self.mode)),
        }
    }

    pub fn seed_for(&self, run_index: usize) -> u64 {
        self.base_seed.wrapping_add(run_index as u64)
    }

    /// Checks everything that can be checked before any run starts.
    pub fn validate(&self) -> Result<Problem> {
        if self.runs == 0 {
            return Err(Error::InvalidConfig("runs must be at least 1".into()));
        }
        self.engine_config().validate()?;
        let entry = get_problem(&self.problem).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        Ok(entry.problem)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run_index: usize,
    /// Best objective in the problem's original sense.
    pub best_value: f64,
    pub result: RunResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub spec: CaseSpec,
    /// Mean best value over runs that ended feasible, original sense.
    pub mean_best: Option<f64>,
    /// Percentage of runs whose final best is infeasible.
    pub failure_rate: f64,
    pub n_succeeded: usize,
    /// Sorted by `run_index`.
    pub per_run: Vec<RunRecord>,
}

impl RunStats {
    /// Aggregates records (in any order).
    pub fn from_records(spec: CaseSpec, mut per_run: Vec<RunRecord>) -> Self {
        per_run.sort_by_key(|r| r.run_index);
        let feasible: Vec<f64> = per_run.iter().filter(|r| r.result.entered_feasible).map(|r| r.best_value).collect();
        let n_succeeded = feasible.len();
        let failed = per_run.len() - n_succeeded;
        let mean_best = (n_succeeded > 0).then(|| feasible.iter().sum::<f64>() / n_succeeded as f64);
        let failure_rate = if per_run.is_empty() { 0.0 } else { failed as f64 / per_run.len() as f64 * 100.0 };
        Self { spec, mean_best, failure_rate, n_succeeded, per_run }
    }

    pub fn failed(&self) -> usize {
        self.per_run.len() - self.n_succeeded
    }
}

fn run_one(problem: &Problem, spec: &CaseSpec, engine: &EngineConfig, run_index: usize) -> Result<RunRecord> {
    let result = run(problem, engine, spec.seed_for(run_index))?;
    let best_value = problem.sense().to_original(result.best_fitness.objective());
    Ok(RunRecord { run_index, best_value, result })
}

/// Executes every run of `spec` and aggregates them.
///
/// `jobs` bounds the worker threads (`0` = one per core, `1` = sequential).
/// The result does not depend on `jobs`.
pub fn run_case(spec: &CaseSpec, jobs: usize) -> Result<RunStats> {
    let problem = spec.validate()?;
    let engine = spec.engine_config();
    let records = execute(&problem, spec, &engine, jobs)?;
    Ok(RunStats::from_records(spec.clone(), records))
}

#[cfg(feature = "parallel")]
fn execute(problem: &Problem, spec: &CaseSpec, engine: &EngineConfig, jobs: usize) -> Result<Vec<RunRecord>> {
    use rayon::prelude::*;

    if jobs == 1 {
        return (0..spec.runs).map(|i| run_one(problem, spec, engine, i)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start {jobs} worker threads: {e}")))?;
    pool.install(|| (0..spec.runs).into_par_iter().map(|i| run_one(problem, spec, engine, i)).collect())
}

#[cfg(not(feature = "parallel"))]
fn execute(problem: &Problem, spec: &CaseSpec, engine: &EngineConfig, _jobs: usize) -> Result<Vec<RunRecord>> {
    (0..spec.runs).map(|i| run_one(problem, spec, engine, i)).collect()
}
