//! Published mean-result tables and a runner that re-computes every cell.

use std::fmt::Write as _;
use std::str::FromStr;

use super::emit::sig6;
use super::{run_case, CaseSpec, EngineKind, RunStats};
use crate::boundary::BoundaryMode;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    /// LPS on the G-suite, cases #B, #R, #P1, #P2.
    T3,
    /// DEPS on the G-suite, same cases.
    T4,
    /// LPS on the engineering problems, one row per mode.
    T6,
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t3" => Ok(TableId::T3),
            "t4" => Ok(TableId::T4),
            "t6" => Ok(TableId::T6),
            other => Err(Error::InvalidConfig(format!("unknown table `{other}` (expected t3, t4 or t6)"))),
        }
    }
}

/// One published cell: mean best `F_B` and failure percentage `r_f`.
#[derive(Debug, Clone, PartialEq)]
pub struct PublishedCell {
    pub problem: &'static str,
    pub case: &'static str,
    pub engine: EngineKind,
    pub mode: BoundaryMode,
    pub particles: usize,
    pub generations: usize,
    pub mean_best: f64,
    pub failure_rate: f64,
}

struct Case {
    label: &'static str,
    mode: BoundaryMode,
    particles: usize,
}

const GSUITE_CASES: [Case; 4] = [
    Case { label: "#B", mode: BoundaryMode::Boundary, particles: 14 },
    Case { label: "#R", mode: BoundaryMode::Random, particles: 14 },
    Case { label: "#P1", mode: BoundaryMode::Periodic, particles: 14 },
    Case { label: "#P2", mode: BoundaryMode::Periodic, particles: 70 },
];

const GSUITE: [&str; 8] = ["g01", "g02", "g04", "g06", "g07", "g08", "g09", "g10"];

// (F_B, r_f) per case, rows in GSUITE order.
#[rustfmt::skip]
const LPS_TABLE: [[(f64, f64); 4]; 8] = [
    [(-4.998, 0.0), (-1.936, 79.0), (-14.9140, 0.0), (-14.9961, 0.0)],
    [(0.50052, 0.0), (0.43463, 0.0), (0.71921, 0.0), (0.77867, 0.0)],
    [(-30549.87, 0.0), (-30517.0, 0.0), (-30665.5, 0.0), (-30665.54, 0.0)],
    [(-6961.8, 96.0), (-4592.9, 0.0), (-6961.7, 0.0), (-6961.814, 0.0)],
    [(914.790, 11.0), (38.511, 0.0), (26.047, 0.0), (25.161, 0.0)],
    [(0.095825, 2.0), (0.095825, 0.0), (0.095825, 0.0), (0.095825, 0.0)],
    [(121114.09, 0.0), (680.76, 0.0), (680.75, 0.0), (680.66, 0.0)],
    [(12398.0, 21.0), (8285.6, 0.0), (7756.6, 0.0), (7562.6, 0.0)],
];

#[rustfmt::skip]
const DEPS_TABLE: [[(f64, f64); 4]; 8] = [
    [(-6.259, 0.0), (-12.248, 0.0), (-14.271, 0.0), (-15.000, 0.0)],
    [(0.36326, 0.0), (0.40280, 0.0), (0.48664, 0.0), (0.64330, 0.0)],
    [(-30646.43, 0.0), (-30662.20, 0.0), (-30665.54, 0.0), (-30665.54, 0.0)],
    [(-6961.8, 74.0), (-6931.271, 0.0), (-6961.814, 0.0), (-6961.814, 0.0)],
    [(209.300, 2.0), (26.358, 0.0), (24.897, 0.0), (24.306, 0.0)],
    [(0.095691, 0.0), (0.095425, 0.0), (0.095558, 0.0), (0.095825, 0.0)],
    [(20819.319, 0.0), (680.690, 0.0), (680.690, 0.0), (680.630, 0.0)],
    [(8378.4, 4.0), (7506.5, 0.0), (7343.5, 0.0), (7049.5, 0.0)],
];

const ENGINEERING: [&str; 4] = ["wb", "sr", "tb", "ts"];

// rows: Boundary, Random, Periodic; columns in ENGINEERING order
#[rustfmt::skip]
const MODES_TABLE: [[f64; 4]; 3] = [
    [3.35408, 3060.910, 263.89646, 0.013129],
    [2.56145, 3100.733, 263.89649, 0.015372],
    [2.40403, 2994.497, 263.89654, 0.012922],
];

/// All cells of a published table, with the settings that produced them.
pub fn published_cells(table: TableId) -> Vec<PublishedCell> {
    match table {
        TableId::T3 | TableId::T4 => {
            let (engine, values, prefix) = match table {
                TableId::T3 => (EngineKind::Lps, &LPS_TABLE, ["LPS#B", "LPS#R", "LPS#P1", "LPS#P2"]),
                _ => (EngineKind::Deps, &DEPS_TABLE, ["DEPS#B", "DEPS#R", "DEPS#P1", "DEPS#P2"]),
            };
            let mut cells = Vec::new();
            for (row, problem) in GSUITE.iter().enumerate() {
                for (col, case) in GSUITE_CASES.iter().enumerate() {
                    debug_assert!(prefix[col].ends_with(case.label));
                    let (mean_best, failure_rate) = values[row][col];
                    cells.push(PublishedCell {
                        problem,
                        case: prefix[col],
                        engine,
                        mode: case.mode,
                        particles: case.particles,
                        generations: 2000,
                        mean_best,
                        failure_rate,
                    });
                }
            }
            cells
        }
        TableId::T6 => {
            let mut cells = Vec::new();
            for (col, problem) in ENGINEERING.iter().enumerate() {
                for (row, mode) in BoundaryMode::ALL.iter().enumerate() {
                    cells.push(PublishedCell {
                        problem,
                        case: match mode {
                            BoundaryMode::Boundary => "Boundary",
                            BoundaryMode::Random => "Random",
                            BoundaryMode::Periodic => "Periodic",
                        },
                        engine: EngineKind::Lps,
                        mode: *mode,
                        particles: 40,
                        generations: 500,
                        mean_best: MODES_TABLE[row][col],
                        failure_rate: 0.0,
                    });
                }
            }
            cells
        }
    }
}

#[derive(Debug, Clone)]
pub struct TableCell {
    pub published: PublishedCell,
    pub obtained: RunStats,
}

/// Runs every cell of `table` with `runs` runs each.
pub fn reproduce_table(table: TableId, runs: usize, base_seed: u64, jobs: usize) -> Result<Vec<TableCell>> {
    published_cells(table)
        .into_iter()
        .map(|published| {
            let spec = CaseSpec {
                problem: published.problem.to_string(),
                engine: published.engine,
                mode: published.mode,
                particles: published.particles,
                generations: published.generations,
                runs,
                base_seed,
            };
            let obtained = run_case(&spec, jobs)?;
            Ok(TableCell { published, obtained })
        })
        .collect()
}

fn with_rate(value: Option<f64>, rate: f64) -> String {
    let v = value.map(sig6).unwrap_or_else(|| "n/a".into());
    if rate > 0.0 {
        format!("{v} ({rate:.0})")
    } else {
        v
    }
}

/// Text table: obtained values beside the published ones.
pub fn format_table(cells: &[TableCell]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<8} {:<10} {:>20} {:>20}", "problem", "case", "published F_B (r_f)", "obtained F_B (r_f)");
    for cell in cells {
        let _ = writeln!(
            out,
            "{:<8} {:<10} {:>20} {:>20}",
            cell.published.problem,
            cell.published.case,
            with_rate(Some(cell.published.mean_best), cell.published.failure_rate),
            with_rate(cell.obtained.mean_best, cell.obtained.failure_rate),
        );
    }
    out
}
