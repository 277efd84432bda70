//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export wraps a plain function that returns JSON (or numbers), so the
//! same code paths are testable natively.

use periswarm::benchmarks::get_problem;
use periswarm::boundary::wrap_coordinate;
use periswarm::experiment::{run_case, CaseSpec, EngineKind, Summary};
use periswarm::rng::stream_from_seed;
use periswarm::swarm::{deps_step, lps_step, Swarm};
use periswarm::{
    finalize_answer, map_periodic, BoundaryMode, DepsConfig, EngineConfig, Error, Evaluator, LpsConfig, Problem, Result,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

pub const GRID: usize = 160;

/// Samples `x -> wrap(x)` on `[from, to]`; returns interleaved `x, wrap(x)` pairs.
pub fn map_curve(lower: f64, upper: f64, from: f64, to: f64, samples: usize) -> Result<Vec<f64>> {
    if !lower.is_finite() || !upper.is_finite() || lower >= upper {
        return Err(Error::InvalidInput(format!("need finite lower < upper, got [{lower}, {upper}]")));
    }
    if !from.is_finite() || !to.is_finite() || from >= to || samples < 2 {
        return Err(Error::InvalidInput("need finite from < to and at least 2 samples".into()));
    }
    let step = (to - from) / (samples - 1) as f64;
    Ok((0..samples)
        .flat_map(|i| {
            let x = from + step * i as f64;
            [x, wrap_coordinate(x, lower, upper)]
        })
        .collect())
}

#[derive(Debug, Serialize)]
pub struct Frame {
    pub generation: usize,
    /// Where particles are flying; outside the box under `Periodic`.
    pub flight: Vec<[f64; 2]>,
    /// The points actually evaluated, always inside the box.
    pub evaluated: Vec<[f64; 2]>,
    pub gbest: [f64; 2],
    pub gbest_value: f64,
    pub gbest_feasible: bool,
}

#[derive(Debug, Serialize)]
pub struct Trace {
    pub problem: String,
    pub lower: [f64; 2],
    pub upper: [f64; 2],
    /// Row-major `GRID x GRID` feasibility mask, first row at `lower[1]`.
    pub feasible: Vec<bool>,
    pub grid: usize,
    pub frames: Vec<Frame>,
}

fn pair(v: &[f64]) -> [f64; 2] {
    [v[0], v[1]]
}

fn feasibility_grid(problem: &Problem) -> Result<Vec<bool>> {
    let b = problem.bounds();
    let mut mask = Vec::with_capacity(GRID * GRID);
    for row in 0..GRID {
        let y = b.lower()[1] + b.range(1) * (row as f64 + 0.5) / GRID as f64;
        for col in 0..GRID {
            let x = b.lower()[0] + b.range(0) * (col as f64 + 0.5) / GRID as f64;
            mask.push(problem.evaluate(&[x, y])?.is_feasible());
        }
    }
    Ok(mask)
}

fn frame(swarm: &Swarm, problem: &Problem, generation: usize) -> Result<Frame> {
    let bounds = problem.bounds();
    let evaluated = swarm
        .particles()
        .iter()
        .map(|p| match swarm.mode() {
            BoundaryMode::Periodic => map_periodic(&p.position, bounds).map(|e| pair(&e)),
            _ => Ok(pair(&p.position)),
        })
        .collect::<Result<Vec<_>>>()?;
    let g = swarm.gbest();
    Ok(Frame {
        generation,
        flight: swarm.particles().iter().map(|p| pair(&p.position)).collect(),
        evaluated,
        gbest: pair(&finalize_answer(&g.pbest_position, bounds, swarm.mode())?),
        gbest_value: problem.sense().to_original(g.pbest_fitness.objective()),
        gbest_feasible: g.pbest_fitness.is_feasible(),
    })
}

/// Steps one run of a 2-D problem generation by generation and records every swarm state.
pub fn trace(
    problem: &str,
    engine: &str,
    mode: &str,
    particles: usize,
    generations: usize,
    seed: u64,
) -> Result<Trace> {
    let problem = get_problem(problem)?.problem;
    if problem.dim() != 2 {
        return Err(Error::InvalidConfig(format!(
            "{} has {} dimensions; the trace needs 2",
            problem.name(),
            problem.dim()
        )));
    }
    let mode: BoundaryMode = mode.parse()?;
    let config = match engine.parse::<EngineKind>()? {
        EngineKind::Lps => EngineConfig::Lps(LpsConfig::new(particles, generations, mode)),
        EngineKind::Deps => EngineConfig::Deps(DepsConfig::new(particles, generations, mode)),
    };
    config.validate()?;

    let mut rng = stream_from_seed(seed);
    let mut evaluator = Evaluator::new(&problem);
    let limit = config.velocity_limit(&problem);
    let mut swarm = Swarm::initialize(&mut evaluator, particles, &limit, mode, &mut rng)?;
    let mut frames = vec![frame(&swarm, &problem, 0)?];
    for t in 0..generations {
        match &config {
            EngineConfig::Lps(c) => lps_step(&mut swarm, &mut evaluator, t, c, &mut rng)?,
            EngineConfig::Deps(c) => deps_step(&mut swarm, &mut evaluator, t, c, &mut rng)?,
        }
        frames.push(frame(&swarm, &problem, t + 1)?);
    }
    let b = problem.bounds();
    Ok(Trace {
        problem: problem.name().to_string(),
        lower: pair(b.lower()),
        upper: pair(b.upper()),
        feasible: feasibility_grid(&problem)?,
        grid: GRID,
        frames,
    })
}

/// Aggregate of a multi-run case, sequential (no threads in the browser).
#[allow(clippy::too_many_arguments)]
pub fn summarize(
    problem: &str,
    engine: &str,
    mode: &str,
    particles: usize,
    generations: usize,
    runs: usize,
    seed: u64,
) -> Result<Summary> {
    let spec = CaseSpec {
        problem: problem.to_string(),
        engine: engine.parse()?,
        mode: mode.parse()?,
        particles,
        generations,
        runs,
        base_seed: seed,
    };
    Ok(Summary::of(&run_case(&spec, 1)?))
}

fn js_error(err: Error) -> JsError {
    JsError::new(&err.to_string())
}

fn to_json<T: Serialize>(value: &T) -> std::result::Result<String, JsError> {
    serde_json::to_string(value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn periodic_map_curve(
    lower: f64,
    upper: f64,
    from: f64,
    to: f64,
    samples: usize,
) -> std::result::Result<Vec<f64>, JsError> {
    map_curve(lower, upper, from, to, samples).map_err(js_error)
}

#[wasm_bindgen]
pub fn swarm_trace(
    problem: &str,
    engine: &str,
    mode: &str,
    particles: usize,
    generations: usize,
    seed: u32,
) -> std::result::Result<String, JsError> {
    to_json(&trace(problem, engine, mode, particles, generations, seed.into()).map_err(js_error)?)
}

#[wasm_bindgen]
pub fn case_summary(
    problem: &str,
    engine: &str,
    mode: &str,
    particles: usize,
    generations: usize,
    runs: usize,
    seed: u32,
) -> std::result::Result<String, JsError> {
    to_json(&summarize(problem, engine, mode, particles, generations, runs, seed.into()).map_err(js_error)?)
}
