//! Swarm state, engine configurations and run execution.

mod deps;
mod lps;

pub use deps::{constriction, deps_step, deps_step_with, DeDifferenceTrial, PbestTrial};
pub use lps::{inertia_at, lps_step};

use serde::{Deserialize, Serialize};

use crate::boundary::{enforce_mode, finalize_answer, BoundaryMode};
use crate::problem::{deb_compare, Evaluator, Fitness, Preference, Problem};
use crate::rng::{stream_from_seed, UnitSource};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    /// Flight position. Under `Periodic` this may lie outside the box.
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    /// Personal best, in flight coordinates.
    pub pbest_position: Vec<f64>,
    /// Fitness of the in-box image of `pbest_position`.
    pub pbest_fitness: Fitness,
}

#[derive(Debug, Clone)]
pub struct Swarm {
    particles: Vec<Particle>,
    mode: BoundaryMode,
    gbest: usize,
}

impl Swarm {
    /// Samples `size` particles uniformly in the box with velocities uniform
    /// in `[-velocity_limit_d, velocity_limit_d]`, and evaluates each once.
    pub fn initialize<R: UnitSource + ?Sized>(
        evaluator: &mut Evaluator<'_>,
        size: usize,
        velocity_limit: &[f64],
        mode: BoundaryMode,
        rng: &mut R,
    ) -> Result<Self> {
        let bounds = evaluator.problem().bounds();
        if velocity_limit.len() != bounds.dim() {
            return Err(Error::InvalidInput("velocity limit length must match dimension".into()));
        }
        let mut particles = Vec::with_capacity(size);
        for _ in 0..size {
            let position: Vec<f64> =
                (0..bounds.dim()).map(|d| rng.uniform(bounds.lower()[d], bounds.upper()[d])).collect();
            let velocity: Vec<f64> = velocity_limit.iter().map(|&vm| rng.uniform(-vm, vm)).collect();
            let fitness = evaluator.evaluate(&position)?;
            particles.push(Particle { pbest_position: position.clone(), position, velocity, pbest_fitness: fitness });
        }
        Self::from_particles(particles, mode)
    }

    /// Builds a swarm from explicit particles. Their `pbest_fitness` is taken as given.
    pub fn from_particles(particles: Vec<Particle>, mode: BoundaryMode) -> Result<Self> {
        if particles.is_empty() {
            return Err(Error::InvalidConfig("a swarm needs at least one particle".into()));
        }
        let mut swarm = Self { particles, mode, gbest: 0 };
        swarm.recompute_gbest();
        Ok(swarm)
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn mode(&self) -> BoundaryMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.particles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.particles.is_empty()
    }

    pub fn gbest_index(&self) -> usize {
        self.gbest
    }

    pub fn gbest(&self) -> &Particle {
        &self.particles[self.gbest]
    }

    /// Best pbest; ties go to the lowest index.
    pub fn recompute_gbest(&mut self) {
        let mut best = 0;
        for (i, p) in self.particles.iter().enumerate().skip(1) {
            if deb_compare(&p.pbest_fitness, &self.particles[best].pbest_fitness) == Preference::ABetter {
                best = i;
            }
        }
        self.gbest = best;
    }

    /// Moves particle `i` by its (already updated) velocity, applies the
    /// boundary mode, evaluates and updates its personal best.
    fn advance<R: UnitSource + ?Sized>(&mut self, i: usize, evaluator: &mut Evaluator<'_>, rng: &mut R) -> Result<()> {
        let bounds = evaluator.problem().bounds();
        let particle = &mut self.particles[i];
        for (x, v) in particle.position.iter_mut().zip(&particle.velocity) {
            *x += v;
        }
        let enforced = enforce_mode(&particle.position, &particle.velocity, bounds, self.mode, rng)?;
        let fitness = evaluator.evaluate(&enforced.eval_point)?;
        particle.position = enforced.flight;
        particle.velocity = enforced.velocity;
        if fitness.beats(&particle.pbest_fitness) {
            particle.pbest_position.clone_from(&particle.position);
            particle.pbest_fitness = fitness;
        }
        Ok(())
    }

    /// Offers `candidate` (flight coordinates) as a new personal best for particle `i`.
    /// Returns whether it was accepted.
    fn offer_pbest<R: UnitSource + ?Sized>(
        &mut self,
        i: usize,
        candidate: Vec<f64>,
        evaluator: &mut Evaluator<'_>,
        rng: &mut R,
    ) -> Result<bool> {
        let bounds = evaluator.problem().bounds();
        let zero = vec![0.0; candidate.len()];
        let enforced = enforce_mode(&candidate, &zero, bounds, self.mode, rng)?;
        let fitness = evaluator.evaluate(&enforced.eval_point)?;
        let particle = &mut self.particles[i];
        if fitness.beats(&particle.pbest_fitness) {
            particle.pbest_position = enforced.flight;
            particle.pbest_fitness = fitness;
            Ok(true)
        } else {
            Ok(false)
        }
    }
}

/// Linearly-decreasing-inertia swarm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LpsConfig {
    pub particles: usize,
    pub generations: usize,
    pub w_start: f64,
    pub w_end: f64,
    pub c1: f64,
    pub c2: f64,
    /// `v_max,d = vmax_fraction * (u_d - l_d)`.
    pub vmax_fraction: f64,
    pub mode: BoundaryMode,
}

impl LpsConfig {
    pub fn new(particles: usize, generations: usize, mode: BoundaryMode) -> Self {
        Self { particles, generations, w_start: 0.9, w_end: 0.4, c1: 2.0, c2: 2.0, vmax_fraction: 0.5, mode }
    }

    pub fn validate(&self) -> Result<()> {
        if self.particles < 2 {
            return Err(Error::InvalidConfig(format!("LPS needs at least 2 particles, got {}", self.particles)));
        }
        if !(self.vmax_fraction > 0.0 && self.vmax_fraction <= 1.0) {
            return Err(Error::InvalidConfig(format!("vmax_fraction must be in (0, 1], got {}", self.vmax_fraction)));
        }
        if ![self.w_start, self.w_end, self.c1, self.c2].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidConfig("LPS coefficients must be finite".into()));
        }
        Ok(())
    }
}

/// Constriction swarm with a differential-evolution operator on personal bests.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepsConfig {
    pub particles: usize,
    pub generations: usize,
    pub c1: f64,
    pub c2: f64,
    pub cr: f64,
    pub mode: BoundaryMode,
}

impl DepsConfig {
    pub fn new(particles: usize, generations: usize, mode: BoundaryMode) -> Self {
        Self { particles, generations, c1: 2.05, c2: 2.05, cr: 0.9, mode }
    }

    pub fn chi(&self) -> Result<f64> {
        constriction(self.c1, self.c2)
    }

    pub fn validate(&self) -> Result<()> {
        if self.particles < 5 {
            return Err(Error::InvalidConfig(format!(
                "DEPS needs at least 5 particles for its difference pairs, got {}",
                self.particles
            )));
        }
        if !(0.0..=1.0).contains(&self.cr) {
            return Err(Error::InvalidConfig(format!("CR must be in [0, 1], got {}", self.cr)));
        }
        self.chi().map(|_| ())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "engine", rename_all = "lowercase")]
pub enum EngineConfig {
    Lps(LpsConfig),
    Deps(DepsConfig),
}

impl EngineConfig {
    pub fn particles(&self) -> usize {
        match self {
            EngineConfig::Lps(c) => c.particles,
            EngineConfig::Deps(c) => c.particles,
        }
    }

    pub fn generations(&self) -> usize {
        match self {
            EngineConfig::Lps(c) => c.generations,
            EngineConfig::Deps(c) => c.generations,
        }
    }

    pub fn mode(&self) -> BoundaryMode {
        match self {
            EngineConfig::Lps(c) => c.mode,
            EngineConfig::Deps(c) => c.mode,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            EngineConfig::Lps(c) => c.validate(),
            EngineConfig::Deps(c) => c.validate(),
        }
    }

    /// Half-range velocity limits used for initialization (and clamping, for LPS).
    pub fn velocity_limit(&self, problem: &Problem) -> Vec<f64> {
        let fraction = match self {
            EngineConfig::Lps(c) => c.vmax_fraction,
            EngineConfig::Deps(_) => 0.5,
        };
        let bounds = problem.bounds();
        (0..bounds.dim()).map(|d| fraction * bounds.range(d)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    /// Best point found, inside the box.
    pub best_point: Vec<f64>,
    pub best_fitness: Fitness,
    pub entered_feasible: bool,
    pub evaluations_used: u64,
    pub seed: u64,
}

/// Runs one engine on `problem` from `seed`. Identical inputs give identical results.
pub fn run(problem: &Problem, engine: &EngineConfig, seed: u64) -> Result<RunResult> {
    engine.validate()?;
    let mut rng = stream_from_seed(seed);
    let mut evaluator = Evaluator::new(problem);
    let limit = engine.velocity_limit(problem);
    let mut swarm = Swarm::initialize(&mut evaluator, engine.particles(), &limit, engine.mode(), &mut rng)?;
    for t in 0..engine.generations() {
        match engine {
            EngineConfig::Lps(c) => lps_step(&mut swarm, &mut evaluator, t, c, &mut rng)?,
            EngineConfig::Deps(c) => deps_step(&mut swarm, &mut evaluator, t, c, &mut rng)?,
        }
    }
    let gbest = swarm.gbest();
    let best_point = finalize_answer(&gbest.pbest_position, problem.bounds(), engine.mode())?;
    Ok(RunResult {
        best_point,
        best_fitness: gbest.pbest_fitness,
        entered_feasible: gbest.pbest_fitness.is_feasible(),
        evaluations_used: evaluator.count(),
        seed,
    })
}
