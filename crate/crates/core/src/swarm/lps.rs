use crate::problem::Evaluator;
use crate::rng::UnitSource;
use crate::Result;

use super::{LpsConfig, Swarm};

/// Inertia weight at generation `t`, interpolated linearly from `w_start`
/// at `t = 0` to `w_end` at `t = T`.
pub fn inertia_at(t: usize, config: &LpsConfig) -> f64 {
    if config.generations == 0 {
        return config.w_start;
    }
    let frac = t as f64 / config.generations as f64;
    config.w_start - (config.w_start - config.w_end) * frac
}

/// One LPS generation.
///
/// `v = w v + c1 U (p_i - x) + c2 U (p_g - x)` with fresh draws per term and
/// dimension, clamped to `+-v_max`; then `x += v`. The global best used by
/// every particle is the one from the start of the generation.
pub fn lps_step<R: UnitSource + ?Sized>(
    swarm: &mut Swarm,
    evaluator: &mut Evaluator<'_>,
    t: usize,
    config: &LpsConfig,
    rng: &mut R,
) -> Result<()> {
    let w = inertia_at(t, config);
    let bounds = evaluator.problem().bounds();
    let vmax: Vec<f64> = (0..bounds.dim()).map(|d| config.vmax_fraction * bounds.range(d)).collect();
    let gbest = swarm.gbest().pbest_position.clone();

    for i in 0..swarm.len() {
        let p = &mut swarm.particles[i];
        for d in 0..p.position.len() {
            let r1 = rng.unit();
            let r2 = rng.unit();
            let x = p.position[d];
            let v = w * p.velocity[d] + config.c1 * r1 * (p.pbest_position[d] - x) + config.c2 * r2 * (gbest[d] - x);
            p.velocity[d] = v.clamp(-vmax[d], vmax[d]);
        }
        swarm.advance(i, evaluator, rng)?;
    }
    swarm.recompute_gbest();
    Ok(())
}
