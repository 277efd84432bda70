use crate::boundary::BoundaryMode;
use crate::problem::{BoxBounds, Evaluator};
use crate::rng::UnitSource;
use crate::{Error, Result};

use super::{DepsConfig, Swarm};

/// Clerc's constriction coefficient `2 / |2 - phi - sqrt(phi^2 - 4 phi)|`, `phi = c1 + c2 > 4`.
pub fn constriction(c1: f64, c2: f64) -> Result<f64> {
    let phi = c1 + c2;
    if phi <= 4.0 || !phi.is_finite() {
        return Err(Error::InvalidConfig(format!("constriction needs c1 + c2 > 4, got {phi}")));
    }
    Ok(2.0 / (2.0 - phi - (phi * phi - 4.0 * phi).sqrt()).abs())
}

/// Builds a candidate replacement for a particle's personal best.
pub trait PbestTrial {
    fn trial<R: UnitSource + ?Sized>(&self, swarm: &Swarm, bounds: &BoxBounds, target: usize, rng: &mut R) -> Vec<f64>;
}

/// DE-style trial around the global best.
///
/// With probability `cr` per dimension (and always on one random dimension)
/// the coordinate becomes `p_g + ((p_a - p_b) + (p_c - p_e)) / 2` for four
/// distinct personal bests other than the target; otherwise it keeps the
/// target's personal best.
///
/// Under `Periodic` the personal bests may sit in different copies of the
/// box, so each pairwise difference is reduced to its minimal image in
/// `[-s_d/2, s_d/2]`; whole-period offsets would otherwise dominate the
/// difference vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeDifferenceTrial {
    pub cr: f64,
}

impl PbestTrial for DeDifferenceTrial {
    fn trial<R: UnitSource + ?Sized>(&self, swarm: &Swarm, bounds: &BoxBounds, target: usize, rng: &mut R) -> Vec<f64> {
        let n = swarm.len();
        debug_assert!(n >= 5);
        let mut picks = [usize::MAX; 4];
        for k in 0..4 {
            loop {
                let c = rng.index(n);
                if c != target && !picks[..k].contains(&c) {
                    picks[k] = c;
                    break;
                }
            }
        }
        let ps = swarm.particles();
        let [a, b, c, e] = picks.map(|j| &ps[j].pbest_position);
        let gbest = &swarm.gbest().pbest_position;
        let own = &ps[target].pbest_position;
        let dim = own.len();
        let periodic = swarm.mode() == BoundaryMode::Periodic;
        let forced = rng.index(dim);
        (0..dim)
            .map(|d| {
                let cross = rng.unit() < self.cr;
                if d == forced || cross {
                    let (mut ab, mut ce) = (a[d] - b[d], c[d] - e[d]);
                    if periodic {
                        ab = minimal_image(ab, bounds.range(d));
                        ce = minimal_image(ce, bounds.range(d));
                    }
                    gbest[d] + (ab + ce) / 2.0
                } else {
                    own[d]
                }
            })
            .collect()
    }
}

fn minimal_image(delta: f64, span: f64) -> f64 {
    delta - span * (delta / span).round()
}

/// One DEPS generation with the default DE trial operator.
pub fn deps_step<R: UnitSource + ?Sized>(
    swarm: &mut Swarm,
    evaluator: &mut Evaluator<'_>,
    t: usize,
    config: &DepsConfig,
    rng: &mut R,
) -> Result<()> {
    deps_step_with(swarm, evaluator, t, config, &DeDifferenceTrial { cr: config.cr }, rng)
}

/// One DEPS generation: a constriction update `v = chi (v + c1 U (p_i - x) + c2 U (p_g - x))`
/// for every particle, then on odd `t` one trial per personal best from `operator`,
/// accepted only when it strictly wins under Deb's rules.
pub fn deps_step_with<O: PbestTrial, R: UnitSource + ?Sized>(
    swarm: &mut Swarm,
    evaluator: &mut Evaluator<'_>,
    t: usize,
    config: &DepsConfig,
    operator: &O,
    rng: &mut R,
) -> Result<()> {
    if swarm.len() < 5 {
        return Err(Error::InvalidConfig(format!("DEPS needs at least 5 particles, got {}", swarm.len())));
    }
    let chi = config.chi()?;
    let gbest = swarm.gbest().pbest_position.clone();
    for i in 0..swarm.len() {
        let p = &mut swarm.particles[i];
        for (((v, &x), &own), &best) in p.velocity.iter_mut().zip(&p.position).zip(&p.pbest_position).zip(&gbest) {
            let r1 = rng.unit();
            let r2 = rng.unit();
            *v = chi * (*v + config.c1 * r1 * (own - x) + config.c2 * r2 * (best - x));
        }
        swarm.advance(i, evaluator, rng)?;
    }
    swarm.recompute_gbest();

    if t % 2 == 1 {
        for i in 0..swarm.len() {
            let trial = operator.trial(swarm, evaluator.problem().bounds(), i, rng);
            swarm.offer_pbest(i, trial, evaluator, rng)?;
        }
        swarm.recompute_gbest();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::BoundaryMode;
    use crate::problem::{BoxBounds, Problem, Sense};
    use crate::rng::stream_from_seed;
    use crate::swarm::Particle;

    fn sphere(dim: usize) -> Problem {
        Problem::new("sphere", BoxBounds::uniform(dim, -10.0, 10.0).unwrap(), Sense::Minimize, |x| {
            x.iter().map(|v| v * v).sum()
        })
    }

    fn swarm_of(problem: &Problem, pbests: &[Vec<f64>]) -> Swarm {
        let particles = pbests
            .iter()
            .map(|p| Particle {
                position: p.clone(),
                velocity: vec![0.0; p.len()],
                pbest_position: p.clone(),
                pbest_fitness: problem.evaluate(p).unwrap(),
            })
            .collect();
        Swarm::from_particles(particles, BoundaryMode::Periodic).unwrap()
    }

    #[test]
    fn constriction_values() {
        // phi = 4.1: 2 / |2 - 4.1 - sqrt(0.41)|
        let chi = constriction(2.05, 2.05).unwrap();
        assert!((chi - 0.729_843_788_128_357).abs() < 1e-12, "{chi}");
        let chi = constriction(2.5, 2.5).unwrap();
        assert!((chi - 2.0 / (3.0 + 5f64.sqrt())).abs() < 1e-15);
        assert!(constriction(2.0, 2.0).is_err());
        assert!(constriction(1.0, 1.0).is_err());
    }

    #[test]
    fn identical_pbests_give_gbest_and_no_replacement() {
        let p = sphere(3);
        let pbests = vec![vec![1.0, -2.0, 0.5]; 6];
        let swarm = swarm_of(&p, &pbests);
        let op = DeDifferenceTrial { cr: 0.9 };
        let mut rng = stream_from_seed(4);
        for i in 0..6 {
            assert_eq!(op.trial(&swarm, p.bounds(), i, &mut rng), pbests[0]);
        }
        let mut swarm = swarm;
        let mut ev = Evaluator::new(&p);
        for i in 0..6 {
            let trial = op.trial(&swarm, p.bounds(), i, &mut rng);
            assert!(!swarm.offer_pbest(i, trial, &mut ev, &mut rng).unwrap());
        }
        assert_eq!(ev.count(), 6);
    }

    #[test]
    fn periodic_differences_ignore_whole_periods() {
        let p = sphere(2);
        let fitness = p.evaluate(&[1.0, -3.0]).unwrap();
        let tiles = [[1.0, -3.0], [21.0, -3.0], [-19.0, 17.0], [41.0, -23.0], [1.0, 37.0], [-39.0, -3.0]];
        let particles: Vec<Particle> = tiles
            .iter()
            .map(|x| Particle {
                position: x.to_vec(),
                velocity: vec![0.0; 2],
                pbest_position: x.to_vec(),
                pbest_fitness: fitness,
            })
            .collect();
        let op = DeDifferenceTrial { cr: 1.0 };
        let mut rng = stream_from_seed(9);

        let periodic = Swarm::from_particles(particles.clone(), BoundaryMode::Periodic).unwrap();
        for i in 0..tiles.len() {
            assert_eq!(op.trial(&periodic, p.bounds(), i, &mut rng), vec![1.0, -3.0]);
        }

        let clamped = Swarm::from_particles(particles, BoundaryMode::Boundary).unwrap();
        let moved = (0..50).filter(|_| op.trial(&clamped, p.bounds(), 0, &mut rng) != vec![1.0, -3.0]).count();
        assert!(moved > 0);
    }

    #[test]
    fn minimal_image_range() {
        assert_eq!(minimal_image(21.0, 20.0), 1.0);
        assert_eq!(minimal_image(-39.5, 20.0), 0.5);
        assert_eq!(minimal_image(7.0, 20.0), 7.0);
        assert!(minimal_image(123.456, 1.0).abs() <= 0.5);
    }

    #[test]
    fn zero_cr_perturbs_exactly_one_dimension() {
        let p = sphere(6);
        let pbests: Vec<Vec<f64>> =
            (0..7).map(|i| (0..6).map(|d| (i * 7 + d * 3) as f64 * 0.37 - 5.0).collect()).collect();
        let swarm = swarm_of(&p, &pbests);
        let op = DeDifferenceTrial { cr: 0.0 };
        let mut rng = stream_from_seed(11);
        for _ in 0..200 {
            let target = rng.index(7);
            let trial = op.trial(&swarm, p.bounds(), target, &mut rng);
            let changed = trial.iter().zip(&swarm.particles()[target].pbest_position).filter(|(a, b)| a != b).count();
            assert!(changed <= 1);
        }
    }

    #[test]
    fn too_small_swarm_is_rejected() {
        let p = sphere(2);
        let mut swarm = swarm_of(&p, &vec![vec![0.0, 0.0]; 4]);
        let mut ev = Evaluator::new(&p);
        let cfg = DepsConfig::new(4, 10, BoundaryMode::Periodic);
        assert!(matches!(
            deps_step(&mut swarm, &mut ev, 0, &cfg, &mut stream_from_seed(0)),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn odd_generations_spend_extra_evaluations() {
        let p = sphere(2);
        let cfg = DepsConfig::new(6, 4, BoundaryMode::Periodic);
        let r = crate::swarm::run(&p, &crate::swarm::EngineConfig::Deps(cfg), 1).unwrap();
        // init 6 + 4 generations of 6 + DE trials on t = 1, 3
        assert_eq!(r.evaluations_used, 6 + 24 + 12);
    }
}
