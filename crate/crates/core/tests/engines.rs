use periswarm::benchmarks::{get_problem, sphere};
use periswarm::rng::stream_from_seed;
use periswarm::swarm::{deps_step, lps_step, Swarm};
use periswarm::{deb_compare, run, BoundaryMode, DepsConfig, EngineConfig, Evaluator, LpsConfig, Preference, Problem};

fn engines(n: usize, t: usize, mode: BoundaryMode) -> [EngineConfig; 2] {
    [EngineConfig::Lps(LpsConfig::new(n, t, mode)), EngineConfig::Deps(DepsConfig::new(n, t, mode))]
}

/// Steps an engine by hand and hands every intermediate swarm to `check`.
fn trace(problem: &Problem, engine: &EngineConfig, seed: u64, mut check: impl FnMut(&Swarm, &Swarm)) -> u64 {
    let mut rng = stream_from_seed(seed);
    let mut ev = Evaluator::new(problem);
    let limit = engine.velocity_limit(problem);
    let mut swarm = Swarm::initialize(&mut ev, engine.particles(), &limit, engine.mode(), &mut rng).unwrap();
    for t in 0..engine.generations() {
        let before = swarm.clone();
        match engine {
            EngineConfig::Lps(c) => lps_step(&mut swarm, &mut ev, t, c, &mut rng).unwrap(),
            EngineConfig::Deps(c) => deps_step(&mut swarm, &mut ev, t, c, &mut rng).unwrap(),
        }
        check(&before, &swarm);
    }
    ev.count()
}

#[test]
fn identical_seeds_give_identical_runs() {
    let p = get_problem("g06").unwrap().problem;
    for mode in BoundaryMode::ALL {
        for engine in engines(10, 50, mode) {
            assert_eq!(run(&p, &engine, 17).unwrap(), run(&p, &engine, 17).unwrap());
        }
        let q = get_problem("g08").unwrap().problem;
        for engine in engines(10, 2, mode) {
            assert_ne!(run(&q, &engine, 17).unwrap().best_point, run(&q, &engine, 18).unwrap().best_point);
        }
    }
}

#[test]
fn personal_bests_never_get_worse_and_gbest_dominates() {
    for name in ["g06", "g08", "tb"] {
        let p = get_problem(name).unwrap().problem;
        for mode in BoundaryMode::ALL {
            for engine in engines(8, 40, mode) {
                trace(&p, &engine, 5, |before, after| {
                    for (a, b) in before.particles().iter().zip(after.particles()) {
                        assert_ne!(deb_compare(&a.pbest_fitness, &b.pbest_fitness), Preference::ABetter);
                    }
                    let g = &after.gbest().pbest_fitness;
                    for q in after.particles() {
                        assert_ne!(deb_compare(&q.pbest_fitness, g), Preference::ABetter);
                    }
                });
            }
        }
    }
}

#[test]
fn lps_velocity_stays_clamped() {
    let p = get_problem("g01").unwrap().problem;
    let cfg = LpsConfig::new(10, 60, BoundaryMode::Periodic);
    let bounds = p.bounds().clone();
    trace(&p, &EngineConfig::Lps(cfg.clone()), 3, |_, s| {
        for q in s.particles() {
            for (d, v) in q.velocity.iter().enumerate() {
                assert!(v.abs() <= cfg.vmax_fraction * bounds.range(d) + 1e-12);
            }
        }
    });
}

#[test]
fn positions_respect_the_mode() {
    let p = get_problem("g10").unwrap().problem;
    let bounds = p.bounds().clone();
    for mode in BoundaryMode::ALL {
        for engine in engines(8, 30, mode) {
            trace(&p, &engine, 11, |_, s| {
                for q in s.particles() {
                    match mode {
                        BoundaryMode::Periodic => {
                            assert!(bounds.contains(&periswarm::map_periodic(&q.position, &bounds).unwrap()))
                        }
                        _ => assert!(bounds.contains(&q.position) && bounds.contains(&q.pbest_position)),
                    }
                }
            });
            let r = run(&p, &engine, 11).unwrap();
            assert!(bounds.contains(&r.best_point));
        }
    }
}

#[test]
fn evaluation_budget() {
    let p = sphere().problem;
    let (n, t) = (12, 25);
    for mode in BoundaryMode::ALL {
        let [lps, deps] = engines(n, t, mode);
        assert_eq!(run(&p, &lps, 1).unwrap().evaluations_used, (n * (t + 1)) as u64);
        // DEPS adds one trial evaluation per particle on odd generations
        assert_eq!(run(&p, &deps, 1).unwrap().evaluations_used, (n * (t + 1) + n * (t / 2)) as u64);
        assert_eq!(trace(&p, &lps, 1, |_, _| {}), (n * (t + 1)) as u64);
    }
}

#[test]
fn deps_solves_sphere() {
    let p = sphere().problem;
    for mode in BoundaryMode::ALL {
        let r = run(&p, &EngineConfig::Deps(DepsConfig::new(20, 200, mode)), 2).unwrap();
        assert!(r.best_fitness.objective() < 1e-3, "{mode}: {:?}", r.best_fitness);
    }
}

#[test]
fn lps_periodic_solves_sphere() {
    let p = sphere().problem;
    let r = run(&p, &EngineConfig::Lps(LpsConfig::new(14, 2000, BoundaryMode::Periodic)), 1).unwrap();
    assert!(r.best_fitness.objective() < 1e-2, "{:?}", r.best_fitness);
}

#[test]
fn g06_boundary_mode_mostly_fails() {
    let p = get_problem("g06").unwrap().problem;
    let cfg = EngineConfig::Lps(LpsConfig::new(14, 300, BoundaryMode::Boundary));
    let failed = (0..20).filter(|&s| !run(&p, &cfg, s).unwrap().entered_feasible).count();
    assert!(failed > 10, "{failed}/20 failed");
}
