use periswarm::boundary::wrap_coordinate;
use periswarm::rng::stream_from_seed;
use periswarm::{
    deb_compare, enforce_mode, map_periodic, BoundaryMode, BoxBounds, Fitness, Preference, Problem, Sense,
};
use proptest::prelude::*;

fn bounds_strategy() -> impl Strategy<Value = BoxBounds> {
    prop::collection::vec((-1e3f64..1e3, 1e-3f64..1e3), 1..6).prop_map(|dims| {
        let lower: Vec<f64> = dims.iter().map(|(l, _)| *l).collect();
        let upper: Vec<f64> = dims.iter().map(|(l, s)| l + s).collect();
        BoxBounds::new(lower, upper).unwrap()
    })
}

fn bounds_and_point() -> impl Strategy<Value = (BoxBounds, Vec<f64>)> {
    bounds_strategy().prop_flat_map(|b| {
        let coords: Vec<_> = (0..b.dim())
            .map(|d| {
                let (l, u) = (b.lower()[d], b.upper()[d]);
                let s = u - l;
                (l - 50.0 * s)..(u + 50.0 * s)
            })
            .collect();
        (Just(b), coords)
    })
}

fn fitness() -> impl Strategy<Value = Fitness> {
    // a third of the samples are feasible, and small grids force ties
    (0u8..3, -5i32..5, 0i32..4, -1e3f64..1e3, 0f64..10.0).prop_map(|(kind, oi, vi, o, v)| match kind {
        0 => Fitness::new(oi as f64, 0.0).unwrap(),
        1 => Fitness::new(oi as f64, vi as f64 * 0.5).unwrap(),
        _ => Fitness::new(o, v).unwrap(),
    })
}

fn flip(p: Preference) -> Preference {
    match p {
        Preference::ABetter => Preference::BBetter,
        Preference::BBetter => Preference::ABetter,
        Preference::Tie => Preference::Tie,
    }
}

fn not_worse(a: &Fitness, b: &Fitness) -> bool {
    deb_compare(a, b) != Preference::BBetter
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100_000))]

    #[test]
    fn periodic_map_lands_in_box_and_is_idempotent((b, x) in bounds_and_point()) {
        let y = map_periodic(&x, &b).unwrap();
        prop_assert!(b.contains(&y));
        prop_assert_eq!(map_periodic(&y, &b).unwrap(), y.clone());
        for d in 0..b.dim() {
            if b.lower()[d] <= x[d] && x[d] <= b.upper()[d] {
                prop_assert_eq!(y[d], x[d]);
            }
        }
    }

    #[test]
    fn periodic_map_has_period_span(l in -100f64..100.0, s in 0.5f64..50.0, x in -1e3f64..1e3, k in -20i32..20) {
        let u = l + s;
        let a = wrap_coordinate(x, l, u);
        let b = wrap_coordinate(x + k as f64 * s, l, u);
        // equal up to the seam, where u and l are the same point
        let gap = (a - b).abs();
        prop_assert!(gap < 1e-9 * (1.0 + x.abs() + s * k.abs() as f64) || (gap - s).abs() < 1e-6, "{a} vs {b}");
    }

    #[test]
    fn deb_compare_is_antisymmetric(a in fitness(), b in fitness()) {
        prop_assert_eq!(deb_compare(&a, &b), flip(deb_compare(&b, &a)));
        prop_assert_eq!(deb_compare(&a, &a), Preference::Tie);
    }

    #[test]
    fn deb_compare_is_transitive(a in fitness(), b in fitness(), c in fitness()) {
        if not_worse(&a, &b) && not_worse(&b, &c) {
            prop_assert!(not_worse(&a, &c));
        }
        if deb_compare(&a, &b) == Preference::ABetter && deb_compare(&b, &c) == Preference::ABetter {
            prop_assert_eq!(deb_compare(&a, &c), Preference::ABetter);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn boundary_mode_is_the_projection((b, x) in bounds_and_point(), seed in any::<u64>()) {
        let v = vec![1.0; b.dim()];
        let e = enforce_mode(&x, &v, &b, BoundaryMode::Boundary, &mut stream_from_seed(seed)).unwrap();
        for (d, &xd) in x.iter().enumerate() {
            prop_assert_eq!(e.eval_point[d], xd.clamp(b.lower()[d], b.upper()[d]));
        }
        prop_assert_eq!(&e.flight, &e.eval_point);
        prop_assert_eq!(e.velocity, v);
    }

    #[test]
    fn random_mode_only_touches_violated_dimensions((b, x) in bounds_and_point(), seed in any::<u64>()) {
        let v = vec![0.0; b.dim()];
        let e = enforce_mode(&x, &v, &b, BoundaryMode::Random, &mut stream_from_seed(seed)).unwrap();
        prop_assert!(b.contains(&e.eval_point));
        for (d, &xd) in x.iter().enumerate() {
            if b.lower()[d] <= xd && xd <= b.upper()[d] {
                prop_assert_eq!(e.eval_point[d], xd);
            }
        }
    }

    #[test]
    fn periodic_mode_keeps_flight((b, x) in bounds_and_point(), seed in any::<u64>()) {
        let v = vec![0.5; b.dim()];
        let e = enforce_mode(&x, &v, &b, BoundaryMode::Periodic, &mut stream_from_seed(seed)).unwrap();
        prop_assert_eq!(&e.flight, &x);
        prop_assert_eq!(e.eval_point, map_periodic(&x, &b).unwrap());
    }

    #[test]
    fn maximizing_preserves_the_argmax(points in prop::collection::vec(prop::collection::vec(-5f64..5.0, 2), 2..20)) {
        let f = |x: &[f64]| -(x[0] - 1.0).powi(2) - x[1].powi(2) + 3.0;
        let p = Problem::new("bump", BoxBounds::uniform(2, -5.0, 5.0).unwrap(), Sense::Maximize, f);
        let best_internal = points
            .iter()
            .enumerate()
            .min_by(|a, b| p.evaluate(a.1).unwrap().objective().total_cmp(&p.evaluate(b.1).unwrap().objective()))
            .unwrap()
            .0;
        let best_raw = points
            .iter()
            .enumerate()
            .max_by(|a, b| f(a.1).total_cmp(&f(b.1)).then(b.0.cmp(&a.0)))
            .unwrap()
            .0;
        prop_assert_eq!(best_internal, best_raw);
    }

    #[test]
    fn evaluate_is_pure(x in prop::collection::vec(-100f64..100.0, 2)) {
        let entry = periswarm::benchmarks::get_problem("g06").unwrap();
        let first = entry.problem.evaluate(&x).unwrap();
        prop_assert_eq!(first, entry.problem.evaluate(&x).unwrap());
    }
}
