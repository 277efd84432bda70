//! Engineering design problems.

use std::f64::consts::SQRT_2;

use crate::problem::{BoxBounds, Problem, Sense};

use super::{guarded_div, BenchmarkEntry, LocationClass};

const SOURCE: &str = "Ray & Liew, IEEE Trans. Evolutionary Computation 7(4), 2003";

fn bounds(lower: Vec<f64>, upper: Vec<f64>) -> BoxBounds {
    BoxBounds::new(lower, upper).expect("registry bounds are valid")
}

/// Welded beam, variables `(h, l, t, b)`.
pub(super) fn welded_beam() -> BenchmarkEntry {
    const P: f64 = 6000.0;
    const L: f64 = 14.0;

    fn shear_stress(x: &[f64]) -> f64 {
        let (h, l, t) = (x[0], x[1], x[2]);
        let primary = guarded_div(P, SQRT_2 * h * l);
        let moment = P * (L + l / 2.0);
        let radius = (l * l / 4.0 + ((h + t) / 2.0).powi(2)).sqrt();
        let polar = 2.0 * (h * l / SQRT_2 * (l * l / 12.0 + ((h + t) / 2.0).powi(2)));
        let secondary = guarded_div(moment * radius, polar);
        (primary * primary + primary * secondary * guarded_div(l, radius) + secondary * secondary).sqrt()
    }

    let problem =
        Problem::new("wb", bounds(vec![0.125, 0.1, 0.1, 0.1], vec![5.0, 10.0, 10.0, 5.0]), Sense::Minimize, |x| {
            1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1])
        })
        .with_constraint(|x| shear_stress(x) - 13600.0)
        .with_constraint(|x| guarded_div(6.0 * P * L, x[3] * x[2] * x[2]) - 30000.0)
        .with_constraint(|x| x[0] - x[3])
        .with_constraint(|x| P - 64746.022 * (1.0 - 0.0282346 * x[2]) * x[2] * x[3].powi(3))
        .with_constraint(|x| guarded_div(2.1952, x[2].powi(3) * x[3]) - 0.25)
        .with_known_best(
            2.38113,
            Some(vec![0.24436894344849988, 6.217520502358244, 8.291471769711867, 0.24436895344846016]),
        );
    BenchmarkEntry { problem, location: LocationClass::NearBoundary, source: SOURCE }
}

/// Speed reducer (Golinski), seven variables.
#[allow(clippy::approx_constant)]
pub(super) fn speed_reducer() -> BenchmarkEntry {
    let problem = Problem::new(
        "sr",
        bounds(vec![2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0], vec![3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5]),
        Sense::Minimize,
        |x| {
            0.7854 * x[0] * x[1] * x[1] * (3.3333 * x[2] * x[2] + 14.9334 * x[2] - 43.0934)
                - 1.508 * x[0] * (x[5] * x[5] + x[6] * x[6])
                + 7.4777 * (x[5].powi(3) + x[6].powi(3))
                + 0.7854 * (x[3] * x[5] * x[5] + x[4] * x[6] * x[6])
        },
    )
    .with_constraint(|x| 27.0 / (x[0] * x[1] * x[1] * x[2]) - 1.0)
    .with_constraint(|x| 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1.0)
    .with_constraint(|x| 1.93 * x[3].powi(3) / (x[1] * x[2] * x[5].powi(4)) - 1.0)
    .with_constraint(|x| 1.93 * x[4].powi(3) / (x[1] * x[2] * x[6].powi(4)) - 1.0)
    .with_constraint(|x| ((745.0 * x[3] / (x[1] * x[2])).powi(2) + 16.9e6).sqrt() / (110.0 * x[5].powi(3)) - 1.0)
    .with_constraint(|x| ((745.0 * x[4] / (x[1] * x[2])).powi(2) + 157.5e6).sqrt() / (85.0 * x[6].powi(3)) - 1.0)
    .with_constraint(|x| x[1] * x[2] / 40.0 - 1.0)
    .with_constraint(|x| 5.0 * x[1] / x[0] - 1.0)
    .with_constraint(|x| x[0] / (12.0 * x[1]) - 1.0)
    .with_constraint(|x| (1.5 * x[5] + 1.9) / x[3] - 1.0)
    .with_constraint(|x| (1.1 * x[6] + 1.9) / x[4] - 1.0)
    .with_known_best(2994.471, Some(vec![3.5, 0.7, 17.0, 7.3, 7.71532, 3.3502147, 5.2866545]));
    BenchmarkEntry { problem, location: LocationClass::OnBoundary, source: SOURCE }
}

/// Three-bar truss, cross-section areas `(A1, A2)`.
pub(super) fn three_bar_truss() -> BenchmarkEntry {
    const LENGTH: f64 = 100.0;
    const LOAD: f64 = 2.0;
    const STRESS: f64 = 2.0;
    let problem = Problem::new("tb", bounds(vec![0.0, 0.0], vec![1.0, 1.0]), Sense::Minimize, |x| {
        (2.0 * SQRT_2 * x[0] + x[1]) * LENGTH
    })
    .with_constraint(|x| guarded_div(SQRT_2 * x[0] + x[1], SQRT_2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * LOAD - STRESS)
    .with_constraint(|x| guarded_div(x[1], SQRT_2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * LOAD - STRESS)
    .with_constraint(|x| guarded_div(1.0, SQRT_2 * x[1] + x[0]) * LOAD - STRESS)
    .with_known_best(263.8958, Some(vec![0.7886751478916607, 0.4082482528597953]));
    BenchmarkEntry { problem, location: LocationClass::Interior, source: SOURCE }
}

/// Tension/compression spring, variables `(d, D, N)`.
pub(super) fn tension_spring() -> BenchmarkEntry {
    let problem = Problem::new("ts", bounds(vec![0.05, 0.25, 2.0], vec![2.0, 1.3, 15.0]), Sense::Minimize, |x| {
        (x[2] + 2.0) * x[1] * x[0] * x[0]
    })
    .with_constraint(|x| 1.0 - x[1].powi(3) * x[2] / (71785.0 * x[0].powi(4)))
    .with_constraint(|x| {
        let (d, coil) = (x[0], x[1]);
        guarded_div(4.0 * coil * coil - d * coil, 12566.0 * (coil * d.powi(3) - d.powi(4))) + 1.0 / (5108.0 * d * d)
            - 1.0
    })
    .with_constraint(|x| 1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2]))
    .with_constraint(|x| (x[0] + x[1]) / 1.5 - 1.0)
    .with_known_best(0.012666, Some(vec![0.05168912666006183, 0.3567193172097505, 11.288873286474596]));
    BenchmarkEntry { problem, location: LocationClass::NearBoundary, source: SOURCE }
}
