//! Registry of benchmark problems with known optima.

mod engineering;
mod gsuite;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::problem::{BoxBounds, Problem, Sense};
use crate::{Error, Result};

/// Where the global optimum sits relative to the box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocationClass {
    OnBoundary,
    NearBoundary,
    Interior,
}

impl fmt::Display for LocationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocationClass::OnBoundary => "on-boundary",
            LocationClass::NearBoundary => "near-boundary",
            LocationClass::Interior => "interior",
        })
    }
}

#[derive(Debug, Clone)]
pub struct BenchmarkEntry {
    pub problem: Problem,
    pub location: LocationClass,
    pub source: &'static str,
}

/// Registry names, in listing order.
pub const NAMES: [&str; 13] =
    ["g01", "g02", "g04", "g06", "g07", "g08", "g09", "g10", "wb", "sr", "tb", "ts", "sphere"];

pub fn get_problem(name: &str) -> Result<BenchmarkEntry> {
    Ok(match name.to_ascii_lowercase().as_str() {
        "g01" => gsuite::g01(),
        "g02" => gsuite::g02(),
        "g04" => gsuite::g04(),
        "g06" => gsuite::g06(),
        "g07" => gsuite::g07(),
        "g08" => gsuite::g08(),
        "g09" => gsuite::g09(),
        "g10" => gsuite::g10(),
        "wb" => engineering::welded_beam(),
        "sr" => engineering::speed_reducer(),
        "tb" => engineering::three_bar_truss(),
        "ts" => engineering::tension_spring(),
        "sphere" => sphere(),
        _ => return Err(Error::UnknownProblem { name: name.to_string(), valid: NAMES.to_vec() }),
    })
}

pub fn all() -> Vec<BenchmarkEntry> {
    NAMES.iter().map(|n| get_problem(n).expect("registry name")).collect()
}

/// Unconstrained 5-D sphere on `[-10, 10]^5`, minimum 0 at the origin.
pub fn sphere() -> BenchmarkEntry {
    let problem = Problem::new("sphere", BoxBounds::uniform(5, -10.0, 10.0).expect("valid"), Sense::Minimize, |x| {
        x.iter().map(|v| v * v).sum()
    })
    .with_known_best(0.0, Some(vec![0.0; 5]));
    BenchmarkEntry { problem, location: LocationClass::Interior, source: "standard smoke test" }
}

/// `num / den` with `|den|` floored at 1e-300, keeping problems total on the
/// closed box where a denominator can vanish on a face or corner.
pub(crate) fn guarded_div(num: f64, den: f64) -> f64 {
    const FLOOR: f64 = 1e-300;
    if den.abs() < FLOOR {
        num / if den < 0.0 { -FLOOR } else { FLOOR }
    } else {
        num / den
    }
}

/// Violation allowed on a transcribed optimum.
pub const OPTIMUM_FEASIBILITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimumCheck {
    pub name: String,
    /// Point is inside the box and its violation is within [`OPTIMUM_FEASIBILITY_TOL`].
    pub feasible: bool,
    pub violation: f64,
    /// Objective at the point, original sense.
    pub value: f64,
    pub known_best: f64,
    pub value_error: f64,
    pub passed: bool,
}

/// Evaluates an entry's known optimum and compares it against `F*` with
/// tolerance `1e-2 * max(1, |F*|)`.
pub fn verify_entry(entry: &BenchmarkEntry) -> OptimumCheck {
    let problem = &entry.problem;
    let known_best = problem.known_best_value().unwrap_or(f64::NAN);
    let mut check = OptimumCheck {
        name: problem.name().to_string(),
        feasible: false,
        violation: f64::NAN,
        value: f64::NAN,
        known_best,
        value_error: f64::NAN,
        passed: false,
    };
    let Some(point) = problem.known_best_point() else {
        return check;
    };
    if let Ok(fitness) = problem.evaluate(point) {
        check.violation = fitness.violation();
        check.value = problem.sense().to_original(fitness.objective());
        check.feasible = problem.bounds().contains(point) && fitness.violation() <= OPTIMUM_FEASIBILITY_TOL;
        check.value_error = (check.value - known_best).abs();
        check.passed = check.feasible && check.value_error <= 1e-2 * known_best.abs().max(1.0);
    }
    check
}

pub fn verify_optima() -> Vec<OptimumCheck> {
    all().iter().map(verify_entry).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream_from_seed, UnitSource};

    #[test]
    fn table_values() {
        let g06 = get_problem("g06").unwrap();
        assert_eq!(g06.problem.known_best_value(), Some(-6961.814));
        assert_eq!(g06.problem.sense(), Sense::Minimize);
        let g02 = get_problem("g02").unwrap();
        assert_eq!(g02.problem.known_best_value(), Some(0.80362));
        assert_eq!(g02.problem.sense(), Sense::Maximize);
        assert_eq!(get_problem("ts").unwrap().problem.known_best_value(), Some(0.012666));
        assert_eq!(get_problem("wb").unwrap().problem.known_best_value(), Some(2.38113));
        assert_eq!(get_problem("sr").unwrap().problem.known_best_value(), Some(2994.471));
        assert_eq!(get_problem("tb").unwrap().problem.known_best_value(), Some(263.8958));
    }

    #[test]
    fn unknown_name_lists_valid_names() {
        let err = get_problem("g03").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("g03") && msg.contains("g01") && msg.contains("sphere"), "{msg}");
    }

    #[test]
    fn all_optima_verify() {
        for check in verify_optima() {
            assert!(check.passed, "{check:?}");
        }
    }

    #[test]
    fn known_points_are_exactly_feasible() {
        for entry in all() {
            let p = &entry.problem;
            let f = p.evaluate(p.known_best_point().unwrap()).unwrap();
            assert_eq!(f.violation(), 0.0, "{}", p.name());
        }
    }

    #[test]
    fn g08_value() {
        let e = get_problem("g08").unwrap();
        let f = e.problem.evaluate(e.problem.known_best_point().unwrap()).unwrap();
        assert!((-f.objective() - 0.095825).abs() <= 1e-3);
        assert!(f.violation() <= 1e-6);
    }

    #[test]
    fn g01_value() {
        let e = get_problem("g01").unwrap();
        let c = verify_entry(&e);
        assert!((c.value + 15.0).abs() <= 1e-2);
    }

    #[test]
    fn corrupted_bound_is_flagged() {
        let e = get_problem("g01").unwrap();
        let mut upper = e.problem.bounds().upper().to_vec();
        upper[9] = 2.0;
        let bounds = BoxBounds::new(e.problem.bounds().lower().to_vec(), upper).unwrap();
        let corrupted = BenchmarkEntry { problem: e.problem.clone().with_bounds(bounds), ..e };
        let c = verify_entry(&corrupted);
        assert!(!c.feasible);
        assert!(!c.passed);
    }

    #[test]
    fn boundary_optima_touch_the_box() {
        for name in ["g01", "g04", "sr"] {
            let e = get_problem(name).unwrap();
            assert_eq!(e.location, LocationClass::OnBoundary);
            let b = e.problem.bounds();
            let x = e.problem.known_best_point().unwrap();
            let touches = (0..b.dim()).any(|d| {
                let tol = 1e-9 * b.range(d);
                (x[d] - b.lower()[d]).abs() <= tol || (x[d] - b.upper()[d]).abs() <= tol
            });
            assert!(touches, "{name}");
        }
    }

    #[test]
    fn location_classes() {
        use LocationClass::*;
        let expect = [
            ("g01", OnBoundary),
            ("g04", OnBoundary),
            ("sr", OnBoundary),
            ("g02", NearBoundary),
            ("g06", NearBoundary),
            ("g07", NearBoundary),
            ("wb", NearBoundary),
            ("ts", NearBoundary),
        ];
        for (name, class) in expect {
            assert_eq!(get_problem(name).unwrap().location, class, "{name}");
        }
    }

    #[test]
    fn registry_is_total_on_random_samples() {
        let mut rng = stream_from_seed(5);
        for entry in all() {
            let b = entry.problem.bounds().clone();
            for _ in 0..10_000 {
                let x: Vec<f64> = (0..b.dim()).map(|d| rng.uniform(b.lower()[d], b.upper()[d])).collect();
                entry.problem.evaluate(&x).unwrap_or_else(|e| panic!("{}: {e}", entry.problem.name()));
            }
            // every corner of the box too, for low dimensions
            if b.dim() <= 8 {
                for mask in 0..(1u32 << b.dim()) {
                    let x: Vec<f64> =
                        (0..b.dim()).map(|d| if mask >> d & 1 == 1 { b.upper()[d] } else { b.lower()[d] }).collect();
                    entry.problem.evaluate(&x).unwrap_or_else(|e| panic!("{}: {e}", entry.problem.name()));
                }
            }
        }
    }

    #[test]
    fn guarded_div_floors_zero() {
        assert_eq!(guarded_div(0.0, 0.0), 0.0);
        assert!(guarded_div(1.0, 0.0).is_finite());
        assert!(guarded_div(1.0, -0.0) > 0.0);
        assert!(guarded_div(1.0, -1e-320) < 0.0);
        assert_eq!(guarded_div(6.0, 3.0), 2.0);
    }
}
