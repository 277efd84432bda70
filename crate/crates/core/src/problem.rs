//! Constrained problem model, fitness evaluation and Deb's comparator.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A scalar function of a point, used for objectives and constraints.
pub type ScalarFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Axis-aligned search box `S = [l_1, u_1] x ... x [l_D, u_D]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxBounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl BoxBounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidInput("bounds must have at least one dimension".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::InvalidInput(format!(
                "lower has {} entries but upper has {}",
                lower.len(),
                upper.len()
            )));
        }
        for (d, (&l, &u)) in lower.iter().zip(&upper).enumerate() {
            if !(l.is_finite() && u.is_finite() && l < u) {
                return Err(Error::InvalidInput(format!("dimension {d}: need finite l < u, got [{l}, {u}]")));
            }
        }
        Ok(Self { lower, upper })
    }

    /// Same interval `[lower, upper]` on every one of `dim` dimensions.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Range `s_d = u_d - l_d` of dimension `d`.
    pub fn range(&self, d: usize) -> f64 {
        self.upper[d] - self.lower[d]
    }

    pub fn contains(&self, point: &[f64]) -> bool {
        point.len() == self.dim()
            && point.iter().zip(self.lower.iter().zip(&self.upper)).all(|(&x, (&l, &u))| l <= x && x <= u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Minimize,
    Maximize,
}

impl Sense {
    /// Converts a value between the original sense and the internal
    /// minimization sense. The map is its own inverse.
    pub fn to_internal(self, value: f64) -> f64 {
        match self {
            Sense::Minimize => value,
            Sense::Maximize => -value,
        }
    }

    pub fn to_original(self, value: f64) -> f64 {
        self.to_internal(value)
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Minimize => "min",
            Sense::Maximize => "max",
        })
    }
}

/// An inequality-constrained problem: optimize `f(x)` subject to
/// `g_j(x) <= 0` for every constraint and `x` inside [`BoxBounds`].
#[derive(Clone)]
pub struct Problem {
    name: String,
    bounds: BoxBounds,
    sense: Sense,
    objective: ScalarFn,
    constraints: Vec<ScalarFn>,
    known_best_value: Option<f64>,
    known_best_point: Option<Vec<f64>>,
}

impl Problem {
    pub fn new<F>(name: impl Into<String>, bounds: BoxBounds, sense: Sense, objective: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            bounds,
            sense,
            objective: Arc::new(objective),
            constraints: Vec::new(),
            known_best_value: None,
            known_best_point: None,
        }
    }

    pub fn with_constraint<G>(mut self, constraint: G) -> Self
    where
        G: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        self.constraints.push(Arc::new(constraint));
        self
    }

    /// Known optimum `F*` in the problem's original sense, with an optional
    /// point attaining it.
    pub fn with_known_best(mut self, value: f64, point: Option<Vec<f64>>) -> Self {
        self.known_best_value = Some(value);
        self.known_best_point = point;
        self
    }

    /// Replaces the box. Used to build perturbed fixtures from registry entries.
    pub fn with_bounds(mut self, bounds: BoxBounds) -> Self {
        self.bounds = bounds;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.bounds.dim()
    }

    pub fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn known_best_value(&self) -> Option<f64> {
        self.known_best_value
    }

    pub fn known_best_point(&self) -> Option<&[f64]> {
        self.known_best_point.as_deref()
    }

    /// Raw objective value in the original sense.
    pub fn objective_value(&self, point: &[f64]) -> f64 {
        (self.objective)(point)
    }

    pub fn constraint_values(&self, point: &[f64]) -> Vec<f64> {
        self.constraints.iter().map(|g| g(point)).collect()
    }

    /// Evaluates `point` into a [`Fitness`] in minimization sense.
    ///
    /// The point is expected to lie inside the box; callers map or clamp
    /// flight positions before evaluating.
    pub fn evaluate(&self, point: &[f64]) -> Result<Fitness> {
        if point.len() != self.dim() {
            return Err(Error::InvalidInput(format!(
                "{}: expected a {}-dimensional point, got {}",
                self.name,
                self.dim(),
                point.len()
            )));
        }
        let value = (self.objective)(point);
        if !value.is_finite() {
            return Err(Error::Evaluation { what: "objective", point: point.to_vec() });
        }
        let mut violation = 0.0;
        for g in &self.constraints {
            let gj = g(point);
            if !gj.is_finite() {
                return Err(Error::Evaluation { what: "constraint", point: point.to_vec() });
            }
            if gj > 0.0 {
                violation += gj;
            }
        }
        if !violation.is_finite() {
            return Err(Error::Evaluation { what: "constraint violation", point: point.to_vec() });
        }
        Ok(Fitness { objective: self.sense.to_internal(value), violation })
    }
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("bounds", &self.bounds)
            .field("sense", &self.sense)
            .field("constraints", &self.constraints.len())
            .field("known_best_value", &self.known_best_value)
            .finish_non_exhaustive()
    }
}

/// Counts evaluations for a single run.
#[derive(Debug)]
pub struct Evaluator<'p> {
    problem: &'p Problem,
    count: u64,
}

impl<'p> Evaluator<'p> {
    pub fn new(problem: &'p Problem) -> Self {
        Self { problem, count: 0 }
    }

    pub fn problem(&self) -> &'p Problem {
        self.problem
    }

    pub fn evaluate(&mut self, point: &[f64]) -> Result<Fitness> {
        let fitness = self.problem.evaluate(point)?;
        self.count += 1;
        Ok(fitness)
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}

/// Objective (minimization sense) plus total constraint violation
/// `sum_j max(0, g_j(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Fitness {
    objective: f64,
    violation: f64,
}

impl Fitness {
    pub fn new(objective: f64, violation: f64) -> Result<Self> {
        if !objective.is_finite() || !violation.is_finite() || violation < 0.0 {
            return Err(Error::InvalidInput(format!(
                "fitness needs a finite objective and violation >= 0, got ({objective}, {violation})"
            )));
        }
        Ok(Self { objective, violation })
    }

    pub fn objective(&self) -> f64 {
        self.objective
    }

    pub fn violation(&self) -> f64 {
        self.violation
    }

    pub fn is_feasible(&self) -> bool {
        self.violation == 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preference {
    ABetter,
    BBetter,
    Tie,
}

/// Deb's feasibility rules: a feasible point beats an infeasible one, two
/// feasible points are ranked by objective and two infeasible points by
/// violation. Smaller wins in both cases.
pub fn deb_compare(a: &Fitness, b: &Fitness) -> Preference {
    let (ka, kb) = match (a.is_feasible(), b.is_feasible()) {
        (true, false) => return Preference::ABetter,
        (false, true) => return Preference::BBetter,
        (true, true) => (a.objective, b.objective),
        (false, false) => (a.violation, b.violation),
    };
    if ka < kb {
        Preference::ABetter
    } else if kb < ka {
        Preference::BBetter
    } else {
        Preference::Tie
    }
}

impl Fitness {
    /// `true` when `self` strictly beats `other` under [`deb_compare`].
    pub fn beats(&self, other: &Fitness) -> bool {
        deb_compare(self, other) == Preference::ABetter
    }
}
