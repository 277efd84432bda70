//! Boundary-constraint handling: clamping, random re-draw and the periodic map.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::problem::BoxBounds;
use crate::rng::UnitSource;
use crate::{Error, Result};

/// How a particle that left the box is brought back for evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryMode {
    /// Clamp each violating coordinate onto the violated bound.
    Boundary,
    /// Redraw each violating coordinate uniformly inside its interval.
    Random,
    /// Fly unconstrained; evaluate through [`map_periodic`].
    Periodic,
}

impl BoundaryMode {
    pub const ALL: [BoundaryMode; 3] = [BoundaryMode::Boundary, BoundaryMode::Random, BoundaryMode::Periodic];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryMode::Boundary => "boundary",
            BoundaryMode::Random => "random",
            BoundaryMode::Periodic => "periodic",
        }
    }
}

impl fmt::Display for BoundaryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundaryMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "boundary" => Ok(BoundaryMode::Boundary),
            "random" => Ok(BoundaryMode::Random),
            "periodic" => Ok(BoundaryMode::Periodic),
            other => Err(Error::InvalidConfig(format!(
                "unknown boundary mode `{other}` (expected boundary, random or periodic)"
            ))),
        }
    }
}

/// Wraps one coordinate into `[lower, upper]`.
///
/// Below the box: `u - (l - x) mod s`; above it: `l + (x - u) mod s`, with
/// the modulus taken in `[0, s)`. The seam identifies `u` with `l`, so
/// `u + s` maps to `l`.
pub fn wrap_coordinate(x: f64, lower: f64, upper: f64) -> f64 {
    let span = upper - lower;
    let z = if x < lower {
        upper - (lower - x).rem_euclid(span)
    } else if x > upper {
        lower + (x - upper).rem_euclid(span)
    } else {
        return x;
    };
    // rounding in the subtraction can land a hair outside
    z.clamp(lower, upper)
}

/// Maps a point of the periodic tiling back into the original box.
pub fn map_periodic(x: &[f64], bounds: &BoxBounds) -> Result<Vec<f64>> {
    check_len(x, bounds)?;
    x.iter()
        .enumerate()
        .map(|(d, &xd)| {
            if !xd.is_finite() {
                return Err(Error::InvalidInput(format!("coordinate {d} is not finite: {xd}")));
            }
            Ok(wrap_coordinate(xd, bounds.lower()[d], bounds.upper()[d]))
        })
        .collect()
}

/// Result of [`enforce_mode`].
#[derive(Debug, Clone, PartialEq)]
pub struct Enforced {
    /// Where the particle continues flying from.
    pub flight: Vec<f64>,
    /// The image inside the box that gets evaluated.
    pub eval_point: Vec<f64>,
    pub velocity: Vec<f64>,
}

/// Applies `mode` to a freshly moved particle.
///
/// Velocity is never altered. `Random` consumes one draw per violating
/// dimension, in dimension order, and none when the point is inside.
pub fn enforce_mode<R: UnitSource + ?Sized>(
    position: &[f64],
    velocity: &[f64],
    bounds: &BoxBounds,
    mode: BoundaryMode,
    rng: &mut R,
) -> Result<Enforced> {
    check_len(position, bounds)?;
    check_len(velocity, bounds)?;
    let (lower, upper) = (bounds.lower(), bounds.upper());
    match mode {
        BoundaryMode::Boundary => {
            let clamped: Vec<f64> =
                position.iter().zip(lower.iter().zip(upper)).map(|(&x, (&l, &u))| x.clamp(l, u)).collect();
            Ok(Enforced { flight: clamped.clone(), eval_point: clamped, velocity: velocity.to_vec() })
        }
        BoundaryMode::Random => {
            let mut redrawn = position.to_vec();
            for (d, x) in redrawn.iter_mut().enumerate() {
                if *x < lower[d] || *x > upper[d] {
                    *x = rng.uniform(lower[d], upper[d]);
                }
            }
            Ok(Enforced { flight: redrawn.clone(), eval_point: redrawn, velocity: velocity.to_vec() })
        }
        BoundaryMode::Periodic => Ok(Enforced {
            flight: position.to_vec(),
            eval_point: map_periodic(position, bounds)?,
            velocity: velocity.to_vec(),
        }),
    }
}

/// Converts the swarm's best flight position into the reported answer.
pub fn finalize_answer(gbest_position: &[f64], bounds: &BoxBounds, mode: BoundaryMode) -> Result<Vec<f64>> {
    check_len(gbest_position, bounds)?;
    match mode {
        BoundaryMode::Periodic => map_periodic(gbest_position, bounds),
        BoundaryMode::Boundary | BoundaryMode::Random => Ok(gbest_position.to_vec()),
    }
}

fn check_len(x: &[f64], bounds: &BoxBounds) -> Result<()> {
    if x.len() != bounds.dim() {
        return Err(Error::InvalidInput(format!("expected {} coordinates, got {}", bounds.dim(), x.len())));
    }
    Ok(())
}
