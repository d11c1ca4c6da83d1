use std::f64::consts::FRAC_PI_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quantum::Radians;

/// Orientation of a splitter, recombiner or magnetic field.
///
/// The named axes are shorthands for spherical coordinates: `X` is
/// `(π/2, 0)`, `Y` is `(π/2, π/2)` and `Z` is `(0, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
    Direction { theta: Radians, phi: Radians },
}

impl Axis {
    /// Polar and azimuthal angles of the axis.
    pub fn angles(self) -> (Radians, Radians) {
        match self {
            Axis::X => (FRAC_PI_2, 0.0),
            Axis::Y => (FRAC_PI_2, FRAC_PI_2),
            Axis::Z => (0.0, 0.0),
            Axis::Direction { theta, phi } => (theta, phi),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => f.write_str("x"),
            Axis::Y => f.write_str("y"),
            Axis::Z => f.write_str("z"),
            Axis::Direction { theta, phi } => write!(f, "({theta:?}, {phi:?})"),
        }
    }
}

/// Which output of a splitter a filter keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}
