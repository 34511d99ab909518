use crate::error::{Error, Result};

use super::{Degree, MembershipFunction, Universe};

/// How a crisp measurement is turned into a fuzzy number.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Fuzzification {
    /// No measurement uncertainty.
    #[default]
    Singleton,
    /// Symmetric triangular uncertainty of the given halfwidth.
    Triangular(f64),
}

impl Fuzzification {
    pub fn triangular(halfwidth: f64) -> Result<Self> {
        if halfwidth.is_finite() && halfwidth > 0.0 {
            Ok(Fuzzification::Triangular(halfwidth))
        } else {
            Err(Error::InvalidHalfwidth(halfwidth))
        }
    }
}

/// A fuzzy number centred on a (clamped) measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FuzzifiedInput {
    Singleton { x0: f64 },
    TriangularNumber { x0: f64, halfwidth: f64 },
}

impl FuzzifiedInput {
    pub fn x0(&self) -> f64 {
        match *self {
            FuzzifiedInput::Singleton { x0 } | FuzzifiedInput::TriangularNumber { x0, .. } => x0,
        }
    }

    pub fn is_singleton(&self) -> bool {
        matches!(self, FuzzifiedInput::Singleton { .. })
    }

    pub fn membership(&self, x: f64) -> Degree {
        match *self {
            FuzzifiedInput::Singleton { x0 } => {
                if x == x0 {
                    Degree::ONE
                } else {
                    Degree::ZERO
                }
            }
            FuzzifiedInput::TriangularNumber { x0, halfwidth } => {
                triangle(x0, halfwidth).eval(x)
            }
        }
    }
}

fn triangle(x0: f64, halfwidth: f64) -> MembershipFunction {
    MembershipFunction::triangular(x0 - halfwidth, x0, x0 + halfwidth)
        .expect("finite positive halfwidth around a finite centre")
}

/// Fuzzifies `x0` over `universe`. Out-of-range measurements are clamped to
/// the nearest bound first.
pub fn fuzzify(x0: f64, universe: &Universe, mode: Fuzzification) -> Result<FuzzifiedInput> {
    if !x0.is_finite() {
        return Err(Error::InvalidMeasurement {
            variable: String::new(),
            value: x0,
        });
    }
    let x0 = universe.clamp(x0);
    match mode {
        Fuzzification::Singleton => Ok(FuzzifiedInput::Singleton { x0 }),
        Fuzzification::Triangular(halfwidth) => {
            let halfwidth = Fuzzification::triangular(halfwidth).map(|_| halfwidth)?;
            // a halfwidth far below the ulp of x0 would collapse the triangle
            if x0 - halfwidth == x0 + halfwidth {
                return Ok(FuzzifiedInput::Singleton { x0 });
            }
            Ok(FuzzifiedInput::TriangularNumber { x0, halfwidth })
        }
    }
}
