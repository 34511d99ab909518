use std::fmt;

use crate::error::{Error, Result};

/// A membership grade in the closed unit interval.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Degree(f64);

impl Degree {
    pub const ZERO: Degree = Degree(0.0);
    pub const ONE: Degree = Degree(1.0);

    /// Checked constructor; rejects NaN and anything outside `[0, 1]`.
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Degree(value + 0.0))
        } else {
            Err(Error::InvalidDegree(value))
        }
    }

    /// Clamps into `[0, 1]`. NaN and negative zero map to `+0.0`.
    pub fn saturating(value: f64) -> Self {
        if value.is_nan() || value <= 0.0 {
            Degree(0.0)
        } else {
            Degree(value.min(1.0))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn min(self, other: Degree) -> Degree {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn max(self, other: Degree) -> Degree {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<f64> for Degree {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Degree::new(value)
    }
}

impl From<Degree> for f64 {
    fn from(d: Degree) -> f64 {
        d.0
    }
}

/// Fuzzy intersection operators.
///
/// Both satisfy the boundary, monotonicity, commutativity and
/// associativity axioms of a t-norm. `Min` is the engine default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TNorm {
    #[default]
    Min,
    Product,
}

impl TNorm {
    #[inline]
    pub fn apply(self, a: Degree, b: Degree) -> Degree {
        match self {
            TNorm::Min => a.min(b),
            // a, b in [0, 1] keeps the product in [0, 1]
            TNorm::Product => Degree(a.0 * b.0),
        }
    }

    /// n-ary form by associativity; the empty fold is the identity `1`.
    pub fn fold<I>(self, degrees: I) -> Degree
    where
        I: IntoIterator<Item = Degree>,
    {
        degrees
            .into_iter()
            .fold(Degree::ONE, |acc, d| self.apply(acc, d))
    }

    pub fn keyword(self) -> &'static str {
        match self {
            TNorm::Min => "min",
            TNorm::Product => "product",
        }
    }
}

/// Max s-norm: the union used to aggregate disjunctive rules.
#[inline]
pub fn snorm_max(a: Degree, b: Degree) -> Degree {
    a.max(b)
}
