use crate::error::{Error, Result};

use super::Degree;

/// A closed interval of discourse `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Universe {
    lo: f64,
    hi: f64,
}

impl Universe {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Universe { lo, hi })
        } else {
            Err(Error::InvalidUniverse { lo, hi })
        }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn span(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        self.lo + 0.5 * self.span()
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.lo..=self.hi).contains(&x)
    }

    pub fn clamp(&self, x: f64) -> f64 {
        x.clamp(self.lo, self.hi)
    }

    /// The `k`-th of `n` uniformly spaced points. Endpoints are exact.
    #[inline]
    pub fn grid_point(&self, k: usize, n: usize) -> f64 {
        debug_assert!(n >= 2 && k < n);
        if k + 1 == n {
            self.hi
        } else {
            self.lo + self.span() * (k as f64) / ((n - 1) as f64)
        }
    }

    /// `n` uniformly spaced points from `lo` to `hi` inclusive.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        (0..n).map(|k| self.grid_point(k, n)).collect()
    }
}

/// Breakpoint layout of a piecewise-linear membership function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    Triangular { a: f64, b: f64, c: f64 },
    Trapezoidal { a: f64, b: f64, c: f64, d: f64 },
}

/// A validated triangular or trapezoidal membership function.
///
/// Evaluation is total over `f64`: it never yields NaN and never leaves
/// `[0, 1]`. A vertical edge (`a == b` or `c == d`) evaluates to 1 on the
/// edge itself, which is how shoulder terms at the universe bounds are
/// written.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipFunction {
    shape: Shape,
}

impl MembershipFunction {
    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self> {
        check_breakpoints(&[a, b, c])?;
        Ok(MembershipFunction {
            shape: Shape::Triangular { a, b, c },
        })
    }

    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        check_breakpoints(&[a, b, c, d])?;
        Ok(MembershipFunction {
            shape: Shape::Trapezoidal { a, b, c, d },
        })
    }

    pub fn from_shape(shape: Shape) -> Result<Self> {
        match shape {
            Shape::Triangular { a, b, c } => Self::triangular(a, b, c),
            Shape::Trapezoidal { a, b, c, d } => Self::trapezoidal(a, b, c, d),
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// `(a, b, c, d)` with a triangle viewed as a trapezoid whose plateau is a point.
    #[inline]
    fn corners(&self) -> (f64, f64, f64, f64) {
        match self.shape {
            Shape::Triangular { a, b, c } => (a, b, b, c),
            Shape::Trapezoidal { a, b, c, d } => (a, b, c, d),
        }
    }

    pub fn eval(&self, x: f64) -> Degree {
        let (a, b, c, d) = self.corners();
        // NaN fails every comparison and falls through to zero
        let mu = if x >= b && x <= c {
            1.0
        } else if x >= a && x < b {
            (x - a) / (b - a)
        } else if x > c && x <= d {
            (d - x) / (d - c)
        } else {
            0.0
        };
        Degree::saturating(mu)
    }

    /// Closed support `[a, c]` (triangle) or `[a, d]` (trapezoid).
    pub fn support(&self) -> (f64, f64) {
        let (a, _, _, d) = self.corners();
        (a, d)
    }

    /// Plateau where the membership is exactly 1.
    pub fn core(&self) -> (f64, f64) {
        let (_, b, c, _) = self.corners();
        (b, c)
    }

    /// A representative peak location: the apex, or the middle of the plateau.
    pub fn peak(&self) -> f64 {
        let (_, b, c, _) = self.corners();
        b + 0.5 * (c - b)
    }

    /// Steepest ramp slope, `1 / (shortest positive ramp width)`. Zero for a
    /// rectangle with two vertical edges.
    pub fn max_slope(&self) -> f64 {
        let (a, b, c, d) = self.corners();
        [b - a, d - c]
            .into_iter()
            .filter(|w| *w > 0.0)
            .map(|w| 1.0 / w)
            .fold(0.0, f64::max)
    }

    pub fn intersects(&self, universe: &Universe) -> bool {
        let (lo, hi) = self.support();
        lo <= universe.hi() && hi >= universe.lo()
    }
}

fn check_breakpoints(points: &[f64]) -> Result<()> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFiniteBreakpoint);
    }
    if points.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BreakpointsNotNondecreasing);
    }
    if points[0] == points[points.len() - 1] {
        return Err(Error::ZeroWidthSupport);
    }
    Ok(())
}
