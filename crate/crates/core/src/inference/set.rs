use crate::error::{Error, Result};
use crate::fuzzy::{Degree, Universe};

/// A membership curve sampled at strictly increasing positions spanning a
/// universe, first sample at `lo`, last at `hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedFuzzySet {
    variable: String,
    universe: Universe,
    positions: Vec<f64>,
    memberships: Vec<Degree>,
}

impl DiscretizedFuzzySet {
    /// Samples `f` at `n` uniform points over `universe`.
    pub fn sample<F>(universe: Universe, n: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Degree,
    {
        if n < 2 {
            return Err(Error::Configuration(format!(
                "resolution must be at least 2, got {n}"
            )));
        }
        let positions = universe.grid(n);
        let memberships = positions.iter().map(|&w| f(w)).collect();
        Ok(DiscretizedFuzzySet {
            variable: String::new(),
            universe,
            positions,
            memberships,
        })
    }

    /// Builds a set from explicit samples.
    pub fn from_samples(positions: Vec<f64>, memberships: Vec<Degree>) -> Result<Self> {
        if positions.len() < 2 || positions.len() != memberships.len() {
            return Err(Error::Configuration(
                "need at least two samples with one membership per position".into(),
            ));
        }
        if positions
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
        {
            return Err(Error::Configuration(
                "sample positions must be strictly increasing".into(),
            ));
        }
        let universe = Universe::new(positions[0], positions[positions.len() - 1])?;
        Ok(DiscretizedFuzzySet {
            variable: String::new(),
            universe,
            positions,
            memberships,
        })
    }

    pub(crate) fn from_parts(
        variable: &str,
        universe: Universe,
        positions: Vec<f64>,
        memberships: Vec<Degree>,
    ) -> Self {
        debug_assert_eq!(positions.len(), memberships.len());
        DiscretizedFuzzySet {
            variable: variable.to_string(),
            universe,
            positions,
            memberships,
        }
    }

    /// Labels the set with the variable it describes.
    pub fn named(mut self, variable: impl Into<String>) -> Self {
        self.variable = variable.into();
        self
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Number of samples, always at least two.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_all_zero(&self) -> bool {
        self.memberships.iter().all(|m| m.is_zero())
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn memberships(&self) -> &[Degree] {
        &self.memberships
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, Degree)> + '_ {
        self.positions
            .iter()
            .copied()
            .zip(self.memberships.iter().copied())
    }

    /// Largest pointwise membership difference against a set with the same
    /// sampling.
    pub fn sup_distance(&self, other: &DiscretizedFuzzySet) -> f64 {
        assert_eq!(self.len(), other.len(), "sets sampled at different resolutions");
        self.memberships
            .iter()
            .zip(&other.memberships)
            .map(|(a, b)| (a.value() - b.value()).abs())
            .fold(0.0, f64::max)
    }
}
