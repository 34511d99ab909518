//! Centroid defuzzification.
//!
//! [`centroid_subareas`] splits the aggregated curve into one trapezoid per
//! pair of adjacent samples and returns `Σ A_i f_i / Σ A_i`, with `A_i` the
//! trapezoid area and `f_i` its exact centroid abscissa. The result is exact
//! for curves that are linear between samples. [`centroid_discrete`] is the
//! plain Riemann form `Σ μ_k w_k / Σ μ_k`, kept as an independent check.

use crate::error::{Error, Result};
use crate::inference::DiscretizedFuzzySet;

/// One region of the area under a sampled membership curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubArea {
    pub area: f64,
    pub center: f64,
}

impl SubArea {
    /// The trapezoid under the segment `(w1, mu1)`–`(w2, mu2)`, or `None`
    /// when both ends are zero.
    pub fn trapezoid(w1: f64, mu1: f64, w2: f64, mu2: f64) -> Option<SubArea> {
        let height = mu1 + mu2;
        if height <= 0.0 {
            return None;
        }
        let area = 0.5 * (w2 - w1) * height;
        let center = (w1 * (2.0 * mu1 + mu2) + w2 * (mu1 + 2.0 * mu2)) / (3.0 * height);
        // rounding can push the weighted mean a hair outside the segment
        Some(SubArea {
            area,
            center: center.clamp(w1, w2),
        })
    }
}

/// The `K = N - 1` trapezoidal sub-areas of `set`, skipping all-zero ones.
pub fn sub_areas(set: &DiscretizedFuzzySet) -> Vec<SubArea> {
    let w = set.positions();
    let mu = set.memberships();
    (1..w.len())
        .filter_map(|i| SubArea::trapezoid(w[i - 1], mu[i - 1].value(), w[i], mu[i].value()))
        .collect()
}

fn empty(set: &DiscretizedFuzzySet) -> Error {
    Error::EmptyOutput {
        variable: set.variable().to_string(),
    }
}

/// Crisp output `Σ A_i f_i / Σ A_i` over the trapezoidal sub-areas.
pub fn centroid_subareas(set: &DiscretizedFuzzySet) -> Result<f64> {
    let (moment, area) = sub_areas(set)
        .iter()
        .fold((0.0, 0.0), |(m, a), s| (m + s.area * s.center, a + s.area));
    if area <= 0.0 {
        return Err(empty(set));
    }
    Ok(clamp_to(set, moment / area))
}

/// Riemann-sum centroid `Σ μ_k w_k / Σ μ_k`.
pub fn centroid_discrete(set: &DiscretizedFuzzySet) -> Result<f64> {
    let (moment, mass) = set
        .samples()
        .fold((0.0, 0.0), |(m, a), (w, mu)| (m + mu.value() * w, a + mu.value()));
    if mass <= 0.0 {
        return Err(empty(set));
    }
    Ok(clamp_to(set, moment / mass))
}

fn clamp_to(set: &DiscretizedFuzzySet, x: f64) -> f64 {
    let u = set.universe();
    x.clamp(u.lo(), u.hi())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::{Degree, MembershipFunction, Universe};

    fn tri(a: f64, b: f64, c: f64) -> MembershipFunction {
        MembershipFunction::triangular(a, b, c).unwrap()
    }

    fn u(lo: f64, hi: f64) -> Universe {
        Universe::new(lo, hi).unwrap()
    }

    #[test]
    fn symmetric_triangle_centroid_is_apex() {
        let set = DiscretizedFuzzySet::sample(u(0.0, 10.0), 201, |w| tri(0.0, 5.0, 10.0).eval(w))
            .unwrap();
        assert!((centroid_subareas(&set).unwrap() - 5.0).abs() < 1e-9);
        assert!((centroid_discrete(&set).unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn clipped_symmetric_triangle() {
        let set = DiscretizedFuzzySet::sample(u(0.0, 10.0), 201, |w| {
            tri(0.0, 5.0, 10.0).eval(w).min(Degree::new(0.5).unwrap())
        })
        .unwrap();
        assert!((centroid_subareas(&set).unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn right_triangle_analytic_centroid() {
        let set = DiscretizedFuzzySet::sample(u(0.0, 10.0), 601, |w| {
            Degree::saturating(if w <= 6.0 { 1.0 - w / 6.0 } else { 0.0 })
        })
        .unwrap();
        assert!((centroid_subareas(&set).unwrap() - 2.0).abs() < 1e-6);
    }

    #[test]
    fn constant_set_and_single_spike() {
        let flat = DiscretizedFuzzySet::sample(u(0.0, 10.0), 11, |_| Degree::ONE).unwrap();
        assert_eq!(centroid_discrete(&flat).unwrap(), 5.0);
        assert_eq!(centroid_subareas(&flat).unwrap(), 5.0);

        let spike = DiscretizedFuzzySet::sample(u(0.0, 10.0), 11, |w| {
            if w == 7.0 {
                Degree::ONE
            } else {
                Degree::ZERO
            }
        })
        .unwrap();
        assert_eq!(centroid_discrete(&spike).unwrap(), 7.0);
        assert!((centroid_subareas(&spike).unwrap() - 7.0).abs() < 1e-12);
    }

    #[test]
    fn all_zero_reports_the_variable() {
        let set = DiscretizedFuzzySet::sample(u(0.0, 1.0), 5, |_| Degree::ZERO)
            .unwrap()
            .named("wash_time");
        let err = centroid_subareas(&set).unwrap_err();
        assert_eq!(
            err,
            Error::EmptyOutput {
                variable: "wash_time".into()
            }
        );
        assert!(centroid_discrete(&set).is_err());
    }

    #[test]
    fn trapezoid_centroid_closed_form() {
        // rectangle
        let s = SubArea::trapezoid(0.0, 1.0, 2.0, 1.0).unwrap();
        assert_eq!((s.area, s.center), (2.0, 1.0));
        // rising triangle: centroid at 2/3 of the base
        let s = SubArea::trapezoid(0.0, 0.0, 3.0, 1.0).unwrap();
        assert_eq!(s.area, 1.5);
        assert!((s.center - 2.0).abs() < 1e-15);
        assert!(SubArea::trapezoid(0.0, 0.0, 1.0, 0.0).is_none());
    }
}
