//! Defuzzifies a two-lobe output set with the trapezoid sub-area centroid
//! and compares it with a plain Riemann sum as the sampling gets finer.

use mamdani_flc::defuzz::{centroid_discrete, centroid_subareas, sub_areas};
use mamdani_flc::fuzzy::{Degree, MembershipFunction, Universe};
use mamdani_flc::inference::DiscretizedFuzzySet;

fn main() {
    let left = MembershipFunction::triangular(0.0, 2.0, 4.0).unwrap();
    let right = MembershipFunction::triangular(6.0, 8.0, 10.0).unwrap();
    let clip = |h: f64| Degree::new(h).unwrap();
    let curve = |w: f64| left.eval(w).min(clip(0.3)).max(right.eval(w).min(clip(0.9)));
    let universe = Universe::new(0.0, 10.0).unwrap();

    // lobe areas 1.02 around 2 and 1.98 around 8: (2.04 + 15.84) / 3 = 5.96
    println!("{:>6} {:>12} {:>12} {:>10}", "N", "sub-area", "riemann", "segments");
    for n in [11, 51, 101, 201, 401, 2001] {
        let set = DiscretizedFuzzySet::sample(universe, n, curve).unwrap();
        println!(
            "{n:>6} {:>12.6} {:>12.6} {:>10}",
            centroid_subareas(&set).unwrap(),
            centroid_discrete(&set).unwrap(),
            sub_areas(&set).len()
        );
    }
}
