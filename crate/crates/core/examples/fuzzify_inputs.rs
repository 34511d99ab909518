//! Turns crisp measurements into fuzzy inputs and matches them against a
//! term, with singleton and triangular fuzzification.

use mamdani_flc::fuzzy::{fuzzify, Fuzzification, MembershipFunction, Universe};
use mamdani_flc::inference::{match_degree, LinguisticVariable};

fn main() {
    let universe = Universe::new(0.0, 10.0).unwrap();
    let var = LinguisticVariable::new("x", universe)
        .with_term("high", MembershipFunction::triangular(6.0, 8.0, 10.0).unwrap());

    let modes = [
        ("singleton", Fuzzification::Singleton),
        ("triangular h=1", Fuzzification::triangular(1.0).unwrap()),
        ("triangular h=2.5", Fuzzification::triangular(2.5).unwrap()),
    ];
    for x0 in [5.0, 7.0, 12.0] {
        for (label, mode) in modes {
            let input = fuzzify(x0, &universe, mode).unwrap();
            let degree = match_degree(&var, 0, &input, 1001);
            println!("x0 = {x0:>4} ({label:<16}) centre {:>4} -> match with 'high' {:.4}", input.x0(), degree.value());
        }
    }
}
