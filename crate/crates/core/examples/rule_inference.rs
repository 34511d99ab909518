//! Builds a two-input rule base by hand, fires it and prints the firing
//! degrees and the aggregated output set.

use mamdani_flc::fuzzy::{FuzzifiedInput, MembershipFunction, TNorm, Universe};
use mamdani_flc::inference::{InferenceConfig, LinguisticVariable, Rule, RuleBase};

fn tri(a: f64, b: f64, c: f64) -> MembershipFunction {
    MembershipFunction::triangular(a, b, c).unwrap()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u = Universe::new(0.0, 10.0)?;
    let temp = LinguisticVariable::new("temperature", u)
        .with_term("cold", tri(0.0, 0.0, 5.0))
        .with_term("hot", tri(5.0, 10.0, 10.0))
        .with_term("mild", tri(0.0, 5.0, 10.0));
    let humidity = LinguisticVariable::new("humidity", u)
        .with_term("dry", tri(0.0, 0.0, 10.0))
        .with_term("wet", tri(0.0, 10.0, 10.0));
    let fan = LinguisticVariable::new("fan", u)
        .with_term("slow", tri(0.0, 0.0, 5.0))
        .with_term("medium", tri(0.0, 5.0, 10.0))
        .with_term("fast", tri(5.0, 10.0, 10.0));

    let rules = vec![
        Rule::new(&[("temperature", "cold"), ("humidity", "dry")], &[("fan", "slow")]),
        Rule::new(&[("temperature", "cold"), ("humidity", "wet")], &[("fan", "slow")]),
        Rule::new(&[("temperature", "mild"), ("humidity", "dry")], &[("fan", "slow")]),
        Rule::new(&[("temperature", "mild"), ("humidity", "wet")], &[("fan", "medium")]),
        Rule::new(&[("temperature", "hot"), ("humidity", "dry")], &[("fan", "medium")]),
        Rule::new(&[("temperature", "hot"), ("humidity", "wet")], &[("fan", "fast")]),
    ];
    let rb = RuleBase::new(vec![temp, humidity], vec![fan], rules)?;

    let inputs = [
        FuzzifiedInput::Singleton { x0: 7.0 },
        FuzzifiedInput::TriangularNumber { x0: 6.0, halfwidth: 1.5 },
    ];
    for tnorm in [TNorm::Min, TNorm::Product] {
        let inference = rb.infer(&inputs, &InferenceConfig::with_tnorm(tnorm, 11))?;
        println!("{} t-norm", tnorm.keyword());
        for (rule, degree) in rb.rules().iter().zip(&inference.firing) {
            let cond: Vec<String> = rule.antecedent.iter().map(|c| format!("{} is {}", c.variable, c.term)).collect();
            println!("  {:<40} fires {:.3}", cond.join(" and "), degree.value());
        }
        let fan = inference.output("fan").unwrap();
        for (w, mu) in fan.samples() {
            println!("  fan {w:>4}: {:<20} {:.3}", "#".repeat((mu.value() * 20.0).round() as usize), mu.value());
        }
    }
    Ok(())
}
