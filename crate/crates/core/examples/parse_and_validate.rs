//! Parses a controller definition with mistakes in it, prints the
//! diagnostics, then fixes it and evaluates it.

use mamdani_flc::format::{check, serialize};
use mamdani_flc::Controller;

const BROKEN: &str = "\
controller heater
settings tnorm min resolution 101 fuzzification singleton

input temperature range 0 30
  term cold tri 0 0 15
  term warm tri 30 15 0       # breakpoints out of order

output power range 0 100
  term low tri 0 0 100
  term high tri 0 100 100

rule if temperature is cold then power is high
rule if temperature is balmy then power is low
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = check(BROKEN);
    println!("broken definition, {} diagnostics:", report.diagnostics.len());
    for d in &report.diagnostics {
        println!("  {d}");
    }

    let fixed = BROKEN
        .replace("tri 30 15 0       # breakpoints out of order", "tri 0 15 30\n  term hot tri 15 30 30")
        .replace("is balmy", "is warm");
    let report = check(&fixed);
    println!("fixed definition, {} diagnostics:", report.diagnostics.len());
    for d in &report.diagnostics {
        println!("  {d}");
    }
    let def = report.definition.expect("fixed definition parses");
    print!("\ncanonical form:\n{}", serialize(&def));

    let controller = Controller::new(def)?;
    for t in [5.0, 15.0, 25.0] {
        let eval = controller.evaluate(&[t])?;
        let o = &eval.outputs[0];
        println!("temperature {t:>4} -> power {:.2}{}", o.value, if o.degraded { " (no rule fired)" } else { "" });
    }
    Ok(())
}
