//! Prints the built-in washer rule table as Markdown.

use mamdani_flc::washer::builtin_definition;

fn main() {
    let def = builtin_definition();
    let vars: Vec<&str> = def
        .inputs
        .iter()
        .chain(&def.outputs)
        .map(|v| v.name.as_str())
        .collect();
    println!("| # | {} |", vars.join(" | "));
    println!("|---|{}", "---|".repeat(vars.len()));
    for (i, rule) in def.rules.iter().enumerate() {
        let terms: Vec<&str> = rule
            .antecedent
            .iter()
            .chain(&rule.consequent)
            .map(|c| c.term.as_str())
            .collect();
        println!("| {} | {} |", i + 1, terms.join(" | "));
    }
}
