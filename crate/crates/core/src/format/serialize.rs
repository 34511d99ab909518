use std::fmt::Write;

use crate::fuzzy::{Fuzzification, Shape};
use crate::inference::{Clause, LinguisticVariable};

use super::{ControllerDefinition, Layout, VariableLines};

/// Renders `def` in canonical form. `parse(&serialize(d))` reproduces `d`.
pub fn serialize(def: &ControllerDefinition) -> String {
    render(def).0
}

struct Lines {
    text: String,
    count: usize,
}

impl Lines {
    fn push(&mut self, line: &str) -> usize {
        self.text.push_str(line);
        self.text.push('\n');
        self.count += 1;
        self.count
    }
}

pub(crate) fn render(def: &ControllerDefinition) -> (String, Layout) {
    let mut out = Lines {
        text: String::new(),
        count: 0,
    };
    let mut layout = Layout {
        controller: out.push(&format!("controller {}", def.name)),
        ..Layout::default()
    };

    let s = &def.settings;
    let fuzz = match s.fuzzification {
        Fuzzification::Singleton => "singleton".to_string(),
        Fuzzification::Triangular(h) => format!("triangular {h}"),
    };
    layout.settings = out.push(&format!(
        "settings tnorm {} resolution {} fuzzification {fuzz}",
        s.tnorm.keyword(),
        s.resolution
    ));

    for var in &def.inputs {
        out.push("");
        let halfwidth = def.halfwidths.get(&var.name).copied();
        layout.inputs.push(variable(&mut out, "input", var, halfwidth));
    }
    for var in &def.outputs {
        out.push("");
        layout.outputs.push(variable(&mut out, "output", var, None));
    }
    if !def.rules.is_empty() {
        out.push("");
    }
    for rule in &def.rules {
        let mut line = String::from("rule if ");
        clauses(&mut line, &rule.antecedent, " and ");
        line.push_str(" then ");
        clauses(&mut line, &rule.consequent, ", ");
        layout.rules.push(out.push(&line));
    }
    layout.last = out.count.max(1);
    (out.text, layout)
}

fn variable(
    out: &mut Lines,
    keyword: &str,
    var: &LinguisticVariable,
    halfwidth: Option<f64>,
) -> VariableLines {
    let mut head = format!("{keyword} {} range {} {}", var.name, var.universe.lo(), var.universe.hi());
    if let Some(h) = halfwidth {
        let _ = write!(head, " halfwidth {h}");
    }
    let line = out.push(&head);
    let terms = var
        .terms
        .iter()
        .map(|t| {
            let shape = match t.mf.shape() {
                Shape::Triangular { a, b, c } => format!("tri {a} {b} {c}"),
                Shape::Trapezoidal { a, b, c, d } => format!("trap {a} {b} {c} {d}"),
            };
            out.push(&format!("  term {} {shape}", t.name))
        })
        .collect();
    VariableLines { line, terms }
}

fn clauses(line: &mut String, clauses: &[Clause], separator: &str) {
    for (i, c) in clauses.iter().enumerate() {
        if i > 0 {
            line.push_str(separator);
        }
        let _ = write!(line, "{} is {}", c.variable, c.term);
    }
}
