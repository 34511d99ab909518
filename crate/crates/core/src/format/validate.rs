use std::collections::{HashMap, HashSet};

use crate::error::Error;
use crate::fuzzy::{Fuzzification, FuzzifiedInput};
use crate::inference::{LinguisticVariable, Rule};

use super::serialize::render;
use super::{is_identifier, ControllerDefinition, Diagnostic, Layout, VariableLines, MAX_RESOLUTION};

/// Most "no rule matches" warnings reported individually.
const MAX_UNMATCHED_REPORTS: usize = 10;
/// Peak combinations beyond this count are not enumerated.
const MAX_PEAK_COMBINATIONS: usize = 100_000;

/// Checks a definition and returns every Error and Warning, sorted by line.
/// Line numbers refer to the canonical serialized form of `def`.
pub fn validate(def: &ControllerDefinition) -> Vec<Diagnostic> {
    let (_, layout) = render(def);
    check_definition(def, &layout, &Suppressed::default())
}

/// Items the parser already rejected; references to them are not reported
/// a second time.
#[derive(Debug, Default)]
pub(crate) struct Suppressed {
    pub variables: HashSet<String>,
    pub terms: HashSet<(String, String)>,
    /// Variables that lost a term to a parse error; coverage is not checked.
    pub incomplete: HashSet<String>,
    pub broken_rules: bool,
    pub broken_inputs: bool,
    pub broken_outputs: bool,
}

struct Checker<'a> {
    def: &'a ControllerDefinition,
    layout: &'a Layout,
    suppressed: &'a Suppressed,
    out: Vec<Diagnostic>,
}

pub(crate) fn check_definition(
    def: &ControllerDefinition,
    layout: &Layout,
    suppressed: &Suppressed,
) -> Vec<Diagnostic> {
    let mut checker = Checker {
        def,
        layout,
        suppressed,
        out: Vec::new(),
    };
    checker.header();
    checker.variables();
    checker.rules();
    if !checker.out.iter().any(Diagnostic::is_error) {
        checker.unused_terms();
        checker.unmatched_combinations();
    }
    let mut out = checker.out;
    out.sort();
    out.dedup();
    out
}

fn line_of(lines: &[VariableLines], i: usize) -> (usize, &[usize]) {
    lines
        .get(i)
        .map(|v| (v.line, v.terms.as_slice()))
        .unwrap_or((1, &[]))
}

impl Checker<'_> {
    fn error(&mut self, line: usize, message: impl Into<String>) {
        self.out.push(Diagnostic::error(line, message));
    }

    fn warning(&mut self, line: usize, message: impl Into<String>) {
        self.out.push(Diagnostic::warning(line, message));
    }

    fn rule_line(&self, j: usize) -> usize {
        self.layout.rules.get(j).copied().unwrap_or(self.layout.last)
    }

    fn header(&mut self) {
        let def = self.def;
        if !def.name.is_empty() && !is_identifier(&def.name) {
            self.error(
                self.layout.controller,
                format!("invalid identifier '{}'", def.name),
            );
        }
        let s = &def.settings;
        if !(2..=MAX_RESOLUTION).contains(&s.resolution) {
            self.error(
                self.layout.settings,
                format!("resolution must be between 2 and {MAX_RESOLUTION}"),
            );
        }
        if let Fuzzification::Triangular(h) = s.fuzzification {
            if let Err(e) = Fuzzification::triangular(h) {
                self.error(self.layout.settings, e.to_string());
            }
        }
        for (name, &h) in &def.halfwidths {
            let Some(i) = def.inputs.iter().position(|v| &v.name == name) else {
                self.error(
                    self.layout.settings,
                    format!("halfwidth given for unknown input '{name}'"),
                );
                continue;
            };
            let line = line_of(&self.layout.inputs, i).0;
            if let Err(e) = Fuzzification::triangular(h) {
                self.error(line, e.to_string());
            } else if s.fuzzification == Fuzzification::Singleton {
                self.warning(
                    line,
                    format!("halfwidth of '{name}' has no effect with singleton fuzzification"),
                );
            }
        }
    }

    fn variables(&mut self) {
        let def = self.def;
        if def.inputs.is_empty() && !self.suppressed.broken_inputs {
            self.error(self.layout.last, "no input variables declared");
        }
        if def.outputs.is_empty() && !self.suppressed.broken_outputs {
            self.error(self.layout.last, "no output variables declared");
        }
        let mut seen: HashMap<&str, usize> = HashMap::new();
        let layout = self.layout;
        let all = def
            .inputs
            .iter()
            .enumerate()
            .map(|(i, v)| (v, line_of(&layout.inputs, i)))
            .chain(
                def.outputs
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v, line_of(&layout.outputs, i))),
            );
        for (var, (line, term_lines)) in all {
            if let Some(first) = seen.insert(var.name.as_str(), line) {
                self.error(
                    line,
                    format!("duplicate variable '{}' (first declared on line {first})", var.name),
                );
            }
            self.variable(var, line, term_lines);
        }
    }

    fn variable(&mut self, var: &LinguisticVariable, line: usize, term_lines: &[usize]) {
        if !is_identifier(&var.name) {
            self.error(line, format!("invalid identifier '{}'", var.name));
        }
        if var.terms.is_empty() {
            if !self.suppressed.incomplete.contains(&var.name) {
                self.error(line, format!("variable '{}' has no terms", var.name));
            }
            return;
        }
        let mut seen: HashMap<&str, usize> = HashMap::new();
        for (k, term) in var.terms.iter().enumerate() {
            let tline = term_lines.get(k).copied().unwrap_or(line);
            if !is_identifier(&term.name) {
                self.error(tline, format!("invalid identifier '{}'", term.name));
            }
            if let Some(first) = seen.insert(term.name.as_str(), tline) {
                self.error(
                    tline,
                    format!(
                        "duplicate term '{}' on '{}' (first declared on line {first})",
                        term.name, var.name
                    ),
                );
            }
            if !term.mf.intersects(&var.universe) {
                self.error(
                    tline,
                    format!("term '{}' lies outside the range of '{}'", term.name, var.name),
                );
            }
        }
        if self.suppressed.incomplete.contains(&var.name) {
            return;
        }
        let resolution = self.def.settings.resolution.clamp(2, MAX_RESOLUTION);
        if let Some(x) = var.coverage_gap(resolution) {
            self.error(
                line,
                format!(
                    "coverage gap: no term of '{}' is positive at x = {x}",
                    var.name
                ),
            );
        }
    }

    fn rules(&mut self) {
        let def = self.def;
        if def.rules.is_empty() && !self.suppressed.broken_rules {
            self.error(self.layout.last, "no rules defined");
        }
        // (term index per input, output) -> (rule index, term)
        let mut assigned: HashMap<(Vec<usize>, usize), (usize, usize)> = HashMap::new();
        for (j, rule) in def.rules.iter().enumerate() {
            let line = self.rule_line(j);
            let Some((antecedent, consequent)) = self.rule(rule, line) else {
                continue;
            };
            for (out, term) in consequent {
                match assigned.get(&(antecedent.clone(), out)) {
                    Some(&(k, t)) if t != term => {
                        let first = self.rule_line(k);
                        self.error(
                            line,
                            format!(
                                "conflicting rules: same condition as line {first} but a different term for '{}'",
                                def.outputs[out].name
                            ),
                        );
                    }
                    Some(_) => {}
                    None => {
                        assigned.insert((antecedent.clone(), out), (j, term));
                    }
                }
            }
        }
    }

    /// Resolves one rule; `None` when anything failed to resolve.
    #[allow(clippy::type_complexity)]
    fn rule(&mut self, rule: &Rule, line: usize) -> Option<(Vec<usize>, Vec<(usize, usize)>)> {
        let def = self.def;
        let mut ok = true;
        let mut antecedent: Vec<Option<usize>> = vec![None; def.inputs.len()];
        for clause in &rule.antecedent {
            if let Some(i) = def.inputs.iter().position(|v| v.name == clause.variable) {
                match self.term(&def.inputs[i], &clause.term, line) {
                    Some(t) => {
                        if antecedent[i].replace(t).is_some() {
                            ok = false;
                            self.error(
                                line,
                                format!("input '{}' appears twice in the condition", clause.variable),
                            );
                        }
                    }
                    None => ok = false,
                }
            } else {
                ok = false;
                if def.outputs.iter().any(|v| v.name == clause.variable) {
                    self.error(
                        line,
                        format!("'{}' is an output and cannot appear in a condition", clause.variable),
                    );
                } else if !self.suppressed.variables.contains(&clause.variable) {
                    self.error(line, Error::UnknownVariable(clause.variable.clone()).to_string());
                }
            }
        }
        let constrains_broken = rule
            .antecedent
            .iter()
            .any(|c| self.suppressed.variables.contains(&c.variable));
        for (slot, var) in antecedent.iter().zip(&def.inputs) {
            let named = rule.antecedent.iter().any(|c| c.variable == var.name);
            if slot.is_none() && !named {
                ok = false;
                if !constrains_broken {
                    self.error(line, format!("rule does not constrain input '{}'", var.name));
                }
            }
        }

        if rule.consequent.is_empty() {
            ok = false;
            self.error(line, "rule assigns no output");
        }
        let mut consequent = Vec::with_capacity(rule.consequent.len());
        for clause in &rule.consequent {
            if let Some(o) = def.outputs.iter().position(|v| v.name == clause.variable) {
                if consequent.iter().any(|(p, _)| *p == o) {
                    ok = false;
                    self.error(
                        line,
                        format!("output '{}' is assigned twice", clause.variable),
                    );
                    continue;
                }
                match self.term(&def.outputs[o], &clause.term, line) {
                    Some(t) => consequent.push((o, t)),
                    None => ok = false,
                }
            } else {
                ok = false;
                if def.inputs.iter().any(|v| v.name == clause.variable) {
                    self.error(
                        line,
                        format!("'{}' is an input and cannot be assigned", clause.variable),
                    );
                } else if !self.suppressed.variables.contains(&clause.variable) {
                    self.error(line, Error::UnknownVariable(clause.variable.clone()).to_string());
                }
            }
        }
        if !ok {
            return None;
        }
        let antecedent = antecedent.into_iter().collect::<Option<Vec<_>>>()?;
        Some((antecedent, consequent))
    }

    fn term(&mut self, var: &LinguisticVariable, term: &str, line: usize) -> Option<usize> {
        let found = var.term_index(term);
        if found.is_none()
            && !self
                .suppressed
                .terms
                .contains(&(var.name.clone(), term.to_string()))
        {
            self.error(
                line,
                Error::UnknownTerm {
                    variable: var.name.clone(),
                    term: term.to_string(),
                }
                .to_string(),
            );
        }
        found
    }

    fn unused_terms(&mut self) {
        let def = self.def;
        if def.rules.is_empty() {
            return;
        }
        let used: HashSet<(&str, &str)> = def
            .rules
            .iter()
            .flat_map(|r| r.antecedent.iter().chain(&r.consequent))
            .map(|c| (c.variable.as_str(), c.term.as_str()))
            .collect();
        let layout = self.layout;
        let vars = def
            .inputs
            .iter()
            .zip(&layout.inputs)
            .chain(def.outputs.iter().zip(&layout.outputs));
        for (var, lines) in vars {
            for (term, &line) in var.terms.iter().zip(&lines.terms) {
                if !used.contains(&(var.name.as_str(), term.name.as_str())) {
                    self.warning(
                        line,
                        format!("term '{}' of '{}' is not used by any rule", term.name, var.name),
                    );
                }
            }
        }
    }

    /// Warns about combinations of input term peaks that fire no rule.
    fn unmatched_combinations(&mut self) {
        let Ok(rb) = self.def.rule_base() else {
            return;
        };
        let sizes: Vec<usize> = rb.inputs().iter().map(|v| v.terms.len()).collect();
        let total = sizes
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .unwrap_or(usize::MAX);
        if total == 0 || total > MAX_PEAK_COMBINATIONS {
            return;
        }
        let config = self.def.inference_config();
        let line = self.layout.rules.last().copied().unwrap_or(self.layout.last);
        let mut index = vec![0usize; sizes.len()];
        let mut unmatched = 0usize;
        for _ in 0..total {
            let inputs: Vec<FuzzifiedInput> = rb
                .inputs()
                .iter()
                .zip(&index)
                .map(|(var, &t)| FuzzifiedInput::Singleton {
                    x0: var.universe.clamp(var.terms[t].mf.peak()),
                })
                .collect();
            let fires = rb
                .firing_degrees(&inputs, &config)
                .map(|f| f.iter().any(|d| !d.is_zero()))
                .unwrap_or(true);
            if !fires {
                unmatched += 1;
                if unmatched <= MAX_UNMATCHED_REPORTS {
                    let combo = rb
                        .inputs()
                        .iter()
                        .zip(&index)
                        .map(|(v, &t)| format!("{} is {}", v.name, v.terms[t].name))
                        .collect::<Vec<_>>()
                        .join(" and ");
                    self.warning(line, format!("no rule fires for {combo}"));
                }
            }
            // odometer increment, last input fastest
            for k in (0..index.len()).rev() {
                index[k] += 1;
                if index[k] < sizes[k] {
                    break;
                }
                index[k] = 0;
            }
        }
        if unmatched > MAX_UNMATCHED_REPORTS {
            self.warning(
                line,
                format!(
                    "{} more input combinations fire no rule",
                    unmatched - MAX_UNMATCHED_REPORTS
                ),
            );
        }
    }
}
