use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

use super::LinguisticVariable;

/// `<variable> is <term>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    pub variable: String,
    pub term: String,
}

impl Clause {
    pub fn new(variable: impl Into<String>, term: impl Into<String>) -> Self {
        Clause {
            variable: variable.into(),
            term: term.into(),
        }
    }
}

/// A canonical conjunctive rule: every input is constrained, one or more
/// outputs are assigned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub antecedent: Vec<Clause>,
    pub consequent: Vec<Clause>,
}

impl Rule {
    pub fn new(antecedent: &[(&str, &str)], consequent: &[(&str, &str)]) -> Self {
        let clauses = |pairs: &[(&str, &str)]| {
            pairs
                .iter()
                .map(|(v, t)| Clause::new(*v, *t))
                .collect::<Vec<_>>()
        };
        Rule {
            antecedent: clauses(antecedent),
            consequent: clauses(consequent),
        }
    }
}

/// Name-resolved form of a rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CompiledRule {
    /// Term index per input, aligned with `RuleBase::inputs`.
    pub antecedent: Vec<usize>,
    /// `(output index, term index)` pairs.
    pub consequent: Vec<(usize, usize)>,
}

/// A validated, name-resolved rule base. Immutable once built.
#[derive(Debug, Clone)]
pub struct RuleBase {
    inputs: Vec<LinguisticVariable>,
    outputs: Vec<LinguisticVariable>,
    rules: Vec<Rule>,
    pub(crate) compiled: Vec<CompiledRule>,
}

impl RuleBase {
    pub fn new(
        inputs: Vec<LinguisticVariable>,
        outputs: Vec<LinguisticVariable>,
        rules: Vec<Rule>,
    ) -> Result<Self> {
        if inputs.is_empty() {
            return Err(Error::Definition("no input variables".into()));
        }
        if outputs.is_empty() {
            return Err(Error::Definition("no output variables".into()));
        }
        if rules.is_empty() {
            return Err(Error::Definition("rule base has no rules".into()));
        }
        let mut names = HashSet::new();
        for var in inputs.iter().chain(&outputs) {
            if !names.insert(var.name.as_str()) {
                return Err(Error::Definition(format!(
                    "duplicate variable '{}'",
                    var.name
                )));
            }
            check_terms(var)?;
        }

        let compiled = rules
            .iter()
            .map(|r| compile(r, &inputs, &outputs))
            .collect::<Result<Vec<_>>>()?;

        if let Some((j, k, out)) = find_conflict(&compiled) {
            return Err(Error::Definition(format!(
                "rules {} and {} share an antecedent but assign different terms to '{}'",
                j + 1,
                k + 1,
                outputs[out].name
            )));
        }

        Ok(RuleBase {
            inputs,
            outputs,
            rules,
            compiled,
        })
    }

    pub fn inputs(&self) -> &[LinguisticVariable] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[LinguisticVariable] {
        &self.outputs
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn input_index(&self, name: &str) -> Option<usize> {
        self.inputs.iter().position(|v| v.name == name)
    }

    pub fn output_index(&self, name: &str) -> Option<usize> {
        self.outputs.iter().position(|v| v.name == name)
    }

    /// Reorders named per-input values into declaration order.
    pub fn positional<T: Copy>(&self, named: &[(&str, T)]) -> Result<Vec<T>> {
        let mut slots: Vec<Option<T>> = vec![None; self.inputs.len()];
        for (name, value) in named {
            let idx = self
                .input_index(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if slots[idx].replace(*value).is_some() {
                return Err(Error::Configuration(format!(
                    "input '{name}' assigned twice"
                )));
            }
        }
        slots
            .into_iter()
            .zip(&self.inputs)
            .map(|(s, v)| s.ok_or_else(|| Error::MissingInput(v.name.clone())))
            .collect()
    }
}

fn check_terms(var: &LinguisticVariable) -> Result<()> {
    if var.terms.is_empty() {
        return Err(Error::Definition(format!(
            "variable '{}' has no terms",
            var.name
        )));
    }
    let mut seen = HashSet::new();
    for t in &var.terms {
        if !seen.insert(t.name.as_str()) {
            return Err(Error::Definition(format!(
                "duplicate term '{}' on variable '{}'",
                t.name, var.name
            )));
        }
        if !t.mf.intersects(&var.universe) {
            return Err(Error::Definition(format!(
                "term '{}' lies outside the range of '{}'",
                t.name, var.name
            )));
        }
    }
    Ok(())
}

fn resolve_term(var: &LinguisticVariable, term: &str) -> Result<usize> {
    var.term_index(term).ok_or_else(|| Error::UnknownTerm {
        variable: var.name.clone(),
        term: term.to_string(),
    })
}

fn compile(
    rule: &Rule,
    inputs: &[LinguisticVariable],
    outputs: &[LinguisticVariable],
) -> Result<CompiledRule> {
    let mut antecedent = vec![None; inputs.len()];
    for clause in &rule.antecedent {
        let idx = inputs
            .iter()
            .position(|v| v.name == clause.variable)
            .ok_or_else(|| Error::UnknownVariable(clause.variable.clone()))?;
        let term = resolve_term(&inputs[idx], &clause.term)?;
        if antecedent[idx].replace(term).is_some() {
            return Err(Error::Definition(format!(
                "input '{}' appears twice in one antecedent",
                clause.variable
            )));
        }
    }
    let antecedent = antecedent
        .into_iter()
        .zip(inputs)
        .map(|(t, v)| t.ok_or_else(|| Error::MissingInput(v.name.clone())))
        .collect::<Result<Vec<_>>>()?;

    if rule.consequent.is_empty() {
        return Err(Error::Definition("rule has no consequent".into()));
    }
    let mut consequent = Vec::with_capacity(rule.consequent.len());
    for clause in &rule.consequent {
        let idx = outputs
            .iter()
            .position(|v| v.name == clause.variable)
            .ok_or_else(|| Error::UnknownVariable(clause.variable.clone()))?;
        if consequent.iter().any(|(o, _)| *o == idx) {
            return Err(Error::Definition(format!(
                "output '{}' appears twice in one consequent",
                clause.variable
            )));
        }
        consequent.push((idx, resolve_term(&outputs[idx], &clause.term)?));
    }
    Ok(CompiledRule {
        antecedent,
        consequent,
    })
}

/// First pair of rules with equal antecedents that disagree on some output.
fn find_conflict(rules: &[CompiledRule]) -> Option<(usize, usize, usize)> {
    let mut seen: HashMap<(&[usize], usize), (usize, usize)> = HashMap::new();
    for (j, rule) in rules.iter().enumerate() {
        for &(out, term) in &rule.consequent {
            match seen.get(&(rule.antecedent.as_slice(), out)) {
                Some(&(k, t)) if t != term => return Some((k, j, out)),
                Some(_) => {}
                None => {
                    seen.insert((rule.antecedent.as_slice(), out), (j, term));
                }
            }
        }
    }
    None
}
