use crate::error::{Error, Result};
use crate::fuzzy::{snorm_max, Degree, FuzzifiedInput, TNorm};

use super::{DiscretizedFuzzySet, LinguisticVariable, RuleBase};

pub const DEFAULT_RESOLUTION: usize = 201;

/// Operator choices for one inference pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InferenceConfig {
    /// Combines the antecedent match with the consequent (`i1`); `Min` clips.
    pub implication: TNorm,
    /// Folds the per-input matches of an antecedent (`i2`).
    pub conjunction: TNorm,
    /// Samples per universe, for both input sups and output sets.
    pub resolution: usize,
}

impl Default for InferenceConfig {
    fn default() -> Self {
        InferenceConfig {
            implication: TNorm::Min,
            conjunction: TNorm::Min,
            resolution: DEFAULT_RESOLUTION,
        }
    }
}

impl InferenceConfig {
    pub fn with_tnorm(tnorm: TNorm, resolution: usize) -> Self {
        InferenceConfig {
            implication: tnorm,
            conjunction: tnorm,
            resolution,
        }
    }

    fn check(&self) -> Result<()> {
        if self.resolution < 2 {
            return Err(Error::Configuration(format!(
                "resolution must be at least 2, got {}",
                self.resolution
            )));
        }
        Ok(())
    }
}

/// Degree of compatibility `i1(i2(A(x), B(y), ...), W(w))` from already
/// evaluated memberships.
pub fn compatibility(
    antecedent: &[Degree],
    consequent: Degree,
    implication: TNorm,
    conjunction: TNorm,
) -> Degree {
    implication.apply(conjunction.fold(antecedent.iter().copied()), consequent)
}

/// `sup_x min(input(x), term(x))` for one input variable and one term. A
/// singleton collapses to the term's membership at the measurement.
pub fn match_degree(
    var: &LinguisticVariable,
    term: usize,
    input: &FuzzifiedInput,
    resolution: usize,
) -> Degree {
    let mf = &var.terms[term].mf;
    match input {
        FuzzifiedInput::Singleton { x0 } => mf.eval(*x0),
        FuzzifiedInput::TriangularNumber { .. } => (0..resolution)
            .map(|k| var.universe.grid_point(k, resolution))
            .map(|x| input.membership(x).min(mf.eval(x)))
            .fold(Degree::ZERO, snorm_max),
    }
}

/// Result of one inference pass.
#[derive(Debug, Clone, PartialEq)]
pub struct Inference {
    /// Firing degree of every rule, in rule order.
    pub firing: Vec<Degree>,
    /// Aggregated control action per output, in declaration order.
    pub outputs: Vec<DiscretizedFuzzySet>,
}

impl Inference {
    pub fn output(&self, name: &str) -> Option<&DiscretizedFuzzySet> {
        self.outputs.iter().find(|s| s.variable() == name)
    }
}

impl RuleBase {
    fn check_arity(&self, supplied: usize) -> Result<()> {
        let expected = self.inputs().len();
        if supplied < expected {
            Err(Error::MissingInput(self.inputs()[supplied].name.clone()))
        } else if supplied > expected {
            Err(Error::Configuration(format!(
                "expected {expected} inputs, got {supplied}"
            )))
        } else {
            Ok(())
        }
    }

    fn rule_index(&self, rule: usize) -> Result<()> {
        if rule >= self.compiled.len() {
            return Err(Error::Definition(format!("no rule with index {rule}")));
        }
        Ok(())
    }

    /// Degree of compatibility of rule `rule` at the crisp input point
    /// `point` (declaration order) and output value `w`.
    pub fn compatibility(
        &self,
        rule: usize,
        point: &[f64],
        output: &str,
        w: f64,
        implication: TNorm,
        conjunction: TNorm,
    ) -> Result<Degree> {
        self.rule_index(rule)?;
        self.check_arity(point.len())?;
        let out = self
            .output_index(output)
            .ok_or_else(|| Error::UnknownVariable(output.to_string()))?;
        let compiled = &self.compiled[rule];
        let &(_, term) = compiled
            .consequent
            .iter()
            .find(|(o, _)| *o == out)
            .ok_or_else(|| {
                Error::Definition(format!(
                    "rule {} does not assign output '{output}'",
                    rule + 1
                ))
            })?;
        let antecedent: Vec<Degree> = compiled
            .antecedent
            .iter()
            .zip(self.inputs())
            .zip(point)
            .map(|((&t, var), &x)| var.terms[t].mf.eval(x))
            .collect();
        let consequent = self.outputs()[out].terms[term].mf.eval(w);
        Ok(compatibility(&antecedent, consequent, implication, conjunction))
    }

    /// Firing degree of one rule against fuzzified inputs (declaration order).
    pub fn firing_degree(
        &self,
        rule: usize,
        inputs: &[FuzzifiedInput],
        config: &InferenceConfig,
    ) -> Result<Degree> {
        config.check()?;
        self.rule_index(rule)?;
        self.check_arity(inputs.len())?;
        let compiled = &self.compiled[rule];
        Ok(config.conjunction.fold(
            compiled
                .antecedent
                .iter()
                .enumerate()
                .map(|(i, &t)| match_degree(&self.inputs()[i], t, &inputs[i], config.resolution)),
        ))
    }

    /// Firing degrees of every rule, matching each `(input, term)` pair once.
    pub fn firing_degrees(
        &self,
        inputs: &[FuzzifiedInput],
        config: &InferenceConfig,
    ) -> Result<Vec<Degree>> {
        config.check()?;
        self.check_arity(inputs.len())?;
        let matches: Vec<Vec<Degree>> = self
            .inputs()
            .iter()
            .zip(inputs)
            .map(|(var, input)| {
                (0..var.terms.len())
                    .map(|t| match_degree(var, t, input, config.resolution))
                    .collect()
            })
            .collect();
        Ok(self
            .compiled
            .iter()
            .map(|rule| {
                config.conjunction.fold(
                    rule.antecedent
                        .iter()
                        .enumerate()
                        .map(|(i, &t)| matches[i][t]),
                )
            })
            .collect())
    }

    /// Full Mamdani pass: fire every rule, shape each consequent with the
    /// implication t-norm and take the pointwise max per output.
    pub fn infer(&self, inputs: &[FuzzifiedInput], config: &InferenceConfig) -> Result<Inference> {
        let firing = self.firing_degrees(inputs, config)?;
        let n = config.resolution;
        let outputs = self
            .outputs()
            .iter()
            .enumerate()
            .map(|(o, var)| {
                let positions = var.universe.grid(n);
                let mut memberships = vec![Degree::ZERO; n];
                for (rule, &degree) in self.compiled.iter().zip(&firing) {
                    if degree.is_zero() {
                        continue;
                    }
                    for &(_, term) in rule.consequent.iter().filter(|(out, _)| *out == o) {
                        let mf = &var.terms[term].mf;
                        for (mu, &w) in memberships.iter_mut().zip(&positions) {
                            *mu = snorm_max(*mu, config.implication.apply(degree, mf.eval(w)));
                        }
                    }
                }
                DiscretizedFuzzySet::from_parts(&var.name, var.universe, positions, memberships)
            })
            .collect();
        Ok(Inference { firing, outputs })
    }

    /// [`RuleBase::infer`] with inputs given by name.
    pub fn infer_named(
        &self,
        inputs: &[(&str, FuzzifiedInput)],
        config: &InferenceConfig,
    ) -> Result<Inference> {
        self.infer(&self.positional(inputs)?, config)
    }
}
