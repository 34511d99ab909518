//! End-to-end evaluation: fuzzify, infer, defuzzify.

use crate::defuzz::centroid_subareas;
use crate::error::{Error, Result};
use crate::format::ControllerDefinition;
use crate::fuzzy::{fuzzify, FuzzifiedInput};
use crate::inference::{Inference, InferenceConfig, RuleBase};

/// A compiled controller ready for repeated evaluation.
#[derive(Debug, Clone)]
pub struct Controller {
    definition: ControllerDefinition,
    rule_base: RuleBase,
    config: InferenceConfig,
}

/// The crisp value of one output.
#[derive(Debug, Clone, PartialEq)]
pub struct CrispOutput {
    pub variable: String,
    pub value: f64,
    /// No rule fired; `value` is the universe midpoint.
    pub degraded: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub outputs: Vec<CrispOutput>,
    pub inference: Inference,
}

impl Evaluation {
    pub fn get(&self, variable: &str) -> Option<f64> {
        self.outputs
            .iter()
            .find(|o| o.variable == variable)
            .map(|o| o.value)
    }

    pub fn is_degraded(&self) -> bool {
        self.outputs.iter().any(|o| o.degraded)
    }
}

impl Controller {
    pub fn new(definition: ControllerDefinition) -> Result<Self> {
        let rule_base = definition.rule_base()?;
        let config = definition.inference_config();
        if config.resolution < 2 {
            return Err(Error::Configuration(format!(
                "resolution must be at least 2, got {}",
                config.resolution
            )));
        }
        Ok(Controller {
            definition,
            rule_base,
            config,
        })
    }

    /// Overrides the sampling resolution of the definition.
    pub fn with_resolution(mut self, resolution: usize) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::Configuration(format!(
                "resolution must be at least 2, got {resolution}"
            )));
        }
        self.config.resolution = resolution;
        Ok(self)
    }

    pub fn definition(&self) -> &ControllerDefinition {
        &self.definition
    }

    pub fn rule_base(&self) -> &RuleBase {
        &self.rule_base
    }

    pub fn config(&self) -> &InferenceConfig {
        &self.config
    }

    /// Fuzzifies crisp measurements given in input declaration order.
    pub fn fuzzify(&self, values: &[f64]) -> Result<Vec<FuzzifiedInput>> {
        let inputs = self.rule_base.inputs();
        if values.len() < inputs.len() {
            return Err(Error::MissingInput(inputs[values.len()].name.clone()));
        }
        if values.len() > inputs.len() {
            return Err(Error::Configuration(format!(
                "expected {} inputs, got {}",
                inputs.len(),
                values.len()
            )));
        }
        inputs
            .iter()
            .zip(values)
            .map(|(var, &x)| {
                let mode = self.definition.fuzzification_of(&var.name);
                fuzzify(x, &var.universe, mode).map_err(|e| match e {
                    Error::InvalidMeasurement { value, .. } => Error::InvalidMeasurement {
                        variable: var.name.clone(),
                        value,
                    },
                    other => other,
                })
            })
            .collect()
    }

    /// Evaluates crisp measurements in input declaration order. Outputs
    /// that no rule reaches fall back to their universe midpoint and are
    /// flagged as degraded.
    pub fn evaluate(&self, values: &[f64]) -> Result<Evaluation> {
        let fuzzified = self.fuzzify(values)?;
        let inference = self.rule_base.infer(&fuzzified, &self.config)?;
        let outputs = inference
            .outputs
            .iter()
            .map(|set| match centroid_subareas(set) {
                Ok(value) => Ok(CrispOutput {
                    variable: set.variable().to_string(),
                    value,
                    degraded: false,
                }),
                Err(Error::EmptyOutput { variable }) => Ok(CrispOutput {
                    value: set.universe().midpoint(),
                    variable,
                    degraded: true,
                }),
                Err(e) => Err(e),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Evaluation { outputs, inference })
    }

    pub fn evaluate_named(&self, values: &[(&str, f64)]) -> Result<Evaluation> {
        self.evaluate(&self.rule_base.positional(values)?)
    }
}
