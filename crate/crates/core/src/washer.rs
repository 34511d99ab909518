//! Built-in washing-machine controller.
//!
//! Three inputs (degree of dirt, fabric thickness, load volume) drive three
//! outputs (wash time, water volume, detergent). Every variable has three
//! triangular terms: two shoulders at the bounds and one centred peak.
//!
//! | variable           | range   | unit    |
//! |--------------------|---------|---------|
//! | `dirt_degree`      | 0–100   | percent |
//! | `fabric_thickness` | 0–10    | mm      |
//! | `load_volume`      | 0–8     | kg      |
//! | `wash_time`        | 0–60    | minutes |
//! | `water_volume`     | 0–60    | liters  |
//! | `detergent`        | 0–200   | grams   |
//!
//! The 27 rules cover the full input grid. Each output picks its term from a
//! weighted score of the input term indices (`low = 0`, `medium = 1`,
//! `high = 2`): below `W - 1` gives the lowest term, above `W + 1` the
//! highest, anything else the middle one, with `W` the sum of the weights.
//! The table is nondecreasing in every input and symmetric under reflecting
//! all indices, so the crisp response is monotone and the input midpoints map
//! to the output midpoints.

use std::sync::OnceLock;

use crate::controller::Controller;
use crate::error::Result;
use crate::format::{ControllerDefinition, Settings};
use crate::fuzzy::{Fuzzification, MembershipFunction, TNorm, Universe};
use crate::inference::{Clause, LinguisticVariable, Rule, DEFAULT_RESOLUTION};

pub const INPUTS: [(&str, f64, f64); 3] = [
    ("dirt_degree", 0.0, 100.0),
    ("fabric_thickness", 0.0, 10.0),
    ("load_volume", 0.0, 8.0),
];

pub const OUTPUTS: [(&str, f64, f64); 3] = [
    ("wash_time", 0.0, 60.0),
    ("water_volume", 0.0, 60.0),
    ("detergent", 0.0, 200.0),
];

const INPUT_TERMS: [&str; 3] = ["low", "medium", "high"];

/// Term names per output, lowest first.
const OUTPUT_TERMS: [[&str; 3]; 3] = [
    ["short", "medium", "long"],
    ["low", "medium", "high"],
    ["low", "medium", "high"],
];

/// Weight of (dirt, thickness, load) in each output's score.
const WEIGHTS: [[u32; 3]; 3] = [[2, 1, 1], [1, 1, 2], [2, 1, 2]];

/// Consequent term index of `output` for the input term indices `terms`.
pub fn consequent_index(output: usize, terms: [usize; 3]) -> usize {
    let w = WEIGHTS[output];
    let total: u32 = w.iter().sum();
    let score: u32 = w.iter().zip(terms).map(|(&w, t)| w * t as u32).sum();
    if score + 1 < total {
        0
    } else if score > total + 1 {
        2
    } else {
        1
    }
}

fn three_terms(name: &str, lo: f64, hi: f64, terms: [&str; 3]) -> LinguisticVariable {
    let mid = lo + 0.5 * (hi - lo);
    let tri = |a, b, c| MembershipFunction::triangular(a, b, c).expect("ordered breakpoints");
    LinguisticVariable::new(name, Universe::new(lo, hi).expect("lo < hi"))
        .with_term(terms[0], tri(lo, lo, mid))
        .with_term(terms[1], tri(lo, mid, hi))
        .with_term(terms[2], tri(mid, hi, hi))
}

/// The washer controller as a definition (min t-norm, 201 samples,
/// singleton fuzzification).
pub fn builtin_definition() -> ControllerDefinition {
    let inputs = INPUTS
        .iter()
        .map(|&(n, lo, hi)| three_terms(n, lo, hi, INPUT_TERMS))
        .collect();
    let outputs = OUTPUTS
        .iter()
        .zip(OUTPUT_TERMS)
        .map(|(&(n, lo, hi), terms)| three_terms(n, lo, hi, terms))
        .collect();

    let mut rules = Vec::with_capacity(27);
    for d in 0..3 {
        for f in 0..3 {
            for l in 0..3 {
                let idx = [d, f, l];
                let antecedent = INPUTS
                    .iter()
                    .zip(idx)
                    .map(|(&(n, _, _), t)| Clause::new(n, INPUT_TERMS[t]))
                    .collect();
                let consequent = OUTPUTS
                    .iter()
                    .enumerate()
                    .map(|(o, &(n, _, _))| Clause::new(n, OUTPUT_TERMS[o][consequent_index(o, idx)]))
                    .collect();
                rules.push(Rule {
                    antecedent,
                    consequent,
                });
            }
        }
    }

    ControllerDefinition {
        name: "washer".into(),
        settings: Settings {
            tnorm: TNorm::Min,
            resolution: DEFAULT_RESOLUTION,
            fuzzification: Fuzzification::Singleton,
        },
        inputs,
        outputs,
        rules,
        halfwidths: Default::default(),
    }
}

/// Measured load characteristics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WashRequest {
    /// Percent, 0–100.
    pub dirt_degree: f64,
    /// Millimetres, 0–10.
    pub fabric_thickness: f64,
    /// Kilograms, 0–8.
    pub load_volume: f64,
}

impl WashRequest {
    pub fn new(dirt_degree: f64, fabric_thickness: f64, load_volume: f64) -> Self {
        WashRequest {
            dirt_degree,
            fabric_thickness,
            load_volume,
        }
    }
}

/// Recommended cycle parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WashPlan {
    /// Minutes, 0–60.
    pub wash_time: f64,
    /// Liters, 0–60.
    pub water_volume: f64,
    /// Grams, 0–200.
    pub detergent: f64,
    /// Some output fell back to its midpoint because no rule fired.
    pub degraded: bool,
}

/// The washer controller compiled once for repeated use.
#[derive(Debug, Clone)]
pub struct Washer {
    controller: Controller,
}

impl Default for Washer {
    fn default() -> Self {
        Washer::new()
    }
}

impl Washer {
    pub fn new() -> Self {
        Washer {
            controller: Controller::new(builtin_definition())
                .expect("built-in definition compiles"),
        }
    }

    pub fn with_resolution(resolution: usize) -> Result<Self> {
        Ok(Washer {
            controller: Washer::new().controller.with_resolution(resolution)?,
        })
    }

    pub fn controller(&self) -> &Controller {
        &self.controller
    }

    pub fn recommend(&self, req: &WashRequest) -> Result<WashPlan> {
        let eval = self.controller.evaluate(&[
            req.dirt_degree,
            req.fabric_thickness,
            req.load_volume,
        ])?;
        let value = |i: usize| eval.outputs[i].value;
        Ok(WashPlan {
            wash_time: value(0),
            water_volume: value(1),
            detergent: value(2),
            degraded: eval.is_degraded(),
        })
    }
}

/// [`Washer::recommend`] on a shared default-resolution controller.
pub fn recommend(req: &WashRequest) -> Result<WashPlan> {
    static WASHER: OnceLock<Washer> = OnceLock::new();
    WASHER.get_or_init(Washer::new).recommend(req)
}
