//! The `.flc` controller-definition format.
//!
//! A line-oriented text format:
//!
//! ```text
//! controller <ident>
//! settings tnorm <min|product> resolution <int> fuzzification <singleton | triangular <positive-real>>
//! input <ident> range <real> <real> [halfwidth <positive-real>]
//!   term <ident> <tri a b c | trap a b c d>
//! output <ident> range <real> <real>
//!   term <ident> <tri a b c | trap a b c d>
//! rule if <var> is <term> [and <var> is <term>]... then <var> is <term> [, <var> is <term>]...
//! ```
//!
//! Tokens are whitespace separated, `#` starts a comment and blank lines are
//! ignored. A `term` belongs to the most recent `input` or `output`.
//! Sections appear in the order shown. A `halfwidth` on an input overrides
//! the settings halfwidth under triangular fuzzification.

mod parse;
mod serialize;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::{Fuzzification, TNorm};
use crate::inference::{InferenceConfig, LinguisticVariable, Rule, RuleBase};

pub use parse::{check, check_bytes, parse, parse_bytes, Report};
pub(crate) use parse::parse_number;
pub use serialize::serialize;
pub use validate::validate;

/// Upper bound on `resolution` accepted in a definition.
pub const MAX_RESOLUTION: usize = 100_000;

/// Engine settings carried by a definition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub tnorm: TNorm,
    pub resolution: usize,
    pub fuzzification: Fuzzification,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            tnorm: TNorm::Min,
            resolution: crate::inference::DEFAULT_RESOLUTION,
            fuzzification: Fuzzification::Singleton,
        }
    }
}

/// Everything needed to build a controller: variables, terms, rules and
/// settings. This is the unit read from and written to `.flc` files.
#[derive(Debug, Clone, PartialEq)]
pub struct ControllerDefinition {
    pub name: String,
    pub settings: Settings,
    pub inputs: Vec<LinguisticVariable>,
    pub outputs: Vec<LinguisticVariable>,
    pub rules: Vec<Rule>,
    /// Per-input halfwidths for triangular fuzzification, by input name.
    pub halfwidths: BTreeMap<String, f64>,
}

impl ControllerDefinition {
    /// Compiles the rule base. Fails on broken references and conflicts.
    pub fn rule_base(&self) -> Result<RuleBase> {
        RuleBase::new(self.inputs.clone(), self.outputs.clone(), self.rules.clone())
    }

    /// Engine configuration implied by the settings.
    pub fn inference_config(&self) -> InferenceConfig {
        InferenceConfig::with_tnorm(self.settings.tnorm, self.settings.resolution)
    }

    /// Fuzzification applied to input `name`: the settings mode, with the
    /// input's own halfwidth when it has one.
    pub fn fuzzification_of(&self, name: &str) -> Fuzzification {
        match self.settings.fuzzification {
            Fuzzification::Singleton => Fuzzification::Singleton,
            Fuzzification::Triangular(h) => {
                Fuzzification::Triangular(self.halfwidths.get(name).copied().unwrap_or(h))
            }
        }
    }

    pub fn input(&self, name: &str) -> Option<&LinguisticVariable> {
        self.inputs.iter().find(|v| v.name == name)
    }

    pub fn output(&self, name: &str) -> Option<&LinguisticVariable> {
        self.outputs.iter().find(|v| v.name == name)
    }

    /// Looks a variable up among inputs, then outputs.
    pub fn variable(&self, name: &str) -> Option<&LinguisticVariable> {
        self.input(name).or_else(|| self.output(name))
    }

    pub fn resolve(&self, name: &str) -> Result<&LinguisticVariable> {
        self.variable(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

/// A problem found in a definition, pinned to a 1-based source line.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagnostic {
    pub line: usize,
    pub severity: Severity,
    pub message: String,
}

impl Diagnostic {
    pub fn error(line: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            line,
            severity: Severity::Error,
            message: message.into(),
        }
    }

    pub fn warning(line: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            line,
            severity: Severity::Warning,
            message: message.into(),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} line {}: {}", self.severity, self.line, self.message)
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Source line of every item in a definition.
#[derive(Debug, Clone, Default)]
pub(crate) struct Layout {
    pub controller: usize,
    pub settings: usize,
    pub inputs: Vec<VariableLines>,
    pub outputs: Vec<VariableLines>,
    pub rules: Vec<usize>,
    /// Last line of the text, used for whole-file conditions.
    pub last: usize,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct VariableLines {
    pub line: usize,
    pub terms: Vec<usize>,
}
