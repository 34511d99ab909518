use thiserror::Error;

/// Errors raised by the engine, the controller facade and the washer model.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("membership degree {0} is outside [0, 1]")]
    InvalidDegree(f64),

    #[error("invalid universe [{lo}, {hi}]: bounds must be finite with lo < hi")]
    InvalidUniverse { lo: f64, hi: f64 },

    #[error("breakpoints not nondecreasing")]
    BreakpointsNotNondecreasing,

    #[error("breakpoints span zero width")]
    ZeroWidthSupport,

    #[error("breakpoints must be finite")]
    NonFiniteBreakpoint,

    #[error("fuzzification halfwidth must be a finite positive number, got {0}")]
    InvalidHalfwidth(f64),

    #[error("invalid measurement {value} for '{variable}'")]
    InvalidMeasurement { variable: String, value: f64 },

    #[error("unknown variable '{0}'")]
    UnknownVariable(String),

    #[error("unknown term '{term}' on variable '{variable}'")]
    UnknownTerm { variable: String, term: String },

    #[error("no value supplied for input '{0}'")]
    MissingInput(String),

    #[error("invalid definition: {0}")]
    Definition(String),

    #[error("invalid configuration: {0}")]
    Configuration(String),

    #[error("no rule fired for output '{variable}'")]
    EmptyOutput { variable: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
