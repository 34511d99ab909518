//! A Mamdani fuzzy logic controller engine.
//!
//! The pipeline is fuzzification of crisp measurements ([`fuzzy`]), sup-min
//! rule evaluation with max aggregation ([`inference`]) and sub-area centroid
//! defuzzification ([`defuzz`]). [`controller::Controller`] wires the three
//! together for a [`format::ControllerDefinition`], which can be read from and
//! written to the line-oriented `.flc` format. [`washer`] ships a
//! three-input, three-output washing-machine controller built on top.
//!
//! ```
//! use mamdani_flc::washer::{recommend, WashRequest};
//!
//! let plan = recommend(&WashRequest::new(50.0, 5.0, 4.0)).unwrap();
//! assert!((plan.wash_time - 30.0).abs() < 1e-6);
//! ```

pub mod cli;
pub mod controller;
pub mod defuzz;
pub mod error;
pub mod format;
pub mod fuzzy;
pub mod inference;
pub mod washer;

pub use controller::{Controller, CrispOutput, Evaluation};
pub use error::{Error, Result};
