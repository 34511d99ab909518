//! Rule representation and Mamdani sup-min inference for MIMO rule bases.
//!
//! For each rule the engine computes a firing degree: the conjunction
//! (`i2`) over inputs of `sup_x min(f(x), A(x))`, where `f` is the
//! fuzzified measurement and `A` the antecedent term. Because the joint
//! input and the antecedent are both min-combinations of per-variable
//! memberships, the supremum over the product space factors into one
//! supremum per variable. Each consequent term is then shaped by the
//! implication t-norm (`i1`, clipping for `Min`) at the firing degree and
//! every output aggregates its shaped terms with a pointwise max.

mod engine;
mod rule;
mod set;
mod variable;

pub use engine::{compatibility, match_degree, Inference, InferenceConfig, DEFAULT_RESOLUTION};
pub use rule::{Clause, Rule, RuleBase};
pub use set::DiscretizedFuzzySet;
pub use variable::{LinguisticVariable, Term};
