//! Membership-function primitives, the degree algebra and fuzzification.
//!
//! Everything here is immutable once built and every operation is a pure
//! function, so values can be shared freely across threads.

mod degree;
mod fuzzify;
mod membership;

pub use degree::{snorm_max, Degree, TNorm};
pub use fuzzify::{fuzzify, Fuzzification, FuzzifiedInput};
pub use membership::{MembershipFunction, Shape, Universe};
