//! Prints the built-in washer controller in canonical `.flc` form.
//!
//! ```bash
//! cargo run -p mamdani-flc --example washer_fixture > crates/core/data/washer.flc
//! ```

use mamdani_flc::format::serialize;
use mamdani_flc::washer::builtin_definition;

fn main() {
    print!("{}", serialize(&builtin_definition()));
}
