//! Library half of the command-line crate: JSON serialization for graded
//! series and the acceptance check suites. The binary in `main.rs` is a thin
//! argument-parsing layer over these plus the core crate.

pub mod check;
pub mod json;
