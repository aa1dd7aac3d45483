//! Library half of the CLI crate: command implementations and the bundled
//! reference tables, shared between the binary and the test suites.

pub mod eval;
pub mod grids;
pub mod opts;
pub mod reference;
