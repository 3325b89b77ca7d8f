//! Integration tests. One binary so that it builds once and runs before the
//! acceptance report.

mod cli;
mod oracles;
mod properties;
