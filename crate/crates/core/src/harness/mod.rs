//! Everything user-facing: literals, reports, the lattice cache, the
//! verification suites and the command line.

pub mod cache;
pub mod cli;
pub mod literal;
pub mod report;
pub mod suites;

pub use cache::{cache_lattice, load_lattice, LatticeCache};
pub use literal::{group_literal, parse_generators, parse_group_literal, parse_subgroup};
pub use report::{Case, CaseValue, Summary, VerificationReport, SCHEMA_VERSION};
pub use suites::{run_suite, SuiteOptions, SUITES};
