//! Command-line frontend for `fracalc-core`: evaluation commands, CSV tables,
//! the constants report and the self-check suites.

pub mod cache;
pub mod commands;
pub mod constants;
pub mod failure;
pub mod selfcheck;
pub mod table;

pub use cache::RuleCache;
pub use commands::{eval, table, EngineKind, EvalOutput, EvalRequest, Grid, Op};
pub use constants::{verify_constants, ConstantEntry, ConstantsReport};
pub use failure::{ExitCode, Failure};
pub use selfcheck::{selfcheck, selfcheck_with_gamma, SelfcheckReport, SuiteResult};
pub use table::EvalTable;
