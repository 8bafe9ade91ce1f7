//! Executable reproduction checks and randomized property fuzzers.

mod checks;
mod fuzz;
mod report;

pub use checks::{check_ids, dsh_level_point, dsh_residual, run_all, run_check};
pub use fuzz::{
    axiom_violations, check_dominance, fuzz_metric_axioms, fuzz_monotonicity, trial_rng, AxiomViolations,
    Counterexample, FuzzConfig, FuzzMethod, MonotonicityOutcome,
};
pub use report::{printed, CheckReport, Claim, Expected, Observed, OrderingCheck, Status, EXACT};
