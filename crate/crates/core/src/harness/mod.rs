//! Claim-level verification suites, the counterexample archive and the
//! conjecture search.

pub mod archive;
mod claims;
mod pool;
mod report;
mod runner;
mod search;
mod suites;

pub use claims::{
    check_aharoni_howard, check_berge, check_conjecture, check_intersecting, check_min_degree_pm, check_rainbow_family,
    check_rainbow_pair, check_shift, check_solvers, check_stability, check_tightness, claim, recheck, Claim, Regime,
    Verdict, CLAIMS,
};
pub use report::{Status, VerificationReport};
pub use runner::{run_claim, run_small, RunParams};
pub use search::{conjecture_search, ARCHIVE_LIMIT};
pub use suites::{
    max_intersecting_family, solver_cross_check, verify_aharoni_howard, verify_berge, verify_construction_tightness,
    verify_daykin_haggkvist, verify_intersecting_stability, verify_lemma25, verify_main_stability,
    verify_near_perfect_stability, verify_rainbow_theorem, verify_shift_monotone, verify_shifted_stability,
    verify_small_matching_stability, Options, Sampling,
};
