//! Named, reproducible verification suites.
//!
//! Each suite bundles the numerical checks for one statement the toolkit
//! relies on (a seminorm identity, a metric law, a worked example) and runs
//! a requested number of seeded trials. Reports are machine-readable and
//! deterministic: identical `(name, trials, seed)` gives an identical
//! report.

mod suites;

use crate::error::{Error, Result};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// One measured deviation inside a suite run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrialRecord {
    pub label: String,
    pub deviation: f64,
}

/// Outcome of one suite run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite_name: String,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_deviation: f64,
    pub pass: bool,
    pub records: Vec<TrialRecord>,
}

/// Exact-identity suites: pure floating-point noise allowed.
pub const EXACT_SUITE_TOL: f64 = 1e-9;
/// Solver-mediated suites: three times the default solver tolerance.
pub const SOLVER_SUITE_TOL: f64 = 3e-6;

pub(crate) struct SuiteDef {
    pub name: &'static str,
    pub tolerance: f64,
    /// Operations of `triple`, `states` and `solver` this suite exercises;
    /// the union over the registry must cover all of them (asserted in
    /// tests).
    #[cfg_attr(not(test), allow(dead_code))]
    pub ops: &'static [&'static str],
    pub runner: fn(usize, &mut ChaCha8Rng) -> Vec<TrialRecord>,
}

pub(crate) use suites::REGISTRY;

/// Names of all registered suites, in registry order.
pub fn suite_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|s| s.name).collect()
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Per-suite RNG stream derived from the run seed and the suite name.
fn suite_rng(name: &str, seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(name.as_bytes()))
}

/// Run one suite by name.
pub fn run_suite(name: &str, trials: usize, seed: u64) -> Result<SuiteReport> {
    let def = REGISTRY
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::argument(format!("unknown suite '{name}'")))?;
    if trials < 1 {
        return Err(Error::argument("suite trials must be >= 1"));
    }
    let mut rng = suite_rng(name, seed);
    let records = (def.runner)(trials, &mut rng);
    let max_deviation = records
        .iter()
        .map(|r| r.deviation)
        .fold(0.0f64, f64::max);
    Ok(SuiteReport {
        suite_name: name.to_string(),
        trials,
        seed,
        tolerance: def.tolerance,
        max_deviation,
        pass: max_deviation <= def.tolerance,
        records,
    })
}

/// Run every registered suite.
pub fn run_all(trials: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    suite_names()
        .into_iter()
        .map(|n| run_suite(n, trials, seed))
        .collect()
}
