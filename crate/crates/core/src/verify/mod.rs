//! Exhaustive verification suites.
//!
//! Each suite checks one family of invariants for every size up to
//! `min(n_max, cap)`, where `cap` is the suite's own bound; snapshot suites
//! run once `n_max` reaches the size they need. Results are deterministic in
//! `n_max`.

pub mod oracle;
mod suites;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use oracle::{centralizer_dim_oracle, integer_rank};

/// Largest `n_max` accepted without an explicit override.
pub const DEFAULT_N_CAP: usize = 8;
/// Largest `n_max` accepted at all.
pub const HARD_N_CAP: usize = 10;

const MAX_RECORDED_FAILURES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySuiteResult {
    pub suite: String,
    pub cases: usize,
    pub failed: usize,
    /// Reproducing inputs for the first failures.
    pub failures: Vec<String>,
    /// Not serialized, so that reports are byte-identical across runs.
    #[serde(skip)]
    pub wall: Duration,
}

impl VerifySuiteResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Accumulates cases and failures for one suite.
#[derive(Default)]
pub(crate) struct Ctx {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Ctx {
    pub(crate) fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(describe());
            }
        }
    }
}

pub(crate) struct Suite {
    pub name: &'static str,
    /// Sizes above this are not run.
    pub cap: usize,
    /// Smallest `n_max` at which the suite runs.
    pub min_n: usize,
    pub run: fn(&mut Ctx, usize),
}

pub fn suite_names() -> Vec<&'static str> {
    suites::SUITES.iter().map(|s| s.name).collect()
}

/// Runs every suite (or the one named by `filter`) for sizes up to `n_max`.
pub fn verify(n_max: usize, filter: Option<&str>, allow_uncapped: bool) -> Result<Vec<VerifySuiteResult>> {
    if n_max > HARD_N_CAP {
        return Err(Error::Domain(format!("n_max {n_max} exceeds the hard cap {HARD_N_CAP}")));
    }
    if n_max > DEFAULT_N_CAP && !allow_uncapped {
        return Err(Error::Domain(format!(
            "n_max {n_max} exceeds the default cap {DEFAULT_N_CAP}; pass --unsafe-no-cap to override"
        )));
    }
    let selected: Vec<&Suite> = suites::SUITES
        .iter()
        .filter(|s| filter.is_none_or(|f| f == s.name))
        .collect();
    if selected.is_empty() {
        return Err(Error::Domain(format!(
            "unknown suite {:?}; known suites: {}",
            filter.unwrap_or_default(),
            suite_names().join(", ")
        )));
    }
    Ok(selected
        .par_iter()
        .filter(|s| n_max >= s.min_n)
        .map(|s| {
            let start = Instant::now();
            let mut ctx = Ctx::default();
            (s.run)(&mut ctx, n_max.min(s.cap));
            VerifySuiteResult {
                suite: s.name.to_string(),
                cases: ctx.cases,
                failed: ctx.failed,
                failures: ctx.failures,
                wall: start.elapsed(),
            }
        })
        .collect())
}
