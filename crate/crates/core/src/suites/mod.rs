//! Verification suites: named groups of exact checks assembled into a
//! [`Report`](crate::report::Report).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde_json::json;

use crate::report::{CheckRecord, Report};
use crate::simplicial::FiniteSimplicialSet;

mod gamma;
mod homotopy;
mod power;
mod sample;
mod simplicial;
mod toeplitz;

pub use sample::Sampler;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    All,
    Simplicial,
    Power,
    Gamma,
    Toeplitz,
    Homotopy,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [Suite::Simplicial, Suite::Power, Suite::Gamma, Suite::Toeplitz, Suite::Homotopy];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Simplicial => "simplicial",
            Suite::Power => "power",
            Suite::Gamma => "gamma",
            Suite::Toeplitz => "toeplitz",
            Suite::Homotopy => "homotopy",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Suite::All].into_iter().chain(Suite::PARTS).find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{}`", s))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// polynomial / word degree bound
    pub degree: u32,
    /// window size for oracle comparisons
    pub window: usize,
    pub seed: u64,
    pub subdivisions: usize,
    /// extra simplicial set to run the simplicial and power checks on
    pub input: Option<Arc<FiniteSimplicialSet>>,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { degree: 6, window: 64, seed: 0, subdivisions: 3, input: None, timings: false }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.degree < 2 {
            return Err("--degree must be at least 2".into());
        }
        if self.window < 16 {
            return Err("--window must be at least 16".into());
        }
        if self.subdivisions > 6 {
            return Err("--subdivisions must be at most 6".into());
        }
        Ok(())
    }

    fn parameters(&self) -> serde_json::Value {
        json!({
            "degree": self.degree,
            "window": self.window,
            "seed": self.seed,
            "subdivisions": self.subdivisions,
            "input": self.input.as_ref().map(|k| k.counts()),
        })
    }
}

fn run_part(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let start = std::time::Instant::now();
    let mut records = match suite {
        Suite::Simplicial => simplicial::checks(cfg),
        Suite::Power => power::checks(cfg),
        Suite::Gamma => gamma::checks(cfg),
        Suite::Toeplitz => toeplitz::checks(cfg),
        Suite::Homotopy => homotopy::checks(cfg),
        Suite::All => unreachable!("expanded by run"),
    };
    if cfg.timings {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        records.push(CheckRecord::new(format!("{}.timing", suite.name()), "plumbing", true).with_note(format!("{:.1} ms", ms)));
    }
    records
}

/// Runs the suite; parts of `all` run on separate threads. Records are
/// sorted by id, so the report does not depend on scheduling.
pub fn run(suite: Suite, cfg: &SuiteConfig) -> Report {
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    let records: Vec<CheckRecord> = std::thread::scope(|s| {
        let handles: Vec<_> = parts.iter().map(|p| s.spawn(move || run_part(*p, cfg))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite thread panicked")).collect()
    });
    Report::new(suite.name(), cfg.parameters(), records)
}

/// `id` under `prefix`, with the record passing iff `bad` is `None`.
pub(crate) fn verdict(id: String, anchor: impl Into<String>, bad: Option<String>) -> CheckRecord {
    CheckRecord::new(id, anchor, bad.is_none()).witness_on_failure(|| bad.unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::All].into_iter().chain(Suite::PARTS) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("rings".parse::<Suite>().is_err());
    }

    #[test]
    fn config_bounds() {
        assert!(SuiteConfig::default().validate().is_ok());
        assert!(SuiteConfig { degree: 1, ..Default::default() }.validate().is_err());
        assert!(SuiteConfig { window: 4, ..Default::default() }.validate().is_err());
    }
}
