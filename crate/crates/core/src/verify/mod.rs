//! Numerical verification of the ordering results on concrete drawing
//! probabilities.
//!
//! Every check is phrased as `slack ≥ -tolerance`. Successive-sampling
//! quantities are exact up to the configured cutoff; above it they come from
//! Monte Carlo and the affected checks are marked [`CheckKind::Statistical`],
//! with the tolerance widened by four propagated standard errors.

mod checks;
mod suite;

pub use checks::{
    verify_all, verify_classical_bounds, verify_divergence_triangles, verify_divergences,
    verify_entropy_chains, verify_lr_order, verify_majorization_chains, verify_ratio_monotonicity,
    Verifier,
};
pub use suite::{random_alpha, randomized_suite, FamilySummary, SuiteConfig, SuiteReport};

use std::fmt::Write as _;

use serde::Serialize;

use crate::designs::{DrawingProbabilities, DEFAULT_EXACT_CUTOFF};
use crate::error::{Error, Result};
use crate::par::Execution;

/// Stable identifiers for the families of checks.
pub mod anchor {
    pub const REJECTIVE_CHAIN: &str = "rejective-per-draw-chain";
    pub const SUCCESSIVE_CHAIN: &str = "successive-per-draw-chain";
    pub const DESIGN_MAJORIZATION: &str = "rejective-majorized-by-successive";
    pub const CHAIN_ENDPOINTS: &str = "per-draw-chain-endpoints";
    pub const REJECTIVE_BELOW_ALPHA: &str = "rejective-per-draw-majorized-by-alpha";
    pub const ENTROPY_REJECTIVE: &str = "rejective-entropy-chain";
    pub const ENTROPY_SUCCESSIVE: &str = "successive-entropy-chain";
    pub const ENTROPY_DESIGNS: &str = "rejective-entropy-exceeds-successive";
    pub const ENTROPY_ENDPOINTS: &str = "entropy-chain-endpoints";
    pub const TRIANGLE_REJECTIVE_FORWARD: &str = "rejective-forward-triangle";
    pub const TRIANGLE_REJECTIVE_REVERSE: &str = "rejective-reverse-triangle";
    pub const TRIANGLE_SUCCESSIVE: &str = "successive-alpha-triangle";
    pub const TRIANGLE_DESIGNS: &str = "rejective-successive-alpha-triangle";
    pub const DIVERGENCE_GROWTH: &str = "divergence-growth-in-sample-size";
    pub const DIVERGENCE_BOUND: &str = "successive-divergence-bound";
    pub const MILBRODT_MAX: &str = "milbrodt-max-chain";
    pub const MILBRODT_MIN: &str = "milbrodt-min-chain";
    pub const REJECTIVE_BOUNDS: &str = "rejective-drawing-probability-bounds";
    pub const HAJEK_RATIO: &str = "hajek-max-min-ratio-chain";
    pub const KOCHAR_KORWAR: &str = "kochar-korwar-majorization";
    pub const SUCCESSIVE_RATIO: &str = "successive-to-alpha-ratio-increasing";
    pub const REJECTIVE_STEP_RATIO: &str = "rejective-step-ratio-decreasing";
    pub const LR_ORDER: &str = "likelihood-ratio-order";
    pub const STOCHASTIC_ORDER: &str = "coordinatewise-stochastic-order";
}

/// Groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Majorization,
    Entropy,
    Divergence,
    Bounds,
    Ratios,
    Lr,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Majorization,
        Suite::Entropy,
        Suite::Divergence,
        Suite::Bounds,
        Suite::Ratios,
        Suite::Lr,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Exact,
    Statistical,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: &'static str,
    pub holds: bool,
    pub slack: f64,
    pub tolerance: f64,
    pub kind: CheckKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    /// Drawing probabilities as supplied (checks use the descending order).
    pub population: Vec<f64>,
    pub checks: Vec<Check>,
    pub overall: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(population: &DrawingProbabilities) -> Self {
        Self {
            population: population.as_slice().to_vec(),
            checks: Vec::new(),
            overall: true,
            notes: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, check: Check) {
        self.overall &= check.holds;
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn by_anchor<'a>(&'a self, anchor: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.anchor == anchor)
    }

    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:<11}  {:>13}  {:>9}  status",
            "check", "kind", "slack", "tolerance"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:<11}  {:>13.6e}  {:>9.1e}  {}",
                c.name,
                match c.kind {
                    CheckKind::Exact => "exact",
                    CheckKind::Statistical => "statistical",
                },
                c.slack + 0.0,
                c.tolerance,
                if c.holds { "ok" } else { "FAIL" }
            );
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "overall: {} ({} checks, {failed} failed)",
            if self.overall { "PASS" } else { "FAIL" },
            self.checks.len()
        );
        out
    }
}

/// Tolerances and limits shared by all checks.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    /// Absolute tolerance on partial sums, entropies and divergence gaps.
    pub tolerance: f64,
    /// Tolerance on ratio monotonicity, relative to the ratio magnitude.
    pub ratio_tolerance: f64,
    /// Largest population for the exact successive law.
    pub exact_cutoff: usize,
    /// Monte Carlo replications per sample size above the cutoff; zero skips
    /// successive checks there.
    pub mc_reps: u64,
    pub seed: u64,
    pub execution: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            ratio_tolerance: 1e-12,
            exact_cutoff: DEFAULT_EXACT_CUTOFF,
            mc_reps: 100_000,
            seed: 0,
            execution: Execution::default(),
        }
    }
}

/// Sample sizes `1 ≤ l < m < n ≤ N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivergenceTriple {
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl DivergenceTriple {
    pub fn new(l: usize, m: usize, n: usize, units: usize) -> Result<Self> {
        if !(1 <= l && l < m && m < n && n <= units) {
            return Err(Error::Argument(format!(
                "need 1 ≤ l < m < n ≤ {units}, got ({l}, {m}, {n})"
            )));
        }
        Ok(Self { l, m, n })
    }

    /// Every valid triple for a population of `units`.
    pub fn all(units: usize) -> impl Iterator<Item = Self> {
        (1..=units).flat_map(move |l| {
            (l + 1..=units).flat_map(move |m| (m + 1..=units).map(move |n| Self { l, m, n }))
        })
    }
}

/// `lhs - rhs` over the extended reals: equal values (including two
/// infinities) give zero, NaN propagates.
pub(crate) fn ext_slack(lhs: f64, rhs: f64) -> f64 {
    if lhs == rhs {
        0.0
    } else {
        lhs - rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples() {
        assert!(DivergenceTriple::new(1, 2, 3, 3).is_ok());
        assert!(DivergenceTriple::new(2, 2, 3, 3).is_err());
        assert!(DivergenceTriple::new(1, 2, 4, 3).is_err());
        assert!(DivergenceTriple::new(0, 1, 2, 3).is_err());
        assert_eq!(DivergenceTriple::all(5).count(), 10);
        assert_eq!(DivergenceTriple::all(2).count(), 0);
    }

    #[test]
    fn extended_slack() {
        assert_eq!(ext_slack(f64::INFINITY, f64::INFINITY), 0.0);
        assert_eq!(ext_slack(f64::INFINITY, 3.0), f64::INFINITY);
        assert_eq!(ext_slack(1.0, f64::INFINITY), f64::NEG_INFINITY);
        assert!(ext_slack(f64::NAN, 1.0).is_nan());
    }
}
