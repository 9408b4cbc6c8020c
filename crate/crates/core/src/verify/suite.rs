use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use serde::Serialize;

use super::{Check, Suite, Verifier, VerifyConfig};
use crate::designs::{replication_seed, DrawingProbabilities};
use crate::error::Result;
use crate::par::{map_indexed, Execution};

/// Drawing probabilities uniform on the simplex (normalized exponentials).
pub fn random_alpha(units: usize, seed: u64) -> Result<DrawingProbabilities> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw: Vec<f64> = (0..units)
        .map(|_| {
            let x: f64 = Exp1.sample(&mut rng);
            // Exp1 can return exactly 0 only with probability ~2^-53
            x.max(f64::MIN_POSITIVE)
        })
        .collect();
    let total: f64 = raw.iter().sum();
    DrawingProbabilities::new(raw.into_iter().map(|x| x / total).collect())
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub sizes: RangeInclusive<usize>,
    /// Random populations per size.
    pub trials: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    /// Likelihood-ratio checks run only for `N ≤ lr_max_units` and
    /// `n ≤ lr_max_size`.
    pub lr_max_units: usize,
    pub lr_max_size: usize,
    /// Replace every random α by the uniform vector.
    pub force_uniform: bool,
    pub verify: VerifyConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            sizes: 2..=10,
            trials: 200,
            seed: 42,
            suites: Suite::ALL.to_vec(),
            lr_max_units: 6,
            lr_max_size: 3,
            force_uniform: false,
            verify: VerifyConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct FamilySummary {
    pub checks: usize,
    pub failures: usize,
    pub min_slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailedCheck {
    pub population: Vec<f64>,
    pub check: Check,
}

/// Aggregate over all random populations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub overall: bool,
    pub populations: usize,
    pub checks: usize,
    pub families: BTreeMap<&'static str, FamilySummary>,
    /// The first failures encountered, in population order (at most 50).
    pub failures: Vec<FailedCheck>,
}

impl SuiteReport {
    pub fn to_table(&self) -> String {
        use std::fmt::Write as _;
        let width = self
            .families
            .keys()
            .map(|k| k.len())
            .max()
            .unwrap_or(6)
            .max(6);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>8}  {:>8}  {:>13}",
            "family", "checks", "failed", "min slack"
        );
        for (k, f) in &self.families {
            let _ = writeln!(
                out,
                "{:<width$}  {:>8}  {:>8}  {:>13.6e}",
                k, f.checks, f.failures, f.min_slack
            );
        }
        for f in &self.failures {
            let _ = writeln!(
                out,
                "FAIL {} (slack {:e}) on α = {:?}",
                f.check.name, f.check.slack, f.population
            );
        }
        let _ = writeln!(
            out,
            "overall: {} ({} populations, {} checks)",
            if self.overall { "PASS" } else { "FAIL" },
            self.populations,
            self.checks
        );
        out
    }
}

/// Runs the selected suites on `trials` random populations per size.
/// Population `t` of size `N` is generated from
/// `replication_seed(seed, N · 2^32 + t)`, so the report is a pure function
/// of the configuration regardless of scheduling.
pub fn randomized_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let jobs: Vec<(usize, usize)> = cfg
        .sizes
        .clone()
        .flat_map(|n| (0..cfg.trials).map(move |t| (n, t)))
        .collect();
    let inner = VerifyConfig {
        execution: Execution::Sequential,
        ..cfg.verify.clone()
    };
    let reports = map_indexed(cfg.verify.execution, jobs.len(), |j| -> Result<_> {
        let (units, trial) = jobs[j];
        let key = ((units as u64) << 32) | trial as u64;
        let alpha = if cfg.force_uniform {
            DrawingProbabilities::uniform(units)?
        } else {
            random_alpha(units, replication_seed(cfg.seed, key))?
        };
        let verify = VerifyConfig {
            seed: replication_seed(cfg.verify.seed, key),
            ..inner.clone()
        };
        let verifier = Verifier::new(&alpha, &verify)?;
        let without_lr: Vec<Suite> = cfg
            .suites
            .iter()
            .copied()
            .filter(|s| *s != Suite::Lr)
            .collect();
        let mut report = verifier.run(&without_lr);
        if cfg.suites.contains(&Suite::Lr) && units <= cfg.lr_max_units {
            for n in 1..=units.min(cfg.lr_max_size) {
                verifier.lr_order(&mut report, n)?;
            }
        }
        Ok(report)
    });

    let mut out = SuiteReport {
        overall: true,
        populations: 0,
        checks: 0,
        families: BTreeMap::new(),
        failures: Vec::new(),
    };
    for report in reports {
        let report = report?;
        out.populations += 1;
        out.overall &= report.overall;
        for c in report.checks {
            out.checks += 1;
            let fam = out.families.entry(c.anchor).or_insert(FamilySummary {
                min_slack: f64::INFINITY,
                ..Default::default()
            });
            fam.checks += 1;
            fam.min_slack = fam.min_slack.min(c.slack);
            if !c.holds {
                fam.failures += 1;
                if out.failures.len() < 50 {
                    out.failures.push(FailedCheck {
                        population: report.population.clone(),
                        check: c,
                    });
                }
            }
        }
    }
    Ok(out)
}
