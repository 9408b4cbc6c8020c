//! Rejective and successive sampling designs: inclusion probabilities and
//! samplers.
//!
//! Unit indices are zero-based positions in the caller's α vector.

mod rejective;
mod sampling;
mod successive;

pub use rejective::{rejective_inclusion, rejective_inclusion_with, rejective_profiles};
pub use sampling::{
    empirical_inclusion, empirical_inclusion_with, replication_seed, sample_rejective,
    sample_successive, PreparedSampler, RejectiveMethod, Scheme, RESTART_ATTEMPT_LIMIT,
};
pub use successive::{
    successive_first_k_set_distribution, successive_inclusion_exact, successive_profiles,
    SetDistribution, SuccessiveLaw, UnitSet, DEFAULT_EXACT_CUTOFF, MAX_EXACT_CUTOFF,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deviation of `Σα` from one accepted without a warning.
pub const SUM_TOLERANCE: f64 = 1e-10;
/// Largest deviation of `Σα` from one that is silently renormalized (with a
/// logged warning) instead of rejected.
pub const RENORMALIZE_TOLERANCE: f64 = 1e-6;

/// Drawing probabilities `α`: strictly positive, summing to one, at least two
/// units.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DrawingProbabilities {
    alpha: Vec<f64>,
    #[serde(skip)]
    order: Vec<usize>,
}

impl DrawingProbabilities {
    pub fn new(alpha: Vec<f64>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::Domain(format!(
                "need at least 2 drawing probabilities, got {}",
                alpha.len()
            )));
        }
        if let Some((i, a)) = alpha
            .iter()
            .enumerate()
            .find(|(_, a)| !a.is_finite() || **a <= 0.0)
        {
            return Err(Error::Domain(format!(
                "drawing probability {} is {a}; every entry must be positive",
                i + 1
            )));
        }
        let sum: f64 = alpha.iter().sum();
        let dev = (sum - 1.0).abs();
        if dev > RENORMALIZE_TOLERANCE {
            return Err(Error::Domain(format!(
                "drawing probabilities sum to {sum}, expected 1"
            )));
        }
        if dev > SUM_TOLERANCE {
            log::warn!("drawing probabilities sum to {sum}; renormalizing");
        }
        // rounding-level deviations are divided out too, so downstream
        // `1 - Σ` and `Σ_rest` forms agree
        let alpha = if sum == 1.0 {
            alpha
        } else {
            alpha.into_iter().map(|a| a / sum).collect()
        };
        let mut order: Vec<usize> = (0..alpha.len()).collect();
        // stable: ties keep input order
        order.sort_by(|&i, &j| alpha[j].total_cmp(&alpha[i]));
        Ok(Self { alpha, order })
    }

    /// `N` equal probabilities.
    pub fn uniform(units: usize) -> Result<Self> {
        Self::new(vec![1.0 / units as f64; units.max(1)])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// Unit indices by decreasing α, ties by index.
    pub fn descending_order(&self) -> &[usize] {
        &self.order
    }

    /// Copy with units relabeled in decreasing-α order.
    pub fn sorted_descending(&self) -> Self {
        let alpha: Vec<f64> = self.order.iter().map(|&i| self.alpha[i]).collect();
        let order = (0..alpha.len()).collect();
        Self { alpha, order }
    }

    pub fn max(&self) -> f64 {
        self.alpha[self.order[0]]
    }

    pub fn min(&self) -> f64 {
        self.alpha[*self.order.last().expect("non-empty")]
    }
}

impl AsRef<[f64]> for DrawingProbabilities {
    fn as_ref(&self) -> &[f64] {
        &self.alpha
    }
}

/// A sample size `1 ≤ n ≤ N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SampleSize(usize);

impl SampleSize {
    pub fn new(n: usize, alpha: &DrawingProbabilities) -> Result<Self> {
        if n == 0 || n > alpha.len() {
            return Err(Error::Argument(format!(
                "sample size {n} outside 1..={}",
                alpha.len()
            )));
        }
        Ok(Self(n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Design {
    Rejective,
    Successive,
}

impl std::fmt::Display for Design {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Design::Rejective => "rejective",
            Design::Successive => "successive",
        })
    }
}

/// First-order inclusion probabilities `π(n)` of one design and the per-draw
/// vector `p(n) = π(n) / n`, in the caller's unit order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InclusionProfile {
    pub design: Design,
    pub n: usize,
    pub pi: Vec<f64>,
    pub per_draw: Vec<f64>,
}

impl InclusionProfile {
    pub fn new(design: Design, n: usize, pi: Vec<f64>) -> Self {
        let per_draw = pi.iter().map(|p| p / n as f64).collect();
        Self {
            design,
            n,
            pi,
            per_draw,
        }
    }

    /// Checks `Σπ = n`, `0 < π_i ≤ 1` and that `π` is ordered like `α`.
    pub fn check_invariants(&self, alpha: &DrawingProbabilities) -> Result<()> {
        let sum: f64 = self.pi.iter().sum();
        if (sum - self.n as f64).abs() > 1e-9 {
            return Err(Error::Numerical(format!(
                "{} inclusion probabilities sum to {sum}, expected {}",
                self.design, self.n
            )));
        }
        if let Some(p) = self.pi.iter().find(|&&p| !(p > 0.0 && p <= 1.0)) {
            return Err(Error::Numerical(format!(
                "inclusion probability {p} outside (0, 1]"
            )));
        }
        let order = alpha.descending_order();
        for w in order.windows(2) {
            if self.pi[w[0]] < self.pi[w[1]] - 1e-12 {
                return Err(Error::Numerical(format!(
                    "units {} and {} are ordered differently by α and π",
                    w[0] + 1,
                    w[1] + 1
                )));
            }
        }
        Ok(())
    }
}

/// One realized sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleDraw {
    /// Distinct units in increasing index order.
    pub units: Vec<usize>,
    /// Order in which units were retained (successive sampling only).
    pub retained_order: Option<Vec<usize>>,
}

/// Monte Carlo inclusion frequencies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub scheme: Scheme,
    pub n: usize,
    pub pi_hat: Vec<f64>,
    /// Replications that included each unit; sums to `n * reps`.
    pub counts: Vec<u64>,
    pub se: Vec<f64>,
    pub reps: u64,
    pub seed: u64,
}

impl McEstimate {
    pub(crate) fn from_counts(
        scheme: Scheme,
        n: usize,
        counts: Vec<u64>,
        reps: u64,
        seed: u64,
    ) -> Self {
        let r = reps as f64;
        let pi_hat: Vec<f64> = counts.iter().map(|&c| c as f64 / r).collect();
        let se = pi_hat.iter().map(|&p| (p * (1.0 - p) / r).sqrt()).collect();
        Self {
            scheme,
            n,
            pi_hat,
            counts,
            se,
            reps,
            seed,
        }
    }

    /// `pi_hat / n` with its standard errors.
    pub fn per_draw(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.n as f64;
        (
            self.pi_hat.iter().map(|p| p / n).collect(),
            self.se.iter().map(|s| s / n).collect(),
        )
    }

    /// Largest `|pi_hat_i - exact_i| / se_i` over units with positive `se`;
    /// units with `se = 0` must match exactly or yield infinity.
    pub fn max_z(&self, exact: &[f64]) -> f64 {
        self.pi_hat
            .iter()
            .zip(&self.se)
            .zip(exact)
            .map(|((&p, &s), &e)| {
                let d = (p - e).abs();
                if s > 0.0 {
                    d / s
                } else if d < 1e-12 {
                    0.0
                } else {
                    f64::INFINITY
                }
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_drawing_probabilities() {
        assert!(DrawingProbabilities::new(vec![1.0]).is_err());
        assert!(DrawingProbabilities::new(vec![0.5, 0.5, 0.0]).is_err());
        assert!(DrawingProbabilities::new(vec![0.5, 0.6, -0.1]).is_err());
        assert!(DrawingProbabilities::new(vec![0.5, 0.4]).is_err());
        assert!(matches!(
            DrawingProbabilities::new(vec![0.3, 0.3, 0.3]),
            Err(Error::Domain(_))
        ));
        let a = DrawingProbabilities::new(vec![0.5, 0.3, 0.2]).unwrap();
        assert_eq!(a.as_slice(), &[0.5, 0.3, 0.2]);
    }

    #[test]
    fn renormalizes_small_deviation() {
        let a = DrawingProbabilities::new(vec![0.5, 0.3, 0.2000005]).unwrap();
        let s: f64 = a.as_slice().iter().sum();
        assert!((s - 1.0).abs() < 1e-15);
        assert!((a.as_slice()[0] - 0.5 / 1.0000005).abs() < 1e-15);
    }

    #[test]
    fn descending_order_is_stable() {
        let a = DrawingProbabilities::new(vec![0.2, 0.3, 0.2, 0.3]).unwrap();
        assert_eq!(a.descending_order(), &[1, 3, 0, 2]);
        assert_eq!(a.sorted_descending().as_slice(), &[0.3, 0.3, 0.2, 0.2]);
        assert_eq!(a.max(), 0.3);
        assert_eq!(a.min(), 0.2);
    }

    #[test]
    fn sample_size_bounds() {
        let a = DrawingProbabilities::uniform(4).unwrap();
        assert!(SampleSize::new(0, &a).is_err());
        assert!(SampleSize::new(5, &a).is_err());
        assert_eq!(SampleSize::new(4, &a).unwrap().get(), 4);
    }
}
