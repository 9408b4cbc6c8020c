//! Samplers for both designs and Monte Carlo inclusion frequencies.
//!
//! Every draw is driven by a ChaCha8 stream seeded from a `u64`. Replication
//! `r` of a Monte Carlo run uses [`replication_seed`]`(seed, r)`, so results do
//! not depend on how replications are scheduled across threads.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{DrawingProbabilities, McEstimate, SampleDraw, SampleSize};
use crate::error::{Error, Result};
use crate::esf::choose_inv_scale;
use crate::par::{fold_indexed, Execution};

/// Attempts the restart sampler makes before giving up on one sample.
pub const RESTART_ATTEMPT_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectiveMethod {
    /// Draw `n` times with replacement, start over on any duplicate.
    Restart,
    /// Accept or reject units one at a time with exact conditional
    /// probabilities from suffix symmetric-function tables.
    #[default]
    SequentialDp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Rejective(RejectiveMethod),
    Successive,
}

/// SplitMix64 finalizer applied to `seed + (r + 1) · γ`, with `γ` the 64-bit
/// golden-ratio increment.
pub fn replication_seed(seed: u64, r: u64) -> u64 {
    let mut z = seed.wrapping_add(r.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A sampler with its per-`(α, n)` tables built once.
#[derive(Debug, Clone)]
pub struct PreparedSampler {
    n: usize,
    kind: Prepared,
}

#[derive(Debug, Clone)]
enum Prepared {
    Restart(WeightedIndex<f64>),
    Sequential {
        weights: Vec<f64>,
        // suffix[i * (n + 1) + r] = e_r(w_i, .., w_{N-1})
        suffix: Vec<f64>,
    },
    Successive(Vec<f64>),
}

impl PreparedSampler {
    pub fn new(scheme: Scheme, alpha: &DrawingProbabilities, n: SampleSize) -> Self {
        let a = alpha.as_slice();
        let n = n.get();
        let kind = match scheme {
            Scheme::Rejective(RejectiveMethod::Restart) => {
                Prepared::Restart(WeightedIndex::new(a).expect("validated α"))
            }
            Scheme::Rejective(RejectiveMethod::SequentialDp) => {
                let inv = choose_inv_scale(a, n);
                let weights: Vec<f64> = a.iter().map(|x| x * inv).collect();
                let big_n = a.len();
                let w = n + 1;
                let mut suffix = vec![0.0; (big_n + 1) * w];
                suffix[big_n * w] = 1.0;
                for i in (0..big_n).rev() {
                    suffix[i * w] = 1.0;
                    for r in 1..=n {
                        suffix[i * w + r] =
                            suffix[(i + 1) * w + r] + weights[i] * suffix[(i + 1) * w + r - 1];
                    }
                }
                Prepared::Sequential { weights, suffix }
            }
            Scheme::Successive => Prepared::Successive(a.to_vec()),
        };
        Self { n, kind }
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<SampleDraw> {
        match &self.kind {
            Prepared::Restart(dist) => draw_restart(dist, self.n, rng),
            Prepared::Sequential { weights, suffix } => {
                Ok(draw_sequential(weights, suffix, self.n, rng))
            }
            Prepared::Successive(a) => Ok(draw_successive(a, self.n, rng)),
        }
    }
}

fn draw_restart<R: Rng + ?Sized>(
    dist: &WeightedIndex<f64>,
    n: usize,
    rng: &mut R,
) -> Result<SampleDraw> {
    let mut units = Vec::with_capacity(n);
    for _ in 0..RESTART_ATTEMPT_LIMIT {
        units.clear();
        loop {
            let u = dist.sample(rng);
            if units.contains(&u) {
                break;
            }
            units.push(u);
            if units.len() == n {
                units.sort_unstable();
                return Ok(SampleDraw {
                    units,
                    retained_order: None,
                });
            }
        }
    }
    Err(Error::RestartExhausted(RESTART_ATTEMPT_LIMIT))
}

fn draw_sequential<R: Rng + ?Sized>(
    weights: &[f64],
    suffix: &[f64],
    n: usize,
    rng: &mut R,
) -> SampleDraw {
    let big_n = weights.len();
    let w = n + 1;
    let mut units = Vec::with_capacity(n);
    let mut slots = n;
    for i in 0..big_n {
        if slots == 0 {
            break;
        }
        if slots == big_n - i {
            units.extend(i..big_n);
            break;
        }
        let p = weights[i] * suffix[(i + 1) * w + slots - 1] / suffix[i * w + slots];
        if rng.random::<f64>() < p {
            units.push(i);
            slots -= 1;
        }
    }
    SampleDraw {
        units,
        retained_order: None,
    }
}

fn draw_successive<R: Rng + ?Sized>(a: &[f64], n: usize, rng: &mut R) -> SampleDraw {
    let mut retained = vec![false; a.len()];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        // redrawing until a new unit appears is the same as drawing from the
        // un-retained units in proportion to α
        let mass: f64 = a
            .iter()
            .zip(&retained)
            .filter(|(_, &r)| !r)
            .map(|(x, _)| x)
            .sum();
        let target = rng.random::<f64>() * mass;
        let mut acc = 0.0;
        let mut pick = None;
        for (i, &x) in a.iter().enumerate() {
            if retained[i] {
                continue;
            }
            pick = Some(i);
            acc += x;
            if target < acc {
                break;
            }
        }
        let i = pick.expect("at least one unit remains");
        retained[i] = true;
        order.push(i);
    }
    let mut units = order.clone();
    units.sort_unstable();
    SampleDraw {
        units,
        retained_order: Some(order),
    }
}

/// One rejective sample of size `n`.
pub fn sample_rejective(
    alpha: &DrawingProbabilities,
    n: SampleSize,
    seed: u64,
    method: RejectiveMethod,
) -> Result<SampleDraw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PreparedSampler::new(Scheme::Rejective(method), alpha, n).draw(&mut rng)
}

/// One successive sample of size `n`, with the retention order.
pub fn sample_successive(alpha: &DrawingProbabilities, n: SampleSize, seed: u64) -> SampleDraw {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw_successive(alpha.as_slice(), n.get(), &mut rng)
}

pub fn empirical_inclusion(
    scheme: Scheme,
    alpha: &DrawingProbabilities,
    n: SampleSize,
    reps: u64,
    seed: u64,
) -> Result<McEstimate> {
    empirical_inclusion_with(scheme, alpha, n, reps, seed, Execution::default())
}

/// Inclusion frequencies over `reps` independent samples. Integer counts are
/// merged, so sequential and parallel runs are bit-identical.
pub fn empirical_inclusion_with(
    scheme: Scheme,
    alpha: &DrawingProbabilities,
    n: SampleSize,
    reps: u64,
    seed: u64,
    exec: Execution,
) -> Result<McEstimate> {
    if reps == 0 {
        return Err(Error::Argument("reps must be at least 1".into()));
    }
    let big_n = alpha.len();
    let sampler = PreparedSampler::new(scheme, alpha, n);
    let counts = fold_indexed(
        exec,
        reps as usize,
        || Ok(vec![0u64; big_n]),
        |acc: Result<Vec<u64>>, r| {
            let mut acc = acc?;
            let mut rng = ChaCha8Rng::seed_from_u64(replication_seed(seed, r as u64));
            for u in sampler.draw(&mut rng)?.units {
                acc[u] += 1;
            }
            Ok(acc)
        },
        |a, b| {
            let (mut a, b) = (a?, b?);
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            Ok(a)
        },
    )?;
    Ok(McEstimate::from_counts(scheme, n.get(), counts, reps, seed))
}
