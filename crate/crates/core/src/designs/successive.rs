//! Exact successive-sampling laws by dynamic programming over subsets.
//!
//! `P(S)` is the probability that the first `|S|` distinct units retained are
//! exactly `S`:
//!
//! `P(S) = Σ_{j ∈ S} P(S \ {j}) · α_j / rest(S \ {j})`
//!
//! where `rest(T) = Σ_{l ∉ T} α_l` is accumulated over the complement so it
//! never suffers cancellation. States are bitmasks, so the cost is
//! `O(2^N · N)` time and two `2^N` tables.

use super::{Design, DrawingProbabilities, InclusionProfile, SampleSize};
use crate::error::{Error, Result};

/// Largest population handled exactly unless the caller raises the limit.
pub const DEFAULT_EXACT_CUTOFF: usize = 20;
/// Hard ceiling on the exact cutoff (two `2^25` tables of `f64` are 512 MiB).
pub const MAX_EXACT_CUTOFF: usize = 25;

const CROSS_CHECK_TOL: f64 = 1e-11;

/// A set of units as a bitmask, bit `i` for unit `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitSet(pub u32);

impl UnitSet {
    pub fn from_units(units: &[usize]) -> Self {
        Self(units.iter().fold(0, |m, &u| m | 1 << u))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, unit: usize) -> bool {
        self.0 >> unit & 1 == 1
    }

    pub fn units(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            (m != 0).then(|| {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                u
            })
        })
    }
}

/// Probabilities of every `k`-subset being the first `k` retained units.
#[derive(Debug, Clone, PartialEq)]
pub struct SetDistribution {
    pub k: usize,
    pub entries: Vec<(UnitSet, f64)>,
}

impl SetDistribution {
    pub fn get(&self, set: UnitSet) -> f64 {
        self.entries
            .binary_search_by_key(&set, |e| e.0)
            .map_or(0.0, |i| self.entries[i].1)
    }

    pub fn total(&self) -> f64 {
        self.entries.iter().map(|e| e.1).sum()
    }
}

/// The full subset law of successive sampling for one α.
#[derive(Debug, Clone)]
pub struct SuccessiveLaw {
    alpha: Vec<f64>,
    first: Vec<f64>,
    rest: Vec<f64>,
}

impl SuccessiveLaw {
    pub fn new(alpha: &DrawingProbabilities, cutoff: usize) -> Result<Self> {
        let cutoff = cutoff.min(MAX_EXACT_CUTOFF);
        let big_n = alpha.len();
        if big_n > cutoff {
            return Err(Error::Capability {
                what: "exact successive sampling population size",
                limit: cutoff,
                got: big_n,
                hint: "use Monte Carlo estimation instead",
            });
        }
        let a = alpha.as_slice().to_vec();
        let states = 1usize << big_n;
        let full = states - 1;

        let mut rest = vec![0.0; states];
        for mask in (0..full).rev() {
            let l = (!mask & full).trailing_zeros() as usize;
            rest[mask] = rest[mask | 1 << l] + a[l];
        }

        let mut first = vec![0.0; states];
        first[0] = 1.0;
        for mask in 1..states {
            let mut p = 0.0;
            let mut m = mask;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                let prev = mask & !(1 << j);
                p += first[prev] * a[j] / rest[prev];
            }
            first[mask] = p;
        }
        Ok(Self {
            alpha: a,
            first,
            rest,
        })
    }

    pub fn units(&self) -> usize {
        self.alpha.len()
    }

    pub fn set_distribution(&self, k: usize) -> SetDistribution {
        let entries = (0..self.first.len() as u32)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (UnitSet(m), self.first[m as usize]))
            .collect();
        SetDistribution { k, entries }
    }

    /// `P(k-th distinct retained unit = i)` for every unit, `k ≥ 1`.
    pub fn position_probabilities(&self, k: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.units()];
        for (mask, &p) in self.first.iter().enumerate() {
            if mask.count_ones() as usize != k - 1 || p == 0.0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                if mask >> i & 1 == 0 {
                    *o += p * self.alpha[i] / self.rest[mask];
                }
            }
        }
        out
    }

    /// Inclusion profiles for all `n = 1..=N`, computed along two routes
    /// (subset marginals and summed draw-position probabilities) that must
    /// agree to `1e-11`.
    pub fn profiles(&self) -> Result<Vec<InclusionProfile>> {
        let big_n = self.units();
        // by_size[n][i] = Σ P(S) over |S| = n, i ∈ S
        let mut by_size = vec![vec![0.0; big_n]; big_n + 1];
        // by_pos[k][i] = P(k-th retained unit = i)
        let mut by_pos = vec![vec![0.0; big_n]; big_n + 1];
        for (mask, &p) in self.first.iter().enumerate() {
            let size = mask.count_ones() as usize;
            for i in 0..big_n {
                if mask >> i & 1 == 1 {
                    by_size[size][i] += p;
                } else {
                    by_pos[size + 1][i] += p * self.alpha[i] / self.rest[mask];
                }
            }
        }
        let mut cumulative = vec![0.0; big_n];
        let mut out = Vec::with_capacity(big_n);
        for n in 1..=big_n {
            for (c, x) in cumulative.iter_mut().zip(&by_pos[n]) {
                *c += x;
            }
            if let Some((i, d)) = by_size[n]
                .iter()
                .zip(&cumulative)
                .map(|(a, b)| (a - b).abs())
                .enumerate()
                .find(|(_, d)| *d > CROSS_CHECK_TOL)
            {
                return Err(Error::Numerical(format!(
                    "successive inclusion of unit {} at n = {n}: routes differ by {d:e}",
                    i + 1
                )));
            }
            let pi = by_size[n].iter().map(|p| p.min(1.0)).collect();
            out.push(InclusionProfile::new(Design::Successive, n, pi));
        }
        Ok(out)
    }

    pub fn inclusion(&self, n: SampleSize) -> Result<InclusionProfile> {
        let mut all = self.profiles()?;
        Ok(all.swap_remove(n.get() - 1))
    }
}

pub fn successive_first_k_set_distribution(
    alpha: &DrawingProbabilities,
    k: usize,
) -> Result<SetDistribution> {
    if k == 0 || k > alpha.len() {
        return Err(Error::Argument(format!(
            "set size {k} outside 1..={}",
            alpha.len()
        )));
    }
    Ok(SuccessiveLaw::new(alpha, DEFAULT_EXACT_CUTOFF)?.set_distribution(k))
}

pub fn successive_inclusion_exact(
    alpha: &DrawingProbabilities,
    n: SampleSize,
) -> Result<InclusionProfile> {
    SuccessiveLaw::new(alpha, DEFAULT_EXACT_CUTOFF)?.inclusion(n)
}

/// Successive profiles for every `n = 1..=N` from a single subset pass.
pub fn successive_profiles(
    alpha: &DrawingProbabilities,
    cutoff: usize,
) -> Result<Vec<InclusionProfile>> {
    SuccessiveLaw::new(alpha, cutoff)?.profiles()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn alpha(v: &[f64]) -> DrawingProbabilities {
        DrawingProbabilities::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unit_set_iteration() {
        let s = UnitSet::from_units(&[4, 0, 2]);
        assert_eq!(s.units().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2) && !s.contains(1));
    }

    #[test]
    fn first_set_examples() {
        let a = alpha(&[0.5, 0.3, 0.2]);
        let one = successive_first_k_set_distribution(&a, 1).unwrap();
        for i in 0..3 {
            assert_relative_eq!(one.get(UnitSet::from_units(&[i])), a.as_slice()[i]);
        }
        let two = successive_first_k_set_distribution(&a, 2).unwrap();
        // orders (1,2) and (2,1)
        let want = 0.5 * 0.3 / 0.5 + 0.3 * 0.5 / 0.7;
        assert_relative_eq!(
            two.get(UnitSet::from_units(&[0, 1])),
            want,
            max_relative = 1e-14
        );
        assert_relative_eq!(two.total(), 1.0, epsilon = 1e-10);
        let three = successive_first_k_set_distribution(&a, 3).unwrap();
        assert_relative_eq!(three.get(UnitSet(0b111)), 1.0, epsilon = 1e-12);
        assert!(successive_first_k_set_distribution(&a, 0).is_err());
        assert!(successive_first_k_set_distribution(&a, 4).is_err());
    }

    #[test]
    fn worked_inclusion() {
        let a = alpha(&[0.5, 0.3, 0.2]);
        let p1 = successive_inclusion_exact(&a, SampleSize::new(1, &a).unwrap()).unwrap();
        for (g, w) in p1.pi.iter().zip([0.5, 0.3, 0.2]) {
            assert_relative_eq!(*g, w, epsilon = 1e-15);
        }
        // ordered pairs with chain probabilities α_j1 α_j2 / (1 - α_j1)
        let p2 = successive_inclusion_exact(&a, SampleSize::new(2, &a).unwrap()).unwrap();
        let want = [
            0.5 + 0.3 * 0.5 / 0.7 + 0.2 * 0.5 / 0.8,
            0.3 + 0.5 * 0.3 / 0.5 + 0.2 * 0.3 / 0.8,
            0.2 + 0.5 * 0.2 / 0.5 + 0.3 * 0.2 / 0.7,
        ];
        for (g, w) in p2.pi.iter().zip(want) {
            assert_relative_eq!(*g, w, max_relative = 1e-12);
        }
        assert_relative_eq!(p2.pi[0], 0.839286, epsilon = 5e-7);
        assert_relative_eq!(p2.pi[2], 0.485714, epsilon = 5e-7);
    }

    #[test]
    fn uniform_is_symmetric() {
        let a = DrawingProbabilities::uniform(7).unwrap();
        for p in successive_profiles(&a, DEFAULT_EXACT_CUTOFF).unwrap() {
            for x in &p.pi {
                assert_relative_eq!(*x, p.n as f64 / 7.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn position_probabilities_sum_to_one() {
        let a = alpha(&[0.1, 0.4, 0.2, 0.3]);
        let law = SuccessiveLaw::new(&a, 20).unwrap();
        for k in 1..=4 {
            let s: f64 = law.position_probabilities(k).iter().sum();
            assert_relative_eq!(s, 1.0, epsilon = 1e-12);
        }
        assert_eq!(law.position_probabilities(1), a.as_slice());
    }

    #[test]
    fn cutoff_is_enforced() {
        let a = DrawingProbabilities::uniform(6).unwrap();
        assert!(matches!(
            SuccessiveLaw::new(&a, 5),
            Err(Error::Capability {
                limit: 5,
                got: 6,
                ..
            })
        ));
        let big = DrawingProbabilities::uniform(21).unwrap();
        assert!(successive_inclusion_exact(&big, SampleSize::new(2, &big).unwrap()).is_err());
    }
}
