//! Densities on strictly increasing `n`-tuples of units and the exhaustive
//! multivariate likelihood-ratio order check
//! `f(x) g(y) ≤ f(x ∨ y) g(x ∧ y)`.
//!
//! Tuples are stored in lexicographic order; `x ∨ y` and `x ∧ y` of two
//! increasing tuples are again increasing, and are located by combinatorial
//! ranking.

use serde::Serialize;

use crate::designs::DrawingProbabilities;
use crate::error::{Error, Result};
use crate::par::{map_indexed, Execution};

/// Relative slack allowed in the likelihood-ratio inequality.
pub const LR_RELATIVE_SLACK: f64 = 1e-12;
pub const MAX_SUCCESSIVE_UNITS: usize = 10;
pub const MAX_SUCCESSIVE_TUPLE_SIZE: usize = 6;
const MAX_TUPLES: u64 = 5_000_000;

/// Unnormalized weights on all increasing `size`-tuples over `0..units`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedTupleDensity {
    units: usize,
    size: usize,
    tuples: Vec<Vec<usize>>,
    values: Vec<f64>,
}

impl OrderedTupleDensity {
    /// Builds a density by evaluating `weight` on every tuple.
    pub fn from_fn<F>(units: usize, size: usize, weight: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> f64,
    {
        if size == 0 || size > units {
            return Err(Error::Argument(format!(
                "tuple size {size} outside 1..={units}"
            )));
        }
        let count = binomial(units, size);
        if count > MAX_TUPLES {
            return Err(Error::Capability {
                what: "ordered tuple count",
                limit: MAX_TUPLES as usize,
                got: count as usize,
                hint: "reduce the population or sample size",
            });
        }
        let tuples = combinations(units, size);
        let values: Vec<f64> = tuples.iter().map(|t| t.as_slice()).map(weight).collect();
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) || values.iter().all(|&v| v == 0.0) {
            return Err(Error::Domain(
                "tuple weights must be non-negative with one positive".into(),
            ));
        }
        Ok(Self {
            units,
            size,
            tuples,
            values,
        })
    }

    pub fn units(&self) -> usize {
        self.units
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.tuples
            .iter()
            .map(Vec::as_slice)
            .zip(self.values.iter().copied())
    }

    pub fn get(&self, tuple: &[usize]) -> f64 {
        self.values[rank(tuple, self.units)]
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Per-unit inclusion probabilities under the normalized density.
    pub fn marginal_inclusion(&self) -> Vec<f64> {
        let total = self.total();
        let mut out = vec![0.0; self.units];
        for (t, v) in self.iter() {
            for &u in t {
                out[u] += v / total;
            }
        }
        out
    }
}

/// `f(x) = ∏_j α_{x_j}` on increasing tuples (the rejective sample law,
/// unnormalized).
pub fn ordered_density_rejective(
    alpha: &DrawingProbabilities,
    n: usize,
) -> Result<OrderedTupleDensity> {
    let a = alpha.as_slice();
    OrderedTupleDensity::from_fn(a.len(), n, |t| t.iter().map(|&i| a[i]).product())
}

/// Successive sample law on increasing tuples: for each tuple, the sum over
/// its orderings `σ` of `∏_t α_{σ_t} / (1 - Σ_{s<t} α_{σ_s})`.
pub fn ordered_density_successive(
    alpha: &DrawingProbabilities,
    n: usize,
) -> Result<OrderedTupleDensity> {
    let a = alpha.as_slice();
    if a.len() > MAX_SUCCESSIVE_UNITS || n > MAX_SUCCESSIVE_TUPLE_SIZE {
        return Err(Error::Capability {
            what: "successive tuple enumeration (units, size)",
            limit: MAX_SUCCESSIVE_UNITS.max(MAX_SUCCESSIVE_TUPLE_SIZE),
            got: a.len().max(n),
            hint: "enumeration is limited to N ≤ 10 and n ≤ 6",
        });
    }
    OrderedTupleDensity::from_fn(a.len(), n, |t| {
        let mut left = t.to_vec();
        orderings_sum(a, &mut left, 0.0)
    })
}

fn orderings_sum(a: &[f64], left: &mut Vec<usize>, used: f64) -> f64 {
    if left.is_empty() {
        return 1.0;
    }
    let mut total = 0.0;
    for k in 0..left.len() {
        let j = left.swap_remove(k);
        total += a[j] / (1.0 - used) * orderings_sum(a, left, used + a[j]);
        left.push(j);
        let last = left.len() - 1;
        left.swap(k, last);
    }
    total
}

/// Result of the exhaustive likelihood-ratio check `f ≥_lr g`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LrVerdict {
    pub holds: bool,
    /// Largest relative excess `(f(x)g(y) - f(x∨y)g(x∧y)) / max(both)` over
    /// all pairs; non-positive when the order holds exactly.
    pub worst_excess: f64,
    /// The pair attaining `worst_excess`, as `(x, y)`.
    pub worst_pair: Option<(Vec<usize>, Vec<usize>)>,
    pub pairs_checked: u64,
}

pub fn lr_order_check(f: &OrderedTupleDensity, g: &OrderedTupleDensity) -> Result<LrVerdict> {
    lr_order_check_with(f, g, Execution::default())
}

/// Checks `f(x) g(y) ≤ f(x ∨ y) g(x ∧ y)` for every pair of tuples, within
/// relative slack [`LR_RELATIVE_SLACK`].
pub fn lr_order_check_with(
    f: &OrderedTupleDensity,
    g: &OrderedTupleDensity,
    exec: Execution,
) -> Result<LrVerdict> {
    if f.units != g.units || f.size != g.size {
        return Err(Error::Argument(format!(
            "densities live on different tuple spaces: ({}, {}) vs ({}, {})",
            f.units, f.size, g.units, g.size
        )));
    }
    let len = f.len();
    // per-x worst excess, in index order
    let rows = map_indexed(exec, len, |xi| {
        let x = &f.tuples[xi];
        let mut best = (f64::NEG_INFINITY, 0usize);
        let mut join = vec![0; f.size];
        let mut meet = vec![0; f.size];
        for (yi, y) in g.tuples.iter().enumerate() {
            for j in 0..f.size {
                join[j] = x[j].max(y[j]);
                meet[j] = x[j].min(y[j]);
            }
            let lhs = f.values[xi] * g.values[yi];
            let rhs = f.get(&join) * g.get(&meet);
            let scale = lhs.max(rhs);
            let excess = if scale > 0.0 {
                (lhs - rhs) / scale
            } else {
                0.0
            };
            if excess > best.0 {
                best = (excess, yi);
            }
        }
        best
    });
    let (xi, (worst, yi)) =
        rows.into_iter()
            .enumerate()
            .fold((0, (f64::NEG_INFINITY, 0)), |acc, r| {
                if r.1 .0 > acc.1 .0 {
                    r
                } else {
                    acc
                }
            });
    let holds = worst <= LR_RELATIVE_SLACK;
    Ok(LrVerdict {
        holds,
        worst_excess: worst,
        worst_pair: Some((f.tuples[xi].clone(), g.tuples[yi].clone())),
        pairs_checked: (len * len) as u64,
    })
}

/// `cdf[j][k] = P(X_j ≤ k)` under the normalized density, for coordinate
/// `j` of the increasing tuple and unit `k`.
pub fn coordinate_cdfs(d: &OrderedTupleDensity) -> Vec<Vec<f64>> {
    let total = d.total();
    let mut pmf = vec![vec![0.0; d.units]; d.size];
    for (t, v) in d.iter() {
        for (j, &u) in t.iter().enumerate() {
            pmf[j][u] += v / total;
        }
    }
    pmf.into_iter()
        .map(|row| {
            row.into_iter()
                .scan(0.0, |acc, p| {
                    *acc += p;
                    Some(*acc)
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DominanceVerdict {
    pub holds: bool,
    /// Smallest `P(Y_j ≤ k) - P(X_j ≤ k)` over coordinates and units.
    pub min_slack: f64,
}

/// Whether every coordinate of `X ~ f` is stochastically no smaller than the
/// matching coordinate of `Y ~ g`.
pub fn stochastic_dominance(
    f: &OrderedTupleDensity,
    g: &OrderedTupleDensity,
    tol: f64,
) -> Result<DominanceVerdict> {
    if f.units != g.units || f.size != g.size {
        return Err(Error::Argument(
            "densities live on different tuple spaces".into(),
        ));
    }
    let (cf, cg) = (coordinate_cdfs(f), coordinate_cdfs(g));
    let min_slack = cf
        .iter()
        .flatten()
        .zip(cg.iter().flatten())
        .map(|(x, y)| y - x)
        .fold(f64::INFINITY, f64::min);
    Ok(DominanceVerdict {
        holds: min_slack >= -tol,
        min_slack,
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] != i + n - k) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Lexicographic rank of an increasing tuple among all `k`-subsets of `0..n`.
fn rank(tuple: &[usize], n: usize) -> usize {
    let k = tuple.len();
    let mut r = 0u64;
    let mut prev = 0usize;
    for (j, &c) in tuple.iter().enumerate() {
        for v in prev..c {
            r += binomial(n - 1 - v, k - 1 - j);
        }
        prev = c + 1;
    }
    r as usize
}
