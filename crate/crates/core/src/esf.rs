//! Elementary symmetric functions of non-negative weights.
//!
//! `e_k(w)` is the sum of products over all `k`-subsets of `w`, with
//! `e_0 = 1` and `e_k = 0` for `k > m`. Everything here uses the
//! one-weight-at-a-time recurrence `e_k <- e_k + w_j * e_{k-1}`, which only
//! ever adds non-negative terms. Leave-one-out and leave-two-out tables rerun
//! the recurrence over the remaining weights instead of peeling a weight off
//! the full table, since the peeling identity subtracts nearly equal numbers
//! when the removed weight is large.
//!
//! When the unscaled values would leave `[1e-300, 1e300]` the table is built
//! from `w / c` with `c = max w` and stores `ln c`; the true value is
//! `values[k] * c^k`.

use crate::error::{Error, Result};

const HUGE: f64 = 1e300;
const TINY: f64 = 1e-300;

/// Non-negative weights with at least one positive entry.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Argument("weight vector is empty".into()));
        }
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || **w < 0.0)
        {
            return Err(Error::Argument(format!(
                "weight {i} is {w}; weights must be finite and non-negative"
            )));
        }
        if weights.iter().all(|&w| w == 0.0) {
            return Err(Error::Argument("all weights are zero".into()));
        }
        Ok(Self(weights))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            return Err(Error::Argument(format!(
                "unit index {i} out of range for {} weights",
                self.len()
            )));
        }
        Ok(())
    }
}

/// Values `e_0..e_m` of a weight vector, possibly stored on a common scale.
#[derive(Debug, Clone, PartialEq)]
pub struct EsfTable {
    values: Vec<f64>,
    log_scale: f64,
}

impl EsfTable {
    /// Number of weights the table was built from.
    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    /// `e_k`, unscaled. Zero for `k > m`; may overflow to infinity for
    /// scaled tables, in which case use [`EsfTable::ln`].
    pub fn get(&self, k: usize) -> f64 {
        match self.values.get(k) {
            Some(&v) if self.log_scale == 0.0 => v,
            Some(&v) => v * (k as f64 * self.log_scale).exp(),
            None => 0.0,
        }
    }

    /// `e_k / c^k`, the stored value.
    pub fn scaled(&self, k: usize) -> f64 {
        self.values.get(k).copied().unwrap_or(0.0)
    }

    /// `ln c`, zero when the table is unscaled.
    pub fn log_scale(&self) -> f64 {
        self.log_scale
    }

    pub fn is_scaled(&self) -> bool {
        self.log_scale != 0.0
    }

    /// Natural log of `e_k` (negative infinity when `e_k = 0`).
    pub fn ln(&self, k: usize) -> f64 {
        self.scaled(k).ln() + k as f64 * self.log_scale
    }

    /// Unscaled values `e_0..e_m`.
    pub fn to_vec(&self) -> Vec<f64> {
        (0..self.values.len()).map(|k| self.get(k)).collect()
    }

    /// First `k` in `1..m` where `e_{k-1} e_{k+1} > e_k^2` beyond relative
    /// tolerance `rel_tol`, if any.
    pub fn newton_violation(&self, rel_tol: f64) -> Option<usize> {
        let m = self.degree();
        (1..m).find(|&k| {
            // the common scale factor cancels on both sides
            let lhs = self.values[k - 1] * self.values[k + 1];
            let rhs = self.values[k] * self.values[k];
            lhs > rhs * (1.0 + rel_tol)
        })
    }
}

/// Runs the recurrence over `weights * inv_scale`, keeping orders `0..=kmax`.
pub(crate) fn recurrence<I>(weights: I, kmax: usize, inv_scale: f64) -> Vec<f64>
where
    I: IntoIterator<Item = f64>,
{
    let mut e = vec![0.0; kmax + 1];
    e[0] = 1.0;
    let mut seen = 0usize;
    for w in weights {
        let w = w * inv_scale;
        seen += 1;
        for k in (1..=seen.min(kmax)).rev() {
            e[k] += w * e[k - 1];
        }
    }
    e
}

/// Picks `1/c` for a weight set: 1 when the unscaled recurrence up to `kmax`
/// stays in range, `1 / max w` otherwise.
pub(crate) fn choose_inv_scale(weights: &[f64], kmax: usize) -> f64 {
    let positive = weights.iter().filter(|&&w| w > 0.0).count();
    let raw = recurrence(weights.iter().copied(), kmax, 1.0);
    let in_range = raw
        .iter()
        .enumerate()
        .all(|(k, &v)| v.is_finite() && v <= HUGE && (k > positive || v >= TINY));
    if in_range {
        1.0
    } else {
        1.0 / weights.iter().copied().fold(0.0, f64::max)
    }
}

fn table_from<I>(weights: I, all: &[f64], kmax: usize) -> EsfTable
where
    I: IntoIterator<Item = f64>,
{
    let inv_scale = choose_inv_scale(all, kmax);
    EsfTable {
        values: recurrence(weights, kmax, inv_scale),
        log_scale: if inv_scale == 1.0 {
            0.0
        } else {
            -inv_scale.ln()
        },
    }
}

/// `e_0..e_m` of `w`.
pub fn esf_all(w: &WeightVector) -> EsfTable {
    let s = w.as_slice();
    table_from(s.iter().copied(), s, s.len())
}

/// `e_0..e_{m-1}` of `w` with entry `i` (zero-based) removed.
pub fn esf_leave_one_out(w: &WeightVector, i: usize) -> Result<EsfTable> {
    w.check_index(i)?;
    let rest: Vec<f64> = without(w.as_slice(), &[i]);
    Ok(table_from(rest.iter().copied(), &rest, rest.len()))
}

/// `e_0..e_{m-2}` of `w` with entries `i` and `j` (zero-based) removed.
pub fn esf_leave_two_out(w: &WeightVector, i: usize, j: usize) -> Result<EsfTable> {
    w.check_index(i)?;
    w.check_index(j)?;
    if i == j {
        return Err(Error::Argument(format!(
            "leave-two-out needs distinct indices, got {i} twice"
        )));
    }
    let rest: Vec<f64> = without(w.as_slice(), &[i, j]);
    Ok(table_from(rest.iter().copied(), &rest, rest.len()))
}

fn without(w: &[f64], skip: &[usize]) -> Vec<f64> {
    w.iter()
        .enumerate()
        .filter(|(k, _)| !skip.contains(k))
        .map(|(_, &x)| x)
        .collect()
}
