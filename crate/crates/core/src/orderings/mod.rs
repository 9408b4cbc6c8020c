//! Majorization, Shannon entropy, Kullback–Leibler divergence and the
//! multivariate likelihood-ratio order on ordered sample tuples.
//!
//! Logarithms are natural throughout.

mod lr;

pub use lr::{
    coordinate_cdfs, lr_order_check, lr_order_check_with, ordered_density_rejective,
    ordered_density_successive, stochastic_dominance, DominanceVerdict, LrVerdict,
    OrderedTupleDensity, LR_RELATIVE_SLACK, MAX_SUCCESSIVE_TUPLE_SIZE, MAX_SUCCESSIVE_UNITS,
};

use serde::Serialize;

use crate::error::{Error, Result};

/// Default absolute tolerance on partial sums.
pub const DEFAULT_MAJORIZATION_TOL: f64 = 1e-10;

/// Entries in `[0, 1]` summing to one within `1e-10`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if let Some(x) = p.iter().find(|x| !(0.0..=1.0).contains(*x)) {
            return Err(Error::Domain(format!("probability {x} outside [0, 1]")));
        }
        let s: f64 = p.iter().sum();
        if (s - 1.0).abs() > 1e-10 {
            return Err(Error::Domain(format!("probabilities sum to {s}")));
        }
        Ok(Self(p))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl AsRef<[f64]> for ProbabilityVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Outcome of testing `a ≺ b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MajorizationVerdict {
    pub holds: bool,
    /// Smallest `top_k(b) - top_k(a)` over `k = 1..N-1`, where `top_k` is the
    /// sum of the `k` largest entries (zero when `N = 1`).
    pub min_slack: f64,
    /// `|Σa - Σb|`.
    pub sum_gap: f64,
}

/// Tests whether `b` majorizes `a` (`a ≺ b`) with absolute tolerance `tol`.
pub fn majorized_by(a: &[f64], b: &[f64], tol: f64) -> Result<MajorizationVerdict> {
    if a.len() != b.len() {
        return Err(Error::Argument(format!(
            "majorization needs equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let desc = |v: &[f64]| {
        let mut s = v.to_vec();
        s.sort_by(|x, y| y.total_cmp(x));
        s
    };
    let (a, b) = (desc(a), desc(b));
    let mut min_slack = f64::INFINITY;
    let (mut sa, mut sb) = (0.0, 0.0);
    for k in 0..a.len() {
        sa += a[k];
        sb += b[k];
        if k + 1 < a.len() {
            min_slack = min_slack.min(sb - sa);
        }
    }
    if !min_slack.is_finite() {
        min_slack = 0.0;
    }
    let sum_gap = (sa - sb).abs();
    Ok(MajorizationVerdict {
        holds: min_slack >= -tol && sum_gap <= tol,
        min_slack,
        sum_gap,
    })
}

/// `H(p) = -Σ p_i ln p_i` with `0 ln 0 = 0`.
pub fn entropy(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.ln())
        .sum::<f64>()
}

/// `D(p‖q) = Σ p_i ln(p_i / q_i)`, with `0 ln(0/x) = 0` and
/// `x ln(x/0) = +∞` for `x > 0`.
///
/// # Panics
///
/// If the lengths differ.
pub fn kl_divergence(p: &[f64], q: &[f64]) -> f64 {
    assert_eq!(p.len(), q.len(), "divergence needs equal lengths");
    p.iter()
        .zip(q)
        .filter(|(&x, _)| x > 0.0)
        .map(|(&x, &y)| {
            if y > 0.0 {
                x * (x / y).ln()
            } else {
                f64::INFINITY
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn majorization_examples() {
        let a = [0.2, 0.5, 0.3];
        let v = majorized_by(&a, &a, 1e-12).unwrap();
        assert!(v.holds);
        assert_eq!(v.min_slack, 0.0);

        let u = [1.0 / 3.0; 3];
        assert!(majorized_by(&u, &[1.0, 0.0, 0.0], 1e-12).unwrap().holds);
        assert!(!majorized_by(&[1.0, 0.0, 0.0], &u, 1e-12).unwrap().holds);

        // per-draw successive profile at n = 2 against α
        let ps = [0.419642857142857, 0.3375, 0.242857142857143];
        let v = majorized_by(&ps, &[0.5, 0.3, 0.2], 1e-10).unwrap();
        assert!(v.holds && v.min_slack > 0.0);

        assert!(majorized_by(&[0.5, 0.5], &[1.0], 1e-12).is_err());
        let gap = majorized_by(&[0.5, 0.5], &[0.9, 0.2], 1e-12).unwrap();
        assert!(!gap.holds);
        assert_relative_eq!(gap.sum_gap, 0.1, epsilon = 1e-15);
    }

    #[test]
    fn entropy_examples() {
        assert_relative_eq!(entropy(&[0.25; 4]), 4f64.ln(), max_relative = 1e-15);
        assert_eq!(entropy(&[1.0, 0.0, 0.0]), 0.0);
        assert_relative_eq!(
            entropy(&[0.5, 0.3, 0.2]),
            1.0296530140645737,
            max_relative = 1e-14
        );
    }

    #[test]
    fn divergence_examples() {
        let p = [0.5, 0.3, 0.2];
        assert_eq!(kl_divergence(&p, &p), 0.0);
        assert_eq!(kl_divergence(&[1.0, 0.0], &[0.0, 1.0]), f64::INFINITY);
        assert_eq!(kl_divergence(&[0.0, 1.0], &[0.5, 0.5]), 2f64.ln());
        let want = 0.5 * (5.0f64 / 9.0).ln() + 0.5 * 5f64.ln();
        assert_relative_eq!(
            kl_divergence(&[0.5, 0.5], &[0.9, 0.1]),
            want,
            max_relative = 1e-15
        );
        assert_relative_eq!(want, 0.510826, epsilon = 5e-7);
    }

    #[test]
    fn probability_vector_validation() {
        assert!(ProbabilityVector::new(vec![0.5, 0.5]).is_ok());
        assert!(ProbabilityVector::new(vec![0.5, 0.6]).is_err());
        assert!(ProbabilityVector::new(vec![1.5, -0.5]).is_err());
    }

    fn simplex(len: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.01f64..1.0, len).prop_map(|v| {
            let s: f64 = v.iter().sum();
            v.into_iter().map(|x| x / s).collect()
        })
    }

    // T-transform: moves mass between two coordinates toward their mean,
    // which always produces a vector majorized by the input
    fn t_transform(v: &[f64], i: usize, j: usize, lambda: f64) -> Vec<f64> {
        let mut out = v.to_vec();
        let (x, y) = (v[i], v[j]);
        out[i] = lambda * x + (1.0 - lambda) * y;
        out[j] = lambda * y + (1.0 - lambda) * x;
        out
    }

    proptest! {
        #[test]
        fn reflexive_and_permutation_antisymmetric(a in simplex(6), rot in 0usize..6) {
            prop_assert!(majorized_by(&a, &a, 1e-12).unwrap().holds);
            let mut b = a.clone();
            b.rotate_left(rot);
            prop_assert!(majorized_by(&a, &b, 1e-12).unwrap().holds);
            prop_assert!(majorized_by(&b, &a, 1e-12).unwrap().holds);
        }

        #[test]
        fn transitive_and_schur_concave(
            c in simplex(6),
            l1 in 0.0f64..1.0,
            l2 in 0.0f64..1.0,
            i in 0usize..6,
            j in 0usize..6,
        ) {
            let b = t_transform(&c, i, j, l1);
            let a = t_transform(&b, (i + 1) % 6, j, l2);
            let ab = majorized_by(&a, &b, 1e-12).unwrap().holds;
            let bc = majorized_by(&b, &c, 1e-12).unwrap().holds;
            prop_assert!(ab && bc);
            prop_assert!(majorized_by(&a, &c, 1e-12).unwrap().holds);
            prop_assert!(entropy(&a) >= entropy(&b) - 1e-12);
            prop_assert!(entropy(&b) >= entropy(&c) - 1e-12);
        }

        #[test]
        fn divergence_is_nonnegative(p in simplex(5), q in simplex(5)) {
            let d = kl_divergence(&p, &q);
            prop_assert!(d >= 0.0);
            let close = p.iter().zip(&q).all(|(x, y)| (x - y).abs() < 1e-9);
            if !close {
                prop_assert!(d > 0.0);
            }
        }
    }
}
