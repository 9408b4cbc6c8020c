use super::{Design, DrawingProbabilities, InclusionProfile, SampleSize};
use crate::esf::{choose_inv_scale, recurrence};
use crate::par::{map_indexed, Execution};

/// Rejective (conditional Poisson) inclusion probabilities
/// `π_i = α_i e_{n-1}(α_{-i}) / e_n(α)`.
pub fn rejective_inclusion(alpha: &DrawingProbabilities, n: SampleSize) -> InclusionProfile {
    rejective_inclusion_with(alpha, n, Execution::default())
}

pub fn rejective_inclusion_with(
    alpha: &DrawingProbabilities,
    n: SampleSize,
    exec: Execution,
) -> InclusionProfile {
    let a = alpha.as_slice();
    let n = n.get();
    let inv = choose_inv_scale(a, n);
    let total = recurrence(a.iter().copied(), n, inv)[n];
    let pi = map_indexed(exec, a.len(), |i| {
        let loo = recurrence(leave_out(a, i), n - 1, inv);
        (a[i] * inv * loo[n - 1] / total).min(1.0)
    });
    InclusionProfile::new(Design::Rejective, n, pi)
}

/// Rejective profiles for every `n = 1..=N`, sharing one leave-one-out table
/// per unit.
pub fn rejective_profiles(alpha: &DrawingProbabilities, exec: Execution) -> Vec<InclusionProfile> {
    let a = alpha.as_slice();
    let big_n = a.len();
    let inv = choose_inv_scale(a, big_n);
    let full = recurrence(a.iter().copied(), big_n, inv);
    let loo: Vec<Vec<f64>> =
        map_indexed(exec, big_n, |i| recurrence(leave_out(a, i), big_n - 1, inv));
    (1..=big_n)
        .map(|n| {
            let pi = (0..big_n)
                .map(|i| (a[i] * inv * loo[i][n - 1] / full[n]).min(1.0))
                .collect();
            InclusionProfile::new(Design::Rejective, n, pi)
        })
        .collect()
}

fn leave_out(a: &[f64], i: usize) -> impl Iterator<Item = f64> + '_ {
    a.iter()
        .enumerate()
        .filter(move |&(j, _)| j != i)
        .map(|(_, &x)| x)
}
