//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's numerical code.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Random drawing probabilities from normalized `U(0.02, 1)` weights.
pub fn random_weights(units: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x5eed_0f0a_c1e5);
    let raw: Vec<f64> = (0..units).map(|_| rng.random_range(0.02..1.0)).collect();
    let s: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / s).collect()
}

/// Descending copy.
pub fn sorted_desc(a: &[f64]) -> Vec<f64> {
    let mut v = a.to_vec();
    v.sort_by(|x, y| y.total_cmp(x));
    v
}

/// Rejective inclusion probabilities by summing `∏ α` over all `n`-subsets.
pub fn rejective_bruteforce(alpha: &[f64], n: usize) -> Vec<f64> {
    let m = alpha.len();
    let mut pi = vec![0.0; m];
    let mut total = 0.0;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let w: f64 = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| alpha[i])
            .product();
        total += w;
        for (i, p) in pi.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                *p += w;
            }
        }
    }
    pi.iter().map(|p| p / total).collect()
}

/// Probability of drawing the distinct units `seq` in this order under
/// successive sampling.
pub fn successive_sequence_probability(alpha: &[f64], seq: &[usize]) -> f64 {
    let mut used = 0.0;
    let mut p = 1.0;
    for &u in seq {
        p *= alpha[u] / (1.0 - used);
        used += alpha[u];
    }
    p
}

/// Calls `visit` on every ordered sequence of `n` distinct units.
pub fn for_each_sequence(m: usize, n: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(m: usize, n: usize, seq: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if seq.len() == n {
            visit(seq);
            return;
        }
        for u in 0..m {
            if !seq.contains(&u) {
                seq.push(u);
                rec(m, n, seq, visit);
                seq.pop();
            }
        }
    }
    rec(m, n, &mut Vec::with_capacity(n), visit);
}

/// Successive inclusion probabilities by enumerating ordered sequences.
pub fn successive_bruteforce(alpha: &[f64], n: usize) -> Vec<f64> {
    let mut pi = vec![0.0; alpha.len()];
    for_each_sequence(alpha.len(), n, &mut |seq| {
        let p = successive_sequence_probability(alpha, seq);
        for &u in seq {
            pi[u] += p;
        }
    });
    pi
}

/// Increasing `n`-subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_sequence(m, n, &mut |s| {
        if s.windows(2).all(|w| w[0] < w[1]) {
            out.push(s.to_vec());
        }
    });
    out
}

/// Successive sample law keyed by the sorted sample.
pub fn successive_set_law(alpha: &[f64], n: usize) -> Vec<(Vec<usize>, f64)> {
    let mut law: Vec<(Vec<usize>, f64)> = subsets(alpha.len(), n)
        .into_iter()
        .map(|s| (s, 0.0))
        .collect();
    for_each_sequence(alpha.len(), n, &mut |seq| {
        let mut key = seq.to_vec();
        key.sort_unstable();
        let slot = law.iter_mut().find(|(s, _)| *s == key).unwrap();
        slot.1 += successive_sequence_probability(alpha, seq);
    });
    law
}

pub fn rejective_set_law(alpha: &[f64], n: usize) -> Vec<(Vec<usize>, f64)> {
    let law: Vec<(Vec<usize>, f64)> = subsets(alpha.len(), n)
        .into_iter()
        .map(|s| {
            let w = s.iter().map(|&i| alpha[i]).product();
            (s, w)
        })
        .collect();
    let total: f64 = law.iter().map(|(_, w)| w).sum();
    law.into_iter().map(|(s, w)| (s, w / total)).collect()
}

pub fn entropy(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|x| x * x.ln())
        .sum::<f64>()
}

pub fn kl(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .filter(|(x, _)| **x > 0.0)
        .map(|(x, y)| x * (x / y).ln())
        .sum()
}

/// Smallest value of `Σ_{i≤k} b↓ - Σ_{i≤k} a↓` over `k < len`, i.e. how far
/// `a ≺ b` is from failing.
pub fn majorization_slack(a: &[f64], b: &[f64]) -> f64 {
    let (a, b) = (sorted_desc(a), sorted_desc(b));
    let (mut sa, mut sb, mut worst) = (0.0, 0.0, f64::INFINITY);
    for k in 0..a.len() - 1 {
        sa += a[k];
        sb += b[k];
        worst = worst.min(sb - sa);
    }
    worst
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
