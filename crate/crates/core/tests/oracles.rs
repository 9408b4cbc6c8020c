//! Library results against brute-force enumeration and hand-computed values.

mod common;

use approx::assert_relative_eq;
use common::*;
use incprob::designs::{
    rejective_profiles, successive_first_k_set_distribution, successive_profiles, UnitSet,
};
use incprob::esf::{esf_all, esf_leave_one_out, esf_leave_two_out, WeightVector};
use incprob::orderings::{
    entropy as lib_entropy, kl_divergence, majorized_by, ordered_density_rejective,
    ordered_density_successive,
};
use incprob::{rejective_inclusion, successive_inclusion_exact, DrawingProbabilities, SampleSize};

fn dp(v: &[f64]) -> DrawingProbabilities {
    DrawingProbabilities::new(v.to_vec()).unwrap()
}

#[test]
fn worked_example_profiles() {
    let a = dp(&[0.5, 0.3, 0.2]);
    let n = SampleSize::new(2, &a).unwrap();
    let r = rejective_inclusion(&a, n);
    let s = successive_inclusion_exact(&a, n).unwrap();
    let r_oracle = rejective_bruteforce(a.as_slice(), 2);
    let s_oracle = successive_bruteforce(a.as_slice(), 2);
    assert!(max_abs_diff(&r.pi, &r_oracle) < 1e-15);
    assert!(max_abs_diff(&s.pi, &s_oracle) < 1e-15);
    // 25/31, 21/31, 16/31 and 47/56, 27/40, 17/35
    assert!(max_abs_diff(&r.pi, &[25.0 / 31.0, 21.0 / 31.0, 16.0 / 31.0]) < 1e-15);
    assert!(max_abs_diff(&s.pi, &[47.0 / 56.0, 27.0 / 40.0, 17.0 / 35.0]) < 1e-15);
}

#[test]
fn worked_example_entropies_and_divergences() {
    let a = [0.5, 0.3, 0.2];
    let pr: Vec<f64> = rejective_bruteforce(&a, 2)
        .iter()
        .map(|x| x / 2.0)
        .collect();
    let ps: Vec<f64> = successive_bruteforce(&a, 2)
        .iter()
        .map(|x| x / 2.0)
        .collect();
    assert_relative_eq!(lib_entropy(&a), entropy(&a), max_relative = 1e-14);
    assert_relative_eq!(lib_entropy(&pr), entropy(&pr), max_relative = 1e-14);
    assert_relative_eq!(lib_entropy(&ps), entropy(&ps), max_relative = 1e-14);
    assert_relative_eq!(lib_entropy(&pr), 1.0824846048881014, max_relative = 1e-12);
    assert_relative_eq!(lib_entropy(&ps), 1.0746977727823148, max_relative = 1e-12);
    assert_relative_eq!(kl_divergence(&pr, &a), kl(&pr, &a), max_relative = 1e-13);
    assert_relative_eq!(kl_divergence(&ps, &a), kl(&ps, &a), max_relative = 1e-13);
    assert_relative_eq!(
        kl_divergence(&[0.5, 0.5], &[0.9, 0.1]),
        0.5108256237659907,
        max_relative = 1e-14
    );
    assert_eq!(kl_divergence(&[0.0, 1.0], &[0.5, 0.5]), 2f64.ln());
    assert_eq!(kl_divergence(&[0.5, 0.5], &[1.0, 0.0]), f64::INFINITY);
}

#[test]
fn successive_pair_law() {
    let a = dp(&[0.5, 0.3, 0.2]);
    let d = successive_first_k_set_distribution(&a, 2).unwrap();
    for (set, p) in successive_set_law(a.as_slice(), 2) {
        assert_relative_eq!(d.get(UnitSet::from_units(&set)), p, max_relative = 1e-14);
    }
    assert_relative_eq!(
        d.get(UnitSet::from_units(&[0, 1])),
        0.5142857142857142,
        max_relative = 1e-14
    );
}

#[test]
fn esf_against_subset_sums() {
    for seed in 0..20 {
        let w = random_weights(9, seed);
        let e = esf_all(&WeightVector::new(w.clone()).unwrap());
        for k in 0..=9 {
            let brute: f64 = if k == 0 {
                1.0
            } else {
                subsets(9, k)
                    .iter()
                    .map(|s| s.iter().map(|&i| w[i]).product::<f64>())
                    .sum()
            };
            assert_relative_eq!(e.get(k), brute, max_relative = 1e-12);
        }
        let wv = WeightVector::new(w.clone()).unwrap();
        let l1 = esf_leave_one_out(&wv, 3).unwrap();
        let l2 = esf_leave_two_out(&wv, 3, 7).unwrap();
        let rest1: Vec<f64> = w
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != 3)
            .map(|(_, x)| *x)
            .collect();
        let rest2: Vec<f64> = w
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != 3 && *i != 7)
            .map(|(_, x)| *x)
            .collect();
        for k in 0..=8 {
            let brute: f64 = if k == 0 {
                1.0
            } else {
                subsets(8, k)
                    .iter()
                    .map(|s| s.iter().map(|&i| rest1[i]).product::<f64>())
                    .sum()
            };
            assert_relative_eq!(l1.get(k), brute, max_relative = 1e-12);
        }
        for k in 0..=7 {
            let brute: f64 = if k == 0 {
                1.0
            } else {
                subsets(7, k)
                    .iter()
                    .map(|s| s.iter().map(|&i| rest2[i]).product::<f64>())
                    .sum()
            };
            assert_relative_eq!(l2.get(k), brute, max_relative = 1e-12);
        }
    }
}

#[test]
fn unsorted_input_keeps_its_order() {
    let a = dp(&[0.2, 0.5, 0.3]);
    let r = rejective_profiles(&a, Default::default());
    let s = successive_profiles(&a, 20).unwrap();
    let ro = rejective_bruteforce(a.as_slice(), 2);
    let so = successive_bruteforce(a.as_slice(), 2);
    assert!(max_abs_diff(&r[1].pi, &ro) < 1e-15);
    assert!(max_abs_diff(&s[1].pi, &so) < 1e-15);
    assert!(r[1].pi[1] > r[1].pi[2] && r[1].pi[2] > r[1].pi[0]);
}

#[test]
fn tuple_densities_match_set_laws() {
    for seed in 0..5 {
        let a = dp(&random_weights(6, 100 + seed));
        for n in 1..=4 {
            let f = ordered_density_rejective(&a, n).unwrap();
            let g = ordered_density_successive(&a, n).unwrap();
            let (ft, gt) = (f.total(), g.total());
            assert_relative_eq!(gt, 1.0, max_relative = 1e-13);
            for (set, p) in rejective_set_law(a.as_slice(), n) {
                assert_relative_eq!(f.get(&set) / ft, p, max_relative = 1e-12);
            }
            for (set, p) in successive_set_law(a.as_slice(), n) {
                assert_relative_eq!(g.get(&set), p, max_relative = 1e-12);
            }
        }
    }
}

#[test]
fn majorization_against_prefix_oracle() {
    for seed in 0..50 {
        let a = random_weights(7, seed);
        let b = random_weights(7, seed + 1000);
        let v = majorized_by(&a, &b, 1e-10).unwrap();
        let slack = majorization_slack(&a, &b);
        assert_eq!(v.holds, slack >= -1e-10, "seed {seed}");
        assert_relative_eq!(v.min_slack, slack, epsilon = 1e-15);
    }
}

#[test]
fn large_population_rejective_sums_to_n() {
    let w = random_weights(300, 9);
    let a = dp(&w);
    for n in [1, 7, 150, 299, 300] {
        let p = rejective_inclusion(&a, SampleSize::new(n, &a).unwrap());
        assert_relative_eq!(p.pi.iter().sum::<f64>(), n as f64, max_relative = 1e-10);
        assert!(p.pi.iter().all(|&x| (0.0..=1.0).contains(&x)));
    }
}
