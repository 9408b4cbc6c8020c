use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use incprob::designs::{empirical_inclusion_with, rejective_profiles};
use incprob::orderings::{
    lr_order_check_with, ordered_density_rejective, ordered_density_successive,
};
use incprob::verify::{random_alpha, randomized_suite, SuiteConfig, VerifyConfig};
use incprob::{DrawingProbabilities, Execution, RejectiveMethod, SampleSize, Scheme};

const POLICIES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn monte_carlo(c: &mut Criterion) {
    let alpha = random_alpha(50, 1).unwrap();
    let n = SampleSize::new(10, &alpha).unwrap();
    let mut g = c.benchmark_group("empirical_inclusion");
    g.sample_size(10);
    for scheme in [
        Scheme::Rejective(RejectiveMethod::SequentialDp),
        Scheme::Successive,
    ] {
        for (name, exec) in POLICIES {
            g.bench_function(BenchmarkId::new(format!("{scheme:?}"), name), |b| {
                b.iter(|| empirical_inclusion_with(scheme, &alpha, n, 50_000, 7, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn rejective_all_sizes(c: &mut Criterion) {
    let mut g = c.benchmark_group("rejective_profiles");
    for units in [200, 1000] {
        let alpha = random_alpha(units, 2).unwrap();
        for (name, exec) in POLICIES {
            g.bench_with_input(
                BenchmarkId::new(name, units),
                &alpha,
                |b, a: &DrawingProbabilities| b.iter(|| rejective_profiles(black_box(a), exec)),
            );
        }
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("randomized_suite");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        let cfg = SuiteConfig {
            sizes: 2..=10,
            trials: 10,
            verify: VerifyConfig {
                execution: exec,
                ..Default::default()
            },
            ..Default::default()
        };
        g.bench_function(name, |b| b.iter(|| randomized_suite(&cfg).unwrap()));
    }
    g.finish();
}

fn lr_order(c: &mut Criterion) {
    let alpha = random_alpha(10, 3).unwrap().sorted_descending();
    let f = ordered_density_rejective(&alpha, 5).unwrap();
    let g_ = ordered_density_successive(&alpha, 5).unwrap();
    let mut g = c.benchmark_group("lr_order_check");
    for (name, exec) in POLICIES {
        g.bench_function(name, |b| {
            b.iter(|| lr_order_check_with(&f, &g_, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, monte_carlo, rejective_all_sizes, suite, lr_order);
criterion_main!(benches);
