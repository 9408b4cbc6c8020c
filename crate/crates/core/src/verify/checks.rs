use super::{
    anchor, ext_slack, Check, CheckKind, DivergenceTriple, Suite, VerificationReport, VerifyConfig,
};
use crate::designs::{
    empirical_inclusion_with, rejective_profiles, replication_seed, successive_profiles,
    DrawingProbabilities, SampleSize, Scheme,
};
use crate::error::{Error, Result};
use crate::orderings::{
    entropy, kl_divergence, lr_order_check_with, majorized_by, ordered_density_rejective,
    ordered_density_successive, stochastic_dominance, LR_RELATIVE_SLACK,
};

/// Per-draw vectors of both designs for every sample size, on α sorted in
/// decreasing order.
struct View<'a> {
    alpha: &'a [f64],
    rejective: &'a [Vec<f64>],
    successive: &'a [Vec<f64>],
}

impl View<'_> {
    fn pr(&self, n: usize) -> &[f64] {
        &self.rejective[n - 1]
    }

    fn ps(&self, n: usize) -> &[f64] {
        &self.successive[n - 1]
    }

    fn pi_r(&self, n: usize) -> Vec<f64> {
        self.pr(n).iter().map(|p| p * n as f64).collect()
    }

    fn pi_s(&self, n: usize) -> Vec<f64> {
        self.ps(n).iter().map(|p| p * n as f64).collect()
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Needs {
    Rejective,
    Successive,
}

enum SuccessiveSource {
    Exact,
    MonteCarlo(Vec<Vec<f64>>),
    Unavailable,
}

/// Computes both designs' profiles once and evaluates check families on them.
pub struct Verifier {
    population: DrawingProbabilities,
    sorted: DrawingProbabilities,
    rejective: Vec<Vec<f64>>,
    successive: Vec<Vec<f64>>,
    source: SuccessiveSource,
    cfg: VerifyConfig,
}

impl Verifier {
    pub fn new(alpha: &DrawingProbabilities, cfg: &VerifyConfig) -> Result<Self> {
        let sorted = alpha.sorted_descending();
        let big_n = sorted.len();
        let rejective = rejective_profiles(&sorted, cfg.execution)
            .into_iter()
            .map(|p| p.per_draw)
            .collect();
        let (successive, source) = match successive_profiles(&sorted, cfg.exact_cutoff) {
            Ok(ps) => (
                ps.into_iter().map(|p| p.per_draw).collect(),
                SuccessiveSource::Exact,
            ),
            Err(Error::Capability { .. }) if cfg.mc_reps > 0 => {
                let mut means = Vec::with_capacity(big_n);
                let mut ses = Vec::with_capacity(big_n);
                for n in 1..=big_n {
                    let est = empirical_inclusion_with(
                        Scheme::Successive,
                        &sorted,
                        SampleSize::new(n, &sorted)?,
                        cfg.mc_reps,
                        replication_seed(cfg.seed, n as u64),
                        cfg.execution,
                    )?;
                    let (p, se) = est.per_draw();
                    means.push(p);
                    ses.push(se);
                }
                (means, SuccessiveSource::MonteCarlo(ses))
            }
            Err(Error::Capability { .. }) => (Vec::new(), SuccessiveSource::Unavailable),
            Err(e) => return Err(e),
        };
        Ok(Self {
            population: alpha.clone(),
            sorted,
            rejective,
            successive,
            source,
            cfg: cfg.clone(),
        })
    }

    pub fn units(&self) -> usize {
        self.sorted.len()
    }

    fn report(&self) -> VerificationReport {
        let mut r = VerificationReport::new(&self.population);
        match self.source {
            SuccessiveSource::Exact => {}
            SuccessiveSource::MonteCarlo(_) => r.notes.push(format!(
                "N = {} exceeds the exact cutoff {}; successive quantities estimated from {} replications per sample size",
                self.units(),
                self.cfg.exact_cutoff,
                self.cfg.mc_reps
            )),
            SuccessiveSource::Unavailable => r.notes.push(format!(
                "N = {} exceeds the exact cutoff {}; successive checks skipped",
                self.units(),
                self.cfg.exact_cutoff
            )),
        }
        r
    }

    fn view(&self) -> View<'_> {
        View {
            alpha: self.sorted.as_slice(),
            rejective: &self.rejective,
            successive: &self.successive,
        }
    }

    /// Evaluates `slack` and records the check. Statistical successive inputs
    /// widen the tolerance by four standard deviations of the slack, obtained
    /// by perturbing each estimated coordinate by one standard error.
    fn check<F>(
        &self,
        report: &mut VerificationReport,
        name: String,
        anchor: &'static str,
        tolerance: f64,
        needs: Needs,
        slack: F,
    ) where
        F: Fn(&View) -> f64,
    {
        if needs == Needs::Successive && matches!(self.source, SuccessiveSource::Unavailable) {
            return;
        }
        let value = slack(&self.view());
        let (tolerance, kind) = match (&self.source, needs) {
            (SuccessiveSource::MonteCarlo(se), Needs::Successive) => {
                let mut table = self.successive.clone();
                let mut var = 0.0;
                for (n, row) in se.iter().enumerate() {
                    for (i, &s) in row.iter().enumerate() {
                        if s == 0.0 {
                            continue;
                        }
                        let base = table[n][i];
                        let eval = |x: f64, table: &mut Vec<Vec<f64>>| {
                            table[n][i] = x;
                            slack(&View {
                                alpha: self.sorted.as_slice(),
                                rejective: &self.rejective,
                                successive: table,
                            })
                        };
                        let hi = eval(base + s, &mut table);
                        let lo = eval(base - s, &mut table);
                        table[n][i] = base;
                        let d = 0.5 * (hi - lo);
                        if d.is_finite() {
                            var += d * d;
                        }
                    }
                }
                (tolerance + 4.0 * var.sqrt(), CheckKind::Statistical)
            }
            _ => (tolerance, CheckKind::Exact),
        };
        report.push(Check {
            name,
            anchor,
            holds: value >= -tolerance,
            slack: value,
            tolerance,
            kind,
        });
    }

    fn majorization_slack(a: &[f64], b: &[f64]) -> f64 {
        let v = majorized_by(a, b, 0.0).expect("equal lengths");
        v.min_slack.min(-v.sum_gap)
    }

    fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    /// Per-draw majorization chains for both designs, the design comparison
    /// at every sample size, and the chain endpoints.
    pub fn majorization_chains(&self, report: &mut VerificationReport) {
        let big_n = self.units();
        let tol = self.cfg.tolerance;
        for n in 1..big_n {
            self.check(
                report,
                format!("p_R({}) ≺ p_R({n})", n + 1),
                anchor::REJECTIVE_CHAIN,
                tol,
                Needs::Rejective,
                |v| Self::majorization_slack(v.pr(n + 1), v.pr(n)),
            );
            self.check(
                report,
                format!("p_S({}) ≺ p_S({n})", n + 1),
                anchor::SUCCESSIVE_CHAIN,
                tol,
                Needs::Successive,
                |v| Self::majorization_slack(v.ps(n + 1), v.ps(n)),
            );
        }
        for n in 1..=big_n {
            self.check(
                report,
                format!("π_R({n}) ≺ π_S({n})"),
                anchor::DESIGN_MAJORIZATION,
                tol,
                Needs::Successive,
                |v| Self::majorization_slack(&v.pi_r(n), &v.pi_s(n)),
            );
            self.check(
                report,
                format!("p_R({n}) ≺ α"),
                anchor::REJECTIVE_BELOW_ALPHA,
                tol,
                Needs::Rejective,
                |v| Self::majorization_slack(v.pr(n), v.alpha),
            );
        }
        let uniform = vec![1.0 / big_n as f64; big_n];
        self.check(
            report,
            "p_R(1) = α".into(),
            anchor::CHAIN_ENDPOINTS,
            tol,
            Needs::Rejective,
            |v| -Self::max_abs_diff(v.pr(1), v.alpha),
        );
        self.check(
            report,
            format!("p_R({big_n}) uniform"),
            anchor::CHAIN_ENDPOINTS,
            tol,
            Needs::Rejective,
            |v| -Self::max_abs_diff(v.pr(big_n), &uniform),
        );
        self.check(
            report,
            "p_S(1) = α".into(),
            anchor::CHAIN_ENDPOINTS,
            tol,
            Needs::Successive,
            |v| -Self::max_abs_diff(v.ps(1), v.alpha),
        );
        self.check(
            report,
            format!("p_S({big_n}) uniform"),
            anchor::CHAIN_ENDPOINTS,
            tol,
            Needs::Successive,
            |v| -Self::max_abs_diff(v.ps(big_n), &uniform),
        );
    }

    /// Entropy is non-decreasing in the sample size for both designs and
    /// larger for the rejective design at each size.
    pub fn entropy_chains(&self, report: &mut VerificationReport) {
        let big_n = self.units();
        let tol = self.cfg.tolerance;
        for n in 1..big_n {
            self.check(
                report,
                format!("H(p_R({})) ≥ H(p_R({n}))", n + 1),
                anchor::ENTROPY_REJECTIVE,
                tol,
                Needs::Rejective,
                |v| entropy(v.pr(n + 1)) - entropy(v.pr(n)),
            );
            self.check(
                report,
                format!("H(p_S({})) ≥ H(p_S({n}))", n + 1),
                anchor::ENTROPY_SUCCESSIVE,
                tol,
                Needs::Successive,
                |v| entropy(v.ps(n + 1)) - entropy(v.ps(n)),
            );
        }
        for n in 1..=big_n {
            self.check(
                report,
                format!("H(p_R({n})) ≥ H(p_S({n}))"),
                anchor::ENTROPY_DESIGNS,
                tol,
                Needs::Successive,
                |v| entropy(v.pr(n)) - entropy(v.ps(n)),
            );
        }
        let log_n = (big_n as f64).ln();
        self.check(
            report,
            "H(p_R(1)) = H(α)".into(),
            anchor::ENTROPY_ENDPOINTS,
            tol,
            Needs::Rejective,
            |v| -(entropy(v.pr(1)) - entropy(v.alpha)).abs(),
        );
        self.check(
            report,
            format!("H(p_R({big_n})) = ln N"),
            anchor::ENTROPY_ENDPOINTS,
            tol,
            Needs::Rejective,
            |v| -(entropy(v.pr(big_n)) - log_n).abs(),
        );
        self.check(
            report,
            "H(p_S(1)) = H(α)".into(),
            anchor::ENTROPY_ENDPOINTS,
            tol,
            Needs::Successive,
            |v| -(entropy(v.ps(1)) - entropy(v.alpha)).abs(),
        );
        self.check(
            report,
            format!("H(p_S({big_n})) = ln N"),
            anchor::ENTROPY_ENDPOINTS,
            tol,
            Needs::Successive,
            |v| -(entropy(v.ps(big_n)) - log_n).abs(),
        );
    }

    /// The four reverse triangle inequalities for one triple, plus growth of
    /// the divergences from `m` to `n` and the successive bound at `n`.
    pub fn divergence_triangles(&self, report: &mut VerificationReport, t: DivergenceTriple) {
        self.triangles(report, t);
        self.divergence_growth(report, t.m, t.n);
        self.divergence_bound(report, t.n);
    }

    fn triangles(&self, report: &mut VerificationReport, t: DivergenceTriple) {
        let DivergenceTriple { l, m, n } = t;
        let tol = self.cfg.tolerance;
        let d = kl_divergence;
        self.check(
            report,
            format!("D(p_R({l})‖p_R({n})) ≥ D(p_R({l})‖p_R({m})) + D(p_R({m})‖p_R({n}))"),
            anchor::TRIANGLE_REJECTIVE_FORWARD,
            tol,
            Needs::Rejective,
            |v| {
                ext_slack(
                    d(v.pr(l), v.pr(n)),
                    d(v.pr(l), v.pr(m)) + d(v.pr(m), v.pr(n)),
                )
            },
        );
        self.check(
            report,
            format!("D(p_R({n})‖p_R({l})) ≥ D(p_R({m})‖p_R({l})) + D(p_R({n})‖p_R({m}))"),
            anchor::TRIANGLE_REJECTIVE_REVERSE,
            tol,
            Needs::Rejective,
            |v| {
                ext_slack(
                    d(v.pr(n), v.pr(l)),
                    d(v.pr(m), v.pr(l)) + d(v.pr(n), v.pr(m)),
                )
            },
        );
        self.check(
            report,
            format!("D(p_S({n})‖α) ≥ D(p_S({n})‖p_S({m})) + D(p_S({m})‖α)"),
            anchor::TRIANGLE_SUCCESSIVE,
            tol,
            Needs::Successive,
            |v| {
                ext_slack(
                    d(v.ps(n), v.alpha),
                    d(v.ps(n), v.ps(m)) + d(v.ps(m), v.alpha),
                )
            },
        );
        self.check(
            report,
            format!("D(p_R({n})‖α) ≥ D(p_R({n})‖p_S({n})) + D(p_S({n})‖α)"),
            anchor::TRIANGLE_DESIGNS,
            tol,
            Needs::Successive,
            |v| {
                ext_slack(
                    d(v.pr(n), v.alpha),
                    d(v.pr(n), v.ps(n)) + d(v.ps(n), v.alpha),
                )
            },
        );
    }

    fn divergence_growth(&self, report: &mut VerificationReport, m: usize, n: usize) {
        let tol = self.cfg.tolerance;
        let d = kl_divergence;
        self.check(
            report,
            format!("D(p_R({n})‖α) ≥ D(p_R({m})‖α)"),
            anchor::DIVERGENCE_GROWTH,
            tol,
            Needs::Rejective,
            |v| ext_slack(d(v.pr(n), v.alpha), d(v.pr(m), v.alpha)),
        );
        self.check(
            report,
            format!("D(α‖p_R({n})) ≥ D(α‖p_R({m}))"),
            anchor::DIVERGENCE_GROWTH,
            tol,
            Needs::Rejective,
            |v| ext_slack(d(v.alpha, v.pr(n)), d(v.alpha, v.pr(m))),
        );
        self.check(
            report,
            format!("D(p_S({n})‖α) ≥ D(p_S({m})‖α)"),
            anchor::DIVERGENCE_GROWTH,
            tol,
            Needs::Successive,
            |v| ext_slack(d(v.ps(n), v.alpha), d(v.ps(m), v.alpha)),
        );
    }

    fn divergence_bound(&self, report: &mut VerificationReport, n: usize) {
        self.check(
            report,
            format!("D(p_R({n})‖α) ≥ D(p_S({n})‖α)"),
            anchor::DIVERGENCE_BOUND,
            self.cfg.tolerance,
            Needs::Successive,
            |v| {
                ext_slack(
                    kl_divergence(v.pr(n), v.alpha),
                    kl_divergence(v.ps(n), v.alpha),
                )
            },
        );
    }

    /// Every triple, every adjacent growth step and the bound at every size.
    pub fn divergences(&self, report: &mut VerificationReport) {
        let big_n = self.units();
        for t in DivergenceTriple::all(big_n) {
            self.triangles(report, t);
        }
        for m in 1..big_n {
            self.divergence_growth(report, m, m + 1);
        }
        for n in 1..=big_n {
            self.divergence_bound(report, n);
        }
    }

    /// Extremes and ratio bounds at sample size `n`: `n max α ≥ max π_S ≥
    /// max π_R`, `n min α ≤ min π_S ≤ min π_R`, the max/min ratio chain and
    /// `π_S / n ≺ α`.
    pub fn classical_bounds(&self, report: &mut VerificationReport, n: usize) {
        let tol = self.cfg.tolerance;
        let nf = n as f64;
        let max = |x: &[f64]| x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = |x: &[f64]| x.iter().copied().fold(f64::INFINITY, f64::min);
        self.check(
            report,
            format!("n·max α ≥ max π_S({n})"),
            anchor::MILBRODT_MAX,
            tol,
            Needs::Successive,
            |v| nf * max(v.alpha) - max(&v.pi_s(n)),
        );
        self.check(
            report,
            format!("max π_S({n}) ≥ max π_R({n})"),
            anchor::MILBRODT_MAX,
            tol,
            Needs::Successive,
            |v| max(&v.pi_s(n)) - max(&v.pi_r(n)),
        );
        self.check(
            report,
            format!("min π_S({n}) ≥ n·min α"),
            anchor::MILBRODT_MIN,
            tol,
            Needs::Successive,
            |v| min(&v.pi_s(n)) - nf * min(v.alpha),
        );
        self.check(
            report,
            format!("min π_R({n}) ≥ min π_S({n})"),
            anchor::MILBRODT_MIN,
            tol,
            Needs::Successive,
            |v| min(&v.pi_r(n)) - min(&v.pi_s(n)),
        );
        self.check(
            report,
            format!("n·max α ≥ max π_R({n})"),
            anchor::REJECTIVE_BOUNDS,
            tol,
            Needs::Rejective,
            |v| nf * max(v.alpha) - max(&v.pi_r(n)),
        );
        self.check(
            report,
            format!("min π_R({n}) ≥ n·min α"),
            anchor::REJECTIVE_BOUNDS,
            tol,
            Needs::Rejective,
            |v| min(&v.pi_r(n)) - nf * min(v.alpha),
        );
        let ratio = |x: &[f64]| max(x) / min(x);
        let v = self.view();
        let alpha_ratio = ratio(v.alpha);
        let rel = |r: f64| tol * r.max(1.0);
        self.check(
            report,
            format!("max α/min α ≥ max π_S({n})/min π_S({n})"),
            anchor::HAJEK_RATIO,
            rel(alpha_ratio),
            Needs::Successive,
            |v| alpha_ratio - ratio(&v.pi_s(n)),
        );
        let successive_ratio = if matches!(self.source, SuccessiveSource::Unavailable) {
            1.0
        } else {
            ratio(&v.pi_s(n))
        };
        self.check(
            report,
            format!("max π_S({n})/min π_S({n}) ≥ max π_R({n})/min π_R({n})"),
            anchor::HAJEK_RATIO,
            rel(successive_ratio),
            Needs::Successive,
            |v| ratio(&v.pi_s(n)) - ratio(&v.pi_r(n)),
        );
        self.check(
            report,
            format!("π_S({n})/n ≺ α"),
            anchor::KOCHAR_KORWAR,
            tol,
            Needs::Successive,
            |v| Self::majorization_slack(v.ps(n), v.alpha),
        );
    }

    /// With α in decreasing order: `p_S_i(n) / α_i` is non-decreasing in `i`,
    /// and for `n < N`, `π_R_k(n) / π_R_k(n+1)` is non-increasing in `k`.
    pub fn ratio_monotonicity(&self, report: &mut VerificationReport, n: usize) {
        let rt = self.cfg.ratio_tolerance;
        let min_step = |r: Vec<f64>| {
            r.windows(2)
                .map(|w| w[1] - w[0])
                .fold(f64::INFINITY, f64::min)
        };
        let scale = |r: &[f64]| r.iter().map(|x| x.abs()).fold(1.0, f64::max);
        let v = self.view();

        if !matches!(self.source, SuccessiveSource::Unavailable) {
            let ratios = |v: &View| -> Vec<f64> {
                v.ps(n).iter().zip(v.alpha).map(|(p, a)| p / a).collect()
            };
            let tol = rt * scale(&ratios(&v));
            self.check(
                report,
                format!("p_S_i({n})/α_i non-decreasing"),
                anchor::SUCCESSIVE_RATIO,
                tol,
                Needs::Successive,
                |v| finite_or_zero(min_step(ratios(v))),
            );
        }
        if n < self.units() {
            let ratios = |v: &View| -> Vec<f64> {
                v.pr(n)
                    .iter()
                    .zip(v.pr(n + 1))
                    .map(|(a, b)| a / b)
                    .collect()
            };
            let tol = rt * scale(&ratios(&v));
            self.check(
                report,
                format!("π_R_k({n})/π_R_k({}) non-increasing", n + 1),
                anchor::REJECTIVE_STEP_RATIO,
                tol,
                Needs::Rejective,
                |v| {
                    let r: Vec<f64> = ratios(v).into_iter().map(|x| -x).collect();
                    finite_or_zero(min_step(r))
                },
            );
        }
    }

    /// Exhaustive likelihood-ratio order of the rejective over the successive
    /// ordered-sample law at size `n`, and the implied coordinatewise
    /// stochastic order.
    pub fn lr_order(&self, report: &mut VerificationReport, n: usize) -> Result<()> {
        let f = ordered_density_rejective(&self.sorted, n)?;
        let g = ordered_density_successive(&self.sorted, n)?;
        let lr = lr_order_check_with(&f, &g, self.cfg.execution)?;
        report.push(Check {
            name: format!("f_R ≥_lr f_S at n = {n}"),
            anchor: anchor::LR_ORDER,
            holds: lr.holds,
            slack: -lr.worst_excess,
            tolerance: LR_RELATIVE_SLACK,
            kind: CheckKind::Exact,
        });
        let dom = stochastic_dominance(&f, &g, 1e-12)?;
        report.push(Check {
            name: format!("X_j ≥_st Y_j at n = {n}"),
            anchor: anchor::STOCHASTIC_ORDER,
            holds: dom.holds,
            slack: dom.min_slack,
            tolerance: 1e-12,
            kind: CheckKind::Exact,
        });
        Ok(())
    }

    /// Runs the selected suites at every applicable sample size.
    pub fn run(&self, suites: &[Suite]) -> VerificationReport {
        let mut report = self.report();
        let big_n = self.units();
        for suite in suites {
            match suite {
                Suite::Majorization => self.majorization_chains(&mut report),
                Suite::Entropy => self.entropy_chains(&mut report),
                Suite::Divergence => self.divergences(&mut report),
                Suite::Bounds => (1..=big_n).for_each(|n| self.classical_bounds(&mut report, n)),
                Suite::Ratios => (1..=big_n).for_each(|n| self.ratio_monotonicity(&mut report, n)),
                Suite::Lr => {
                    for n in 1..=big_n {
                        if let Err(e) = self.lr_order(&mut report, n) {
                            report
                                .notes
                                .push(format!("likelihood-ratio check skipped for n ≥ {n}: {e}"));
                            break;
                        }
                    }
                }
            }
        }
        report
    }

    /// Runs the selected suites at a single sample size where they depend on
    /// one (bounds, ratios, lr); chain suites always cover every size.
    pub fn run_at(&self, suites: &[Suite], n: SampleSize) -> Result<VerificationReport> {
        let mut report = self.report();
        let n = n.get();
        for suite in suites {
            match suite {
                Suite::Majorization => self.majorization_chains(&mut report),
                Suite::Entropy => self.entropy_chains(&mut report),
                Suite::Divergence => self.divergences(&mut report),
                Suite::Bounds => self.classical_bounds(&mut report, n),
                Suite::Ratios => self.ratio_monotonicity(&mut report, n),
                Suite::Lr => self.lr_order(&mut report, n)?,
            }
        }
        Ok(report)
    }
}

fn finite_or_zero(x: f64) -> f64 {
    // a single ratio has no steps
    if x == f64::INFINITY {
        0.0
    } else {
        x
    }
}

pub fn verify_majorization_chains(
    alpha: &DrawingProbabilities,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    Ok(Verifier::new(alpha, cfg)?.run(&[Suite::Majorization]))
}

pub fn verify_entropy_chains(
    alpha: &DrawingProbabilities,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    Ok(Verifier::new(alpha, cfg)?.run(&[Suite::Entropy]))
}

pub fn verify_divergence_triangles(
    alpha: &DrawingProbabilities,
    triple: DivergenceTriple,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let v = Verifier::new(alpha, cfg)?;
    DivergenceTriple::new(triple.l, triple.m, triple.n, v.units())?;
    let mut r = v.report();
    v.divergence_triangles(&mut r, triple);
    Ok(r)
}

pub fn verify_divergences(
    alpha: &DrawingProbabilities,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    Ok(Verifier::new(alpha, cfg)?.run(&[Suite::Divergence]))
}

pub fn verify_classical_bounds(
    alpha: &DrawingProbabilities,
    n: SampleSize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    Verifier::new(alpha, cfg)?.run_at(&[Suite::Bounds], n)
}

pub fn verify_ratio_monotonicity(
    alpha: &DrawingProbabilities,
    n: SampleSize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    Verifier::new(alpha, cfg)?.run_at(&[Suite::Ratios], n)
}

pub fn verify_lr_order(
    alpha: &DrawingProbabilities,
    n: SampleSize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    Verifier::new(alpha, cfg)?.run_at(&[Suite::Lr], n)
}

pub fn verify_all(alpha: &DrawingProbabilities, cfg: &VerifyConfig) -> Result<VerificationReport> {
    Ok(Verifier::new(alpha, cfg)?.run(&Suite::ALL))
}
