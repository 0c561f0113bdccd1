//! Desk-scale exponent fits and evidence tables.
//!
//! `run_scaling` evaluates metrics over a parameter sweep of one
//! construction and fits `ln metric` against `ln |A|` by ordinary least
//! squares. `klr_experiment` measures exact Sidon numbers of uniform random
//! subsets of `[n]`; `conjecture_audit` collects every lower and upper bound
//! available for a single set.

use std::fmt;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::energy::{combined_size, energy, Mode};
use crate::error::{Error, Result};
use crate::graph::c4free_capacity;
use crate::low_energy::t_random_search;
use crate::report::{fmt_float, sig12, AuditCheck, AuditReport, Num, Report};
use crate::rng::derive_seed;
use crate::sets::{
    build_bw_set, build_interval, build_pq_set, build_triple_prime_set, sample_subset, GroundSet, SampleSpec,
};
use crate::sidon::{deletion_sidon, greedy_sidon, max_sidon_subset, sumset_cardinality_bound};

/// Largest set the exact Sidon metrics will attempt.
pub const EXACT_METRIC_CAP: usize = 48;
/// Node budget for the exact Sidon metrics.
pub const EXACT_METRIC_BUDGET: u64 = 10_000_000;
/// Largest `n` accepted by [`klr_experiment`].
pub const KLR_CAP: u64 = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Pq,
    Triple,
    Bw,
    Interval,
}

impl Construction {
    pub fn build(self, n: u64) -> Result<GroundSet> {
        match self {
            Construction::Pq => build_pq_set(n),
            Construction::Triple => build_triple_prime_set(n),
            Construction::Bw => build_bw_set(n),
            Construction::Interval => build_interval(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Construction::Pq => "pq",
            Construction::Triple => "triple",
            Construction::Bw => "bw",
            Construction::Interval => "interval",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Metric {
    SumsetSize,
    ProductsetSize,
    /// Edge capacity of a 4-cycle-free graph on the `P·Q` parts.
    C4freeCapacity,
    /// Largest `m` with `m(m+1)/2 <= |A+A|`.
    SidonUpperBound,
    ExactSPlus,
    ExactSTimes,
    EnergyAdd,
    EnergyMul,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::SumsetSize => "sumset_size",
            Metric::ProductsetSize => "productset_size",
            Metric::C4freeCapacity => "c4free_capacity",
            Metric::SidonUpperBound => "sidon_upper_bound",
            Metric::ExactSPlus => "exact_s_plus",
            Metric::ExactSTimes => "exact_s_times",
            Metric::EnergyAdd => "energy_add",
            Metric::EnergyMul => "energy_mul",
        }
    }

    pub fn evaluate(self, a: &GroundSet) -> Result<u128> {
        let exact = |mode: Mode| -> Result<u128> {
            if a.len() > EXACT_METRIC_CAP {
                return Err(Error::FeasibilityCap {
                    what: self.name(),
                    cap: EXACT_METRIC_CAP,
                    got: a.len(),
                });
            }
            let r = max_sidon_subset(a, mode, EXACT_METRIC_BUDGET)?;
            if !r.optimal {
                return Err(Error::NotCertified(self.name()));
            }
            Ok(r.size as u128)
        };
        Ok(match self {
            Metric::SumsetSize => combined_size(a.elements(), Mode::Additive)? as u128,
            Metric::ProductsetSize => combined_size(a.elements(), Mode::Multiplicative)? as u128,
            Metric::C4freeCapacity => {
                let (p, q) = a.pq_parts()?;
                c4free_capacity(p.len() as u64, q.len() as u64) as u128
            }
            Metric::SidonUpperBound => sumset_cardinality_bound(a, Mode::Additive)? as u128,
            Metric::ExactSPlus => exact(Mode::Additive)?,
            Metric::ExactSTimes => exact(Mode::Multiplicative)?,
            Metric::EnergyAdd => energy(a, Mode::Additive)?,
            Metric::EnergyMul => energy(a, Mode::Multiplicative)?,
        })
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub n: u64,
    pub set_size: u64,
    pub metric: Metric,
    pub value: u128,
}

/// Least-squares line through `(ln set_size, ln value)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fit {
    #[serde(serialize_with = "sig12")]
    pub slope: f64,
    #[serde(serialize_with = "sig12")]
    pub intercept: f64,
    #[serde(serialize_with = "sig12")]
    pub stderr: f64,
    #[serde(serialize_with = "sig12")]
    pub r2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricFit {
    pub metric: Metric,
    pub fit: Fit,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingSeries {
    pub construction: Construction,
    pub rows: Vec<Row>,
    pub fits: Vec<MetricFit>,
}

impl ScalingSeries {
    /// Refits `metric` from the stored rows.
    pub fn fit_for(&self, metric: Metric) -> Result<Fit> {
        let points: Vec<(u64, u128)> = self
            .rows
            .iter()
            .filter(|r| r.metric == metric)
            .map(|r| (r.set_size, r.value))
            .collect();
        fit_exponent(&points)
    }

    pub fn values(&self, metric: Metric) -> Vec<(u64, u64, u128)> {
        self.rows
            .iter()
            .filter(|r| r.metric == metric)
            .map(|r| (r.n, r.set_size, r.value))
            .collect()
    }
}

impl Report for ScalingSeries {
    fn csv(&self) -> String {
        let mut out = String::from("n,set_size,metric,value\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.n, r.set_size, r.metric, r.value));
        }
        for f in &self.fits {
            out.push_str(&format!("# metric={}\n", f.metric));
            out.push_str(&format!(
                "# slope={},stderr={},r2={}\n",
                fmt_float(f.fit.slope),
                fmt_float(f.fit.stderr),
                fmt_float(f.fit.r2)
            ));
            out.push_str(&format!("# intercept={}\n", fmt_float(f.fit.intercept)));
        }
        out
    }
}

/// Ordinary least squares of `ln value` on `ln set_size`.
///
/// Points with value 0 or 1 are dropped since they sit at or below the
/// logarithm's degenerate end; at least three must remain.
pub fn fit_exponent(points: &[(u64, u128)]) -> Result<Fit> {
    let kept: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(_, v)| v > 1)
        .map(|&(x, v)| ((x as f64).ln(), (v as f64).ln()))
        .collect();
    fit_log_points(&kept)
}

/// Least squares on points already in log-log form.
pub fn fit_log_points(points: &[(f64, f64)]) -> Result<Fit> {
    let k = points.len();
    if k < 3 {
        return Err(Error::TooFewRows(k));
    }
    if let Some(&(x, y)) = points.iter().find(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(Error::NonPositiveMetric(if x.is_finite() { y } else { x }));
    }
    let kf = k as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / kf;
    let my = points.iter().map(|p| p.1).sum::<f64>() / kf;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("all set sizes coincide".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = points
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    let stderr = (sse / (kf - 2.0) / sxx).sqrt();
    let r2 = if syy == 0.0 { 1.0 } else { 1.0 - sse / syy };
    Ok(Fit {
        slope,
        intercept,
        stderr,
        r2,
    })
}

/// Evaluates every metric at every parameter and fits each metric.
pub fn run_scaling(construction: Construction, params: &[u64], metrics: &[Metric]) -> Result<ScalingSeries> {
    if params.len() < 3 {
        return Err(Error::TooFewRows(params.len()));
    }
    if metrics.is_empty() {
        return Err(Error::InvalidArgument("no metrics requested".into()));
    }
    let mut params = params.to_vec();
    params.sort_unstable();
    params.dedup();
    let per_param: Vec<Result<Vec<Row>>> = params
        .par_iter()
        .map(|&n| {
            let a = construction.build(n)?;
            metrics
                .iter()
                .map(|&metric| {
                    Ok(Row {
                        n,
                        set_size: a.len() as u64,
                        metric,
                        value: metric.evaluate(&a)?,
                    })
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_param {
        rows.extend(r?);
    }
    let mut series = ScalingSeries {
        construction,
        rows,
        fits: Vec::new(),
    };
    for &metric in metrics {
        let fit = series.fit_for(metric)?;
        series.fits.push(MetricFit { metric, fit });
    }
    Ok(series)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KlrReport {
    pub n: u64,
    #[serde(serialize_with = "sig12")]
    pub a: f64,
    pub m: u64,
    pub trials: usize,
    pub seed: u64,
    pub sizes: Vec<usize>,
    pub certified: usize,
    #[serde(serialize_with = "sig12")]
    pub mean: f64,
    #[serde(serialize_with = "sig12")]
    pub median: f64,
    pub min: usize,
    pub max: usize,
    /// Mean of `s_+(B) / n^(1/3)`.
    #[serde(serialize_with = "sig12")]
    pub ratio_n_cbrt: f64,
    /// Mean of `s_+(B) / m^(1/2)`.
    #[serde(serialize_with = "sig12")]
    pub ratio_m_sqrt: f64,
}

impl Report for KlrReport {
    fn csv(&self) -> String {
        let mut out = String::from("trial,s_plus\n");
        for (t, s) in self.sizes.iter().enumerate() {
            out.push_str(&format!("{t},{s}\n"));
        }
        for (k, v) in [
            ("n", self.n.to_string()),
            ("a", fmt_float(self.a)),
            ("m", self.m.to_string()),
            ("seed", self.seed.to_string()),
            ("certified", self.certified.to_string()),
            ("mean", fmt_float(self.mean)),
            ("median", fmt_float(self.median)),
            ("min", self.min.to_string()),
            ("max", self.max.to_string()),
            ("ratio_n_cbrt", fmt_float(self.ratio_n_cbrt)),
            ("ratio_m_sqrt", fmt_float(self.ratio_m_sqrt)),
        ] {
            out.push_str(&format!("# {k}={v}\n"));
        }
        out
    }
}

pub fn median(sorted: &[usize]) -> f64 {
    let k = sorted.len();
    if k % 2 == 1 {
        sorted[k / 2] as f64
    } else {
        (sorted[k / 2 - 1] + sorted[k / 2]) as f64 / 2.0
    }
}

/// Exact `s_+` of `trials` uniform `round(n^a)`-subsets of `[n]`.
///
/// Trial `t` samples with `derive_seed(seed, t)`; the solver runs with
/// `budget` nodes per trial and uncertified trials are counted separately.
pub fn klr_experiment(n: u64, a: f64, trials: usize, seed: u64, budget: u64) -> Result<KlrReport> {
    if !(1.0 / 3.0 - 1e-12..=1.0).contains(&a) {
        return Err(Error::InvalidArgument(format!("exponent a = {a} outside [1/3, 1]")));
    }
    if n > KLR_CAP {
        return Err(Error::FeasibilityCap {
            what: "klr n",
            cap: KLR_CAP as usize,
            got: n as usize,
        });
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let ground = build_interval(n)?;
    let m = ((n as f64).powf(a).round() as u64).clamp(1, n);
    let outcomes: Vec<Result<(usize, bool)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let b = sample_subset(
                &ground,
                SampleSpec::FixedSize {
                    m: m as usize,
                    seed: derive_seed(seed, t as u64),
                },
            )?;
            let r = max_sidon_subset(&b, Mode::Additive, budget)?;
            Ok((r.size, r.optimal))
        })
        .collect();
    let mut sizes = Vec::with_capacity(trials);
    let mut certified = 0;
    for o in outcomes {
        let (s, ok) = o?;
        sizes.push(s);
        certified += usize::from(ok);
    }
    let mut sorted = sizes.clone();
    sorted.sort_unstable();
    let tf = trials as f64;
    let mean = sizes.iter().sum::<usize>() as f64 / tf;
    Ok(KlrReport {
        n,
        a,
        m,
        trials,
        seed,
        certified,
        mean,
        median: median(&sorted),
        min: sorted[0],
        max: sorted[trials - 1],
        ratio_n_cbrt: mean / (n as f64).cbrt(),
        ratio_m_sqrt: mean / (m as f64).sqrt(),
        sizes,
    })
}

/// Deletion runs per mode in [`conjecture_audit`].
pub const AUDIT_DELETION_RUNS: usize = 21;
/// Random-search trials per mode in [`conjecture_audit`].
pub const AUDIT_SEARCH_TRIALS: usize = 16;

/// Evidence table for one set: every available bound on `s_+`, `s_*`,
/// `t_+`, `t_*`, the doubling constant `K = |A+A| / |A|`, and the
/// comparison of `s_*` with `|A|^(2/3) / (K^(2/3) (ln |A|)^(1/3))`.
///
/// The checks only assert orderings that hold by construction: every lower
/// bound is at most every upper bound, and a certified value sits between
/// them.
pub fn conjecture_audit(a: &GroundSet, budget: u64, seed: u64) -> Result<AuditReport> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let size = a.len() as u128;
    let mut checks = Vec::new();
    let mut summary: Vec<(String, Num)> = Vec::new();
    let mut best = [0u128; 2];
    let mut best_certified = [false; 2];

    let c4_cap = a
        .pq_parts()
        .ok()
        .map(|(p, q)| c4free_capacity(p.len() as u64, q.len() as u64) as u128);

    for (k, mode) in Mode::BOTH.into_iter().enumerate() {
        let tag = match mode {
            Mode::Additive => "s_plus",
            Mode::Multiplicative => "s_times",
        };
        let greedy = greedy_sidon(a, mode)?.len() as u128;
        let mut del: Vec<usize> = (0..AUDIT_DELETION_RUNS)
            .into_par_iter()
            .map(|i| deletion_sidon(a, mode, derive_seed(seed, i as u64)).map(|d| d.size))
            .collect::<Result<_>>()?;
        del.sort_unstable();
        let del_median = median(&del);
        let solver = max_sidon_subset(a, mode, budget)?;
        let solved = solver.size as u128;
        let mut upper = (sumset_cardinality_bound(a, mode)? as u128).min(size);
        if let (Mode::Multiplicative, Some(cap)) = (mode, c4_cap) {
            upper = upper.min(cap);
        }
        let lower = greedy.max(solved).max(del[del.len() - 1] as u128);

        summary.push((format!("{tag}_greedy"), Num::Int(greedy)));
        summary.push((format!("{tag}_deletion_median"), Num::Float(del_median)));
        summary.push((format!("{tag}_solver"), Num::Int(solved)));
        summary.push((format!("{tag}_certified"), Num::Int(u128::from(solver.optimal))));
        summary.push((format!("{tag}_nodes"), Num::Int(solver.nodes_explored as u128)));
        summary.push((format!("{tag}_upper"), Num::Int(upper)));

        checks.push(AuditCheck::new(
            format!("{tag}_greedy_le_upper"),
            Num::Int(greedy),
            Num::Int(upper),
            greedy <= upper,
        ));
        checks.push(AuditCheck::new(
            format!("{tag}_deletion_median_le_upper"),
            Num::Float(del_median),
            Num::Int(upper),
            del_median <= upper as f64,
        ));
        let cert = |c: AuditCheck| if solver.optimal { c } else { c.skipped() };
        checks.push(cert(AuditCheck::new(
            format!("{tag}_greedy_le_certified"),
            Num::Int(greedy),
            Num::Int(solved),
            greedy <= solved,
        )));
        checks.push(cert(AuditCheck::new(
            format!("{tag}_deletion_median_le_certified"),
            Num::Float(del_median),
            Num::Int(solved),
            del_median <= solved as f64,
        )));
        checks.push(AuditCheck::new(
            format!("{tag}_solver_le_upper"),
            Num::Int(solved),
            Num::Int(upper),
            solved <= upper,
        ));

        let t = t_random_search(a, mode, AUDIT_SEARCH_TRIALS, derive_seed(seed, 1000 + k as u64))?;
        let t_tag = match mode {
            Mode::Additive => "t_plus_search",
            Mode::Multiplicative => "t_times_search",
        };
        summary.push((t_tag.to_string(), Num::Int(t.size as u128)));
        checks.push(AuditCheck::new(
            format!("{t_tag}_ge_{tag}"),
            Num::Int(t.size as u128),
            Num::Int(lower),
            t.size as u128 >= lower || !solver.optimal,
        ));
        best[k] = lower;
        best_certified[k] = solver.optimal;
    }

    let max_s = best[0].max(best[1]);
    summary.push(("max_s".into(), Num::Int(max_s)));
    summary.push((
        "max_s_certified".into(),
        Num::Int(u128::from(best_certified[0] && best_certified[1])),
    ));
    let sumset = combined_size(a.elements(), Mode::Additive)? as u128;
    summary.push(("set_size".into(), Num::Int(size)));
    summary.push(("doubling_k".into(), Num::ratio(sumset, size)));
    if size >= 2 {
        let n = size as f64;
        let kf = sumset as f64 / n;
        let reference = n.powf(2.0 / 3.0) / (kf.powf(2.0 / 3.0) * n.ln().cbrt());
        summary.push(("s_times_reference".into(), Num::Float(reference)));
        summary.push(("s_times_over_reference".into(), Num::Float(best[1] as f64 / reference)));
    }

    let mut report = AuditReport::new("conjecture", checks);
    for (name, value) in summary {
        report.summarize(&name, value);
    }
    Ok(report)
}
