//! Largest subsets with energy strictly below `2|A'|^2`.
//!
//! `t_exact` certifies the maximum by exhaustive search for ground sets of
//! at most [`EXHAUSTIVE_LIMIT`] elements. `t_random_search` follows the
//! random-restriction schedule: peel `A` down to a half-size subset of lower
//! energy, take `p`-random subsets of it over a grid of `p`, repair and
//! extend each sample, and keep the best. `bw_audit` evaluates every
//! inequality used to show the dyadic progression union has no large
//! low-energy subset.

use rayon::prelude::*;
use serde::Serialize;

use crate::energy::{combined_values, energy_of, EnergyTracker, Mode};
use crate::error::{Error, Result};
use crate::report::{AuditCheck, AuditReport, Num};
use crate::rng::{derive_seed, SeededRng};
use crate::sets::{build_bw_set, bw_index, independent_indices, sample_subset, GroundSet, Provenance, SampleSpec};

/// Largest ground set `t_exact` will certify.
pub const EXHAUSTIVE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowEnergyResult {
    #[serde(serialize_with = "elements_only")]
    pub subset: GroundSet,
    pub size: usize,
    pub energy: u128,
    pub mode: Mode,
    pub optimal: bool,
}

fn elements_only<S: serde::Serializer>(g: &GroundSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    g.elements().serialize(s)
}

fn is_low(energy: u128, size: usize) -> bool {
    energy < 2 * (size as u128) * (size as u128)
}

/// `E(A') < 2|A'|^2`.
pub fn low_energy_check(a: &GroundSet, mode: Mode) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(is_low(energy_of(a.elements(), mode)?, a.len()))
}

/// Exhaustive search from the largest size downwards; the first qualifying
/// subset in lexicographic index order is returned. With `size_cap` below
/// `|A|` only sizes up to the cap are searched and the result is not marked
/// optimal.
pub fn t_exact(a: &GroundSet, mode: Mode, size_cap: Option<usize>) -> Result<LowEnergyResult> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = a.len();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::ExhaustiveLimit {
            size: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let cap = size_cap.unwrap_or(n).min(n);
    if cap == 0 {
        return Err(Error::InvalidArgument("size cap must be positive".into()));
    }
    let xs = a.elements();
    // dense ids for pair results
    let mut values = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            values.push(mode.combine(xs[i], xs[j])?);
        }
    }
    let mut distinct = values.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut ids = vec![0u32; n * n];
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            let id = distinct.binary_search(&values[k]).expect("present") as u32;
            ids[i * n + j] = id;
            k += 1;
        }
    }
    let mut counts = vec![0u32; distinct.len()];
    let mut touched = Vec::new();

    for size in (1..=cap).rev() {
        let limit = 2 * (size as u128) * (size as u128);
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut e = 0u128;
            'pairs: for (u, &iu) in idx.iter().enumerate() {
                for &iv in &idx[u..] {
                    let id = ids[iu * n + iv] as usize;
                    let r = counts[id] as u128;
                    if r == 0 {
                        touched.push(id);
                    }
                    if iu == iv {
                        e += 2 * r + 1;
                        counts[id] += 1;
                    } else {
                        e += 4 * r + 4;
                        counts[id] += 2;
                    }
                    if e >= limit {
                        break 'pairs;
                    }
                }
            }
            for &id in &touched {
                counts[id] = 0;
            }
            touched.clear();
            if e < limit {
                let chosen: Vec<u64> = idx.iter().map(|&i| xs[i]).collect();
                let energy = energy_of(&chosen, mode)?;
                let prov = Provenance::new("t-exact")
                    .param("mode", mode)
                    .derived_from(a.provenance());
                return Ok(LowEnergyResult {
                    subset: a.restrict(&chosen)?.with_provenance(prov),
                    size,
                    energy,
                    mode,
                    optimal: cap == n,
                });
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("a single element always has energy 1 < 2")
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Removes the heaviest member until `target` remain.
fn peel(tracker: &mut EnergyTracker, target: usize) {
    while tracker.len() > target {
        let x = tracker.heaviest().expect("nonempty");
        tracker.remove(x);
    }
}

/// `p` values tried on each trial: 1, the sampling rate
/// `1 / (100 C^(1/2) |A|^(3/8))` with `C = E(A') / |A|^(11/4)`, and
/// `2^-k` for `k = 1..=log2 |A|`.
pub fn p_grid(set_size: usize, peeled_energy: u128) -> Vec<f64> {
    let n = set_size as f64;
    let c = (peeled_energy as f64 / n.powf(11.0 / 4.0)).max(f64::MIN_POSITIVE);
    let schedule = 1.0 / (100.0 * c.sqrt() * n.powf(3.0 / 8.0));
    let mut grid = vec![1.0, schedule.min(1.0)];
    let levels = (usize::BITS - 1).saturating_sub(set_size.leading_zeros());
    for k in 1..=levels {
        grid.push(0.5f64.powi(k as i32));
    }
    grid.dedup();
    grid
}

fn better(candidate: &[u64], incumbent: &[u64]) -> bool {
    candidate.len() > incumbent.len() || (candidate.len() == incumbent.len() && candidate < incumbent)
}

/// Seeded randomized lower bound for the largest low-energy subset.
///
/// Step one replaces an existence argument with a procedure: the heaviest
/// element (largest energy drop on removal) is peeled until half of `A`
/// remains. Step two samples `p`-random subsets of the peeled set for every
/// `p` in [`p_grid`]; each sample is peeled further until it passes the
/// threshold and then greedily extended with the remaining elements of `A`
/// in random order. Trial `t` draws from `derive_seed(seed, t)`, and the
/// best sample over all trials wins (larger, then lexicographically
/// smaller), so the result does not depend on scheduling.
pub fn t_random_search(a: &GroundSet, mode: Mode, trials: usize, seed: u64) -> Result<LowEnergyResult> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    // surfaces overflow once; trackers below combine member pairs only
    combined_values(a.elements(), mode)?;
    let xs = a.elements();
    let full = EnergyTracker::from_elements(mode, xs)?;
    let prov = Provenance::new("t-search")
        .param("mode", mode)
        .param("trials", trials)
        .param("seed", seed)
        .derived_from(a.provenance());
    if full.is_low() {
        return Ok(LowEnergyResult {
            subset: a.clone().with_provenance(prov),
            size: xs.len(),
            energy: full.energy(),
            mode,
            optimal: false,
        });
    }

    let mut peeled_tracker = full;
    peel(&mut peeled_tracker, xs.len().div_ceil(2));
    let mut peeled = peeled_tracker.members().to_vec();
    peeled.sort_unstable();
    let grid = p_grid(xs.len(), peeled_tracker.energy());

    let per_trial: Vec<Result<Vec<u64>>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = SeededRng::new(derive_seed(seed, t as u64));
            let mut best: Vec<u64> = Vec::new();
            for &p in &grid {
                let picked: Vec<u64> = independent_indices(peeled.len(), p, &mut rng)
                    .into_iter()
                    .map(|i| peeled[i])
                    .collect();
                let mut tracker = EnergyTracker::from_elements(mode, &picked)?;
                while !tracker.is_empty() && !tracker.is_low() {
                    let x = tracker.heaviest().expect("nonempty");
                    tracker.remove(x);
                }
                let mut rest: Vec<u64> = xs
                    .iter()
                    .copied()
                    .filter(|x| !tracker.members().contains(x))
                    .collect();
                rng.shuffle(&mut rest);
                for x in rest {
                    tracker.insert(x)?;
                    if !tracker.is_low() {
                        tracker.remove(x);
                    }
                }
                let mut found = tracker.members().to_vec();
                found.sort_unstable();
                if better(&found, &best) {
                    best = found;
                }
            }
            Ok(best)
        })
        .collect();

    let mut best: Vec<u64> = Vec::new();
    for r in per_trial {
        let cand = r?;
        if better(&cand, &best) {
            best = cand;
        }
    }
    let energy = energy_of(&best, mode)?;
    Ok(LowEnergyResult {
        subset: a.restrict(&best)?.with_provenance(prov),
        size: best.len(),
        energy,
        mode,
        optimal: false,
    })
}

/// Audit of the dyadic progression union `A = {(2i-1) 2^j : i <= N^2, j <= N}`.
///
/// Checks, in order:
/// * `|AA| <= 4 N^5` and `AA ⊆ {(2i-1) 2^j : i <= 2N^4, j <= 2N}`;
/// * each `A_j = {(2i-1) 2^j}` is a progression of length `N^2` with
///   difference `2^(j+1)` and `|A_j + A_j| = 2N^2 - 1`;
/// * for `samples` uniform subsets `A'` of size `ceil(C |A|^(5/6))`: the
///   Cauchy–Schwarz bounds `E_*(A') >= |A'|^4 / |A'A'|` and
///   `E_+(A') >= Σ_{j in I} |A' ∩ A_j|^4 / |A_j + A_j|`, where `I` holds the
///   `j` with `|A' ∩ A_j| >= 2 |A'|^(1/3) N^(2/3)`, and whether each energy
///   reaches `2|A'|^2`.
pub fn bw_audit(n: u64, c: f64, samples: usize, seed: u64) -> Result<AuditReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("bw audit needs N >= 2".into()));
    }
    if !c.is_finite() || c <= 0.0 {
        return Err(Error::InvalidArgument(format!("C = {c} must be positive")));
    }
    let a = build_bw_set(n)?;
    let total = a.len();
    let target = c * (n as f64).powf(2.5);
    if target > total as f64 {
        return Err(Error::InvalidArgument(format!(
            "C |A|^(5/6) = {target:.3} exceeds |A| = {total}"
        )));
    }
    let sample_size = (target.ceil() as usize).min(total);

    let n128 = n as u128;
    let mut checks = Vec::new();

    let product = combined_values(a.elements(), Mode::Multiplicative)?;
    let bound = 4 * n128.pow(5);
    checks.push(AuditCheck::new(
        "productset_size_le_4n5",
        Num::Int(product.len() as u128),
        Num::Int(bound),
        (product.len() as u128) <= bound,
    ));
    let outside = product
        .iter()
        .filter(|&&v| {
            let (i, j) = bw_index(v);
            !(1..=2 * n.pow(4)).contains(&i) || !(1..=2 * n as u32).contains(&j)
        })
        .count();
    checks.push(AuditCheck::new(
        "productset_containment_violations",
        Num::Int(outside as u128),
        Num::Int(0),
        outside == 0,
    ));

    let mut pieces: Vec<Vec<u64>> = vec![Vec::new(); n as usize];
    for &x in a.elements() {
        let (_, j) = bw_index(x);
        pieces[j as usize - 1].push(x);
    }
    let mut piece_sumsets = Vec::with_capacity(pieces.len());
    for (k, piece) in pieces.iter().enumerate() {
        let j = k as u32 + 1;
        checks.push(AuditCheck::new(
            format!("progression_{j}_length"),
            Num::Int(piece.len() as u128),
            Num::Int(n128 * n128),
            piece.len() as u128 == n128 * n128,
        ));
        let step = 1u64 << (j + 1);
        let bad_steps = piece.windows(2).filter(|w| w[1] - w[0] != step).count();
        checks.push(AuditCheck::new(
            format!("progression_{j}_difference_violations"),
            Num::Int(bad_steps as u128),
            Num::Int(0),
            bad_steps == 0,
        ));
        let sumset = combined_values(piece, Mode::Additive)?.len() as u128;
        checks.push(AuditCheck::new(
            format!("progression_{j}_sumset_size"),
            Num::Int(sumset),
            Num::Int(2 * n128 * n128 - 1),
            sumset == 2 * n128 * n128 - 1,
        ));
        piece_sumsets.push(sumset);
    }

    let m = sample_size as u128;
    let mut high_mul = 0usize;
    let mut high_add = 0usize;
    let mut high_both = 0usize;
    for s in 0..samples {
        let sub = sample_subset(
            &a,
            SampleSpec::FixedSize {
                m: sample_size,
                seed: derive_seed(seed, s as u64),
            },
        )?;
        let xs = sub.elements();
        let e_mul = energy_of(xs, Mode::Multiplicative)?;
        let pp = combined_values(xs, Mode::Multiplicative)?.len() as u128;
        checks.push(AuditCheck::new(
            format!("sample_{s}_mul_energy_ge_cs_bound"),
            Num::Int(e_mul),
            Num::ratio(m.pow(4), pp),
            e_mul * pp >= m.pow(4),
        ));
        checks.push(AuditCheck::new(
            format!("sample_{s}_mul_energy_ge_2m2"),
            Num::Int(e_mul),
            Num::Int(2 * m * m),
            e_mul >= 2 * m * m,
        ));

        let e_add = energy_of(xs, Mode::Additive)?;
        // |A' ∩ A_j| >= 2 m^(1/3) N^(2/3)  <=>  |A' ∩ A_j|^3 >= 8 m N^2
        let mut num = 0u128;
        let mut den = 1u128;
        for (k, piece) in pieces.iter().enumerate() {
            let hits = xs.iter().filter(|x| piece.binary_search(x).is_ok()).count() as u128;
            if hits.pow(3) >= 8 * m * n128 * n128 {
                let d = piece_sumsets[k];
                num = num * d + hits.pow(4) * den;
                den *= d;
                let g = num_integer::gcd(num, den).max(1);
                num /= g;
                den /= g;
            }
        }
        checks.push(AuditCheck::new(
            format!("sample_{s}_add_energy_ge_progression_bound"),
            Num::Int(e_add),
            Num::ratio(num, den),
            e_add * den >= num,
        ));
        checks.push(AuditCheck::new(
            format!("sample_{s}_add_energy_ge_2m2"),
            Num::Int(e_add),
            Num::Int(2 * m * m),
            e_add >= 2 * m * m,
        ));
        let mul_high = e_mul >= 2 * m * m;
        let add_high = e_add >= 2 * m * m;
        high_mul += usize::from(mul_high);
        high_add += usize::from(add_high);
        high_both += usize::from(mul_high && add_high);
    }

    let mut report = AuditReport::new("bw", checks);
    report.summarize("n", Num::Int(n128));
    report.summarize("set_size", Num::Int(total as u128));
    report.summarize("sample_size", Num::Int(m));
    report.summarize("samples", Num::Int(samples as u128));
    if samples > 0 {
        let frac = |k: usize| Num::Float(k as f64 / samples as f64);
        report.summarize("fraction_not_low_mul", frac(high_mul));
        report.summarize("fraction_not_low_add", frac(high_add));
        report.summarize("fraction_not_low_both", frac(high_both));
    }
    Ok(report)
}
