//! Exact additive and multiplicative energies.
//!
//! Every quantity here is derived from the multiplicity histogram of the
//! `|A|(|A|+1)/2` unordered pair results `a∘b` (`a <= b`). A result `s` hit by
//! `u` unordered pairs, `d` of them diagonal, has `r(s) = 2u - d` ordered
//! representations, and the energy is `Σ r(s)^2` accumulated in `u128`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{overflow, Error, Result};
use crate::sets::{GroundSet, Provenance};

/// Additive sums are counted in a dense array when `2 * max(A)` is below this.
const DENSE_LIMIT: u64 = 1 << 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Additive,
    Multiplicative,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::Additive, Mode::Multiplicative];

    pub fn combine(self, a: u64, b: u64) -> Result<u64> {
        match self {
            Mode::Additive => a
                .checked_add(b)
                .ok_or_else(|| overflow(format!("{a} + {b}"))),
            Mode::Multiplicative => a
                .checked_mul(b)
                .ok_or_else(|| overflow(format!("{a} * {b}"))),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Mode::Additive => '+',
            Mode::Multiplicative => '*',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Additive => "additive",
            Mode::Multiplicative => "multiplicative",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "additive" | "add" | "+" => Ok(Mode::Additive),
            "multiplicative" | "mul" | "*" => Ok(Mode::Multiplicative),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

/// One distinct pair result with its representation counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bucket {
    pub value: u64,
    /// Unordered pairs `{a, b}` (including `a = b`) with `a∘b = value`.
    pub unordered: u64,
    /// Ordered pairs `(a, b)` with `a∘b = value`.
    pub ordered: u64,
}

/// Multiplicity histogram of all pair results, ascending by value.
pub fn pair_histogram(elements: &[u64], mode: Mode) -> Result<Vec<Bucket>> {
    if let (Mode::Additive, Some(&max)) = (mode, elements.last()) {
        if max.saturating_mul(2) < DENSE_LIMIT {
            return Ok(dense_additive_histogram(elements, max));
        }
    }
    let mut vals = Vec::with_capacity(elements.len() * (elements.len() + 1) / 2);
    for (i, &a) in elements.iter().enumerate() {
        for &b in &elements[i..] {
            // low bit flags the diagonal so the run can count it once
            let v = mode.combine(a, b)?;
            if v >> 63 != 0 {
                return Err(overflow(format!("pair result {v} exceeds 63 bits")));
            }
            vals.push((v << 1) | u64::from(a == b));
        }
    }
    vals.sort_unstable();
    let mut out: Vec<Bucket> = Vec::new();
    for tagged in vals {
        let value = tagged >> 1;
        let diag = tagged & 1 == 1;
        let step = if diag { 1 } else { 2 };
        match out.last_mut() {
            Some(b) if b.value == value => {
                b.unordered += 1;
                b.ordered += step;
            }
            _ => out.push(Bucket {
                value,
                unordered: 1,
                ordered: step,
            }),
        }
    }
    Ok(out)
}

fn dense_additive_histogram(elements: &[u64], max: u64) -> Vec<Bucket> {
    let mut ordered = vec![0u32; (2 * max + 1) as usize];
    let mut diag = vec![false; (2 * max + 1) as usize];
    for (i, &a) in elements.iter().enumerate() {
        ordered[(2 * a) as usize] += 1;
        diag[(2 * a) as usize] = true;
        for &b in &elements[i + 1..] {
            ordered[(a + b) as usize] += 2;
        }
    }
    ordered
        .iter()
        .enumerate()
        .filter(|(_, &r)| r > 0)
        .map(|(s, &r)| {
            let d = u64::from(diag[s]);
            Bucket {
                value: s as u64,
                unordered: (r as u64 + d) / 2,
                ordered: r as u64,
            }
        })
        .collect()
}

fn require_nonempty(a: &GroundSet) -> Result<()> {
    if a.is_empty() {
        Err(Error::EmptySet)
    } else {
        Ok(())
    }
}

/// `A∘A` as a sorted ground set.
pub fn combined_set(a: &GroundSet, mode: Mode) -> Result<GroundSet> {
    require_nonempty(a)?;
    let values = combined_values(a.elements(), mode)?;
    let prov = Provenance::new(match mode {
        Mode::Additive => "sumset",
        Mode::Multiplicative => "productset",
    })
    .derived_from(a.provenance());
    Ok(GroundSet::new(values)?.with_provenance(prov))
}

/// Sorted distinct pair results.
pub fn combined_values(elements: &[u64], mode: Mode) -> Result<Vec<u64>> {
    if let (Mode::Additive, Some(&max)) = (mode, elements.last()) {
        if max.saturating_mul(2) < DENSE_LIMIT * 8 {
            let mut bits = vec![0u64; (2 * max / 64 + 1) as usize];
            for (i, &a) in elements.iter().enumerate() {
                for &b in &elements[i..] {
                    let s = a + b;
                    bits[(s / 64) as usize] |= 1 << (s % 64);
                }
            }
            let mut out = Vec::new();
            for (w, &word) in bits.iter().enumerate() {
                let mut rest = word;
                while rest != 0 {
                    let t = rest.trailing_zeros() as u64;
                    out.push(w as u64 * 64 + t);
                    rest &= rest - 1;
                }
            }
            return Ok(out);
        }
    }
    let mut vals = Vec::with_capacity(elements.len() * (elements.len() + 1) / 2);
    for (i, &a) in elements.iter().enumerate() {
        for &b in &elements[i..] {
            vals.push(mode.combine(a, b)?);
        }
    }
    vals.sort_unstable();
    vals.dedup();
    Ok(vals)
}

/// `|A∘A|`.
pub fn combined_size(elements: &[u64], mode: Mode) -> Result<usize> {
    Ok(combined_values(elements, mode)?.len())
}

pub fn energy_of(elements: &[u64], mode: Mode) -> Result<u128> {
    Ok(pair_histogram(elements, mode)?
        .iter()
        .map(|b| (b.ordered as u128) * (b.ordered as u128))
        .sum())
}

/// Number of ordered quadruples `(a, b, c, d)` in `A^4` with `a∘b = c∘d`.
pub fn energy(a: &GroundSet, mode: Mode) -> Result<u128> {
    require_nonempty(a)?;
    energy_of(a.elements(), mode)
}

/// Ordered quadruples with `{a, b} = {c, d}` as multisets: `2m^2 - m`.
pub fn trivial_count(m: usize) -> u128 {
    let m = m as u128;
    2 * m * m - m
}

pub fn nontrivial_energy(a: &GroundSet, mode: Mode) -> Result<u128> {
    Ok(energy(a, mode)? - trivial_count(a.len()))
}

fn ratio_str<S: Serializer>(r: &Ratio<u128>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnergyReport {
    pub set_size: u64,
    pub energy_add: u128,
    pub energy_mul: u128,
    pub nontrivial_add: u128,
    pub nontrivial_mul: u128,
    pub sumset_size: u64,
    pub productset_size: u64,
    #[serde(serialize_with = "ratio_str")]
    pub cs_lower_add: Ratio<u128>,
    #[serde(serialize_with = "ratio_str")]
    pub cs_lower_mul: Ratio<u128>,
}

pub fn energy_report(a: &GroundSet) -> Result<EnergyReport> {
    require_nonempty(a)?;
    let m = a.len();
    let hist_add = pair_histogram(a.elements(), Mode::Additive)?;
    let hist_mul = pair_histogram(a.elements(), Mode::Multiplicative)?;
    let e = |h: &[Bucket]| -> u128 { h.iter().map(|b| (b.ordered as u128).pow(2)).sum() };
    let energy_add = e(&hist_add);
    let energy_mul = e(&hist_mul);
    let m4 = (m as u128)
        .checked_pow(4)
        .ok_or_else(|| overflow("|A|^4"))?;
    Ok(EnergyReport {
        set_size: m as u64,
        energy_add,
        energy_mul,
        nontrivial_add: energy_add - trivial_count(m),
        nontrivial_mul: energy_mul - trivial_count(m),
        sumset_size: hist_add.len() as u64,
        productset_size: hist_mul.len() as u64,
        cs_lower_add: Ratio::new(m4, hist_add.len() as u128),
        cs_lower_mul: Ratio::new(m4, hist_mul.len() as u128),
    })
}

/// Ordered solutions of `a + b = c + d` in `[n]^4`, split by how many
/// distinct values they use (`counts[k - 1]` for `k` distinct values).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionPatterns {
    pub counts: [u128; 4],
}

impl SolutionPatterns {
    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// Enumerates `(a, b, c)` and solves for `d`; `O(n^3)`.
    pub fn enumerate(n: u64) -> SolutionPatterns {
        let mut counts = [0u128; 4];
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    let s = a + b;
                    if s <= c || s - c > n {
                        continue;
                    }
                    let d = s - c;
                    let mut v = [a, b, c, d];
                    v.sort_unstable();
                    let distinct = 1 + v.windows(2).filter(|w| w[0] != w[1]).count();
                    counts[distinct - 1] += 1;
                }
            }
        }
        SolutionPatterns { counts }
    }

    /// Closed form: `n` constant quadruples, `4 C(n,2)` two-value trivial
    /// ones, four orderings per 3-term progression, the rest use four values.
    pub fn closed_form(n: u64) -> SolutionPatterns {
        let n = n as u128;
        let total = (2 * n * n * n + n) / 3;
        let one = n;
        let two = 2 * n * n.saturating_sub(1);
        // progressions x < x + d < x + 2d inside [n]
        let half = n.saturating_sub(1) / 2;
        let progressions: u128 = (1..=half).map(|d| n - 2 * d).sum();
        let three = 4 * progressions;
        let four = total - one - two - three;
        SolutionPatterns {
            counts: [one, two, three, four],
        }
    }

    pub fn for_interval(n: u64) -> SolutionPatterns {
        if n <= 100 {
            SolutionPatterns::enumerate(n)
        } else {
            SolutionPatterns::closed_form(n)
        }
    }
}

fn falling(x: u64, k: u64) -> BigInt {
    if x < k {
        return BigInt::zero();
    }
    (0..k).map(|i| BigInt::from(x - i)).product()
}

/// Exact expectation of the additive energy of a uniform `m`-subset of
/// `[n]`: a quadruple using `k` distinct values survives with probability
/// `C(n-k, m-k) / C(n, m) = m^(k) / n^(k)` (falling factorials).
pub fn expected_energy_exact(n: u64, m: u64) -> Result<BigRational> {
    if m > n {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds n = {n}")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let patterns = SolutionPatterns::for_interval(n);
    let mut acc = BigRational::zero();
    for (i, &count) in patterns.counts.iter().enumerate() {
        let k = i as u64 + 1;
        let num = falling(m, k);
        if num.is_zero() {
            continue;
        }
        acc += BigRational::new(BigInt::from(count) * num, falling(n, k));
    }
    Ok(acc)
}

/// Energy of a set under single-element insertions and removals, each in
/// `O(|S|)`: adding `x` raises `r(x∘s)` by 2 for every member `s` and
/// `r(x∘x)` by 1, and these results are pairwise distinct.
#[derive(Debug, Clone)]
pub struct EnergyTracker {
    mode: Mode,
    counts: HashMap<u64, u64>,
    energy: u128,
    members: Vec<u64>,
}

impl EnergyTracker {
    pub fn new(mode: Mode) -> EnergyTracker {
        EnergyTracker {
            mode,
            counts: HashMap::new(),
            energy: 0,
            members: Vec::new(),
        }
    }

    pub fn from_elements(mode: Mode, xs: &[u64]) -> Result<EnergyTracker> {
        let mut t = EnergyTracker::new(mode);
        for &x in xs {
            t.insert(x)?;
        }
        Ok(t)
    }

    pub fn energy(&self) -> u128 {
        self.energy
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// Energy strictly below twice the squared size.
    pub fn is_low(&self) -> bool {
        let m = self.members.len() as u128;
        self.energy < 2 * m * m
    }

    pub fn insert(&mut self, x: u64) -> Result<()> {
        let mut results = Vec::with_capacity(self.members.len() + 1);
        for &s in &self.members {
            results.push((self.mode.combine(x, s)?, 2u64));
        }
        results.push((self.mode.combine(x, x)?, 1));
        for (v, step) in results {
            let r = self.counts.entry(v).or_insert(0);
            let before = *r as u128;
            *r += step;
            self.energy = self.energy + (*r as u128).pow(2) - before * before;
        }
        self.members.push(x);
        Ok(())
    }

    /// Energy lost if `x` were removed; `x` must be a member.
    pub fn removal_drop(&self, x: u64) -> u128 {
        let mut drop = 0u128;
        for &s in &self.members {
            let step = if s == x { 1 } else { 2 };
            let v = self.mode.combine(x, s).expect("member results fit");
            let r = self.counts[&v] as u128;
            drop += r * r - (r - step) * (r - step);
        }
        drop
    }

    pub fn remove(&mut self, x: u64) {
        let pos = self
            .members
            .iter()
            .position(|&s| s == x)
            .expect("removing a non-member");
        self.energy -= self.removal_drop(x);
        for &s in &self.members {
            let step = if s == x { 1 } else { 2 };
            let v = self.mode.combine(x, s).expect("member results fit");
            let r = self.counts.get_mut(&v).expect("present");
            *r -= step;
            if *r == 0 {
                self.counts.remove(&v);
            }
        }
        self.members.swap_remove(pos);
    }

    /// Member whose removal lowers the energy most; ties go to the larger value.
    pub fn heaviest(&self) -> Option<u64> {
        self.members
            .iter()
            .map(|&x| (self.removal_drop(x), x))
            .max()
            .map(|(_, x)| x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{build_bw_set, build_interval};
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn set(xs: &[u64]) -> GroundSet {
        GroundSet::new(xs.to_vec()).unwrap()
    }

    /// Direct count over all ordered quadruples.
    fn brute_energy(xs: &[u64], mode: Mode) -> u128 {
        let mut count = 0;
        for &a in xs {
            for &b in xs {
                for &c in xs {
                    for &d in xs {
                        if mode.combine(a, b).unwrap() == mode.combine(c, d).unwrap() {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn combined_set_examples() {
        let s = combined_set(&set(&[1, 2, 3]), Mode::Additive).unwrap();
        assert_eq!(s.elements(), &[2, 3, 4, 5, 6]);
        let p = combined_set(&set(&[2, 3, 5]), Mode::Multiplicative).unwrap();
        assert_eq!(p.elements(), &[4, 6, 9, 10, 15, 25]);
        let bw = combined_set(&build_bw_set(2).unwrap(), Mode::Multiplicative).unwrap();
        assert!(bw.len() <= 128);
        assert!(combined_set(&set(&[]), Mode::Additive).is_err());
        assert!(matches!(
            combined_set(&set(&[u64::MAX / 2]), Mode::Multiplicative),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn energy_examples() {
        for mode in Mode::BOTH {
            assert_eq!(energy(&set(&[7]), mode).unwrap(), 1);
        }
        assert_eq!(brute_energy(&[1, 2, 3], Mode::Additive), 19);
        assert_eq!(energy(&set(&[1, 2, 3]), Mode::Additive).unwrap(), 19);
        assert_eq!(brute_energy(&[10, 14, 15, 21], Mode::Multiplicative), 36);
        assert_eq!(energy(&set(&[10, 14, 15, 21]), Mode::Multiplicative).unwrap(), 36);
        assert_eq!(nontrivial_energy(&set(&[1, 2, 3]), Mode::Additive).unwrap(), 4);
        assert_eq!(
            nontrivial_energy(&set(&[10, 14, 15, 21]), Mode::Multiplicative).unwrap(),
            8
        );
        assert_eq!(nontrivial_energy(&set(&[1, 2, 5, 7]), Mode::Additive).unwrap(), 0);
    }

    #[test]
    fn sparse_and_dense_paths_agree() {
        let xs: Vec<u64> = (1..60).map(|i| i * i + 3).collect();
        let dense = pair_histogram(&xs, Mode::Additive).unwrap();
        let shifted: Vec<u64> = xs.iter().map(|x| x + DENSE_LIMIT).collect();
        let sparse = pair_histogram(&shifted, Mode::Additive).unwrap();
        assert_eq!(dense.len(), sparse.len());
        for (d, s) in dense.iter().zip(&sparse) {
            assert_eq!((d.ordered, d.unordered), (s.ordered, s.unordered));
            assert_eq!(d.value + 2 * DENSE_LIMIT, s.value);
        }
    }

    #[test]
    fn report_examples() {
        let r = energy_report(&set(&[1, 2])).unwrap();
        assert_eq!(r.energy_add, 6);
        assert_eq!(r.sumset_size, 3);
        assert_eq!(r.cs_lower_add, Ratio::new(16, 3));

        let one = energy_report(&set(&[1])).unwrap();
        assert_eq!((one.energy_add, one.energy_mul), (1, 1));
        assert_eq!((one.nontrivial_add, one.nontrivial_mul), (0, 0));

        let p = energy_report(&set(&[2, 3, 5])).unwrap();
        assert_eq!(p.energy_mul, 15);
        assert_eq!(p.nontrivial_mul, 0);

        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["energy_add"], 6);
        assert_eq!(json["cs_lower_add"], "16/3");
        assert_eq!(json.as_object().unwrap().len(), 9);
    }

    #[test]
    fn interval_energy_closed_form() {
        for n in 1..=50u64 {
            let e = energy(&build_interval(n).unwrap(), Mode::Additive).unwrap();
            assert_eq!(e, (2 * (n as u128).pow(3) + n as u128) / 3);
        }
    }

    #[test]
    fn pattern_counts_agree() {
        for n in 1..=100 {
            assert_eq!(SolutionPatterns::enumerate(n), SolutionPatterns::closed_form(n), "n={n}");
        }
        let p = SolutionPatterns::closed_form(3);
        assert_eq!(p.counts, [3, 12, 4, 0]);
    }

    #[test]
    fn expected_energy_edges() {
        assert!(expected_energy_exact(10, 0).unwrap().is_zero());
        assert_eq!(
            expected_energy_exact(3, 3).unwrap(),
            BigRational::from_integer(19.into())
        );
        for n in 1..=12u64 {
            let want = energy(&build_interval(n).unwrap(), Mode::Additive).unwrap();
            assert_eq!(
                expected_energy_exact(n, n).unwrap(),
                BigRational::from_integer(BigInt::from(want))
            );
        }
        assert!(expected_energy_exact(5, 6).is_err());
    }

    #[test]
    fn expected_energy_two_point_oracle() {
        // For m = 2 only the two chosen values matter: E = 6 if the pair
        // is {x, y}; average over all C(n, 2) pairs.
        let n = 9u64;
        let mut total = 0u128;
        let mut pairs = 0u128;
        for x in 1..=n {
            for y in x + 1..=n {
                total += brute_energy(&[x, y], Mode::Additive);
                pairs += 1;
            }
        }
        let want = BigRational::new(BigInt::from(total), BigInt::from(pairs));
        assert_eq!(expected_energy_exact(n, 2).unwrap(), want);
    }

    #[test]
    fn expected_energy_small_exhaustive_oracle() {
        // Average over every m-subset of [n].
        let (n, m) = (9usize, 4usize);
        let mut total = 0u128;
        let mut count = 0u128;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != m {
                continue;
            }
            let xs: Vec<u64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as u64 + 1).collect();
            total += brute_energy(&xs, Mode::Additive);
            count += 1;
        }
        let want = BigRational::new(BigInt::from(total), BigInt::from(count));
        assert_eq!(expected_energy_exact(n as u64, m as u64).unwrap(), want);
    }

    #[test]
    fn expected_nontrivial_energy_scales_like_m4_over_n() {
        let n = 10_000u64;
        let lo = (n as f64).cbrt().ceil() as u64;
        let hi = (n as f64).powf(2.0 / 3.0).floor() as u64;
        let ms: Vec<u64> = (0..12).map(|i| lo + (hi - lo) * i / 11).collect();
        let xs: Vec<f64> = ms.iter().map(|&m| (m as f64).ln()).collect();
        let ys: Vec<f64> = ms
            .iter()
            .map(|&m| {
                let e = expected_energy_exact(n, m).unwrap().to_f64().unwrap();
                (e - trivial_count(m as usize) as f64).ln()
            })
            .collect();
        let mx = xs.iter().sum::<f64>() / xs.len() as f64;
        let my = ys.iter().sum::<f64>() / ys.len() as f64;
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
        let slope = sxy / sxx;
        assert!((3.6..=4.2).contains(&slope), "slope {slope}");
    }

    #[test]
    fn tracker_follows_batch_energy() {
        let xs = [3u64, 5, 6, 9, 10, 12, 15, 18, 20];
        for mode in Mode::BOTH {
            let mut t = EnergyTracker::new(mode);
            for (k, &x) in xs.iter().enumerate() {
                t.insert(x).unwrap();
                assert_eq!(t.energy(), brute_energy(&xs[..=k], mode));
            }
            for &x in &[9u64, 3, 20] {
                let before = t.energy();
                let drop = t.removal_drop(x);
                t.remove(x);
                assert_eq!(before - drop, t.energy());
                let mut rest = t.members().to_vec();
                rest.sort_unstable();
                assert_eq!(t.energy(), brute_energy(&rest, mode));
            }
        }
    }

    proptest! {
        #[test]
        fn histogram_matches_brute_force(xs in proptest::collection::btree_set(1u64..60, 1..=12)) {
            let xs: Vec<u64> = xs.into_iter().collect();
            for mode in Mode::BOTH {
                prop_assert_eq!(energy_of(&xs, mode).unwrap(), brute_energy(&xs, mode));
            }
        }

        #[test]
        fn report_invariants(xs in proptest::collection::btree_set(1u64..500, 1..40)) {
            let r = energy_report(&GroundSet::new(xs.into_iter().collect()).unwrap()).unwrap();
            let m = r.set_size as u128;
            for (e, nt, cs) in [(r.energy_add, r.nontrivial_add, r.cs_lower_add),
                                (r.energy_mul, r.nontrivial_mul, r.cs_lower_mul)] {
                prop_assert!(e >= m * m);
                prop_assert_eq!(nt, e - (2 * m * m - m));
                prop_assert!(Ratio::from_integer(e) >= cs);
            }
        }

        #[test]
        fn translation_and_scaling_invariance(
            xs in proptest::collection::btree_set(1u64..200, 1..25),
            t in 1u64..1000,
            k in 2u64..50,
        ) {
            let xs: Vec<u64> = xs.into_iter().collect();
            let shifted: Vec<u64> = xs.iter().map(|x| x + t).collect();
            let scaled: Vec<u64> = xs.iter().map(|x| x * k).collect();
            prop_assert_eq!(energy_of(&xs, Mode::Additive).unwrap(), energy_of(&shifted, Mode::Additive).unwrap());
            prop_assert_eq!(energy_of(&xs, Mode::Multiplicative).unwrap(), energy_of(&scaled, Mode::Multiplicative).unwrap());
        }
    }
}
