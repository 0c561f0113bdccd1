//! Ground sets and the constructions that produce them.
//!
//! A [`GroundSet`] is a strictly increasing list of positive integers with an
//! optional prime-factor label per element and a provenance chain recording
//! which construction (and which sampling steps) produced it.
//!
//! Text format, one element per line:
//!
//! ```text
//! # pq n=4
//! 10	2,5
//! 14	2,7
//! ```
//!
//! Lines starting with `#` carry provenance (`# <tag> key=value ...`, root
//! first). An element may be followed by a tab and its comma-separated prime
//! factors.

use std::fmt;

use serde::Serialize;

use crate::error::{overflow, Error, Result};
use crate::primes::{factorize, primes_in_interval, primes_up_to};
use crate::rng::SeededRng;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tag: String,
    pub params: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parent: Option<Box<Provenance>>,
}

impl Provenance {
    pub fn new(tag: &str) -> Self {
        Provenance {
            tag: tag.to_string(),
            params: Vec::new(),
            parent: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn derived_from(mut self, parent: &Provenance) -> Self {
        self.parent = Some(Box::new(parent.clone()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Root construction of this chain.
    pub fn root(&self) -> &Provenance {
        match &self.parent {
            Some(p) => p.root(),
            None => self,
        }
    }

    fn header_lines(&self, out: &mut Vec<String>) {
        if let Some(p) = &self.parent {
            p.header_lines(out);
        }
        let mut line = format!("# {}", self.tag);
        for (k, v) in &self.params {
            line.push_str(&format!(" {k}={v}"));
        }
        out.push(line);
    }

    fn parse_line(line: &str) -> Option<Provenance> {
        let mut words = line.split_whitespace();
        let tag = words.next()?;
        let mut prov = Provenance::new(tag);
        for w in words {
            let (k, v) = w.split_once('=')?;
            prov.params.push((k.to_string(), v.to_string()));
        }
        Some(prov)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    elements: Vec<u64>,
    labels: Option<Vec<Vec<u64>>>,
    provenance: Provenance,
}

impl GroundSet {
    /// Builds a set from arbitrary values; sorts and removes duplicates.
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() == Some(&0) {
            return Err(Error::InvalidSet("elements must be positive".into()));
        }
        Ok(GroundSet {
            elements,
            labels: None,
            provenance: Provenance::new("explicit"),
        })
    }

    /// Builds a labelled set. Pairs are sorted by element; each label's
    /// product must equal its element.
    pub fn with_labels(mut pairs: Vec<(u64, Vec<u64>)>, provenance: Provenance) -> Result<Self> {
        pairs.sort_unstable_by_key(|(x, _)| *x);
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidSet(format!("duplicate element {}", w[0].0)));
            }
        }
        for (x, factors) in &pairs {
            if *x == 0 {
                return Err(Error::InvalidSet("elements must be positive".into()));
            }
            let prod = factors
                .iter()
                .try_fold(1u64, |acc, &f| acc.checked_mul(f))
                .ok_or_else(|| overflow("label product"))?;
            if prod != *x {
                return Err(Error::InvalidSet(format!(
                    "label {factors:?} does not multiply to {x}"
                )));
            }
        }
        let (elements, labels) = pairs.into_iter().unzip();
        Ok(GroundSet {
            elements,
            labels: Some(labels),
            provenance,
        })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn labels(&self) -> Option<&[Vec<u64>]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, x: u64) -> Option<&[u64]> {
        let i = self.elements.binary_search(&x).ok()?;
        self.labels.as_ref().map(|l| l[i].as_slice())
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    /// The members of `self` listed in `subset` (labels kept).
    pub fn restrict(&self, subset: &[u64]) -> Result<GroundSet> {
        let mut idx = Vec::with_capacity(subset.len());
        for &x in subset {
            let i = self
                .elements
                .binary_search(&x)
                .map_err(|_| Error::InvalidSet(format!("{x} is not a member")))?;
            idx.push(i);
        }
        idx.sort_unstable();
        idx.dedup();
        Ok(self.pick(&idx, self.provenance.clone()))
    }

    fn pick(&self, sorted_idx: &[usize], provenance: Provenance) -> GroundSet {
        GroundSet {
            elements: sorted_idx.iter().map(|&i| self.elements[i]).collect(),
            labels: self
                .labels
                .as_ref()
                .map(|l| sorted_idx.iter().map(|&i| l[i].clone()).collect()),
            provenance,
        }
    }

    /// Distinct label primes of a two-prime labelled set, split into the
    /// smaller factors `P` and the larger factors `Q`.
    pub fn pq_parts(&self) -> Result<(Vec<u64>, Vec<u64>)> {
        let labels = self
            .labels
            .as_ref()
            .ok_or_else(|| Error::MissingLabel(self.elements.first().copied().unwrap_or(0)))?;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (x, l) in self.elements.iter().zip(labels) {
            match l.as_slice() {
                [p, q] if p != q => {
                    left.push(*p.min(q));
                    right.push(*p.max(q));
                }
                _ => return Err(Error::MissingLabel(*x)),
            }
        }
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        Ok((left, right))
    }

    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        self.provenance.header_lines(&mut lines);
        for (i, x) in self.elements.iter().enumerate() {
            match &self.labels {
                Some(l) if !l[i].is_empty() => {
                    let f: Vec<String> = l[i].iter().map(u64::to_string).collect();
                    lines.push(format!("{x}\t{}", f.join(",")));
                }
                _ => lines.push(x.to_string()),
            }
        }
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }

    pub fn parse_text(text: &str) -> Result<GroundSet> {
        let mut chain: Option<Provenance> = None;
        let mut pairs = Vec::new();
        let mut any_label = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(mut p) = Provenance::parse_line(rest) {
                    if let Some(prev) = chain.take() {
                        p.parent = Some(Box::new(prev));
                    }
                    chain = Some(p);
                }
                continue;
            }
            let parse_err = |msg: String| Error::Parse {
                line: lineno + 1,
                msg,
            };
            let (num, label) = match line.split_once('\t') {
                Some((a, b)) => (a.trim(), Some(b.trim())),
                None => (line, None),
            };
            let x: u64 = num
                .parse()
                .map_err(|e| parse_err(format!("bad element {num:?}: {e}")))?;
            let factors = match label {
                Some(l) if !l.is_empty() => {
                    any_label = true;
                    l.split(',')
                        .map(|f| {
                            f.trim()
                                .parse::<u64>()
                                .map_err(|e| parse_err(format!("bad factor {f:?}: {e}")))
                        })
                        .collect::<Result<Vec<u64>>>()?
                }
                _ => Vec::new(),
            };
            pairs.push((x, factors));
        }
        let provenance = chain.unwrap_or_else(|| Provenance::new("file"));
        if any_label {
            if let Some((x, _)) = pairs.iter().find(|(_, f)| f.is_empty()) {
                return Err(Error::MissingLabel(*x));
            }
            GroundSet::with_labels(pairs, provenance)
        } else {
            let mut elements: Vec<u64> = pairs.into_iter().map(|(x, _)| x).collect();
            let n = elements.len();
            elements.sort_unstable();
            elements.dedup();
            if elements.len() != n {
                return Err(Error::InvalidSet("duplicate elements".into()));
            }
            Ok(GroundSet::new(elements)?.with_provenance(provenance))
        }
    }
}

/// `floor(n^2 / ln n)`, the upper end of the large-prime interval.
pub fn pq_upper_limit(n: u64) -> u64 {
    let nf = n as f64;
    (nf * nf / nf.ln()).floor() as u64
}

/// `{p*q : p <= n < q <= floor(n^2 / ln n), p, q prime}` labelled `(p, q)`.
pub fn build_pq_set(n: u64) -> Result<GroundSet> {
    if n < 2 {
        return Err(Error::EmptyPrimeInterval { lo: n, hi: n });
    }
    let hi = pq_upper_limit(n);
    let small = primes_up_to(n);
    let large = primes_in_interval(n, hi)?;
    if large.is_empty() || small.is_empty() {
        return Err(Error::EmptyPrimeInterval { lo: n, hi });
    }
    let mut pairs = Vec::with_capacity(small.len() * large.len());
    for &p in small.primes() {
        for &q in &large {
            let x = p
                .checked_mul(q)
                .ok_or_else(|| overflow(format!("{p} * {q}")))?;
            pairs.push((x, vec![p, q]));
        }
    }
    let prov = Provenance::new("pq").param("n", n);
    GroundSet::with_labels(pairs, prov)
}

/// Distinct products of three primes `<= n`, labelled by the sorted triple.
pub fn build_triple_prime_set(n: u64) -> Result<GroundSet> {
    let pool = primes_up_to(n);
    if pool.is_empty() {
        return Err(Error::EmptyPrimeInterval { lo: 1, hi: n });
    }
    let p = pool.primes();
    let mut pairs = Vec::new();
    for a in 0..p.len() {
        for b in a..p.len() {
            for c in b..p.len() {
                let x = p[a]
                    .checked_mul(p[b])
                    .and_then(|v| v.checked_mul(p[c]))
                    .ok_or_else(|| overflow("triple prime product"))?;
                pairs.push((x, vec![p[a], p[b], p[c]]));
            }
        }
    }
    GroundSet::with_labels(pairs, Provenance::new("triple").param("n", n))
}

/// `{(2i - 1) * 2^j : 1 <= i <= n^2, 1 <= j <= n}`, labelled by the prime
/// factorisation of each element; [`bw_index`] recovers `(i, j)`.
pub fn build_bw_set(n: u64) -> Result<GroundSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("bw set needs n >= 1".into()));
    }
    let rows = n
        .checked_mul(n)
        .ok_or_else(|| overflow("n^2 in bw set"))?;
    let top_odd = rows
        .checked_mul(2)
        .map(|v| v - 1)
        .ok_or_else(|| overflow("2n^2 - 1 in bw set"))?;
    if n >= 64 || top_odd.checked_mul(1u64 << n).is_none() {
        return Err(overflow(format!("bw set with n = {n} exceeds 64 bits")));
    }
    let mut pairs = Vec::with_capacity((rows * n) as usize);
    for i in 1..=rows {
        let odd = 2 * i - 1;
        let odd_factors = factorize(odd);
        for j in 1..=n {
            let mut label = vec![2u64; j as usize];
            label.extend_from_slice(&odd_factors);
            pairs.push((odd << j, label));
        }
    }
    GroundSet::with_labels(pairs, Provenance::new("bw").param("n", n))
}

/// `(i, j)` with `x = (2i - 1) * 2^j`.
pub fn bw_index(x: u64) -> (u64, u32) {
    let j = x.trailing_zeros();
    let odd = x >> j;
    (odd.div_ceil(2), j)
}

/// `{1, ..., n}`.
pub fn build_interval(n: u64) -> Result<GroundSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("interval needs n >= 1".into()));
    }
    Ok(GroundSet::new((1..=n).collect())?.with_provenance(Provenance::new("interval").param("n", n)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleSpec {
    /// Uniform `m`-subset via partial Fisher–Yates over the sorted ground set.
    FixedSize { m: usize, seed: u64 },
    /// Each element kept independently with probability `p`.
    Independent { p: f64, seed: u64 },
}

impl SampleSpec {
    fn validate(&self, ground: &GroundSet) -> Result<()> {
        match *self {
            SampleSpec::FixedSize { m, .. } if m > ground.len() => Err(Error::InvalidSample(
                format!("m = {m} exceeds ground size {}", ground.len()),
            )),
            SampleSpec::Independent { p, .. } if !(0.0..=1.0).contains(&p) => {
                Err(Error::InvalidSample(format!("p = {p} outside [0, 1]")))
            }
            _ => Ok(()),
        }
    }

    fn provenance(&self) -> Provenance {
        match *self {
            SampleSpec::FixedSize { m, seed } => Provenance::new("sample")
                .param("kind", "fixed-size")
                .param("m", m)
                .param("seed", seed),
            SampleSpec::Independent { p, seed } => Provenance::new("sample")
                .param("kind", "independent")
                .param("p", p)
                .param("seed", seed),
        }
    }
}

/// Draws a random subset of `ground`; deterministic in `(ground, spec)`.
pub fn sample_subset(ground: &GroundSet, spec: SampleSpec) -> Result<GroundSet> {
    spec.validate(ground)?;
    let idx = match spec {
        SampleSpec::FixedSize { m, seed } => {
            let mut rng = SeededRng::new(seed);
            fixed_size_indices(ground.len(), m, &mut rng)
        }
        SampleSpec::Independent { p, seed } => {
            let mut rng = SeededRng::new(seed);
            independent_indices(ground.len(), p, &mut rng)
        }
    };
    let prov = spec.provenance().derived_from(ground.provenance());
    Ok(ground.pick(&idx, prov))
}

/// Sorted indices of a uniform `m`-subset of `0..len`.
pub(crate) fn fixed_size_indices(len: usize, m: usize, rng: &mut SeededRng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..len).collect();
    for i in 0..m {
        let j = i + rng.below((len - i) as u64) as usize;
        perm.swap(i, j);
    }
    perm.truncate(m);
    perm.sort_unstable();
    perm
}

/// Sorted indices kept by independent `p`-coins.
pub(crate) fn independent_indices(len: usize, p: f64, rng: &mut SeededRng) -> Vec<usize> {
    (0..len).filter(|_| rng.unit() < p).collect()
}
