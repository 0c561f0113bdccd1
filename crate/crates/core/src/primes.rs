//! Prime generation.
//!
//! Small limits use a plain sieve of Eratosthenes over a byte array. Above
//! [`SEGMENT_THRESHOLD`] the range is processed in fixed-size segments of
//! [`SEGMENT_LEN`] so memory stays bounded by the segment plus the base primes
//! up to `sqrt(hi)`.

use crate::error::{Error, Result};

/// Limits above this are sieved segment by segment.
pub const SEGMENT_THRESHOLD: u64 = 1 << 20;

/// Segment width used by the segmented sieve.
pub const SEGMENT_LEN: u64 = 1 << 16;

/// The primes up to and including `limit`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePool {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimePool {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.primes.binary_search(&x).is_ok()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.primes
    }
}

/// All primes in `[2, n]`.
pub fn primes_up_to(n: u64) -> PrimePool {
    let primes = if n <= SEGMENT_THRESHOLD {
        simple_sieve(n)
    } else {
        segmented(1, n)
    };
    PrimePool { limit: n, primes }
}

/// All primes `q` with `lo < q <= hi`.
pub fn primes_in_interval(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if lo > hi {
        return Err(Error::InvalidInterval { lo, hi });
    }
    if hi <= SEGMENT_THRESHOLD {
        let mut all = simple_sieve(hi);
        all.retain(|&p| p > lo);
        return Ok(all);
    }
    Ok(segmented(lo, hi))
}

fn simple_sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .collect()
}

/// Primes in the half-open interval `(lo, hi]`.
fn segmented(lo: u64, hi: u64) -> Vec<u64> {
    let root = isqrt(hi);
    let base = simple_sieve(root);
    let mut out = Vec::new();
    let mut start = lo.saturating_add(1).max(2);
    let mut mark = vec![false; SEGMENT_LEN as usize];
    while start <= hi {
        let end = hi.min(start.saturating_add(SEGMENT_LEN - 1));
        let width = (end - start + 1) as usize;
        mark[..width].iter_mut().for_each(|m| *m = false);
        for &p in &base {
            if p * p > end {
                break;
            }
            let first = (p * p).max(start.div_ceil(p) * p);
            let mut k = first;
            while k <= end {
                mark[(k - start) as usize] = true;
                k += p;
            }
        }
        out.extend(
            (0..width)
                .filter(|&i| !mark[i])
                .map(|i| start + i as u64),
        );
        if end == u64::MAX {
            break;
        }
        start = end + 1;
    }
    out
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Prime factors of `n` with multiplicity, ascending. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n % 2 == 0 && n > 0 {
        out.push(2);
        n /= 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        while n % d == 0 {
            out.push(d);
            n /= d;
        }
        d += 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn is_prime_trial(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn small_pools() {
        assert_eq!(primes_up_to(10).primes(), &[2, 3, 5, 7]);
        assert!(primes_up_to(1).is_empty());
        assert!(primes_up_to(0).is_empty());
        assert_eq!(primes_up_to(2).primes(), &[2]);
    }

    #[test]
    fn pi_of_100_matches_trial_division() {
        let oracle = (1..=100).filter(|&k| is_prime_trial(k)).count();
        assert_eq!(oracle, 25);
        assert_eq!(primes_up_to(100).len(), oracle);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(primes_in_interval(4, 11).unwrap(), vec![5, 7, 11]);
        assert!(primes_in_interval(5, 5).unwrap().is_empty());
        let oracle: Vec<u64> = (7..=20).filter(|&k| is_prime_trial(k)).collect();
        assert_eq!(oracle, vec![7, 11, 13, 17, 19]);
        assert_eq!(primes_in_interval(6, 20).unwrap(), oracle);
        assert!(matches!(
            primes_in_interval(9, 3),
            Err(Error::InvalidInterval { lo: 9, hi: 3 })
        ));
    }

    #[test]
    fn segmented_agrees_with_simple_sieve() {
        let hi = SEGMENT_THRESHOLD + 3 * SEGMENT_LEN + 17;
        let simple = simple_sieve(hi);
        assert_eq!(segmented(1, hi), simple);
        assert_eq!(primes_up_to(hi).primes(), &simple[..]);
        let lo = SEGMENT_THRESHOLD - 1000;
        let want: Vec<u64> = simple.iter().copied().filter(|&p| p > lo).collect();
        assert_eq!(primes_in_interval(lo, hi).unwrap(), want);
    }

    #[test]
    fn pi_of_two_million() {
        // pi(2 * 10^6) = 148933
        assert_eq!(primes_up_to(2_000_000).len(), 148_933);
    }

    #[test]
    fn factorize_roundtrip() {
        assert_eq!(factorize(1), Vec::<u64>::new());
        assert_eq!(factorize(360), vec![2, 2, 2, 3, 3, 5]);
        assert_eq!(factorize(97), vec![97]);
    }

    proptest! {
        #[test]
        fn interval_is_difference_of_pools(lo in 0u64..3000, width in 0u64..3000) {
            let hi = lo + width;
            let got = primes_in_interval(lo, hi).unwrap();
            let upper = primes_up_to(hi);
            let lower = primes_up_to(lo);
            let want: Vec<u64> = upper.primes().iter().copied()
                .filter(|p| !lower.contains(*p)).collect();
            prop_assert_eq!(&got, &want);
            prop_assert!(got.iter().all(|&p| is_prime_trial(p)));
        }

        #[test]
        fn pool_size_is_monotone(n in 1u64..5000) {
            prop_assert!(primes_up_to(n).len() <= primes_up_to(n + 1).len());
            prop_assert!(primes_up_to(n).primes().windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn factors_multiply_back(n in 1u64..1_000_000) {
            let f = factorize(n);
            prop_assert_eq!(f.iter().product::<u64>(), n);
            prop_assert!(f.iter().all(|&p| is_prime_trial(p)));
        }
    }
}
