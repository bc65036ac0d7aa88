use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Integers covered by one sieve segment. The segment bitmap stores odd
/// numbers only, so the default is a 64 KiB bitmap.
pub const DEFAULT_SEGMENT: u64 = 1 << 20;

/// Default ceiling on the memory a materialized [`PrimeTable`] may take.
pub const DEFAULT_MEMORY_BUDGET: u64 = 1 << 30;

#[derive(Clone, Debug)]
pub struct SieveConfig {
    pub segment: u64,
    pub memory_budget: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self { segment: DEFAULT_SEGMENT, memory_budget: DEFAULT_MEMORY_BUDGET }
    }
}

/// Every prime up to `limit`, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
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

    /// π(x) for x ≤ limit.
    pub fn pi(&self, x: u64) -> Result<u64> {
        if x > self.limit {
            return Err(Error::Coverage(format!("π({x}) requested from a table sieved to {}", self.limit)));
        }
        Ok(self.primes.partition_point(|&p| p <= x) as u64)
    }

    /// The n-th prime (1-based).
    pub fn nth(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.primes.get(i).copied())
    }

    pub fn contains(&self, n: u64) -> bool {
        self.primes.binary_search(&n).is_ok()
    }

    /// Primes `p` with `lo < p ≤ hi` (clamped to the table).
    pub fn range(&self, lo: u64, hi: u64) -> &[u64] {
        let a = self.primes.partition_point(|&p| p <= lo);
        let b = self.primes.partition_point(|&p| p <= hi);
        &self.primes[a..b.max(a)]
    }
}

/// Upper bound on π(x) (Rosser–Schoenfeld, valid for x > 1), used only to
/// size allocations and check budgets.
pub(crate) fn pi_upper_estimate(x: u64) -> u64 {
    if x < 17 {
        return 7;
    }
    let xf = x as f64;
    (1.25506 * xf / xf.ln()).ceil() as u64 + 1
}

pub fn sieve_primes(limit: u64) -> Result<PrimeTable> {
    sieve_primes_with(limit, &SieveConfig::default())
}

pub fn sieve_primes_with(limit: u64, config: &SieveConfig) -> Result<PrimeTable> {
    let needed = pi_upper_estimate(limit) * std::mem::size_of::<u64>() as u64;
    if needed > config.memory_budget {
        return Err(Error::Resource {
            what: "prime table (bytes)",
            needed,
            budget: config.memory_budget,
        });
    }
    let mut primes = Vec::with_capacity(pi_upper_estimate(limit) as usize);
    for_each_prime_with(0, limit, config.segment, |p| primes.push(p));
    Ok(PrimeTable { limit, primes })
}

/// Primes up to √hi by a plain sieve; the seed for segmented passes.
pub(crate) fn base_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Calls `f(p)` for every prime `lo < p ≤ hi` in increasing order, holding
/// only one segment bitmap and the primes up to √hi in memory.
pub fn for_each_prime<F: FnMut(u64)>(lo: u64, hi: u64, f: F) {
    for_each_prime_with(lo, hi, DEFAULT_SEGMENT, f)
}

pub fn for_each_prime_with<F: FnMut(u64)>(lo: u64, hi: u64, segment: u64, mut f: F) {
    if hi <= lo || hi < 2 {
        return;
    }
    if lo < 2 {
        f(2);
    }
    let base = base_primes(hi.isqrt());
    let segment = segment.max(128) & !1;
    let words = (segment / 2).div_ceil(64) as usize;
    let mut bits = vec![0u64; words];
    // Segments start on even numbers; bit i stands for start + 2i + 1.
    let mut start = (lo + 1) & !1;
    while start < hi {
        let end = (start + segment).min(hi + 1);
        let odd_count = (end - start) / 2;
        bits.iter_mut().for_each(|w| *w = !0);
        for &p in base.iter().skip(1) {
            let p2 = p * p;
            if p2 >= end {
                break;
            }
            let mut m = if p2 >= start { p2 } else { start.div_ceil(p) * p };
            if m % 2 == 0 {
                m += p;
            }
            let step = 2 * p;
            while m < end {
                let i = ((m - start - 1) / 2) as usize;
                bits[i / 64] &= !(1u64 << (i % 64));
                m += step;
            }
        }
        for (wi, &word) in bits.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as u64;
                let i = wi as u64 * 64 + b;
                if i >= odd_count {
                    break;
                }
                let n = start + 2 * i + 1;
                if n > lo && n > 1 && n <= hi {
                    f(n);
                }
                w &= w - 1;
            }
        }
        start = end + (end & 1);
    }
}

/// π(x) by segmented sieving without materializing the primes.
pub fn count_primes_sieve(x: u64) -> u64 {
    let mut count = 0u64;
    for_each_prime(0, x, |_| count += 1);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_prime_trial(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn first_primes() {
        assert_eq!(sieve_primes(10).unwrap().primes(), &[2, 3, 5, 7]);
        assert!(sieve_primes(0).unwrap().is_empty());
        assert!(sieve_primes(1).unwrap().is_empty());
        assert_eq!(sieve_primes(2).unwrap().primes(), &[2]);
    }

    #[test]
    fn one_thousand_has_168_primes() {
        let t = sieve_primes(1000).unwrap();
        assert_eq!(t.len(), 168);
        assert_eq!(t.nth(168), Some(997));
    }

    #[test]
    fn small_segments_agree_with_trial_division() {
        let config = SieveConfig { segment: 128, ..SieveConfig::default() };
        let t = sieve_primes_with(5000, &config).unwrap();
        let oracle: Vec<u64> = (0..=5000).filter(|&n| is_prime_trial(n)).collect();
        assert_eq!(t.primes(), oracle.as_slice());
    }

    #[test]
    fn window_enumeration_respects_bounds() {
        let mut got = Vec::new();
        for_each_prime(89, 113, |p| got.push(p));
        assert_eq!(got, vec![97, 101, 103, 107, 109, 113]);
        let mut got = Vec::new();
        for_each_prime(0, 2, |p| got.push(p));
        assert_eq!(got, vec![2]);
    }

    #[test]
    fn budget_is_enforced() {
        let config = SieveConfig { memory_budget: 1024, ..SieveConfig::default() };
        let err = sieve_primes_with(1_000_000, &config).unwrap_err();
        assert!(matches!(err, Error::Resource { budget: 1024, .. }), "{err}");
    }

    #[test]
    fn table_queries() {
        let t = sieve_primes(100).unwrap();
        assert_eq!(t.pi(100).unwrap(), 25);
        assert_eq!(t.pi(1).unwrap(), 0);
        assert!(t.pi(101).is_err());
        assert!(t.contains(97) && !t.contains(91));
        assert_eq!(t.range(10, 20), &[11, 13, 17, 19]);
        assert_eq!(t.nth(0), None);
    }
}
