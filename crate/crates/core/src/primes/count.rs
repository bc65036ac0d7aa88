use super::sieve::count_primes_sieve;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Largest argument counted by sieving; beyond it the sublinear method runs.
pub const SIEVE_PI_LIMIT: u64 = 10_000_000;

/// Largest argument `prime_pi` accepts.
pub const MAX_PI_ARGUMENT: u64 = 10_000_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PiMethod {
    Sieve,
    Sublinear,
}

impl fmt::Display for PiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PiMethod::Sieve => "sieve",
            PiMethod::Sublinear => "sublinear",
        })
    }
}

impl FromStr for PiMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "sieve" => Ok(PiMethod::Sieve),
            "sublinear" => Ok(PiMethod::Sublinear),
            other => Err(format!("unknown π method tag `{other}`")),
        }
    }
}

/// An exact value of π(x) and how it was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiCheckpoint {
    pub x: u64,
    pub pi: u64,
    pub method: PiMethod,
}

pub fn prime_pi(x: u64) -> Result<PiCheckpoint> {
    if x > MAX_PI_ARGUMENT {
        return Err(Error::Resource { what: "π(x) argument", needed: x, budget: MAX_PI_ARGUMENT });
    }
    if x <= SIEVE_PI_LIMIT {
        Ok(PiCheckpoint { x, pi: count_primes_sieve(x), method: PiMethod::Sieve })
    } else {
        Ok(PiCheckpoint { x, pi: count_primes_sublinear(x), method: PiMethod::Sublinear })
    }
}

/// π(x) in O(x^{3/4}) time and O(√x) space.
///
/// Maintains S(v, p) = #{2 ≤ n ≤ v : n prime or least prime factor of n > p}
/// for every v of the form ⌊x/i⌋. Sifting by each prime p ≤ √x applies
/// S(v, p) = S(v, p−1) − (S(⌊v/p⌋, p−1) − S(p−1, p−1)) to all v ≥ p²;
/// once p passes √x, S(x, ·) = π(x).
pub fn count_primes_sublinear(x: u64) -> u64 {
    if x < 2 {
        return 0;
    }
    let r = x.isqrt();
    let ru = r as usize;
    // small[v] = S(v, p) for v ≤ r; large[i] = S(x / i, p) for 1 ≤ i ≤ r.
    let mut small: Vec<u64> = (0..=r).map(|v| v.saturating_sub(1)).collect();
    let mut large: Vec<u64> = (0..=r).map(|i| x.checked_div(i).map_or(0, |q| q - 1)).collect();
    for p in 2..=ru {
        if small[p] == small[p - 1] {
            continue;
        }
        let below = small[p - 1];
        let pu = p as u64;
        let p2 = pu * pu;
        let top = (x / p2).min(r) as usize;
        for i in 1..=top {
            let d = i * p;
            let v = if d <= ru { large[d] } else { small[(x / d as u64) as usize] };
            large[i] -= v - below;
        }
        if p2 <= r {
            for v in (p2 as usize..=ru).rev() {
                small[v] -= small[v / p] - below;
            }
        }
    }
    large[1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_arguments() {
        assert_eq!(count_primes_sublinear(0), 0);
        assert_eq!(count_primes_sublinear(1), 0);
        assert_eq!(count_primes_sublinear(2), 1);
        assert_eq!(count_primes_sublinear(3), 2);
        assert_eq!(prime_pi(1).unwrap().pi, 0);
    }

    #[test]
    fn sublinear_matches_sieve_on_small_arguments() {
        for x in (0..3000).chain([9_999, 10_000, 65_536, 1_000_003]) {
            assert_eq!(count_primes_sublinear(x), count_primes_sieve(x), "x = {x}");
        }
    }

    #[test]
    fn method_switches_at_sieve_limit() {
        assert_eq!(prime_pi(SIEVE_PI_LIMIT).unwrap().method, PiMethod::Sieve);
        let above = prime_pi(SIEVE_PI_LIMIT + 1).unwrap();
        assert_eq!(above.method, PiMethod::Sublinear);
        assert_eq!(above.pi, 664_579);
    }

    #[test]
    fn rejects_arguments_beyond_range() {
        assert!(matches!(prime_pi(MAX_PI_ARGUMENT + 1), Err(Error::Resource { .. })));
    }

    #[test]
    fn method_tags_round_trip() {
        for m in [PiMethod::Sieve, PiMethod::Sublinear] {
            assert_eq!(m.to_string().parse::<PiMethod>().unwrap(), m);
        }
        assert!("lucy".parse::<PiMethod>().is_err());
    }
}
