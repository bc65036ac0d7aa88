//! Prime generation, exact prime counting, and Chebyshev's θ.
//!
//! [`sieve_primes`] materializes every prime up to a bound with a segmented
//! odd-only sieve. [`prime_pi`] counts exactly: by sieving up to
//! [`SIEVE_PI_LIMIT`] and by the O(x^{3/4}) sublinear recursion beyond it.
//! [`chebyshev_theta`] streams log p through a compensated sum.

mod checkpoint;
mod count;
mod sieve;
mod theta;

pub use checkpoint::{format_line, parse_line, CheckpointStore, CHECKPOINT_FILE};
pub use count::{count_primes_sublinear, prime_pi, PiCheckpoint, PiMethod, MAX_PI_ARGUMENT, SIEVE_PI_LIMIT};
pub use sieve::{
    count_primes_sieve, for_each_prime, for_each_prime_with, sieve_primes, sieve_primes_with, PrimeTable,
    SieveConfig, DEFAULT_MEMORY_BUDGET, DEFAULT_SEGMENT,
};
pub use theta::{chebyshev_theta, doubling_bound, theta_doubling_gap, ThetaCurve, ThetaValue};

use crate::error::{Error, Result};
use std::sync::{Arc, RwLock};

/// A process-wide prime table covering at least `limit`, grown on demand and
/// shared read-only between callers.
pub fn shared_table(limit: u64) -> Result<Arc<PrimeTable>> {
    static SHARED: RwLock<Option<Arc<PrimeTable>>> = RwLock::new(None);
    if let Some(t) = SHARED.read().unwrap_or_else(|e| e.into_inner()).as_ref() {
        if t.limit() >= limit {
            return Ok(t.clone());
        }
    }
    let mut guard = SHARED.write().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = guard.as_ref() {
        if t.limit() >= limit {
            return Ok(t.clone());
        }
    }
    let grow = guard.as_ref().map_or(limit, |t| limit.max(t.limit().saturating_mul(2)));
    let table = Arc::new(sieve_primes(grow.max(1 << 16))?);
    *guard = Some(table.clone());
    Ok(table)
}

/// Upper bound for the n-th prime: n(log n + log log n) for n ≥ 6.
fn nth_prime_upper(n: u64) -> u64 {
    if n < 6 {
        return 13;
    }
    let nf = n as f64;
    (nf * (nf.ln() + nf.ln().ln())).ceil() as u64 + 1
}

pub fn nth_prime(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("nth_prime is 1-based; n must be ≥ 1"));
    }
    let bound = nth_prime_upper(n);
    let needed = sieve::pi_upper_estimate(bound) * 8;
    if needed > DEFAULT_MEMORY_BUDGET {
        return Err(Error::Resource { what: "prime table for nth_prime (bytes)", needed, budget: DEFAULT_MEMORY_BUDGET });
    }
    let table = shared_table(bound)?;
    table
        .nth(n as usize)
        .ok_or_else(|| Error::Numeric(format!("sieve to {bound} holds fewer than {n} primes")))
}
