use super::sieve::{for_each_prime, PrimeTable};
use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// θ(x) = Σ_{p ≤ x} log p with a bound on its accumulated rounding error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaValue {
    pub x: f64,
    pub theta: f64,
    pub err: f64,
}

fn log_sum_bound(sum: &CompensatedSum) -> f64 {
    // Each `ln p` is correctly rounded to within one ulp.
    sum.rounding_bound() + f64::EPSILON * sum.value()
}

/// Chebyshev's θ(x), streamed segment by segment with compensated
/// summation. θ is zero on [0, 2).
pub fn chebyshev_theta(x: f64) -> Result<ThetaValue> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("θ(x) needs finite x ≥ 0, got {x}")));
    }
    let mut sum = CompensatedSum::new();
    for_each_prime(0, x.floor() as u64, |p| sum.add((p as f64).ln()));
    Ok(ThetaValue { x, theta: sum.value(), err: log_sum_bound(&sum) })
}

/// θ(2n) − θ(n), summed directly over n < p ≤ 2n. The binomial-coefficient
/// argument bounds it by 2n·log 2; see [`doubling_bound`].
pub fn theta_doubling_gap(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("θ(2n) − θ(n) needs n ≥ 1"));
    }
    let mut sum = CompensatedSum::new();
    for_each_prime(n, 2 * n, |p| sum.add((p as f64).ln()));
    Ok(sum.value())
}

/// 2n·log 2, the ceiling on θ(2n) − θ(n).
pub fn doubling_bound(n: u64) -> f64 {
    2.0 * n as f64 * std::f64::consts::LN_2
}

/// θ at every prime of a table: cumulative[i] = θ(p_i).
#[derive(Clone, Debug)]
pub struct ThetaCurve {
    table: Arc<PrimeTable>,
    cumulative: Vec<f64>,
    err: f64,
}

impl ThetaCurve {
    pub fn new(table: Arc<PrimeTable>) -> Self {
        let mut sum = CompensatedSum::new();
        let cumulative = table
            .primes()
            .iter()
            .map(|&p| {
                sum.add((p as f64).ln());
                sum.value()
            })
            .collect();
        let err = log_sum_bound(&sum);
        Self { table, cumulative, err }
    }

    pub fn table(&self) -> &PrimeTable {
        &self.table
    }

    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn limit(&self) -> u64 {
        self.table.limit()
    }

    /// Rounding bound valid for every value on the curve.
    pub fn err(&self) -> f64 {
        self.err
    }

    fn index(&self, x: f64) -> Result<usize> {
        if x > self.table.limit() as f64 {
            return Err(Error::Coverage(format!("θ({x}) beyond curve limit {}", self.table.limit())));
        }
        Ok(self.table.primes().partition_point(|&p| (p as f64) <= x))
    }

    pub fn theta(&self, x: f64) -> Result<f64> {
        Ok(match self.index(x)? {
            0 => 0.0,
            i => self.cumulative[i - 1],
        })
    }

    pub fn pi(&self, x: f64) -> Result<u64> {
        Ok(self.index(x)? as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve_primes;

    #[test]
    fn theta_small_values() {
        assert_eq!(chebyshev_theta(1.0).unwrap().theta, 0.0);
        assert_eq!(chebyshev_theta(1.99).unwrap().theta, 0.0);
        let t10 = chebyshev_theta(10.0).unwrap();
        assert!((t10.theta - 210f64.ln()).abs() < 1e-14);
        assert!((t10.theta - 5.347_107_53).abs() < 1e-8);
        assert!(t10.err >= 0.0 && t10.err < 1e-13);
        assert!(chebyshev_theta(-1.0).is_err());
    }

    #[test]
    fn doubling_gap_examples() {
        assert!((theta_doubling_gap(1).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        let g4 = theta_doubling_gap(4).unwrap();
        assert!((g4 - 35f64.ln()).abs() < 1e-14);
        assert!(g4 <= doubling_bound(4));
        assert!(theta_doubling_gap(0).is_err());
    }

    #[test]
    fn curve_matches_streamed_theta() {
        let curve = ThetaCurve::new(Arc::new(sieve_primes(10_000).unwrap()));
        for x in [1.0, 2.0, 2.5, 97.0, 1000.0, 9999.5] {
            let a = curve.theta(x).unwrap();
            let b = chebyshev_theta(x).unwrap().theta;
            assert!((a - b).abs() <= 1e-10, "x={x}");
        }
        assert_eq!(curve.pi(1000.0).unwrap(), 168);
        assert!(curve.theta(10_001.0).is_err());
    }
}
