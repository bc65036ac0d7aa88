use super::{check_finite, choose_cutoff, inv_pow, zeta_floor_integral, ComplexValue, EvalResult, Method};
use super::{MARGIN, PRIME_SUM_CAP};
use crate::error::{Error, Result};
use crate::numeric::{ComplexSum, CompensatedSum};
use crate::primes::{for_each_prime, shared_table, DEFAULT_MEMORY_BUDGET};
use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// Coefficient cₙ of log ζ(s) = Σ cₙ n^{-s}: 1/k when n = p^k, else 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogCoefficient {
    pub n: u64,
    pub c: Ratio<u64>,
}

/// Exact cₙ for 1 ≤ n ≤ `limit`.
///
/// ```
/// use num_rational::Ratio;
/// let c = pntlab::zeta::log_coefficients(8).unwrap();
/// assert_eq!(c[7].c, Ratio::new(1, 3));
/// assert_eq!(c[5].c, Ratio::from_integer(0));
/// ```
pub fn log_coefficients(limit: u64) -> Result<Vec<LogCoefficient>> {
    if limit == 0 {
        return Err(Error::domain("log_coefficients needs limit >= 1"));
    }
    let needed = limit.saturating_mul(std::mem::size_of::<LogCoefficient>() as u64);
    if needed > DEFAULT_MEMORY_BUDGET {
        return Err(Error::Resource { what: "log coefficient table (bytes)", needed, budget: DEFAULT_MEMORY_BUDGET });
    }
    let mut out: Vec<LogCoefficient> =
        (1..=limit).map(|n| LogCoefficient { n, c: Ratio::from_integer(0) }).collect();
    let table = shared_table(limit)?;
    for &p in table.range(0, limit) {
        let mut q = p;
        let mut k = 1;
        loop {
            out[(q - 1) as usize].c = Ratio::new(1, k);
            match q.checked_mul(p) {
                Some(next) if next <= limit => q = next,
                _ => break,
            }
            k += 1;
        }
    }
    Ok(out)
}

/// Σ_{p>P} p^{-σ} ≤ 1.25506 σ P^{1-σ} / ((σ−1) log P), from
/// π(x) < 1.25506 x / log x and partial summation.
fn prime_tail(sigma: f64, cut: u64) -> f64 {
    let p = cut as f64;
    1.25506 * sigma * p.powf(1.0 - sigma) / ((sigma - 1.0) * p.ln())
}

/// Bound on Σ_{p>P} |Log(1 − p^{-s})|.
fn log_tail(sigma: f64, cut: u64) -> f64 {
    prime_tail(sigma, cut) / (1.0 - (cut as f64).powf(-sigma))
}

fn log_preconditions(s: ComplexValue, tol: f64) -> Result<u64> {
    check_finite(s)?;
    if s.re < 1.0 + MARGIN {
        return Err(Error::domain(format!(
            "the log zeta series needs Re s >= {}, got {s}",
            1.0 + MARGIN
        )));
    }
    choose_cutoff(tol / 2.0, PRIME_SUM_CAP, "log zeta series", |p| log_tail(s.re, p))
}

/// log ζ(s) = Σ cₙ n^{-s} for Re s ≥ 1 + [`MARGIN`].
///
/// The sum runs over every prime power p^k with p ≤ P; P is the smallest
/// cutoff (doubling from 1000) whose tail bound fits in `tol / 2`. For each
/// prime the powers stop once the geometric remainder is below 10⁻²⁰, and
/// that remainder is added to the error. The branch is the one with
/// log ζ(σ) real on the real axis.
///
/// ```
/// use num_complex::Complex64;
/// let l = pntlab::zeta::log_zeta_series(Complex64::new(2.0, 0.0), 1e-6).unwrap();
/// assert!((l.value.re - (std::f64::consts::PI.powi(2) / 6.0).ln()).abs() <= l.err);
/// ```
pub fn log_zeta_series(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    let cut = log_preconditions(s, tol)?;
    let table = shared_table(cut)?;
    let sigma = s.re;
    let mut sum = ComplexSum::new();
    let mut powers_err = 0.0;
    for &p in table.range(0, cut).iter().rev() {
        let z = inv_pow(p as f64, s);
        let r = (p as f64).powf(-sigma);
        let mut zk = z;
        let mut rk = r;
        let mut k = 1.0;
        loop {
            sum.add(zk / k);
            rk *= r;
            let rest = rk / (1.0 - r);
            if rest < 1e-20 {
                powers_err += rest;
                break;
            }
            zk *= z;
            k += 1.0;
        }
    }
    let err = log_tail(sigma, cut) + powers_err + sum.rounding_bound() + 8.0 * f64::EPSILON * sum.abs_mass();
    EvalResult::new(sum.value(), err, Method::LogSeries)
}

/// Σ_{p≤P} −Log(1 − p^{-s}) with the principal logarithm in each factor and
/// the same cutoff rule as [`log_zeta_series`].
pub fn log_zeta_prime_logs(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    let cut = log_preconditions(s, tol)?;
    let table = shared_table(cut)?;
    let mut sum = ComplexSum::new();
    for &p in table.range(0, cut).iter().rev() {
        sum.add(-(1.0 - inv_pow(p as f64, s)).ln());
    }
    let err = log_tail(s.re, cut) + sum.rounding_bound() + 8.0 * f64::EPSILON * sum.abs_mass();
    EvalResult::new(sum.value(), err, Method::LogSeries)
}

/// log|ζ(σ + it)| = Σ cₙ cos(t log n) n^{-σ}, the real part of
/// [`log_zeta_series`].
pub fn log_abs_zeta(sigma: f64, t: f64, tol: f64) -> Result<f64> {
    Ok(log_zeta_series(Complex64::new(sigma, t), tol)?.value.re)
}

/// 3 log|ζ(σ)| + 4 log|ζ(σ+it)| + log|ζ(σ+2it)| for σ > 1, with ζ from the
/// floor-integral continuation.
///
/// ```
/// let v = pntlab::zeta::three_four_one(1.01, 14.1347).unwrap();
/// assert!(v >= -1e-6);
/// ```
pub fn three_four_one(sigma: f64, t: f64) -> Result<f64> {
    if !(sigma > 1.0) || !t.is_finite() {
        return Err(Error::domain(format!("three_four_one needs sigma > 1, got sigma = {sigma}, t = {t}")));
    }
    let ln_abs = |im: f64| -> Result<f64> {
        Ok(zeta_floor_integral(Complex64::new(sigma, im), 1e-12)?.value.norm().ln())
    };
    let real = ln_abs(0.0)?;
    Ok(3.0 * real + 4.0 * ln_abs(t)? + ln_abs(2.0 * t)?)
}

/// 3 + 4 cos x + cos 2x.
pub fn trig_kernel(x: f64) -> f64 {
    3.0 + 4.0 * x.cos() + (2.0 * x).cos()
}

/// 2(1 + cos x)².
pub fn trig_square(x: f64) -> f64 {
    let c = 1.0 + x.cos();
    2.0 * c * c
}

/// Checks |Log(1/(1−z))| ≤ 2|z| for |z| < 1/2.
pub fn log_tail_bound_check(z: ComplexValue) -> Result<bool> {
    check_finite(z)?;
    if z.norm() >= 0.5 {
        return Err(Error::domain(format!("log tail bound needs |z| < 1/2, got |z| = {}", z.norm())));
    }
    let lhs = (1.0 - z).ln().norm();
    Ok(lhs <= 2.0 * z.norm())
}

/// Σ_{p≤N} 1/p.
pub fn prime_reciprocal_sum(n: u64) -> f64 {
    let mut sum = CompensatedSum::new();
    for_each_prime(0, n, |p| sum.add(1.0 / p as f64));
    sum.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn coefficients() {
        let c = log_coefficients(100).unwrap();
        assert_eq!(c[0].c, Ratio::from_integer(0));
        assert_eq!(c[6].c, Ratio::from_integer(1));
        assert_eq!(c[7].c, Ratio::new(1, 3));
        assert_eq!(c[63].c, Ratio::new(1, 6));
        assert_eq!(c[80].c, Ratio::new(1, 4));
        assert_eq!(c[99].c, Ratio::from_integer(0));
        assert!(log_coefficients(0).is_err());
    }

    #[test]
    fn log_basel() {
        let l = log_zeta_series(Complex64::new(2.0, 0.0), 1e-6).unwrap();
        assert!((l.value.re - (PI * PI / 6.0).ln()).abs() <= l.err);
        assert_eq!(l.value.im, 0.0);
    }

    #[test]
    fn series_and_prime_logs_agree() {
        let s = Complex64::new(1.7, 23.0);
        let a = log_zeta_series(s, 1e-3).unwrap();
        let b = log_zeta_prime_logs(s, 1e-3).unwrap();
        assert!((a.value - b.value).norm() < 1e-10);
    }

    #[test]
    fn log_abs_matches_modulus() {
        let v = log_abs_zeta(2.0, 1.0, 1e-6).unwrap();
        let z = zeta_floor_integral(Complex64::new(2.0, 1.0), 1e-13).unwrap();
        assert!((v - z.value.norm().ln()).abs() < 1e-6);
    }

    #[test]
    fn kernel_identity() {
        for i in 0..1000 {
            let x = -50.0 + 0.1 * i as f64;
            assert!((trig_kernel(x) - trig_square(x)).abs() < 1e-13);
        }
    }

    #[test]
    fn three_four_one_at_zero_ordinate() {
        let sigma = 1.3;
        let z = zeta_floor_integral(Complex64::new(sigma, 0.0), 1e-13).unwrap();
        let v = three_four_one(sigma, 0.0).unwrap();
        assert!((v - 8.0 * z.value.re.ln()).abs() < 1e-11);
        assert!(three_four_one(1.0, 3.0).is_err());
    }

    #[test]
    fn log_tail_bound() {
        assert!(log_tail_bound_check(Complex64::new(0.0, 0.0)).unwrap());
        assert!(log_tail_bound_check(Complex64::new(0.49, 0.0)).unwrap());
        assert!(log_tail_bound_check(Complex64::new(0.0, 0.3)).unwrap());
        assert!(log_tail_bound_check(Complex64::new(0.5, 0.0)).is_err());
    }

    #[test]
    fn reciprocal_sum_small() {
        let want = 1.0 / 2.0 + 1.0 / 3.0 + 1.0 / 5.0 + 1.0 / 7.0;
        assert!((prime_reciprocal_sum(10) - want).abs() < 1e-15);
    }
}
