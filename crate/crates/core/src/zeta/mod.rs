//! The Riemann zeta function on Re s > 0 and the prime sums built from it.
//!
//! Three independent evaluators of ζ(s):
//!
//! * [`zeta_direct`]: the Dirichlet series Σ n^{-s}, Re s > 1.
//! * [`zeta_floor_integral`]: the continuation
//!   ζ(s) = 1/(s−1) + 1 − s∫₁^∞ (x − ⌊x⌋) x^{−s−1} dx, Re s > 0.
//! * [`zeta_eta_oracle`]: the accelerated alternating series for
//!   η(s) = (1 − 2^{1−s}) ζ(s), Re s > 0.
//!
//! Every evaluator returns an [`EvalResult`] carrying an absolute error
//! bound. Prime-indexed sums ([`euler_product_partial`], [`log_zeta_series`],
//! [`phi_series`], …) truncate at a prime cutoff and fold a tail bound into
//! that error.

mod direct;
mod eta;
mod euler;
mod floor;
mod logs;
mod phi;

pub use direct::{zeta_direct, DIRECT_MAX_TERMS};
pub use eta::{zeta_eta_oracle, ETA_MAX_TERMS};
pub use euler::{euler_product_partial, reciprocal_product_check};
pub use floor::{zeta_floor_integral, zeta_times_pole};
pub use logs::{
    log_abs_zeta, log_coefficients, log_tail_bound_check, log_zeta_prime_logs, log_zeta_series,
    prime_reciprocal_sum, three_four_one, trig_kernel, trig_square, LogCoefficient,
};
pub use phi::{
    phi_continued, phi_minus_pole, phi_series, prime_correction_sum, zeta_log_derivative, ZERO_GUARD,
};

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Complex numbers throughout: s, z, ζ(s), Φ(s).
pub type ComplexValue = Complex64;

/// Distance kept from the boundary of every half-plane precondition.
pub const MARGIN: f64 = 0.05;

/// Largest prime cutoff used by truncated prime sums.
pub const PRIME_SUM_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DirectSeries,
    FloorIntegral,
    EtaSeries,
    EulerProduct,
    LogSeries,
    LogDerivative,
    PhiSeries,
    PhiContinued,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DirectSeries => "direct_series",
            Method::FloorIntegral => "floor_integral",
            Method::EtaSeries => "eta_series",
            Method::EulerProduct => "euler_product",
            Method::LogSeries => "log_series",
            Method::LogDerivative => "log_derivative",
            Method::PhiSeries => "phi_series",
            Method::PhiContinued => "phi_continued",
        })
    }
}

/// A computed value with an absolute error bound and the producing method.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: ComplexValue,
    pub err: f64,
    pub method: Method,
}

impl EvalResult {
    pub(crate) fn new(value: ComplexValue, err: f64, method: Method) -> Result<Self> {
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::Numeric(format!("{method} produced a non-finite value {value}")));
        }
        if !(err >= 0.0) || !err.is_finite() {
            return Err(Error::Numeric(format!("{method} produced an invalid error bound {err}")));
        }
        Ok(Self { value, err, method })
    }

    /// |a − b| ≤ err_a + err_b.
    pub fn agrees_with(&self, other: &EvalResult) -> bool {
        (self.value - other.value).norm() <= self.err + other.err
    }
}

/// Wire form of a single evaluation, as emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub s_re: f64,
    pub s_im: f64,
    pub value_re: f64,
    pub value_im: f64,
    pub err: f64,
    pub method: String,
}

impl EvalRecord {
    pub fn new(s: ComplexValue, r: &EvalResult) -> Self {
        Self {
            s_re: s.re,
            s_im: s.im,
            value_re: r.value.re,
            value_im: r.value.im,
            err: r.err,
            method: r.method.to_string(),
        }
    }
}

/// n^{-s} = n^{-σ}·e^{-it log n}.
#[inline]
pub(crate) fn inv_pow(n: f64, s: ComplexValue) -> ComplexValue {
    let ln = n.ln();
    let mag = (-s.re * ln).exp();
    if s.im == 0.0 {
        Complex64::new(mag, 0.0)
    } else {
        let (sin, cos) = (s.im * ln).sin_cos();
        Complex64::new(mag * cos, -mag * sin)
    }
}

pub(crate) fn check_finite(s: ComplexValue) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("non-finite argument {s}")))
    }
}

/// Smallest P ≥ 1000, found by doubling up to `cap`, with `bound(P) ≤ tol`.
pub(crate) fn choose_cutoff(tol: f64, cap: u64, what: &str, bound: impl Fn(u64) -> f64) -> Result<u64> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut p = 1000u64;
    loop {
        if bound(p) <= tol {
            return Ok(p);
        }
        if p >= cap {
            return Err(Error::Tolerance {
                requested: tol,
                achievable: bound(cap),
                detail: format!("{what} truncated at the prime cap {cap}"),
            });
        }
        p = (p * 2).min(cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_result_rejects_non_finite() {
        assert!(EvalResult::new(Complex64::new(f64::NAN, 0.0), 0.0, Method::EtaSeries).is_err());
        assert!(EvalResult::new(Complex64::new(1.0, 0.0), -1.0, Method::EtaSeries).is_err());
        assert!(EvalResult::new(Complex64::new(1.0, 0.0), f64::INFINITY, Method::EtaSeries).is_err());
    }

    #[test]
    fn method_tags() {
        assert_eq!(Method::FloorIntegral.to_string(), "floor_integral");
        assert_eq!(serde_json::to_string(&Method::EtaSeries).unwrap(), "\"eta_series\"");
    }

    #[test]
    fn inv_pow_matches_powc() {
        let s = Complex64::new(0.7, -13.0);
        let want = Complex64::new(17.0, 0.0).powc(-s);
        assert!((inv_pow(17.0, s) - want).norm() < 1e-14);
    }
}
