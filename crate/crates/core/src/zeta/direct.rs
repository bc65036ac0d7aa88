use super::{check_finite, inv_pow, ComplexValue, EvalResult, Method, MARGIN};
use crate::error::{Error, Result};
use crate::numeric::ComplexSum;
use num_complex::Complex64;

/// Largest partial sum length [`zeta_direct`] will use.
pub const DIRECT_MAX_TERMS: u64 = 50_000_000;

/// ζ(s) from the Dirichlet series, Re s ≥ 1 + [`MARGIN`].
///
/// The partial sum S_N is completed by ∫_N^∞ x^{-s} dx = N^{1-s}/(s−1). The
/// remaining error is at most |s|/2 · (N^{-σ-1} + N^{-σ}/σ), and N is the
/// smallest length that brings this under `tol / 2`.
///
/// ```
/// use num_complex::Complex64;
/// let z = pntlab::zeta::zeta_direct(Complex64::new(2.0, 0.0), 1e-10).unwrap();
/// assert!((z.value.re - std::f64::consts::PI.powi(2) / 6.0).abs() <= z.err);
/// ```
pub fn zeta_direct(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    check_finite(s)?;
    let sigma = s.re;
    if sigma < 1.0 + MARGIN {
        return Err(Error::domain(format!(
            "the Dirichlet series needs Re s >= {}, got {s}; use zeta_floor_integral or zeta_eta_oracle",
            1.0 + MARGIN
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let abs_s = s.norm();
    let tail = |n: f64| abs_s / 2.0 * (n.powf(-sigma - 1.0) + n.powf(-sigma) / sigma);
    let guess = (abs_s / (sigma * tol)).powf(1.0 / sigma).ceil().max(2.0);
    let mut n = guess.min(DIRECT_MAX_TERMS as f64) as u64;
    while n > 2 && tail((n - 1) as f64) <= tol / 2.0 {
        n = n * 15 / 16;
    }
    while tail(n as f64) > tol / 2.0 {
        if n >= DIRECT_MAX_TERMS {
            return Err(Error::Tolerance {
                requested: tol,
                achievable: tail(DIRECT_MAX_TERMS as f64),
                detail: format!("Dirichlet series at s = {s} capped at {DIRECT_MAX_TERMS} terms"),
            });
        }
        n = (n + n / 8 + 1).min(DIRECT_MAX_TERMS);
    }

    let mut sum = ComplexSum::new();
    for k in (1..=n).rev() {
        sum.add(inv_pow(k as f64, s));
    }
    let nf = n as f64;
    let completion = inv_pow(nf, s - 1.0) / (s - Complex64::new(1.0, 0.0));
    sum.add(completion);
    let rounding = sum.rounding_bound() + 4.0 * f64::EPSILON * sum.abs_mass();
    EvalResult::new(sum.value(), tail(nf) + rounding, Method::DirectSeries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn basel() {
        let r = zeta_direct(Complex64::new(2.0, 0.0), 1e-10).unwrap();
        assert!(r.err <= 1e-10);
        assert!((r.value.re - PI * PI / 6.0).abs() <= r.err);
        assert_eq!(r.value.im, 0.0);
        assert_eq!(r.method, Method::DirectSeries);
    }

    #[test]
    fn zeta_four() {
        let r = zeta_direct(Complex64::new(4.0, 0.0), 1e-12).unwrap();
        assert!((r.value.re - PI.powi(4) / 90.0).abs() <= r.err);
    }

    #[test]
    fn large_sigma_tends_to_one() {
        let r = zeta_direct(Complex64::new(60.0, 0.0), 1e-14).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_strip() {
        assert!(matches!(zeta_direct(Complex64::new(1.0, 3.0), 1e-6), Err(Error::Domain(_))));
        assert!(matches!(zeta_direct(Complex64::new(0.5, 0.0), 1e-6), Err(Error::Domain(_))));
    }

    #[test]
    fn unattainable_tolerance() {
        let r = zeta_direct(Complex64::new(1.05, 0.0), 1e-14);
        assert!(matches!(r, Err(Error::Tolerance { .. })));
    }
}
