use super::{check_finite, choose_cutoff, inv_pow, zeta_times_pole, ComplexValue, EvalResult, Method};
use super::{MARGIN, PRIME_SUM_CAP};
use crate::error::{Error, Result};
use crate::numeric::ComplexSum;
use crate::primes::shared_table;
use crate::zeros::PUBLISHED_ORDINATES;
use num_complex::Complex64;

/// Radius around each listed zero inside which [`phi_continued`] refuses
/// to evaluate.
pub const ZERO_GUARD: f64 = 1e-3;

const STEP: f64 = 1e-3;
const Z_TOL: f64 = 1e-13;

/// Bound on Σ_{p>P} log p · p^{-a}, the smaller of two estimates:
///
/// * the integral test, ∫_P^∞ x^{-a} log x dx = P^{1-a}(log P/(a−1) + 1/(a−1)²);
/// * partial summation against θ(x) < 1.01624 x, giving 1.01624 a P^{1-a}/(a−1).
fn log_integral_tail(a: f64, cut: u64) -> f64 {
    let p = cut as f64;
    let b = a - 1.0;
    let integral = p.powf(-b) * (p.ln() / b + 1.0 / (b * b));
    let chebyshev = 1.01624 * a * p.powf(-b) / b;
    integral.min(chebyshev)
}

fn require_right_of_one(s: ComplexValue, what: &str) -> Result<()> {
    check_finite(s)?;
    if s.re < 1.0 + MARGIN {
        return Err(Error::domain(format!("{what} needs Re s >= {}, got {s}", 1.0 + MARGIN)));
    }
    Ok(())
}

/// Φ(s) = Σ_p log p · p^{-s} for Re s ≥ 1 + [`MARGIN`], truncated at the
/// smallest prime cutoff whose tail bound fits in `tol / 2`.
///
/// ```
/// use num_complex::Complex64;
/// let phi = pntlab::zeta::phi_series(Complex64::new(2.0, 0.0), 1e-6).unwrap();
/// assert!((phi.value.re - 0.4930911).abs() < 2e-6);
/// ```
pub fn phi_series(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    require_right_of_one(s, "phi_series")?;
    let cut = choose_cutoff(tol / 2.0, PRIME_SUM_CAP, "phi series", |p| log_integral_tail(s.re, p))?;
    let table = shared_table(cut)?;
    let mut sum = ComplexSum::new();
    for &p in table.range(0, cut).iter().rev() {
        let pf = p as f64;
        sum.add(inv_pow(pf, s) * pf.ln());
    }
    let err = log_integral_tail(s.re, cut) + sum.rounding_bound() + 8.0 * f64::EPSILON * sum.abs_mass();
    EvalResult::new(sum.value(), err, Method::PhiSeries)
}

/// −ζ′(s)/ζ(s) = Σ_p log p/(p^s − 1) for Re s ≥ 1 + [`MARGIN`].
pub fn zeta_log_derivative(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    require_right_of_one(s, "zeta_log_derivative")?;
    let bound = |p: u64| log_integral_tail(s.re, p) / (1.0 - (p as f64).powf(-s.re));
    let cut = choose_cutoff(tol / 2.0, PRIME_SUM_CAP, "log-derivative series", bound)?;
    let table = shared_table(cut)?;
    let mut sum = ComplexSum::new();
    for &p in table.range(0, cut).iter().rev() {
        let pf = p as f64;
        let z = inv_pow(pf, s);
        sum.add(z / (1.0 - z) * pf.ln());
    }
    let err = bound(cut) + sum.rounding_bound() + 8.0 * f64::EPSILON * sum.abs_mass();
    EvalResult::new(sum.value(), err, Method::LogDerivative)
}

/// C(s) = Σ_p log p/(p^s (p^s − 1)) for Re s > 1/2.
///
/// |p^s(p^s − 1)| ≥ p^{2σ}(1 − P^{-σ}) for p > P, so the tail is bounded by
/// the integral test applied to log n · n^{-2σ}.
pub fn prime_correction_sum(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    check_finite(s)?;
    if s.re <= 0.5 {
        return Err(Error::domain(format!("the prime correction sum needs Re s > 1/2, got {s}")));
    }
    let bound = |p: u64| log_integral_tail(2.0 * s.re, p) / (1.0 - (p as f64).powf(-s.re));
    let cut = choose_cutoff(tol / 2.0, PRIME_SUM_CAP, "prime correction sum", bound)?;
    let table = shared_table(cut)?;
    let mut sum = ComplexSum::new();
    for &p in table.range(0, cut).iter().rev() {
        let pf = p as f64;
        let z = inv_pow(pf, s);
        sum.add(z * z / (1.0 - z) * pf.ln());
    }
    let err = bound(cut) + sum.rounding_bound() + 8.0 * f64::EPSILON * sum.abs_mass();
    EvalResult::new(sum.value(), err, Method::PhiContinued)
}

fn guard(s: ComplexValue) -> Result<()> {
    check_finite(s)?;
    if s.re < 0.5 + MARGIN {
        return Err(Error::domain(format!("phi_continued needs Re s >= {}, got {s}", 0.5 + MARGIN)));
    }
    for &t in PUBLISHED_ORDINATES.iter() {
        for rho in [Complex64::new(0.5, t), Complex64::new(0.5, -t)] {
            if (s - rho).norm() < ZERO_GUARD {
                return Err(Error::domain(format!(
                    "s = {s} lies within {ZERO_GUARD} of the zeta zero {rho}, a pole of Φ"
                )));
            }
        }
    }
    Ok(())
}

/// −Z′(s)/Z(s) with Z(s) = (s − 1)ζ(s), by central differences at steps h
/// and h/2 combined with one Richardson step.
fn log_derivative_of_z(s: ComplexValue) -> Result<(ComplexValue, f64)> {
    let z = zeta_times_pole(s, Z_TOL)?;
    if z.value.norm() <= 16.0 * z.err {
        return Err(Error::domain(format!(
            "zeta vanishes numerically at s = {s} (|(s-1)ζ(s)| = {:e}); Φ has a pole there",
            z.value.norm()
        )));
    }
    let central = |h: f64| -> Result<(ComplexValue, f64)> {
        let plus = zeta_times_pole(s + h, Z_TOL)?;
        let minus = zeta_times_pole(s - h, Z_TOL)?;
        Ok(((plus.value - minus.value) / (2.0 * h), (plus.err + minus.err) / (2.0 * h)))
    };
    let (d1, e1) = central(STEP)?;
    let (d2, e2) = central(STEP / 2.0)?;
    let deriv = (4.0 * d2 - d1) / 3.0;
    let deriv_err = (deriv - d2).norm() + (4.0 * e2 + e1) / 3.0;
    let ratio = deriv / z.value;
    let err = deriv_err / z.value.norm() + ratio.norm() * z.err / z.value.norm();
    Ok((-ratio, err))
}

/// Φ(s) − 1/(s − 1) = −Z′(s)/Z(s) − C(s), analytic on a neighborhood of
/// Re s ≥ 1 and evaluable at s = 1 itself.
pub fn phi_minus_pole(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    guard(s)?;
    let (lz, lz_err) = log_derivative_of_z(s)?;
    let c = prime_correction_sum(s, tol)?;
    let value = lz - c.value;
    let err = lz_err + c.err + 4.0 * f64::EPSILON * (lz.norm() + c.value.norm());
    EvalResult::new(value, err, Method::PhiContinued)
}

/// Φ(s) on Re s ≥ 1/2 + [`MARGIN`] away from s = 1 and the zeta zeros:
/// 1/(s − 1) − Z′(s)/Z(s) − Σ_p log p/(p^s(p^s − 1)).
///
/// ```
/// use num_complex::Complex64;
/// use pntlab::zeta::{phi_continued, phi_series};
/// let s = Complex64::new(2.0, 0.0);
/// let a = phi_continued(s, 1e-6).unwrap();
/// let b = phi_series(s, 1e-6).unwrap();
/// assert!(a.agrees_with(&b));
/// ```
pub fn phi_continued(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    check_finite(s)?;
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::domain("s = 1 is the pole of Φ"));
    }
    let rest = phi_minus_pole(s, tol)?;
    let pole = 1.0 / (s - 1.0);
    let value = pole + rest.value;
    let err = rest.err + 4.0 * f64::EPSILON * (pole.norm() + rest.value.norm());
    EvalResult::new(value, err, Method::PhiContinued)
}
