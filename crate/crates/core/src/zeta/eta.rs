use super::{check_finite, inv_pow, ComplexValue, EvalResult, Method};
use crate::error::{Error, Result};
use crate::numeric::{ln_abs_gamma, ComplexSum};
use num_complex::Complex64;

/// Largest acceleration length [`zeta_eta_oracle`] will use.
pub const ETA_MAX_TERMS: usize = 380;

/// ζ(s) = η(s)/(1 − 2^{1-s}) for Re s > 0, with η summed by the
/// Borwein/Cohen–Villegas–Zagier acceleration.
///
/// With d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)!(2i)!), the weighted sum
/// (1/d_n) Σ_{k<n} (−1)^k (d_n − d_k)(k+1)^{-s} approximates η(s) with error
/// at most Γ(σ)/(|Γ(s)| d_n). The bound is the total variation of the
/// measure (−log x)^{s−1} dx/Γ(s) on [0, 1], whose moments are (k+1)^{-s}.
///
/// ```
/// use num_complex::Complex64;
/// let z = pntlab::zeta::zeta_eta_oracle(Complex64::new(2.0, 0.0), 1e-14).unwrap();
/// assert!((z.value.re - std::f64::consts::PI.powi(2) / 6.0).abs() <= z.err);
/// ```
pub fn zeta_eta_oracle(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    check_finite(s)?;
    if s.re <= 0.0 {
        return Err(Error::domain(format!("the eta series needs Re s > 0, got {s}")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let den = 1.0 - inv_pow(2.0, s - 1.0);
    if den.norm() < 1e-10 {
        return Err(Error::domain(format!(
            "1 - 2^(1-s) vanishes at s = {s}; the eta series cannot recover zeta there"
        )));
    }

    let ln_ratio = ln_abs_gamma(Complex64::new(s.re, 0.0)) - ln_abs_gamma(s);
    let ln_target = (tol * den.norm() / 2.0).ln();
    let rate = (3.0 + 8f64.sqrt()).ln();
    let n = ((ln_ratio - ln_target + 2f64.ln()) / rate).ceil().max(4.0) as usize;
    if n > ETA_MAX_TERMS {
        let achievable = 2.0 * (ln_ratio - ETA_MAX_TERMS as f64 * rate + 2f64.ln()).exp() / den.norm();
        return Err(Error::Tolerance {
            requested: tol,
            achievable,
            detail: format!("eta acceleration at s = {s} capped at {ETA_MAX_TERMS} terms"),
        });
    }

    let weights = suffix_weights(n);
    let d_n = weights[0];
    let mut sum = ComplexSum::new();
    for k in (0..n).rev() {
        let w = weights[k + 1] / d_n;
        let term = inv_pow((k + 1) as f64, s) * w;
        sum.add(if k % 2 == 0 { term } else { -term });
    }
    let eta = sum.value();
    let trunc = (ln_ratio - d_n.ln()).exp();
    let rounding = sum.rounding_bound() + 4.0 * n as f64 * f64::EPSILON * sum.abs_mass();
    let value = eta / den;
    let err = (trunc + rounding) / den.norm() + 4.0 * f64::EPSILON * value.norm();
    EvalResult::new(value, err, Method::EtaSeries)
}

/// `w[k] = Σ_{i≥k} e_i` for k = 0..=n with e_i the summands of d_n, so
/// `w[0] = d_n` and `w[k+1] = d_n − d_k` without cancellation.
fn suffix_weights(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let mut e = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    e.push(term);
    for i in 0..n {
        let fi = i as f64;
        term *= 4.0 * (nf + fi) * (nf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
        e.push(term);
    }
    let mut w = vec![0.0; n + 2];
    for k in (0..=n).rev() {
        w[k] = w[k + 1] + e[k];
    }
    w.truncate(n + 1);
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn d_n_grows_like_the_chebyshev_rate() {
        let w = suffix_weights(10);
        // d_n = cosh(n arccosh 3) for this normalization.
        let want = (10.0 * 3f64.acosh()).cosh();
        assert!((w[0] / want - 1.0).abs() < 1e-12);
    }

    #[test]
    fn even_zeta_values() {
        let z2 = zeta_eta_oracle(Complex64::new(2.0, 0.0), 1e-14).unwrap();
        assert!((z2.value.re - PI * PI / 6.0).abs() <= z2.err);
        let z4 = zeta_eta_oracle(Complex64::new(4.0, 0.0), 1e-14).unwrap();
        assert!((z4.value.re - PI.powi(4) / 90.0).abs() <= z4.err);
    }

    #[test]
    fn first_zero() {
        let z = zeta_eta_oracle(Complex64::new(0.5, 14.134725), 1e-12).unwrap();
        assert!(z.value.norm() < 1e-3);
    }

    #[test]
    fn denominator_zero() {
        let s = Complex64::new(1.0, 2.0 * PI / 2f64.ln());
        assert!(matches!(zeta_eta_oracle(s, 1e-10), Err(Error::Domain(_))));
        assert!(matches!(zeta_eta_oracle(Complex64::new(1.0, 0.0), 1e-10), Err(Error::Domain(_))));
    }
}
