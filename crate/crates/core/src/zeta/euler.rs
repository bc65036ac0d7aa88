use super::{check_finite, inv_pow, zeta_floor_integral, ComplexValue, EvalResult, Method};
use crate::error::{Error, Result};
use crate::primes::shared_table;
use num_complex::Complex64;

/// ∏_{p≤N} (1 − p^{-s})^{-1} for Re s > 1.
///
/// The error field is N^{1-σ}/(σ−1) ≥ Σ_{n>N} n^{-σ}, which bounds the
/// distance to ζ(s): the quotient ζ(s)/∏_{p≤N} is the sum of n^{-s} over n
/// whose prime factors all exceed N.
///
/// ```
/// use num_complex::Complex64;
/// let r = pntlab::zeta::euler_product_partial(Complex64::new(2.0, 0.0), 2).unwrap();
/// assert!((r.value.re - 4.0 / 3.0).abs() < 1e-15);
/// ```
pub fn euler_product_partial(s: ComplexValue, n: u64) -> Result<EvalResult> {
    check_finite(s)?;
    if s.re <= 1.0 {
        return Err(Error::domain(format!("the Euler product needs Re s > 1, got {s}")));
    }
    if n < 2 {
        return Err(Error::domain(format!("the Euler product needs N >= 2, got {n}")));
    }
    let (product, primes) = reciprocal_product(s, n)?;
    let value = 1.0 / product;
    let sigma = s.re;
    let tail = (n as f64).powf(1.0 - sigma) / (sigma - 1.0);
    let rounding = 4.0 * primes as f64 * f64::EPSILON * value.norm();
    EvalResult::new(value, tail + rounding, Method::EulerProduct)
}

/// ∏_{p≤N} (1 − p^{-s}) and the number of factors.
fn reciprocal_product(s: ComplexValue, n: u64) -> Result<(ComplexValue, usize)> {
    let table = shared_table(n)?;
    let primes = table.range(0, n);
    let mut product = Complex64::new(1.0, 0.0);
    for &p in primes {
        product *= 1.0 - inv_pow(p as f64, s);
    }
    Ok((product, primes.len()))
}

/// |ζ(s) ∏_{p≤N} (1 − p^{-s}) − 1|, with ζ from the floor-integral
/// continuation.
pub fn reciprocal_product_check(s: ComplexValue, n: u64) -> Result<f64> {
    check_finite(s)?;
    if s.re <= 1.0 {
        return Err(Error::domain(format!("the Euler product needs Re s > 1, got {s}")));
    }
    let zeta = zeta_floor_integral(s, 1e-15)?;
    let (product, _) = reciprocal_product(s, n.max(1))?;
    Ok((zeta.value * product - 1.0).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn converges_to_basel_within_tail_bound() {
        for n in [10u64, 1000, 100_000] {
            let r = euler_product_partial(c(2.0), n).unwrap();
            assert!((r.value.re - PI * PI / 6.0).abs() <= r.err, "N = {n}");
        }
    }

    #[test]
    fn error_shrinks_with_n() {
        let s = Complex64::new(1.5, 4.0);
        let zeta = zeta_floor_integral(s, 1e-14).unwrap().value;
        let mut last = f64::INFINITY;
        let mut n = 16u64;
        while n <= 1 << 20 {
            let r = euler_product_partial(s, n).unwrap();
            assert!((r.value - zeta).norm() <= r.err);
            assert!(r.err < last);
            last = r.err;
            n *= 4;
        }
    }

    #[test]
    fn reciprocal_check_examples() {
        let v = reciprocal_product_check(c(2.0), 2).unwrap();
        assert!((v - (PI * PI / 8.0 - 1.0).abs()).abs() < 1e-12);
        assert!(reciprocal_product_check(c(2.0), 10_000).unwrap() < 1e-3);
        assert!(reciprocal_product_check(c(5.0), 100).unwrap() < 1e-8);
    }

    #[test]
    fn domain() {
        assert!(euler_product_partial(c(1.0), 100).is_err());
        assert!(euler_product_partial(c(2.0), 1).is_err());
        assert!(reciprocal_product_check(Complex64::new(0.9, 1.0), 100).is_err());
    }
}
