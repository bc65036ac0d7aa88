use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;
use crate::primes::for_each_prime;
use crate::zeta::phi_continued;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// ∫_a^b (c − t)/t² dt = c(1/a − 1/b) − log(b/a).
fn gap_integral(c: f64, a: f64, b: f64) -> f64 {
    let h = b - a;
    c * h / (a * b) - (h / a).ln_1p()
}

/// I(x) = ∫_x^∞ (θ(t) − t)/t² dt sampled at several x.
///
/// The integral up to the cutoff X is exact over every prime gap. The part
/// beyond X is modeled as c/X, with c fitted by least squares to the
/// increments over the last two decades [X/100, X/10] and [X/10, X]. The
/// model is a heuristic, not a bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailProfile {
    pub cutoff: u64,
    pub grid: Vec<f64>,
    /// ∫_x^X (θ(t) − t)/t² dt for each grid point.
    pub partial: Vec<f64>,
    /// Extrapolated ∫_X^∞.
    pub remainder: f64,
}

impl TailProfile {
    pub fn values(&self) -> Vec<f64> {
        self.partial.iter().map(|p| p + self.remainder).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,I(x)\n");
        for (x, v) in self.grid.iter().zip(self.values()) {
            let _ = writeln!(s, "{x},{v:.12}");
        }
        s
    }
}

/// Accumulates F(y) = ∫₁^y (θ(t) − t)/t² dt while walking up the primes.
struct Running<'a> {
    points: &'a [f64],
    next: usize,
    left: f64,
    sum: CompensatedSum,
    out: Vec<f64>,
}

impl Running<'_> {
    /// Integrate with θ = c up to `upto`, recording F at grid points passed.
    fn advance(&mut self, upto: f64, c: f64) {
        while self.next < self.points.len() && self.points[self.next] <= upto {
            let y = self.points[self.next];
            if y > self.left {
                self.sum.add(gap_integral(c, self.left, y));
                self.left = y;
            }
            self.out.push(self.sum.value());
            self.next += 1;
        }
        if upto > self.left {
            self.sum.add(gap_integral(c, self.left, upto));
            self.left = upto;
        }
    }
}

/// F(y) at each y of an increasing list with 1 ≤ y ≤ X.
fn running_integral(points: &[f64], cutoff: u64) -> Vec<f64> {
    let mut run = Running { points, next: 0, left: 1.0, sum: CompensatedSum::new(), out: Vec::with_capacity(points.len()) };
    let mut theta = CompensatedSum::new();
    for_each_prime(0, cutoff, |p| {
        let pf = p as f64;
        run.advance(pf, theta.value());
        theta.add(pf.ln());
    });
    run.advance(cutoff as f64, theta.value());
    run.out
}

pub fn pnt_integral_profile(xs: &[f64], cutoff: u64) -> Result<TailProfile> {
    if cutoff < 1000 {
        return Err(Error::domain(format!("the tail fit needs cutoff >= 1000, got {cutoff}")));
    }
    let top = cutoff as f64;
    if let Some(&x) = xs.iter().find(|&&x| !(x >= 1.0)) {
        return Err(Error::domain(format!("I(x) needs x >= 1, got {x}")));
    }
    if let Some(&x) = xs.iter().find(|&&x| x > top) {
        return Err(Error::Coverage(format!("x = {x} exceeds the cutoff {cutoff}")));
    }
    let mut points: Vec<f64> = xs.to_vec();
    points.extend([top / 100.0, top / 10.0, top]);
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].total_cmp(&points[j]));
    let sorted: Vec<f64> = order.iter().map(|&i| points[i]).collect();
    let values = running_integral(&sorted, cutoff);
    let mut at = vec![0.0; points.len()];
    for (k, &i) in order.iter().enumerate() {
        at[i] = values[k];
    }
    let n = xs.len();
    let (f_low, f_mid, f_top) = (at[n], at[n + 1], at[n + 2]);
    let upper = f_top - f_mid;
    let lower = f_mid - f_low;
    let remainder = (9.0 * upper + 90.0 * lower) / 8181.0;
    Ok(TailProfile {
        cutoff,
        grid: xs.to_vec(),
        partial: at[..n].iter().map(|f| f_top - f).collect(),
        remainder,
    })
}

/// I(x) = ∫_x^∞ (θ(t) − t)/t² dt, exact to the cutoff plus the fitted
/// remainder.
///
/// ```
/// let i = pntlab::tauberian::pnt_integral_tail(1.0, 1_000_000).unwrap();
/// assert!((i + 2.3326).abs() < 0.01);
/// ```
pub fn pnt_integral_tail(x: f64, cutoff: u64) -> Result<f64> {
    Ok(pnt_integral_profile(&[x], cutoff)?.values()[0])
}

/// Two independent estimates of g(0) = ∫₀^∞ (θ(eᵗ)e^{-t} − 1) dt.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct G0Check {
    /// I(1) from the prime-gap integral and the fitted remainder.
    pub tail_route: f64,
    /// Φ(s)/s − 1/(s − 1) at s = 1 + 10⁻ᵏ, k = 2..5, extrapolated to s = 1.
    pub phi_route: f64,
}

impl G0Check {
    pub fn difference(&self) -> f64 {
        (self.tail_route - self.phi_route).abs()
    }
}

/// Value at 0 of the polynomial through the points (hᵢ, vᵢ).
pub fn neville_at_zero(h: &[f64], v: &[f64]) -> f64 {
    let mut p = v.to_vec();
    let n = p.len();
    for m in 1..n {
        for i in 0..n - m {
            p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
        }
    }
    p[0]
}

pub fn g0_two_oracles(cutoff: u64) -> Result<G0Check> {
    let tail_route = pnt_integral_tail(1.0, cutoff)?;
    let h: Vec<f64> = (2..=5).map(|k| 10f64.powi(-k)).collect();
    let v = h
        .iter()
        .map(|&h| {
            let s = Complex64::new(1.0 + h, 0.0);
            Ok(phi_continued(s, 1e-6)?.value.re / s.re - 1.0 / h)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(G0Check { tail_route, phi_route: neville_at_zero(&h, &v) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive_simpson_pieces;

    #[test]
    fn piecewise_matches_quadrature_to_ten() {
        // Oracle: integrate (θ(t) − t)/t² on [1, 10] split at the primes.
        let points = [1.0, 2.0, 3.0, 5.0, 7.0, 10.0];
        let theta = [0.0, 2f64.ln(), 6f64.ln(), 30f64.ln(), 210f64.ln()];
        let mut want = 0.0;
        for (i, w) in points.windows(2).enumerate() {
            let c = theta[i];
            want += adaptive_simpson_pieces(|t: f64| (c - t) / (t * t), w, 1e-14).unwrap().value;
        }
        let got = running_integral(&[10.0], 10)[0];
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }

    #[test]
    fn neville_recovers_polynomials() {
        let h = [0.1, 0.01, 0.001, 0.0001];
        let v: Vec<f64> = h.iter().map(|x| 2.0 - 3.0 * x + 0.5 * x * x * x).collect();
        assert!((neville_at_zero(&h, &v) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn coverage() {
        assert!(matches!(pnt_integral_tail(2e6, 1_000_000), Err(Error::Coverage(_))));
        assert!(pnt_integral_tail(0.5, 1_000_000).is_err());
    }

    #[test]
    fn profile_consistent_with_single_calls() {
        let p = pnt_integral_profile(&[1e4, 10.0, 1e3], 100_000).unwrap();
        for (x, v) in p.grid.iter().zip(p.values()) {
            assert!((pnt_integral_tail(*x, 100_000).unwrap() - v).abs() < 1e-12);
        }
    }
}
