use crate::error::{Error, Result};
use crate::numeric::{exp_ratio, ComplexSum, CompensatedSum};
use crate::primes::shared_table;
use crate::zeta::{phi_series, ComplexValue, MARGIN};
use serde::{Deserialize, Serialize};

/// The step function t ↦ θ(eᵗ) up to t = log(cutoff).
///
/// It jumps by log p at t = log p and is constant in between.
#[derive(Clone, Debug)]
pub struct ThetaStep {
    breakpoints: Vec<f64>,
    cumulative: Vec<f64>,
    cutoff: u64,
}

impl ThetaStep {
    pub fn new(cutoff: u64) -> Result<Self> {
        if cutoff < 2 {
            return Err(Error::domain(format!("ThetaStep needs cutoff >= 2, got {cutoff}")));
        }
        let table = shared_table(cutoff)?;
        let primes = table.range(0, cutoff);
        let mut sum = CompensatedSum::new();
        let mut breakpoints = Vec::with_capacity(primes.len());
        let mut cumulative = Vec::with_capacity(primes.len());
        for &p in primes {
            let lp = (p as f64).ln();
            sum.add(lp);
            breakpoints.push(lp);
            cumulative.push(sum.value());
        }
        Ok(Self { breakpoints, cumulative, cutoff })
    }

    /// log p for each prime p ≤ cutoff.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// θ(p) for each prime p ≤ cutoff.
    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    /// log(cutoff), the largest t represented.
    pub fn horizon(&self) -> f64 {
        (self.cutoff as f64).ln()
    }

    fn check(&self, t: f64) -> Result<()> {
        if t > self.horizon() * (1.0 + 4.0 * f64::EPSILON) {
            return Err(Error::Coverage(format!(
                "t = {t} exceeds log(cutoff) = {} for cutoff {}",
                self.horizon(),
                self.cutoff
            )));
        }
        Ok(())
    }

    /// θ(eᵗ).
    pub fn value_at(&self, t: f64) -> Result<f64> {
        self.check(t)?;
        Ok(match self.breakpoints.partition_point(|&b| b <= t) {
            0 => 0.0,
            i => self.cumulative[i - 1],
        })
    }

    /// Σ c·∫_a^b w(t) dt over the constancy intervals [a, b) ⊂ [0, T], where
    /// `piece(c, a, b)` returns that integral; the interval before log 2
    /// carries c = 0 and is skipped.
    pub(crate) fn fold_pieces(&self, t_end: f64, mut piece: impl FnMut(f64, f64, f64)) -> Result<()> {
        self.check(t_end)?;
        for (i, (&a, &c)) in self.breakpoints.iter().zip(&self.cumulative).enumerate() {
            if a >= t_end {
                break;
            }
            let b = self.breakpoints.get(i + 1).map_or(t_end, |&next| next.min(t_end));
            piece(c, a, b);
        }
        Ok(())
    }
}

/// ∫₀ᵀ θ(eᵗ) e^{-st} dt, exact per constancy interval:
/// c·e^{-sa}·(b − a)·(1 − e^{-s(b−a)})/(s(b − a)).
///
/// ```
/// use num_complex::Complex64;
/// use pntlab::tauberian::{laplace_exact_step, ThetaStep};
/// let step = ThetaStep::new(10).unwrap();
/// let v = laplace_exact_step(&step, Complex64::new(0.0, 0.0), 3f64.ln()).unwrap();
/// assert!((v.re - 2f64.ln() * 1.5f64.ln()).abs() < 1e-15);
/// ```
pub fn laplace_exact_step(step: &ThetaStep, s: ComplexValue, t_end: f64) -> Result<ComplexValue> {
    if !(s.re.is_finite() && s.im.is_finite() && t_end.is_finite()) {
        return Err(Error::domain("laplace_exact_step needs finite s and T"));
    }
    let mut sum = ComplexSum::new();
    step.fold_pieces(t_end, |c, a, b| {
        let h = b - a;
        sum.add((-s * a).exp() * exp_ratio(-s * h) * (c * h));
    })?;
    Ok(sum.value())
}

/// Outcome of comparing Φ(s)/s with the truncated Laplace integral of θ(eᵗ).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaplaceResidual {
    /// |Φ(s)/s − ∫₀^{log cutoff} θ(eᵗ) e^{-st} dt|.
    pub residual: f64,
    /// 3·cutoff^{1−σ}/(σ − 1), from θ(x) ≤ 3x.
    pub tail_bound: f64,
    /// Error bound on the Φ(s)/s evaluation.
    pub phi_err: f64,
}

impl LaplaceResidual {
    pub fn within_bound(&self) -> bool {
        self.residual <= self.tail_bound + self.phi_err
    }
}

/// Residual of Φ(s)/s = ∫₀^∞ θ(eᵗ) e^{-st} dt truncated at t = log(cutoff).
pub fn phi_laplace_identity_residual(s: ComplexValue, cutoff: u64) -> Result<LaplaceResidual> {
    if s.re < 1.0 + MARGIN {
        return Err(Error::domain(format!("the Laplace identity needs Re s >= {}, got {s}", 1.0 + MARGIN)));
    }
    if cutoff < 10_000 {
        return Err(Error::domain(format!("cutoff must be at least 10^4, got {cutoff}")));
    }
    let sigma = s.re;
    let horizon = (cutoff as f64).ln();
    let tail_bound = 3.0 * ((1.0 - sigma) * horizon).exp() / (sigma - 1.0);
    let phi = phi_series(s, (0.1 * tail_bound * s.norm()).max(1e-7))?;
    let step = ThetaStep::new(cutoff)?;
    let laplace = laplace_exact_step(&step, s, horizon)?;
    let residual = (phi.value / s - laplace).norm();
    Ok(LaplaceResidual { residual, tail_bound, phi_err: phi.err / s.norm() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive_simpson_pieces;
    use num_complex::Complex64;

    #[test]
    fn step_values() {
        let step = ThetaStep::new(30).unwrap();
        assert_eq!(step.value_at(0.5).unwrap(), 0.0);
        assert!((step.value_at(2f64.ln()).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert!((step.value_at(10f64.ln()).unwrap() - 210f64.ln()).abs() < 1e-14);
        assert!(step.value_at(31f64.ln()).is_err());
        let c = step.cumulative();
        for (i, w) in c.windows(2).enumerate() {
            assert!((w[1] - w[0] - step.breakpoints()[i + 1]).abs() < 1e-13);
        }
    }

    #[test]
    fn before_first_prime() {
        let step = ThetaStep::new(100).unwrap();
        let v = laplace_exact_step(&step, Complex64::new(1.3, 2.0), 0.6).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn matches_quadrature() {
        let step = ThetaStep::new(1_000_000).unwrap();
        let s = Complex64::new(2.0, 0.0);
        let t_end = 1e6f64.ln();
        let exact = laplace_exact_step(&step, s, t_end).unwrap();
        // Quadrature oracle in x = eᵗ: ∫₁^X θ(x) x^{-s-1} dx, split at primes.
        let table = shared_table(1_000_000).unwrap();
        let mut points = vec![1.0];
        points.extend(table.range(0, 1_000_000).iter().map(|&p| p as f64));
        points.push(1e6);
        let mut sum = 0.0;
        for (i, w) in points.windows(2).enumerate() {
            let theta = if i == 0 { 0.0 } else { step.cumulative()[i - 1] };
            if theta == 0.0 {
                continue;
            }
            let q = adaptive_simpson_pieces(|x: f64| x.powf(-3.0), w, 1e-16).unwrap();
            sum += theta * q.value;
        }
        assert!((exact.re - sum).abs() < 1e-9, "{} vs {sum}", exact.re);
    }

    #[test]
    fn identity_examples() {
        for (s, cutoff) in [(Complex64::new(2.0, 0.0), 1_000_000), (Complex64::new(3.0, 0.0), 10_000), (Complex64::new(2.0, 5.0), 1_000_000)] {
            let r = phi_laplace_identity_residual(s, cutoff).unwrap();
            assert!(r.within_bound(), "{s}: {r:?}");
        }
        assert!(phi_laplace_identity_residual(Complex64::new(1.0, 0.0), 10_000).is_err());
    }
}
