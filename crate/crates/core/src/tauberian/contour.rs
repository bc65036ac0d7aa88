use super::signal::BoundedSignal;
use crate::error::{Error, Result};
use crate::numeric::ComplexSum;
use crate::quad::{GaussRule, PathPiece};
use crate::zeta::ComplexValue;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

const PANEL_ORDER: usize = 32;

/// The contour C_R: the circle |z| = R cut off by the line Re z = −δ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub r: f64,
    pub delta: f64,
    /// Gauss nodes per arc or segment.
    pub n_points: usize,
}

impl ContourSpec {
    pub const DEFAULT_POINTS: usize = 256;

    pub fn new(r: f64, delta: f64, n_points: usize) -> Result<Self> {
        if !(r > 0.0 && delta > 0.0 && delta < r) {
            return Err(Error::Contour(format!("need 0 < delta < R, got R = {r}, delta = {delta}")));
        }
        if n_points < 64 {
            return Err(Error::Contour(format!("need at least 64 nodes per piece, got {n_points}")));
        }
        Ok(Self { r, delta, n_points })
    }

    /// Whether `p` lies in the closed region bounded by C_R.
    pub fn encloses(&self, p: Complex64) -> bool {
        p.norm() <= self.r * (1.0 + 1e-12) && p.re >= -self.delta * (1.0 + 1e-12)
    }

    /// The pieces of C_R, counterclockwise: the arc in Re z ≥ 0, the two
    /// short arcs in −δ ≤ Re z < 0, and the segment on Re z = −δ.
    pub fn pieces(&self) -> Vec<PathPiece> {
        let corner = PI - (self.delta / self.r).acos();
        let h = (self.r * self.r - self.delta * self.delta).sqrt();
        let origin = Complex64::new(0.0, 0.0);
        let arc = |from: f64, to: f64| PathPiece::Arc { center: origin, radius: self.r, from, to };
        vec![
            arc(-FRAC_PI_2, FRAC_PI_2),
            arc(FRAC_PI_2, corner),
            PathPiece::Segment { from: Complex64::new(-self.delta, h), to: Complex64::new(-self.delta, -h) },
            arc(-corner, -FRAC_PI_2),
        ]
    }

    /// ∮ f dz over C_R, each piece split into Gauss panels.
    pub fn integrate(&self, mut f: impl FnMut(Complex64) -> Complex64) -> Complex64 {
        let rule = GaussRule::new(PANEL_ORDER);
        let panels = self.n_points.div_ceil(PANEL_ORDER);
        let mut sum = ComplexSum::new();
        for piece in self.pieces() {
            for k in 0..panels {
                let (lo, hi) = (k as f64 / panels as f64, (k + 1) as f64 / panels as f64);
                let sub = subpiece(&piece, lo, hi);
                sum.add(sub.integrate(&rule, &mut f));
            }
        }
        sum.value()
    }
}

fn subpiece(piece: &PathPiece, lo: f64, hi: f64) -> PathPiece {
    match *piece {
        PathPiece::Arc { center, radius, from, to } => PathPiece::Arc {
            center,
            radius,
            from: from + (to - from) * lo,
            to: from + (to - from) * hi,
        },
        PathPiece::Segment { .. } => PathPiece::Segment { from: piece.point(lo), to: piece.point(hi) },
    }
}

/// |(g_T(0) − g(0)) − (1/2πi)∮_{C_R} (g_T(z) − g(z)) e^{zT} (1 + z²/R²) dz/z|.
///
/// The integrand uses the closed-form shifted tail e^{zT}(g − g_T), so the
/// large factor e^{zT} on the right half of the contour never multiplies a
/// cancellation error.
///
/// ```
/// use pntlab::tauberian::{newman_contour_residual, BoundedSignal, ContourSpec};
/// let spec = ContourSpec::new(1.0, 0.5, 256).unwrap();
/// let r = newman_contour_residual(&BoundedSignal::exponential(1.0), &spec, 5.0).unwrap();
/// assert!(r <= 1e-6);
/// ```
pub fn newman_contour_residual(signal: &BoundedSignal, spec: &ContourSpec, t_end: f64) -> Result<f64> {
    let poles = signal
        .poles()
        .ok_or_else(|| Error::Contour(format!("no closed-form transform for {}", signal.description)))?;
    if let Some(p) = poles.iter().find(|&&p| spec.encloses(p)) {
        return Err(Error::Contour(format!(
            "g has a pole at {p}, on or inside C_R for R = {}, delta = {}",
            spec.r, spec.delta
        )));
    }
    let zero = Complex64::new(0.0, 0.0);
    let g0 = signal.g(zero).expect("closed form exists when poles are known");
    let lhs = signal.g_t(zero, t_end)? - g0;
    let r2 = spec.r * spec.r;
    let integral = spec.integrate(|z| {
        let tail = signal.shifted_tail(z, t_end).unwrap_or(zero);
        -tail * (1.0 + z * z / r2) / z
    });
    let rhs = integral / Complex64::new(0.0, 2.0 * PI);
    Ok((lhs - rhs).norm())
}

/// |g_T(0) − g(0)| over a grid of T.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceSeries {
    pub t: Vec<f64>,
    pub abs_error: Vec<f64>,
}

impl ConvergenceSeries {
    /// Suffix maxima max_{j≥k} abs_error[j].
    pub fn envelope(&self) -> Vec<f64> {
        let mut env = self.abs_error.clone();
        for k in (0..env.len().saturating_sub(1)).rev() {
            env[k] = env[k].max(env[k + 1]);
        }
        env
    }

    /// The envelope ends strictly below where it starts.
    pub fn envelope_decreases(&self) -> bool {
        let env = self.envelope();
        match (env.first(), env.last()) {
            (Some(a), Some(b)) => env.len() > 1 && b < a,
            _ => false,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("T,abs_error\n");
        for (t, e) in self.t.iter().zip(&self.abs_error) {
            let _ = writeln!(s, "{t},{e:.6e}");
        }
        s
    }
}

/// |g_T(0) − g(0)| for each T, with g(0) from the closed form or from
/// `g0` when the signal has none.
pub fn newman_convergence_demo(signal: &BoundedSignal, g0: Option<f64>, t_grid: &[f64]) -> Result<ConvergenceSeries> {
    let zero = Complex64::new(0.0, 0.0);
    let limit: ComplexValue = match (signal.g(zero), g0) {
        (Some(v), _) if v.norm().is_finite() => v,
        (_, Some(v)) => Complex64::new(v, 0.0),
        _ => return Err(Error::domain(format!("g(0) unknown for {}", signal.description))),
    };
    let abs_error = t_grid
        .iter()
        .map(|&t| Ok((signal.g_t(zero, t)? - limit).norm()))
        .collect::<Result<Vec<f64>>>()?;
    Ok(ConvergenceSeries { t: t_grid.to_vec(), abs_error })
}

/// |∮_γ g(z) dz| over the square γ with the given center and half-side,
/// g evaluated by quadrature of g_T with T large enough that the
/// remainder is below 10⁻¹⁴ on γ.
pub fn cauchy_square_residual(signal: &BoundedSignal, center: Complex64, half: f64) -> Result<f64> {
    let min_re = center.re - half;
    if !(min_re > 0.0) {
        return Err(Error::Contour(format!("square must lie in Re z > 0, reaches Re z = {min_re}")));
    }
    let t_end = (signal.sup_norm.max(1e-300) / (1e-14 * min_re)).ln().max(1.0) / min_re;
    let corners = [
        center + Complex64::new(half, -half),
        center + Complex64::new(half, half),
        center + Complex64::new(-half, half),
        center + Complex64::new(-half, -half),
    ];
    let rule = GaussRule::new(16);
    let mut sum = ComplexSum::new();
    let mut failure = None;
    for k in 0..4 {
        let side = PathPiece::Segment { from: corners[k], to: corners[(k + 1) % 4] };
        sum.add(side.integrate(&rule, |z| match signal.g_t_quadrature(z, t_end, 1e-12) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }));
    }
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(sum.value().norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contour_encloses_origin_once() {
        let spec = ContourSpec::new(2.0, 0.5, 256).unwrap();
        let w = spec.integrate(|z| 1.0 / z) / Complex64::new(0.0, 2.0 * PI);
        assert!((w - 1.0).norm() < 1e-13);
        let outside = spec.integrate(|z| 1.0 / (z + 1.0));
        assert!(outside.norm() < 1e-12);
    }

    #[test]
    fn spec_validation() {
        assert!(ContourSpec::new(1.0, 1.0, 256).is_err());
        assert!(ContourSpec::new(1.0, 0.5, 32).is_err());
    }

    #[test]
    fn zero_signal() {
        let spec = ContourSpec::new(1.0, 0.5, 256).unwrap();
        assert_eq!(newman_contour_residual(&BoundedSignal::zero(), &spec, 3.0).unwrap(), 0.0);
    }

    #[test]
    fn pole_detection() {
        let spec = ContourSpec::new(1.0, 0.5, 256).unwrap();
        let r = newman_contour_residual(&BoundedSignal::constant(1.0), &spec, 3.0);
        assert!(matches!(r, Err(Error::Contour(_))));
        let on_edge = ContourSpec::new(2.0, 1.0, 256).unwrap();
        let r = newman_contour_residual(&BoundedSignal::exponential(1.0), &on_edge, 3.0);
        assert!(matches!(r, Err(Error::Contour(_))));
    }

    #[test]
    fn exponential_demo_is_exact() {
        let s = newman_convergence_demo(&BoundedSignal::exponential(1.0), None, &[1.0, 2.0, 5.0]).unwrap();
        for (t, e) in s.t.iter().zip(&s.abs_error) {
            assert!((e - (-t).exp()).abs() < 1e-15);
        }
        assert!(s.envelope_decreases());
        assert!(s.to_csv().starts_with("T,abs_error\n1,"));
    }

    #[test]
    fn slow_damped_cosine_demo() {
        let f = BoundedSignal::damped_cosine(0.1, 1.0);
        let g0 = f.g(Complex64::new(0.0, 0.0)).unwrap();
        assert!((g0.re - 0.1 / (0.1f64.powi(2) + 1.0)).abs() < 1e-15);
        let grid: Vec<f64> = (1..=200).map(|k| 0.5 * k as f64).collect();
        let s = newman_convergence_demo(&f, None, &grid).unwrap();
        assert!(s.envelope_decreases());
        assert!(s.envelope().windows(2).all(|w| w[1] <= w[0]));
        assert!(*s.abs_error.last().unwrap() < 1e-3);
    }

    #[test]
    fn analyticity_proxy() {
        let f = BoundedSignal::steps(vec![0.0, 1.0, 2.5], vec![1.0, -1.0]).unwrap();
        assert!(cauchy_square_residual(&f, Complex64::new(1.0, 1.0), 0.25).unwrap() <= 1e-8);
    }
}
