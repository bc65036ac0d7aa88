use super::step::{laplace_exact_step, ThetaStep};
use crate::error::{Error, Result};
use crate::numeric::{exp_ratio, ComplexSum};
use crate::quad::adaptive_simpson;
use crate::zeta::ComplexValue;
use num_complex::Complex64;
use std::fmt;
use std::sync::Arc;

type Evaluator = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// The shapes a [`BoundedSignal`] can take.
#[derive(Clone)]
pub enum Shape {
    Zero,
    /// f ≡ c; g(z) = c/z.
    Constant(f64),
    /// f(t) = e^{-at}; g(z) = 1/(z + a).
    Exponential { a: f64 },
    /// f(t) = cos(bt) e^{-at}; g(z) = (z + a)/((z + a)² + b²).
    DampedCosine { a: f64, b: f64 },
    /// `values[i]` on [edges[i], edges[i+1]), zero from the last edge on.
    Steps { edges: Vec<f64>, values: Vec<f64> },
    /// θ(eᵗ)e^{-t} − 1, on t ≤ log(cutoff) of the step table.
    PrimeDeviation(Arc<ThetaStep>),
    /// Any bounded function; transforms by quadrature.
    Custom(Evaluator),
}

/// A bounded, piecewise continuous f on [0, ∞) with a declared ‖f‖∞.
#[derive(Clone)]
pub struct BoundedSignal {
    pub shape: Shape,
    pub sup_norm: f64,
    pub description: String,
}

impl fmt::Debug for BoundedSignal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundedSignal")
            .field("description", &self.description)
            .field("sup_norm", &self.sup_norm)
            .finish()
    }
}

fn tail_ratio(w: Complex64, h: f64) -> Complex64 {
    exp_ratio(w * h) * h
}

impl BoundedSignal {
    pub fn zero() -> Self {
        Self { shape: Shape::Zero, sup_norm: 0.0, description: "f = 0".into() }
    }

    pub fn constant(c: f64) -> Self {
        Self { shape: Shape::Constant(c), sup_norm: c.abs(), description: format!("f = {c}") }
    }

    pub fn exponential(a: f64) -> Self {
        Self { shape: Shape::Exponential { a }, sup_norm: 1.0, description: format!("f(t) = exp(-{a} t)") }
    }

    pub fn damped_cosine(a: f64, b: f64) -> Self {
        Self {
            shape: Shape::DampedCosine { a, b },
            sup_norm: 1.0,
            description: format!("f(t) = cos({b} t) exp(-{a} t)"),
        }
    }

    /// Piecewise constant signal; `edges` has one more entry than `values`.
    pub fn steps(edges: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if edges.len() != values.len() + 1 || edges.first().is_some_and(|&e| e < 0.0) {
            return Err(Error::domain("step signal needs edges = values + 1, starting at t >= 0"));
        }
        if edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("step edges must be strictly increasing"));
        }
        let sup_norm = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Ok(Self { shape: Shape::Steps { edges, values }, sup_norm, description: "step signal".into() })
    }

    /// θ(eᵗ)e^{-t} − 1, bounded by 2 since 0 ≤ θ(x) ≤ 3x.
    pub fn prime_deviation(step: Arc<ThetaStep>) -> Self {
        let cutoff = step.cutoff();
        Self {
            shape: Shape::PrimeDeviation(step),
            sup_norm: 2.0,
            description: format!("f(t) = theta(e^t) e^-t - 1, t <= log {cutoff}"),
        }
    }

    pub fn custom(f: impl Fn(f64) -> Complex64 + Send + Sync + 'static, sup_norm: f64, description: &str) -> Self {
        Self { shape: Shape::Custom(Arc::new(f)), sup_norm, description: description.into() }
    }

    /// The catalog with closed-form transforms used to certify the contour
    /// identity and the bounds.
    pub fn catalog() -> Vec<BoundedSignal> {
        vec![Self::exponential(1.0), Self::exponential(2.0), Self::damped_cosine(1.5, 2.0)]
    }

    pub fn eval(&self, t: f64) -> Result<Complex64> {
        let re = |v: f64| Complex64::new(v, 0.0);
        Ok(match &self.shape {
            Shape::Zero => re(0.0),
            Shape::Constant(c) => re(*c),
            Shape::Exponential { a } => re((-a * t).exp()),
            Shape::DampedCosine { a, b } => re((b * t).cos() * (-a * t).exp()),
            Shape::Steps { edges, values } => {
                let i = edges.partition_point(|&e| e <= t);
                re(if i == 0 || i > values.len() { 0.0 } else { values[i - 1] })
            }
            Shape::PrimeDeviation(step) => re(step.value_at(t)? * (-t).exp() - 1.0),
            Shape::Custom(f) => f(t),
        })
    }

    /// f(t) with any jump discontinuity resolved by the value at `anchor`,
    /// a point in the same constancy interval as t.
    fn eval_on_piece(&self, t: f64, anchor: f64) -> Result<Complex64> {
        match &self.shape {
            Shape::Steps { .. } => self.eval(anchor),
            Shape::PrimeDeviation(step) => Ok(Complex64::new(step.value_at(anchor)? * (-t).exp() - 1.0, 0.0)),
            _ => self.eval(t),
        }
    }

    /// Poles of the analytic continuation of g, when known.
    pub fn poles(&self) -> Option<Vec<Complex64>> {
        match &self.shape {
            Shape::Zero | Shape::Steps { .. } => Some(Vec::new()),
            Shape::Constant(c) => Some(if *c == 0.0 { Vec::new() } else { vec![Complex64::new(0.0, 0.0)] }),
            Shape::Exponential { a } => Some(vec![Complex64::new(-a, 0.0)]),
            Shape::DampedCosine { a, b } => Some(vec![Complex64::new(-a, *b), Complex64::new(-a, -b)]),
            Shape::PrimeDeviation(_) | Shape::Custom(_) => None,
        }
    }

    /// g(z) = ∫₀^∞ f(t) e^{-zt} dt in closed form, continued analytically;
    /// `None` when no closed form is available.
    pub fn g(&self, z: ComplexValue) -> Option<ComplexValue> {
        Some(match &self.shape {
            Shape::Zero => Complex64::new(0.0, 0.0),
            Shape::Constant(c) => *c / z,
            Shape::Exponential { a } => 1.0 / (z + a),
            Shape::DampedCosine { a, b } => {
                let w = z + a;
                let ib = Complex64::new(0.0, *b);
                0.5 * (1.0 / (w - ib) + 1.0 / (w + ib))
            }
            Shape::Steps { edges, values } => steps_transform(edges, values, z, f64::INFINITY, 0.0),
            Shape::PrimeDeviation(_) | Shape::Custom(_) => return None,
        })
    }

    /// e^{zT}(g(z) − g_T(z)) = ∫_T^∞ f(t) e^{-z(t−T)} dt in closed form,
    /// without the cancellation of subtracting g_T from g.
    pub fn shifted_tail(&self, z: ComplexValue, t_end: f64) -> Option<ComplexValue> {
        Some(match &self.shape {
            Shape::Zero => Complex64::new(0.0, 0.0),
            Shape::Constant(c) => *c / z,
            Shape::Exponential { a } => (-a * t_end).exp() / (z + a),
            Shape::DampedCosine { a, b } => {
                let w = z + a;
                let ib = Complex64::new(0.0, *b);
                let decay = 0.5 * (-a * t_end).exp();
                let rot = Complex64::new(0.0, b * t_end).exp();
                decay * (rot / (w - ib) + rot.conj() / (w + ib))
            }
            Shape::Steps { edges, values } => {
                let shifted: Vec<f64> = edges.iter().map(|e| e - t_end).collect();
                steps_transform(&shifted, values, z, f64::INFINITY, 0.0)
            }
            Shape::PrimeDeviation(_) | Shape::Custom(_) => return None,
        })
    }

    /// g_T(z) = ∫₀ᵀ f(t) e^{-zt} dt, an entire function of z.
    ///
    /// ```
    /// use num_complex::Complex64;
    /// use pntlab::tauberian::BoundedSignal;
    /// let f = BoundedSignal::exponential(1.0);
    /// let v = f.g_t(Complex64::new(0.0, 0.0), 3.0).unwrap();
    /// assert!((v.re - (1.0 - (-3f64).exp())).abs() < 1e-15);
    /// ```
    pub fn g_t(&self, z: ComplexValue, t_end: f64) -> Result<ComplexValue> {
        if !(t_end > 0.0) || !t_end.is_finite() {
            return Err(Error::domain(format!("g_T needs finite T > 0, got {t_end}")));
        }
        Ok(match &self.shape {
            Shape::Zero => Complex64::new(0.0, 0.0),
            Shape::Constant(c) => *c * tail_ratio(-z, t_end),
            Shape::Exponential { a } => tail_ratio(-(z + a), t_end),
            Shape::DampedCosine { a, b } => {
                let ib = Complex64::new(0.0, *b);
                0.5 * (tail_ratio(-(z + a - ib), t_end) + tail_ratio(-(z + a + ib), t_end))
            }
            Shape::Steps { edges, values } => steps_transform(edges, values, z, t_end, 0.0),
            Shape::PrimeDeviation(step) => {
                laplace_exact_step(step, z + 1.0, t_end)? - tail_ratio(-z, t_end)
            }
            Shape::Custom(_) => self.g_t_quadrature(z, t_end, 1e-12)?,
        })
    }

    /// g_T(z) by adaptive Simpson quadrature, for any shape.
    pub fn g_t_quadrature(&self, z: ComplexValue, t_end: f64, tol: f64) -> Result<ComplexValue> {
        let mut points = vec![0.0];
        match &self.shape {
            Shape::Steps { edges, .. } => points.extend(edges.iter().copied().filter(|&e| e > 0.0 && e < t_end)),
            Shape::PrimeDeviation(step) => {
                points.extend(step.breakpoints().iter().copied().filter(|&e| e < t_end))
            }
            _ => {}
        }
        points.push(t_end);
        let mut sum = ComplexSum::new();
        let share = tol / (points.len() - 1) as f64;
        for w in points.windows(2) {
            let anchor = 0.5 * (w[0] + w[1]);
            let mut failure = None;
            let q = adaptive_simpson(
                |t: f64| match self.eval_on_piece(t, anchor) {
                    Ok(v) => v * (-z * t).exp(),
                    Err(e) => {
                        failure.get_or_insert(e);
                        Complex64::new(0.0, 0.0)
                    }
                },
                w[0],
                w[1],
                share,
            )?;
            if let Some(e) = failure {
                return Err(e);
            }
            sum.add(q.value);
        }
        Ok(sum.value())
    }
}

/// Σ vᵢ ∫ e^{-zt} dt over [eᵢ, eᵢ₊₁) ∩ [lo, hi).
fn steps_transform(edges: &[f64], values: &[f64], z: ComplexValue, hi: f64, lo: f64) -> ComplexValue {
    let mut sum = ComplexSum::new();
    for (i, &v) in values.iter().enumerate() {
        let a = edges[i].max(lo);
        let b = edges[i + 1].min(hi);
        if b > a && v != 0.0 {
            sum.add((-z * a).exp() * tail_ratio(-z, b - a) * v);
        }
    }
    sum.value()
}

/// Checks |g(z) − g_T(z)| ≤ ‖f‖∞ e^{-T Re z}/Re z for Re z > 0.
pub fn bound_rz1_check(signal: &BoundedSignal, z: ComplexValue, t_end: f64) -> Result<bool> {
    if !(z.re > 0.0) {
        return Err(Error::domain(format!("the right half-plane bound needs Re z > 0, got {z}")));
    }
    // Both sides carry the factor e^{-T Re z}; comparing e^{zT}(g − g_T)
    // with ‖f‖∞/Re z keeps the check meaningful when that factor
    // underflows the rounding error of g − g_T.
    let scaled = match signal.shifted_tail(z, t_end) {
        Some(v) => v.norm(),
        None => {
            let g = signal
                .g(z)
                .ok_or_else(|| Error::domain(format!("no closed-form transform for {}", signal.description)))?;
            (g - signal.g_t(z, t_end)?).norm() * (t_end * z.re).exp()
        }
    };
    Ok(scaled <= signal.sup_norm / z.re * (1.0 + 1e-12))
}

/// Checks |g_T(z)| ≤ ‖f‖∞ e^{-T Re z}/|Re z| for Re z < 0.
pub fn bound_rz2_check(signal: &BoundedSignal, z: ComplexValue, t_end: f64) -> Result<bool> {
    if !(z.re < 0.0) {
        return Err(Error::domain(format!("the left half-plane bound needs Re z < 0, got {z}")));
    }
    let lhs = signal.g_t(z, t_end)?.norm();
    let rhs = signal.sup_norm * (-t_end * z.re).exp() / z.re.abs();
    Ok(lhs <= rhs * (1.0 + 1e-12))
}

/// Checks |1/z + z/R²| = 2|Re z|/R² to 10⁻¹⁰ for z on |z| = R.
pub fn circle_factor_check(z: ComplexValue, r: f64) -> Result<bool> {
    if !(r > 0.0) || (z.norm() - r).abs() > 1e-12 * r.max(1.0) {
        return Err(Error::domain(format!("z = {z} is not on the circle |z| = {r}")));
    }
    let lhs = (1.0 / z + z / (r * r)).norm();
    let rhs = 2.0 * z.re.abs() / (r * r);
    Ok((lhs - rhs).abs() <= 1e-10)
}
