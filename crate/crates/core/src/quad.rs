//! Quadrature rules: Gauss–Legendre panels, adaptive Simpson, and
//! parametrized complex paths.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::num::NonZeroUsize;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Gauss–Legendre nodes and weights on [-1, 1].
#[derive(Clone, Debug)]
pub struct GaussRule {
    pairs: Arc<[(f64, f64)]>,
}

impl GaussRule {
    /// Rule with `n` nodes; rules are computed once per order and cached.
    pub fn new(n: usize) -> Self {
        type Rules = Vec<(usize, Arc<[(f64, f64)]>)>;
        static CACHE: OnceLock<Mutex<Rules>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        if let Some((_, pairs)) = guard.iter().find(|(order, _)| *order == n) {
            return Self { pairs: pairs.clone() };
        }
        let order = NonZeroUsize::new(n).expect("Gauss rule needs at least one node");
        let rule = gauss_quad::GaussLegendre::new(order);
        let pairs: Arc<[(f64, f64)]> = rule.as_node_weight_pairs().into();
        guard.push((n, pairs.clone()));
        Self { pairs }
    }

    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn integrate<V, F>(&self, a: f64, b: f64, mut f: F) -> V
    where
        V: QuadValue,
        F: FnMut(f64) -> V,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut acc = V::zero();
        for &(x, w) in self.pairs.iter() {
            acc = acc + f(mid + half * x) * (w * half);
        }
        acc
    }
}

/// Values a quadrature can accumulate: `f64` and `Complex64`.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Result of an adaptive integration: value plus the summed local error
/// estimates.
#[derive(Clone, Copy, Debug)]
pub struct Quadrature<V> {
    pub value: V,
    pub err: f64,
    pub evaluations: usize,
}

const SIMPSON_MAX_DEPTH: u32 = 48;

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `tol`, with the usual Richardson correction on accepted panels.
pub fn adaptive_simpson<V, F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<Quadrature<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> V,
{
    if !(tol > 0.0) {
        return Err(Error::domain(format!("quadrature tolerance must be positive, got {tol}")));
    }
    if a == b {
        return Ok(Quadrature { value: V::zero(), err: 0.0, evaluations: 0 });
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (fa + fm * 4.0 + fb) * ((b - a) / 6.0);
    let mut out = Quadrature { value: V::zero(), err: 0.0, evaluations: 3 };
    simpson_step(&mut f, a, b, fa, fm, fb, whole, tol, SIMPSON_MAX_DEPTH, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<V, F>(
    f: &mut F,
    a: f64,
    b: f64,
    fa: V,
    fm: V,
    fb: V,
    whole: V,
    tol: f64,
    depth: u32,
    out: &mut Quadrature<V>,
) -> Result<()>
where
    V: QuadValue,
    F: FnMut(f64) -> V,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    out.evaluations += 2;
    let left = (fa + flm * 4.0 + fm) * ((m - a) / 6.0);
    let right = (fm + frm * 4.0 + fb) * ((b - m) / 6.0);
    let delta = left + right - whole;
    // Below the rounding floor further bisection cannot shrink delta.
    let floor = 64.0 * f64::EPSILON * (left.magnitude() + right.magnitude());
    if delta.magnitude() <= (15.0 * tol).max(floor) || (m - a) <= f64::EPSILON * m.abs().max(1.0) {
        out.value = out.value + left + right + delta * (1.0 / 15.0);
        out.err += delta.magnitude() / 15.0;
        return Ok(());
    }
    if depth == 0 {
        return Err(Error::Numeric(format!(
            "adaptive Simpson exceeded depth {SIMPSON_MAX_DEPTH} on [{a}, {b}]"
        )));
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out)?;
    simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out)
}

/// Adaptive Simpson over consecutive pieces `[p₀, p₁], [p₁, p₂], …`, with the
/// tolerance split in proportion to piece length. Use this when the
/// integrand jumps at known points.
pub fn adaptive_simpson_pieces<V, F>(mut f: F, points: &[f64], tol: f64) -> Result<Quadrature<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> V,
{
    let mut out = Quadrature { value: V::zero(), err: 0.0, evaluations: 0 };
    if points.len() < 2 {
        return Ok(out);
    }
    let span = points[points.len() - 1] - points[0];
    for w in points.windows(2) {
        let share = if span > 0.0 { tol * (w[1] - w[0]) / span } else { tol };
        let piece = adaptive_simpson(&mut f, w[0], w[1], share.max(f64::MIN_POSITIVE))?;
        out.value = out.value + piece.value;
        out.err += piece.err;
        out.evaluations += piece.evaluations;
    }
    Ok(out)
}

/// A smooth piece of a contour in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PathPiece {
    /// `center + radius·e^{iφ}` for φ from `from` to `to`.
    Arc { center: Complex64, radius: f64, from: f64, to: f64 },
    Segment { from: Complex64, to: Complex64 },
}

impl PathPiece {
    pub fn point(&self, tau: f64) -> Complex64 {
        match *self {
            PathPiece::Arc { center, radius, from, to } => {
                center + Complex64::from_polar(radius, from + (to - from) * tau)
            }
            PathPiece::Segment { from, to } => from + (to - from) * tau,
        }
    }

    /// dz/dτ for τ ∈ [0, 1].
    pub fn velocity(&self, tau: f64) -> Complex64 {
        match *self {
            PathPiece::Arc { radius, from, to, .. } => {
                let phi = from + (to - from) * tau;
                Complex64::new(0.0, 1.0) * Complex64::from_polar(radius, phi) * (to - from)
            }
            PathPiece::Segment { from, to } => to - from,
        }
    }

    /// ∫ f(z) dz along the piece with a single Gauss panel of the given rule.
    pub fn integrate<F>(&self, rule: &GaussRule, mut f: F) -> Complex64
    where
        F: FnMut(Complex64) -> Complex64,
    {
        rule.integrate(0.0, 1.0, |tau| f(self.point(tau)) * self.velocity(tau))
    }
}
