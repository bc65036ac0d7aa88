//! Small floating-point helpers shared by the evaluators.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Neumaier's variant of Kahan summation.
///
/// Keeps a running correction so the rounding error of a long sum stays
/// O(ε·Σ|x|) rather than growing with the number of terms.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
    abs: f64,
    count: u64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
        self.count += 1;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Upper bound on the rounding error of the accumulated value, assuming
    /// the addends themselves are exact.
    pub fn rounding_bound(&self) -> f64 {
        let n = self.count as f64;
        2.0 * f64::EPSILON * self.value().abs() + n * n * f64::EPSILON * f64::EPSILON * self.abs
    }

    /// Combine a partial sum computed elsewhere (e.g. another segment).
    pub fn merge(&mut self, other: &CompensatedSum) {
        let (count, abs) = (self.count, self.abs);
        self.add(other.sum);
        self.add(other.comp);
        self.count = count + other.count;
        self.abs = abs + other.abs;
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

/// Compensated sum over complex addends (independent real and imaginary
/// accumulators).
#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    pub fn rounding_bound(&self) -> f64 {
        self.re.rounding_bound().hypot(self.im.rounding_bound())
    }

    /// Σ|re| + Σ|im| of everything added so far.
    pub fn abs_mass(&self) -> f64 {
        self.re.abs + self.im.abs
    }

    pub fn count(&self) -> u64 {
        self.re.count
    }
}

/// Even-index Bernoulli numbers B₂, B₄, …, B₃₀.
pub const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Bernoulli number Bₖ for 2 ≤ k ≤ 30 (zero for odd k ≥ 3).
pub fn bernoulli(k: usize) -> f64 {
    assert!((2..=30).contains(&k), "bernoulli index {k} out of table range");
    if k % 2 == 1 {
        0.0
    } else {
        BERNOULLI_EVEN[k / 2 - 1]
    }
}

/// ln|Γ(z)| for Re z > 0, via upward recurrence and Stirling's series.
pub fn ln_abs_gamma(z: Complex64) -> f64 {
    debug_assert!(z.re > 0.0);
    let mut shift = 0.0;
    let mut w = z;
    while w.re < 12.0 {
        shift += w.norm().ln();
        w += 1.0;
    }
    let ln_w = w.ln();
    let mut acc = (w - 0.5) * ln_w - w + 0.5 * (2.0 * PI).ln();
    let w2 = w * w;
    let mut wp = w;
    for k in 1..=8 {
        let b = BERNOULLI_EVEN[k - 1];
        let kk = (2 * k) as f64;
        acc += b / (kk * (kk - 1.0) * wp);
        wp *= w2;
    }
    acc.re - shift
}

/// (e^w − 1)/w, continuous at w = 0.
pub fn exp_ratio(w: Complex64) -> Complex64 {
    if w.norm() < 0.5 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..=20 {
            term *= w / k as f64;
            sum += term;
        }
        sum
    } else {
        (w.exp() - 1.0) / w
    }
}
