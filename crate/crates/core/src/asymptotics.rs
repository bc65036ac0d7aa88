//! The logarithmic integral, the π(x) comparison table, and ratio series
//! that track the prime number theorem numerically.

use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;
use crate::primes::{for_each_prime, nth_prime, prime_pi, CheckpointStore, PiCheckpoint};
use crate::quad::adaptive_simpson_pieces;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// The ten abscissas 10³, 10⁴, …, 10¹² of the comparison table.
pub const TABLE_ROWS: [u64; 10] = [
    1_000,
    10_000,
    100_000,
    1_000_000,
    10_000_000,
    100_000_000,
    1_000_000_000,
    10_000_000_000,
    100_000_000_000,
    1_000_000_000_000,
];

/// Absolute tolerance used for Li when the result will be rounded.
pub const TABLE_LI_TOL: f64 = 1e-3;

/// Relative tolerance for Li elsewhere.
pub const LI_RELATIVE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiValue {
    pub x: f64,
    pub li: f64,
    pub quad_err: f64,
}

/// Li(x) = ∫₂ˣ dt / log t to absolute tolerance `tol`.
///
/// Adaptive Simpson on pieces split at powers of ten, each piece getting a
/// share of `tol` proportional to its length.
///
/// ```
/// let v = pntlab::asymptotics::li(1000.0, 1e-6).unwrap();
/// assert_eq!(v.li.round(), 177.0);
/// ```
pub fn li(x: f64, tol: f64) -> Result<LiValue> {
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::domain(format!("Li(x) needs x >= 2, got {x}")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut points = vec![2.0];
    let mut decade = 10.0;
    while decade < x {
        points.push(decade);
        decade *= 10.0;
    }
    if x > 2.0 {
        points.push(x);
    }
    let q = adaptive_simpson_pieces(|t: f64| 1.0 / t.ln(), &points, tol)?;
    Ok(LiValue { x, li: q.value, quad_err: q.err })
}

/// Li(x) / (x / log x).
pub fn li_over_x_logx(x: f64) -> Result<f64> {
    if !(x > std::f64::consts::E) {
        return Err(Error::domain(format!("li_over_x_logx needs x > e, got {x}")));
    }
    let scale = x / x.ln();
    Ok(li(x, LI_RELATIVE_TOL * scale)?.li / scale)
}

/// Round half away from zero.
pub fn round_half_away(v: f64) -> u64 {
    v.round() as u64
}

/// One row of the π(x), Li(x), x/log x comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub x: u64,
    pub pi: u64,
    pub li_rounded: u64,
    pub x_over_logx_rounded: u64,
}

/// Comparison rows for each x, in input order.
///
/// ```
/// let rows = pntlab::asymptotics::table_one(&[10_000], None).unwrap();
/// assert_eq!((rows[0].pi, rows[0].li_rounded, rows[0].x_over_logx_rounded), (1229, 1245, 1086));
/// ```
pub fn table_one(rows: &[u64], checkpoints: Option<&CheckpointStore>) -> Result<Vec<TableRow>> {
    rows.iter()
        .map(|&x| {
            if x < 2 {
                return Err(Error::domain(format!("table rows need x >= 2, got {x}")));
            }
            let pi = cached_pi(x, checkpoints)?.pi;
            let xf = x as f64;
            let li_value = li(xf, TABLE_LI_TOL)?.li;
            Ok(TableRow {
                x,
                pi,
                li_rounded: round_half_away(li_value),
                x_over_logx_rounded: round_half_away(xf / xf.ln()),
            })
        })
        .collect()
}

/// π(x), read from `store` when present there and appended to it otherwise.
pub fn cached_pi(x: u64, store: Option<&CheckpointStore>) -> Result<PiCheckpoint> {
    if let Some(store) = store {
        if let Some(hit) = store.lookup(x)? {
            return Ok(hit);
        }
        let fresh = prime_pi(x)?;
        store.append(&fresh)?;
        return Ok(fresh);
    }
    prime_pi(x)
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("x,pi,li_rounded,x_over_logx_rounded\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{}", r.x, r.pi, r.li_rounded, r.x_over_logx_rounded);
    }
    s
}

/// A named ratio sampled on an increasing grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioSeries {
    pub name: String,
    pub grid: Vec<f64>,
    pub ratios: Vec<f64>,
}

impl RatioSeries {
    fn new(name: &str, grid: Vec<f64>, ratios: Vec<f64>) -> Result<Self> {
        if let Some(i) = ratios.iter().position(|r| !r.is_finite()) {
            return Err(Error::Numeric(format!("{name} is not finite at x = {}", grid[i])));
        }
        Ok(Self { name: name.to_string(), grid, ratios })
    }

    pub fn last(&self) -> Option<(f64, f64)> {
        Some((*self.grid.last()?, *self.ratios.last()?))
    }

    /// Two-column CSV `x,<name>`.
    pub fn to_csv(&self) -> String {
        let mut s = format!("x,{}\n", self.name);
        for (x, r) in self.grid.iter().zip(&self.ratios) {
            let _ = writeln!(s, "{x},{r:.12}");
        }
        s
    }
}

fn check_grid<T: PartialOrd + Copy + std::fmt::Display>(grid: &[T], min: T) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::domain("ratio grid is empty"));
    }
    if grid[0] < min {
        return Err(Error::domain(format!("ratio grid must start at >= {min}, got {}", grid[0])));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("ratio grid must be strictly increasing"));
    }
    Ok(())
}

/// About `per_decade` log-spaced integers from `lo` to `hi`, deduplicated.
pub fn log_grid(lo: u64, hi: u64, per_decade: u32) -> Vec<u64> {
    let (a, b) = ((lo.max(1) as f64).log10(), (hi.max(1) as f64).log10());
    let steps = ((b - a) * per_decade as f64).ceil().max(1.0) as u32;
    let mut out: Vec<u64> = (0..=steps)
        .map(|i| 10f64.powf(a + (b - a) * i as f64 / steps as f64).round() as u64)
        .map(|x| x.clamp(lo, hi))
        .collect();
    out.dedup();
    out
}

/// π(x) log x / x.
pub fn pnt_ratio_series(grid: &[u64], checkpoints: Option<&CheckpointStore>) -> Result<RatioSeries> {
    check_grid(grid, 2)?;
    let mut ratios = Vec::with_capacity(grid.len());
    for &x in grid {
        let xf = x as f64;
        ratios.push(cached_pi(x, checkpoints)?.pi as f64 * xf.ln() / xf);
    }
    RatioSeries::new("pi_log_x_over_x", grid.iter().map(|&x| x as f64).collect(), ratios)
}

/// θ(x)/x, from one streaming pass over the primes up to the last grid point.
pub fn theta_ratio_series(grid: &[f64]) -> Result<RatioSeries> {
    check_grid(grid, 2.0)?;
    let hi = grid[grid.len() - 1].floor() as u64;
    let mut sum = CompensatedSum::new();
    let mut ratios = Vec::with_capacity(grid.len());
    let mut next = 0;
    for_each_prime(0, hi, |p| {
        while next < grid.len() && (p as f64) > grid[next] {
            ratios.push(sum.value() / grid[next]);
            next += 1;
        }
        sum.add((p as f64).ln());
    });
    while next < grid.len() {
        ratios.push(sum.value() / grid[next]);
        next += 1;
    }
    RatioSeries::new("theta_over_x", grid.to_vec(), ratios)
}

/// pₙ / (n log n).
pub fn pn_ratio_series(n_grid: &[u64]) -> Result<RatioSeries> {
    check_grid(n_grid, 2)?;
    let mut ratios = Vec::with_capacity(n_grid.len());
    for &n in n_grid {
        let nf = n as f64;
        ratios.push(nth_prime(n)? as f64 / (nf * nf.ln()));
    }
    RatioSeries::new("p_n_over_n_log_n", n_grid.iter().map(|&n| n as f64).collect(), ratios)
}

/// Li(x) / (x / log x) on a grid of x > e.
pub fn li_ratio_series(grid: &[f64]) -> Result<RatioSeries> {
    check_grid(grid, std::f64::consts::E)?;
    let ratios = grid.iter().map(|&x| li_over_x_logx(x)).collect::<Result<Vec<_>>>()?;
    RatioSeries::new("li_over_x_over_log_x", grid.to_vec(), ratios)
}

/// (α − 1 − log α, 1 − β + log β) for α > 1 and 0 < β < 1; the first is
/// positive and the second negative.
pub fn sandwich_positivity(alpha: f64, beta: f64) -> Result<(f64, f64)> {
    if !(alpha > 1.0 && alpha.is_finite()) {
        return Err(Error::domain(format!("alpha must exceed 1, got {alpha}")));
    }
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::domain(format!("beta must lie in (0, 1), got {beta}")));
    }
    let a = alpha - 1.0;
    let upper = a - a.ln_1p();
    let b = beta - 1.0;
    let lower = -b + b.ln_1p();
    Ok((upper, lower))
}

/// |π(x) − Li(x)| / (√x log x) with Li rounded to the nearest integer.
pub fn li_error_normalization(grid: &[u64], checkpoints: Option<&CheckpointStore>) -> Result<RatioSeries> {
    check_grid(grid, 2)?;
    let mut ratios = Vec::with_capacity(grid.len());
    for &x in grid {
        let xf = x as f64;
        let pi = cached_pi(x, checkpoints)?.pi as f64;
        let li_rounded = li(xf, TABLE_LI_TOL)?.li.round();
        ratios.push((pi - li_rounded).abs() / (xf.sqrt() * xf.ln()));
    }
    RatioSeries::new("li_error_over_sqrt_x_log_x", grid.iter().map(|&x| x as f64).collect(), ratios)
}
