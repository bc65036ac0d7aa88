//! Zeros of ζ on the critical line Re s = 1/2, up to height 80.
//!
//! [`scan_critical_line`] samples |ζ(1/2 + it)|² on a grid and brackets its
//! small local minima; [`refine_zero`] runs Newton's method on
//! t ↦ ζ(1/2 + it) from the bracket midpoint.

use crate::error::{Error, Result};
use crate::zeta::{zeta_eta_oracle, zeta_floor_integral};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Ordinates of the first twenty zeros on the critical line, to four
/// decimals.
pub const PUBLISHED_ORDINATES: [f64; 20] = [
    14.1347, 21.0220, 25.0109, 30.4249, 32.9351, 37.5862, 40.9187, 43.3271, 48.0052, 49.7738, 52.9703, 56.4462,
    59.3470, 60.8318, 65.1125, 67.0798, 69.5464, 72.0672, 75.7047, 77.1448,
];

/// Upper end of the window [`first_n_zeros`] scans.
pub const COVERAGE_LIMIT: f64 = 80.0;
pub const SCAN_STEP: f64 = 0.05;
/// Grid minima of |ζ|² below this become brackets.
pub const SCAN_THRESHOLD: f64 = 0.25;
pub const MAX_NEWTON_ITERATIONS: usize = 50;
/// Largest |ζ(1/2 + it)| accepted at a refined zero.
pub const RESIDUAL_LIMIT: f64 = 1e-8;

const EVAL_TOL: f64 = 1e-13;
const DIFF_STEP: f64 = 1e-5;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub t_lo: f64,
    pub t_hi: f64,
}

impl Bracket {
    pub fn contains(&self, t: f64) -> bool {
        self.t_lo < t && t < self.t_hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.t_lo + self.t_hi)
    }
}

/// A refined zero 1/2 + it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub t: f64,
    /// |ζ(1/2 + it)| at the refined ordinate.
    pub residual: f64,
    pub bracket: Bracket,
}

fn critical(t: f64) -> Result<Complex64> {
    Ok(zeta_eta_oracle(Complex64::new(0.5, t), EVAL_TOL)?.value)
}

/// Brackets around grid minima of |ζ(1/2 + it)|² below [`SCAN_THRESHOLD`]
/// on t_lo ≤ t ≤ t_hi.
///
/// Grid points are t_lo + k·step. A bracket spans the two neighbors of an
/// interior grid minimum, so each holds one candidate.
///
/// ```
/// let b = pntlab::zeros::scan_critical_line(10.0, 16.0, 0.05).unwrap();
/// assert_eq!(b.len(), 1);
/// assert!(b[0].contains(14.1347));
/// ```
pub fn scan_critical_line(t_lo: f64, t_hi: f64, step: f64) -> Result<Vec<Bracket>> {
    if !(t_lo > 0.0 && t_lo < t_hi && t_hi.is_finite()) {
        return Err(Error::domain(format!("scan needs 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]")));
    }
    if !(step > 0.0 && step <= 0.1) {
        return Err(Error::domain(format!("scan step must lie in (0, 0.1], got {step}")));
    }
    let count = ((t_hi - t_lo) / step + 1e-9).floor() as usize + 1;
    let grid: Vec<f64> = (0..count).map(|k| t_lo + k as f64 * step).collect();
    let values = grid.iter().map(|&t| Ok(critical(t)?.norm_sqr())).collect::<Result<Vec<f64>>>()?;
    let mut out = Vec::new();
    for k in 1..count.saturating_sub(1) {
        let v = values[k];
        if v < SCAN_THRESHOLD && v < values[k - 1] && v <= values[k + 1] {
            out.push(Bracket { t_lo: grid[k - 1], t_hi: grid[k + 1] });
        }
    }
    Ok(out)
}

/// Newton's method on F(t) = ζ(1/2 + it), stepping t ← t − Re(F/F′) with F′
/// from a central difference.
pub fn refine_zero(bracket: Bracket) -> Result<ZeroRecord> {
    let mut t = bracket.midpoint();
    let mut history = Vec::new();
    for iteration in 1..=MAX_NEWTON_ITERATIONS {
        let f = critical(t)?;
        let df = (critical(t + DIFF_STEP)? - critical(t - DIFF_STEP)?) / (2.0 * DIFF_STEP);
        if df.norm() == 0.0 {
            return Err(Error::Refinement { iterations: iteration, detail: format!("flat derivative at t = {t}") });
        }
        let delta = (f / df).re;
        t -= delta;
        history.push(t);
        if !bracket.contains(t) {
            return Err(Error::Refinement {
                iterations: iteration,
                detail: format!(
                    "iterate left the bracket ({}, {}); path {history:?}",
                    bracket.t_lo, bracket.t_hi
                ),
            });
        }
        if delta.abs() < 1e-12 * t.max(1.0) {
            let residual = critical(t)?.norm();
            if residual <= RESIDUAL_LIMIT {
                return Ok(ZeroRecord { t, residual, bracket });
            }
            return Err(Error::Refinement {
                iterations: iteration,
                detail: format!("converged to t = {t} with residual {residual:e}, not a zero"),
            });
        }
    }
    Err(Error::Refinement {
        iterations: MAX_NEWTON_ITERATIONS,
        detail: format!("no convergence; last iterates {:?}", &history[history.len().saturating_sub(5)..]),
    })
}

/// The first `n ≤ 20` zeros above the real axis, in increasing order.
///
/// Brackets whose refinement fails are discarded as false candidates. Every
/// accepted zero is also checked with the floor-integral evaluator.
pub fn first_n_zeros(n: usize) -> Result<Vec<ZeroRecord>> {
    if n > PUBLISHED_ORDINATES.len() {
        return Err(Error::Coverage(format!(
            "first_n_zeros covers t <= {COVERAGE_LIMIT} (20 zeros); asked for {n}"
        )));
    }
    let mut out: Vec<ZeroRecord> = Vec::with_capacity(n);
    if n == 0 {
        return Ok(out);
    }
    for bracket in scan_critical_line(1.0, COVERAGE_LIMIT, SCAN_STEP)? {
        let record = match refine_zero(bracket) {
            Ok(r) => r,
            Err(Error::Refinement { .. }) => continue,
            Err(e) => return Err(e),
        };
        if out.last().is_some_and(|prev: &ZeroRecord| (record.t - prev.t).abs() < 1e-6) {
            continue;
        }
        let check = zeta_floor_integral(Complex64::new(0.5, record.t), EVAL_TOL)?;
        if check.value.norm() > RESIDUAL_LIMIT + check.err {
            return Err(Error::Refinement {
                iterations: 0,
                detail: format!("floor-integral check rejects t = {}: |ζ| = {:e}", record.t, check.value.norm()),
            });
        }
        out.push(record);
        if out.len() == n {
            return Ok(out);
        }
    }
    Err(Error::Coverage(format!("found only {} zeros below t = {COVERAGE_LIMIT}", out.len())))
}

/// CSV with header `index,t,residual`; ordinates to 10 decimals.
pub fn zeros_csv(records: &[ZeroRecord]) -> String {
    let mut s = String::from("index,t,residual\n");
    for (i, r) in records.iter().enumerate() {
        let _ = writeln!(s, "{},{:.10},{:.3e}", i + 1, r.t, r.residual);
    }
    s
}
