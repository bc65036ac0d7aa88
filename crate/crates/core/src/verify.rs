//! The acceptance suite: ten numbered criteria, each reduced to a pass/fail
//! verdict with a one-line summary. Shared by the `acceptance` test target
//! and the command-line `verify-all`.

use crate::asymptotics::{log_grid, table_one, TABLE_ROWS};
use crate::error::{Error, Result};
use crate::primes::{chebyshev_theta, nth_prime, prime_pi, shared_table, CheckpointStore, ThetaCurve};
use crate::tauberian::{
    bound_rz1_check, bound_rz2_check, circle_factor_check, g0_two_oracles, newman_contour_residual,
    phi_laplace_identity_residual, pnt_integral_profile, BoundedSignal, ContourSpec,
};
use crate::zeros::{first_n_zeros, PUBLISHED_ORDINATES, RESIDUAL_LIMIT};
use crate::zeta::{
    three_four_one, trig_kernel, trig_square, zeta_direct, zeta_eta_oracle, zeta_floor_integral, zeta_times_pole,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{LN_2, PI};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

/// (x, π(x), Li(x) rounded, x/log x rounded) as published.
pub const PUBLISHED_TABLE: [(u64, u64, u64, u64); 10] = [
    (1_000, 168, 177, 145),
    (10_000, 1_229, 1_245, 1_086),
    (100_000, 9_592, 9_629, 8_686),
    (1_000_000, 78_498, 78_627, 72_382),
    (10_000_000, 664_579, 664_917, 620_421),
    (100_000_000, 5_761_455, 5_762_208, 5_428_681),
    (1_000_000_000, 50_847_534, 50_849_234, 48_254_942),
    (10_000_000_000, 455_052_511, 455_055_614, 434_294_482),
    (100_000_000_000, 4_118_054_813, 4_118_066_400, 3_948_131_654),
    (1_000_000_000_000, 37_607_912_018, 37_607_950_280, 36_191_206_825),
];

pub const DEFAULT_TABLE_MAX: u64 = 1_000_000_000_000;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest table row checked by criterion 1.
    pub table_max: u64,
    pub seed: u64,
    pub checkpoints: Option<CheckpointStore>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { table_max: DEFAULT_TABLE_MAX, seed: 20_240_601, checkpoints: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2}  {}  {:<22} {:>7.2}s  {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.seconds,
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "table reproduction"),
    (2, "critical-line zeros"),
    (3, "zeta cross-methods"),
    (4, "residue at s = 1"),
    (5, "Chebyshev bounds"),
    (6, "3-4-1 suite"),
    (7, "Laplace identity"),
    (8, "Newman machinery"),
    (9, "PNT integral"),
    (10, "squeeze suite"),
];

/// Runs one criterion; evaluation errors count as failures.
pub fn run_criterion(id: u8, config: &VerifyConfig) -> CriterionReport {
    let name = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown", |c| c.1).to_string();
    let start = Instant::now();
    let outcome = match id {
        1 => table_reproduction(config),
        2 => zeros_match(),
        3 => zeta_cross_methods(config.seed),
        4 => residue(),
        5 => chebyshev_bounds(),
        6 => three_four_one_suite(config.seed),
        7 => laplace_identity(),
        8 => newman_machinery(config.seed),
        9 => pnt_integral(),
        10 => squeeze(config),
        _ => Err(Error::domain(format!("no criterion {id}"))),
    };
    let seconds = start.elapsed().as_secs_f64();
    let (passed, detail) = match outcome {
        Ok(v) => (v.passed, v.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionReport { id, name, passed, detail, seconds }
}

pub fn run_all(config: &VerifyConfig) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|&(id, _)| run_criterion(id, config)).collect()
}

pub fn report_table(reports: &[CriterionReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(s, "{}", r.line());
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let _ = writeln!(s, "{passed}/{} criteria passed", reports.len());
    s
}

struct Verdict {
    passed: bool,
    detail: String,
}

/// Collects named sub-checks; the verdict passes only if all do.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn verdict(self) -> Result<Verdict> {
        let passed = self.failures.is_empty();
        let detail = if passed { self.notes.join("; ") } else { format!("failed: {}", self.failures.join("; ")) };
        Ok(Verdict { passed, detail })
    }
}

fn table_reproduction(config: &VerifyConfig) -> Result<Verdict> {
    let rows: Vec<u64> = TABLE_ROWS.iter().copied().filter(|&x| x <= config.table_max).collect();
    let start = Instant::now();
    let mut through_1e9 = Duration::ZERO;
    let mut checks = Checks::default();
    for &x in &rows {
        let row = table_one(&[x], config.checkpoints.as_ref())?[0];
        if x == 1_000_000_000 {
            through_1e9 = start.elapsed();
        }
        let want = PUBLISHED_TABLE.iter().find(|r| r.0 == x).expect("table rows are published");
        let got = (row.x, row.pi, row.li_rounded, row.x_over_logx_rounded);
        checks.check(got == *want, format!("row {x}: got {got:?}, published {want:?}"));
    }
    checks.check(through_1e9 <= Duration::from_secs(60), format!("rows through 1e9 took {through_1e9:?}"));
    checks.note(format!("{} rows match through x = {}", rows.len(), rows.last().copied().unwrap_or(0)));
    if rows.len() < TABLE_ROWS.len() {
        checks.note(format!("rows above {} skipped", config.table_max));
    }
    checks.verdict()
}

fn zeros_match() -> Result<Verdict> {
    let start = Instant::now();
    let zeros = first_n_zeros(20)?;
    let elapsed = start.elapsed();
    let mut checks = Checks::default();
    let mut worst: f64 = 0.0;
    for (z, &t) in zeros.iter().zip(PUBLISHED_ORDINATES.iter()) {
        let gap = (z.t - t).abs();
        worst = worst.max(gap);
        checks.check(gap <= 5e-5, format!("t = {} vs {t}", z.t));
        checks.check(z.residual <= RESIDUAL_LIMIT, format!("residual {:e} at t = {}", z.residual, z.t));
    }
    checks.check(zeros.len() == 20, format!("found {} zeros", zeros.len()));
    checks.check(elapsed <= Duration::from_secs(60), format!("took {elapsed:?}"));
    checks.note(format!("20 zeros, max ordinate gap {worst:.1e}"));
    checks.verdict()
}

fn zeta_cross_methods(seed: u64) -> Result<Verdict> {
    let mut checks = Checks::default();
    let two = Complex64::new(2.0, 0.0);
    let basel = PI * PI / 6.0;
    for r in [zeta_direct(two, 1e-11)?, zeta_floor_integral(two, 1e-12)?, zeta_eta_oracle(two, 1e-12)?] {
        checks.check((r.value - basel).norm() <= 1e-10, format!("{}: zeta(2) off by {:e}", r.method, (r.value - basel).norm()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let s = Complex64::new(rng.gen_range(1.05..3.0), rng.gen_range(-30.0..30.0));
        let a = zeta_direct(s, 1e-6)?;
        let b = zeta_floor_integral(s, 1e-10)?;
        checks.check(a.agrees_with(&b), format!("direct vs floor at {s}"));
        worst = worst.max((a.value - b.value).norm());
    }
    for _ in 0..100 {
        let s = Complex64::new(rng.gen_range(0.1..1.0), rng.gen_range(-30.0..30.0));
        let a = zeta_floor_integral(s, 1e-10)?;
        let b = zeta_eta_oracle(s, 1e-10)?;
        checks.check(a.agrees_with(&b), format!("floor vs eta at {s}"));
        worst = worst.max((a.value - b.value).norm());
    }
    checks.note(format!("zeta(2) by 3 methods within 1e-10; 200 random pairs agree, max gap {worst:.1e}"));
    checks.verdict()
}

fn residue() -> Result<Verdict> {
    let mut checks = Checks::default();
    let mut gaps = Vec::new();
    for k in 1..=6 {
        let s = Complex64::new(1.0 + 10f64.powi(-k), 0.0);
        let z = zeta_times_pole(s, 1e-13)?;
        let gap = (z.value - 1.0).norm();
        checks.check(gap < 10f64.powi(1 - k), format!("k = {k}: |(s-1)zeta(s) - 1| = {gap:e}"));
        gaps.push(format!("{gap:.1e}"));
    }
    checks.note(format!("|(s-1)zeta(s) - 1| = [{}]", gaps.join(", ")));
    checks.verdict()
}

fn chebyshev_bounds() -> Result<Verdict> {
    let mut checks = Checks::default();
    let table = shared_table(100_000_000)?;
    let curve = ThetaCurve::new(table);
    let mut worst: f64 = 0.0;
    for i in 0..10_000 {
        let x = 2f64 * (5e7f64).powf(i as f64 / 9_999.0);
        let theta = curve.theta(x)?;
        worst = worst.max(theta / x);
        checks.check(theta <= 3.0 * x, format!("theta({x}) = {theta} > 3x"));
    }
    let mut gap_ratio: f64 = 0.0;
    for n in 1..=1_000_000u64 {
        let gap = curve.theta((2 * n) as f64)? - curve.theta(n as f64)?;
        let bound = 2.0 * n as f64 * LN_2;
        gap_ratio = gap_ratio.max(gap / bound);
        if gap > bound {
            checks.check(false, format!("theta(2n) - theta(n) exceeds 2n log 2 at n = {n}"));
            break;
        }
    }
    let top = chebyshev_theta(1e8)?;
    let ratio = top.theta / 1e8;
    checks.check((0.98..=1.02).contains(&ratio), format!("theta(1e8)/1e8 = {ratio}"));
    checks.check(4.0 * LN_2 < 3.0, "4 log 2 < 3");
    checks.note(format!(
        "max theta(x)/x = {worst:.4}; max doubling gap / (2n log 2) = {gap_ratio:.4}; theta(1e8)/1e8 = {ratio:.6}"
    ));
    checks.verdict()
}

fn three_four_one_suite(seed: u64) -> Result<Verdict> {
    let mut checks = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x341);
    let mut identity_gap: f64 = 0.0;
    for _ in 0..1_000_000 {
        let x: f64 = rng.gen_range(-1000.0..1000.0);
        identity_gap = identity_gap.max((trig_kernel(x) - trig_square(x)).abs());
    }
    checks.check(identity_gap <= 1e-12, format!("trig identity gap {identity_gap:e}"));
    let mut lowest = f64::INFINITY;
    for sigma in [1.001, 1.01, 1.1] {
        for i in 0..=500 {
            let t = 0.1 * i as f64;
            let v = three_four_one(sigma, t)?;
            lowest = lowest.min(v);
            checks.check(v >= -1e-6, format!("three_four_one({sigma}, {t}) = {v}"));
        }
    }
    let mut min_abs = f64::INFINITY;
    let mut at = 0.0;
    for i in 0..=7990 {
        let t = 0.1 + 0.01 * i as f64;
        let z = zeta_floor_integral(Complex64::new(1.0, t), 1e-10)?.value.norm();
        if z < min_abs {
            min_abs = z;
            at = t;
        }
    }
    checks.check(min_abs > 0.01, format!("min |zeta(1+it)| = {min_abs} at t = {at}"));
    checks.note(format!(
        "identity gap {identity_gap:.1e}; min 3-4-1 value {lowest:.3e}; min |zeta(1+it)| = {min_abs:.4} at t = {at:.2}"
    ));
    checks.verdict()
}

fn laplace_identity() -> Result<Verdict> {
    let mut checks = Checks::default();
    let mut notes = Vec::new();
    for s in [Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0), Complex64::new(2.0, 5.0)] {
        let r = phi_laplace_identity_residual(s, 1_000_000)?;
        checks.check(r.within_bound(), format!("s = {s}: residual {:e} > bound {:e}", r.residual, r.tail_bound + r.phi_err));
        notes.push(format!("s = {s}: {:.1e} <= {:.1e}", r.residual, r.tail_bound + r.phi_err));
    }
    checks.note(notes.join(", "));
    checks.verdict()
}

fn newman_machinery(seed: u64) -> Result<Verdict> {
    let mut checks = Checks::default();
    let mut worst: f64 = 0.0;
    let mut rejected = 0;
    for signal in BoundedSignal::catalog() {
        let poles = signal.poles().unwrap_or_default();
        for r in [1.0, 2.0] {
            for delta in [r / 4.0, r / 2.0] {
                let spec = ContourSpec::new(r, delta, ContourSpec::DEFAULT_POINTS)?;
                let blocked = poles.iter().any(|&p| p.norm() <= r && p.re >= -delta);
                for t in [1.0, 5.0, 10.0] {
                    match newman_contour_residual(&signal, &spec, t) {
                        Ok(res) => {
                            checks.check(!blocked, format!("{}: pole inside C_R not reported", signal.description));
                            checks.check(res <= 1e-6, format!("{} R={r} delta={delta} T={t}: residual {res:e}", signal.description));
                            worst = worst.max(res);
                        }
                        Err(Error::Contour(_)) if blocked => rejected += 1,
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4e);
    let mut signals = BoundedSignal::catalog();
    signals.push(random_steps(&mut rng)?);
    for signal in &signals {
        for _ in 0..100 {
            let t = rng.gen_range(0.1..20.0);
            let z = Complex64::new(rng.gen_range(0.01..3.0), rng.gen_range(-20.0..20.0));
            checks.check(bound_rz1_check(signal, z, t)?, format!("right bound fails for {} at z = {z}, T = {t}", signal.description));
            let z = Complex64::new(rng.gen_range(-3.0..-0.01), rng.gen_range(-20.0..20.0));
            checks.check(bound_rz2_check(signal, z, t)?, format!("left bound fails for {} at z = {z}, T = {t}", signal.description));
        }
    }
    for r in [1.0, 5.0, 10.0] {
        for _ in 0..1000 {
            let z = Complex64::from_polar(r, rng.gen_range(-PI..PI));
            checks.check(circle_factor_check(z, r)?, format!("circle factor fails at {z}"));
        }
    }
    checks.note(format!(
        "max contour residual {worst:.1e} ({rejected} enclosed-pole cases rejected); bounds hold on {} samples; circle identity on 3000 points",
        signals.len() * 200
    ));
    checks.verdict()
}

/// A step signal with ten random values in [−1, 1] on random edges in [0, 12].
pub fn random_steps(rng: &mut impl Rng) -> Result<BoundedSignal> {
    let mut edges: Vec<f64> = (0..10).map(|_| rng.gen_range(0.0..12.0)).collect();
    edges.push(0.0);
    edges.sort_by(f64::total_cmp);
    edges.dedup();
    let values = (1..edges.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    BoundedSignal::steps(edges, values)
}

fn pnt_integral() -> Result<Verdict> {
    let mut checks = Checks::default();
    let xs: Vec<f64> = (2..=8).map(|k| 10f64.powi(k)).collect();
    let profile = pnt_integral_profile(&xs, 100_000_000)?;
    let abs: Vec<f64> = profile.values().iter().map(|v| v.abs()).collect();
    let mut envelope = abs.clone();
    for k in (0..envelope.len() - 1).rev() {
        envelope[k] = envelope[k].max(envelope[k + 1]);
    }
    checks.check(envelope.windows(2).all(|w| w[1] <= w[0]), "envelope of |I(10^k)| increases");
    checks.check(envelope[envelope.len() - 1] < envelope[0], "envelope of |I(10^k)| does not decrease");
    let g0 = g0_two_oracles(100_000_000)?;
    checks.check(g0.difference() <= 1e-2, format!("g(0) routes differ by {:e}", g0.difference()));
    checks.note(format!(
        "|I(10^k)|, k=2..8: [{}]; g(0) = {:.6} (tail) vs {:.6} (Phi), gap {:.1e}",
        abs.iter().map(|v| format!("{v:.1e}")).collect::<Vec<_>>().join(", "),
        g0.tail_route,
        g0.phi_route,
        g0.difference()
    ));
    checks.verdict()
}

fn squeeze(config: &VerifyConfig) -> Result<Verdict> {
    let mut checks = Checks::default();
    let curve = ThetaCurve::new(shared_table(100_000_000)?);
    for x in log_grid(2, 100_000_000, 40) {
        let xf = x as f64;
        let theta = curve.theta(xf)?;
        let pi = curve.pi(xf)? as f64;
        checks.check(theta <= pi * xf.ln() * (1.0 + 1e-12), format!("theta({x}) > pi(x) log x"));
    }
    let mut pnt_range = (f64::INFINITY, f64::NEG_INFINITY);
    let mut grid = log_grid(100_000, 100_000_000, 10);
    grid.extend([1_000_000_000, 10_000_000_000].iter().filter(|&&x| x <= config.table_max.max(100_000_000)));
    for x in grid {
        let pi = if x <= curve.limit() { curve.pi(x as f64)? } else { prime_pi(x)?.pi };
        let xf = x as f64;
        let r = pi as f64 * xf.ln() / xf;
        pnt_range = (pnt_range.0.min(r), pnt_range.1.max(r));
        checks.check((0.9..=1.2).contains(&r), format!("pi(x) log x / x = {r} at x = {x}"));
    }
    let mut pn_range = (f64::INFINITY, f64::NEG_INFINITY);
    for n in log_grid(100_000, 5_000_000, 10) {
        let nf = n as f64;
        let r = nth_prime(n)? as f64 / (nf * nf.ln());
        pn_range = (pn_range.0.min(r), pn_range.1.max(r));
        checks.check((0.9..=1.2).contains(&r), format!("p_n/(n log n) = {r} at n = {n}"));
    }
    checks.note(format!(
        "pi(x) log x / x in [{:.4}, {:.4}]; p_n/(n log n) in [{:.4}, {:.4}]",
        pnt_range.0, pnt_range.1, pn_range.0, pn_range.1
    ));
    checks.verdict()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_rows_line_up_with_table_rows() {
        for (row, x) in PUBLISHED_TABLE.iter().zip(TABLE_ROWS) {
            assert_eq!(row.0, x);
        }
    }

    #[test]
    fn report_line_shape() {
        let r = CriterionReport { id: 4, name: "residue at s = 1".into(), passed: true, detail: "ok".into(), seconds: 0.5 };
        assert!(r.line().starts_with("criterion  4  PASS  residue at s = 1"));
        assert!(report_table(&[r]).ends_with("1/1 criteria passed\n"));
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(11, &VerifyConfig::default()).passed);
    }
}
