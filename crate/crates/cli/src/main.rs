//! `pntlab`: prime tables, zeta evaluations, Tauberian demos and the
//! acceptance suite from the command line.
//!
//! Exit codes: 0 success, 1 acceptance failure, 2 usage or invalid input,
//! 3 resource or tolerance limit, 4 numerical failure, 5 I/O or file format.

mod parse;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use pntlab::asymptotics::{
    li_ratio_series, log_grid, pn_ratio_series, pnt_ratio_series, table_csv, table_one, theta_ratio_series,
    RatioSeries, TABLE_ROWS,
};
use pntlab::primes::CheckpointStore;
use pntlab::tauberian::{
    g0_two_oracles, newman_convergence_demo, pnt_integral_profile, BoundedSignal, ConvergenceSeries, ThetaStep,
};
use pntlab::verify::{run_criterion, VerifyConfig, CRITERIA};
use pntlab::zeros::{first_n_zeros, zeros_csv};
use pntlab::zeta::{
    euler_product_partial, zeta_direct, zeta_eta_oracle, zeta_floor_integral, EvalRecord, EvalResult,
};
use pntlab::Error;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

/// θ(x) is summed over every prime up to x; beyond this the run takes minutes.
const THETA_STREAM_CAP: u64 = 10_000_000_000;

#[derive(Parser)]
#[command(name = "pntlab", version, about = "Numerical companion to the prime number theorem")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Directory caching exact π(x) values between runs.
    #[arg(long, global = true, env = "PNTLAB_CHECKPOINTS")]
    checkpoint_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZetaMethod {
    Direct,
    Floor,
    Eta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ratio {
    /// θ(x)/x
    Theta,
    /// π(x) log x / x
    Pnt,
    /// Li(x) / (x / log x)
    Li,
    /// p_n / (n log n), indexed by n
    Pn,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Signal {
    /// e^{-t}
    Exp1,
    /// e^{-2t}
    Exp2,
    /// cos(2t) e^{-1.5t}
    Damped,
    /// θ(e^t) e^{-t} - 1
    Prime,
}

#[derive(Subcommand)]
enum Command {
    /// π(x), rounded Li(x) and rounded x/log x at x = 10^3, 10^4, ...
    PiTable {
        /// Largest row.
        #[arg(long, value_parser = parse::count, default_value = "1e9")]
        max: u64,
    },
    /// Ordinates of the first zeros on the critical line.
    Zeros {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=20), default_value_t = 20)]
        count: u64,
    },
    /// ζ(s) with an error bound.
    ZetaEval {
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        s: Complex64,
        #[arg(long, value_parser = parse::positive, default_value = "1e-10")]
        tol: f64,
        /// Defaults to the floor-integral continuation.
        #[arg(long, value_enum)]
        method: Option<ZetaMethod>,
    },
    /// Partial Euler products over p ≤ N for N doubling up to --max.
    EulerProduct {
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        s: Complex64,
        #[arg(long, value_parser = parse::count, default_value = "1e6")]
        max: u64,
    },
    /// A prime-counting ratio on a logarithmic grid.
    ThetaRatio {
        #[arg(long, value_parser = parse::count, default_value = "1e8")]
        max: u64,
        #[arg(long, value_enum, default_value_t = Ratio::Theta)]
        ratio: Ratio,
        /// Grid points per decade.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1000), default_value_t = 10)]
        count: u32,
    },
    /// |g_T(0) − g(0)| as T grows.
    TauberDemo {
        #[arg(long, value_enum, default_value_t = Signal::Prime)]
        signal: Signal,
        /// Prime cutoff for `--signal prime`.
        #[arg(long, value_parser = parse::count, default_value = "1e8")]
        max: u64,
    },
    /// I(x) = ∫_x^∞ (θ(t) − t)/t² dt at x = 10^k and the two values of g(0).
    PntTail {
        #[arg(long, value_parser = parse::count, default_value = "1e8")]
        max: u64,
    },
    /// The acceptance suite; exits 1 if any criterion fails.
    VerifyAll {
        /// Largest table row checked.
        #[arg(long, value_parser = parse::count, default_value = "1e12")]
        max: u64,
        /// Run only these criteria.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=10))]
        criterion: Vec<u8>,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
}

enum Failure {
    Acceptance(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) | Error::Pole(_) | Error::Contour(_) => 2,
        Error::Resource { .. } | Error::Tolerance { .. } | Error::Coverage(_) => 3,
        Error::Refinement { .. } | Error::Numeric(_) => 4,
        Error::Io(_) | Error::Json(_) | Error::Checkpoint { .. } => 5,
    }
}

/// The rendered report plus whether the run counts as a failure.
struct Report {
    csv: String,
    json: Value,
    failed: Option<String>,
}

impl Report {
    fn ok(csv: String, json: Value) -> Self {
        Self { csv, json, failed: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Acceptance(msg)) => {
            eprintln!("pntlab: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("pntlab: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let store = cli.checkpoint_dir.as_ref().map(CheckpointStore::in_dir);
    let report = match &cli.command {
        Command::PiTable { max } => pi_table(*max, store.as_ref())?,
        Command::Zeros { count } => zeros(*count as usize)?,
        Command::ZetaEval { s, tol, method } => zeta_eval(*s, *tol, *method)?,
        Command::EulerProduct { s, max } => euler_product(*s, *max)?,
        Command::ThetaRatio { max, ratio, count } => theta_ratio(*max, *ratio, *count, store.as_ref())?,
        Command::TauberDemo { signal, max } => tauber_demo(*signal, *max)?,
        Command::PntTail { max } => pnt_tail(*max)?,
        Command::VerifyAll { max, criterion, seed } => verify_all(*max, criterion, *seed, store)?,
    };
    let text = match cli.format {
        Format::Csv => report.csv,
        Format::Json => {
            let mut body = serde_json::to_string_pretty(&report.json).map_err(Error::from)?;
            body.push('\n');
            body
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(Error::from)?,
        None => print!("{text}"),
    }
    match report.failed {
        Some(msg) => Err(Failure::Acceptance(msg)),
        None => Ok(()),
    }
}

fn envelope(command: &str, body: Value) -> Value {
    let mut v = json!({ "schema": 1, "command": command });
    if let (Value::Object(out), Value::Object(extra)) = (&mut v, body) {
        out.extend(extra);
    }
    v
}

fn pi_table(max: u64, store: Option<&CheckpointStore>) -> Result<Report, Error> {
    let xs: Vec<u64> = TABLE_ROWS.iter().copied().filter(|&x| x <= max).collect();
    if xs.is_empty() {
        return Err(Error::Domain(format!("--max {max} is below the first row {}", TABLE_ROWS[0])));
    }
    let rows = table_one(&xs, store)?;
    Ok(Report::ok(table_csv(&rows), envelope("pi-table", json!({ "rows": rows }))))
}

fn zeros(count: usize) -> Result<Report, Error> {
    let found = first_n_zeros(count)?;
    Ok(Report::ok(zeros_csv(&found), envelope("zeros", json!({ "zeros": found }))))
}

fn zeta_eval(s: Complex64, tol: f64, method: Option<ZetaMethod>) -> Result<Report, Error> {
    let r: EvalResult = match method.unwrap_or(ZetaMethod::Floor) {
        ZetaMethod::Direct => zeta_direct(s, tol)?,
        ZetaMethod::Floor => zeta_floor_integral(s, tol)?,
        ZetaMethod::Eta => zeta_eta_oracle(s, tol)?,
    };
    if r.err > tol {
        return Err(Error::Tolerance { requested: tol, achievable: r.err, detail: format!("{} at s = {s}", r.method) });
    }
    let rec = EvalRecord::new(s, &r);
    let csv = format!(
        "s_re,s_im,value_re,value_im,err,method\n{},{},{:.15},{:.15},{:.3e},{}\n",
        rec.s_re, rec.s_im, rec.value_re, rec.value_im, rec.err, rec.method
    );
    Ok(Report::ok(csv, envelope("zeta-eval", json!({ "result": rec }))))
}

fn euler_product(s: Complex64, max: u64) -> Result<Report, Error> {
    let reference = zeta_floor_integral(s, 1e-13)?;
    let mut csv = String::from("N,value_re,value_im,err,gap\n");
    let mut rows = Vec::new();
    let mut n = 10u64;
    loop {
        let n_here = n.min(max);
        let p = euler_product_partial(s, n_here)?;
        let gap = (p.value - reference.value).norm();
        let _ = writeln!(csv, "{n_here},{:.15},{:.15},{:.3e},{gap:.3e}", p.value.re, p.value.im, p.err);
        rows.push(json!({ "N": n_here, "value_re": p.value.re, "value_im": p.value.im, "err": p.err, "gap": gap }));
        if n_here == max {
            break;
        }
        n *= 2;
    }
    let body = json!({ "s_re": s.re, "s_im": s.im, "zeta": EvalRecord::new(s, &reference), "rows": rows });
    Ok(Report::ok(csv, envelope("euler-product", body)))
}

fn theta_ratio(max: u64, ratio: Ratio, per_decade: u32, store: Option<&CheckpointStore>) -> Result<Report, Error> {
    let lo = match ratio {
        Ratio::Li => 1_000,
        _ => 10,
    };
    if max <= lo {
        return Err(Error::Domain(format!("--max must exceed {lo}, got {max}")));
    }
    if ratio == Ratio::Theta && max > THETA_STREAM_CAP {
        return Err(Error::Resource { what: "streamed θ(x) argument", needed: max, budget: THETA_STREAM_CAP });
    }
    let grid = log_grid(lo, max, per_decade);
    let as_f64 = || grid.iter().map(|&x| x as f64).collect::<Vec<_>>();
    let series: RatioSeries = match ratio {
        Ratio::Theta => theta_ratio_series(&as_f64())?,
        Ratio::Pnt => pnt_ratio_series(&grid, store)?,
        Ratio::Li => li_ratio_series(&as_f64())?,
        Ratio::Pn => pn_ratio_series(&grid)?,
    };
    Ok(Report::ok(series.to_csv(), envelope("theta-ratio", json!({ "series": series }))))
}

fn tauber_demo(signal: Signal, max: u64) -> Result<Report, Error> {
    let (series, g0): (ConvergenceSeries, Option<f64>) = match signal {
        Signal::Prime => {
            if max < 1_000 {
                return Err(Error::Domain(format!("--max must be at least 1000, got {max}")));
            }
            let g0 = g0_two_oracles(max)?.tail_route;
            let step = Arc::new(ThetaStep::new(max)?);
            let horizon = step.horizon();
            let f = BoundedSignal::prime_deviation(step);
            let grid: Vec<f64> = (0..=40).map(|k| 100f64.ln() + (horizon - 100f64.ln()) * k as f64 / 40.0).collect();
            (newman_convergence_demo(&f, Some(g0), &grid)?, Some(g0))
        }
        other => {
            let f = match other {
                Signal::Exp1 => BoundedSignal::exponential(1.0),
                Signal::Exp2 => BoundedSignal::exponential(2.0),
                _ => BoundedSignal::damped_cosine(1.5, 2.0),
            };
            let grid: Vec<f64> = (1..=40).map(|k| 0.5 * k as f64).collect();
            (newman_convergence_demo(&f, None, &grid)?, None)
        }
    };
    let body = json!({
        "g0": g0,
        "envelope_decreases": series.envelope_decreases(),
        "T": series.t,
        "abs_error": series.abs_error,
    });
    Ok(Report::ok(series.to_csv(), envelope("tauber-demo", body)))
}

fn pnt_tail(max: u64) -> Result<Report, Error> {
    if max < 1_000 {
        return Err(Error::Domain(format!("--max must be at least 1000, got {max}")));
    }
    let xs: Vec<f64> = (0..).map(|k| 10f64.powi(k)).take_while(|&x| x <= max as f64).collect();
    let profile = pnt_integral_profile(&xs, max)?;
    let g0 = g0_two_oracles(max)?;
    let body = json!({
        "x": profile.grid,
        "I": profile.values(),
        "remainder": profile.remainder,
        "g0_tail": g0.tail_route,
        "g0_phi": g0.phi_route,
    });
    Ok(Report::ok(profile.to_csv(), envelope("pnt-tail", body)))
}

fn verify_all(max: u64, only: &[u8], seed: u64, store: Option<CheckpointStore>) -> Result<Report, Error> {
    let config = VerifyConfig { table_max: max, seed, checkpoints: store };
    let mut csv = String::from("criterion,name,status,detail\n");
    let mut rows = Vec::new();
    let mut failed = Vec::new();
    for &(id, _) in CRITERIA.iter().filter(|(id, _)| only.is_empty() || only.contains(id)) {
        let r = run_criterion(id, &config);
        // Timings go to stderr so that reports are reproducible byte for byte.
        eprintln!("{}", r.line());
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(csv, "{},{},{status},\"{}\"", r.id, r.name, r.detail.replace('"', "'"));
        rows.push(json!({ "criterion": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }));
        if !r.passed {
            failed.push(r.id.to_string());
        }
    }
    let body = json!({ "table_max": max, "seed": seed, "criteria": rows });
    let failed = (!failed.is_empty()).then(|| format!("criteria {} failed", failed.join(", ")));
    Ok(Report { csv, json: envelope("verify-all", body), failed })
}
