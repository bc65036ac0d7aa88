//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use pntlab::verify::{report_table, run_criterion, VerifyConfig, CRITERIA};

fn main() {
    let mut config = VerifyConfig::default();
    // PNTLAB_TABLE_MAX=1e9 skips the large table rows.
    if let Ok(v) = std::env::var("PNTLAB_TABLE_MAX") {
        config.table_max = v.parse::<f64>().expect("PNTLAB_TABLE_MAX must be a number") as u64;
    }
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut reports = Vec::new();
    for &(id, name) in CRITERIA.iter() {
        let tag = format!("criterion_{id}");
        if !filter.is_empty() && !filter.iter().any(|f| *f == tag || name.contains(f.as_str())) {
            continue;
        }
        let report = run_criterion(id, &config);
        println!("{}", report.line());
        reports.push(report);
    }
    let summary = report_table(&reports);
    println!("{}", summary.lines().last().unwrap_or_default());
    if reports.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
}
