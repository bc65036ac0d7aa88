use std::process::{Command, Output};

fn pntlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pntlab"))
        .args(args)
        .env_remove("PNTLAB_CHECKPOINTS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn pi_table_rows() {
    let out = pntlab(&["pi-table", "--max", "1e6"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "x,pi,li_rounded,x_over_logx_rounded\n\
         1000,168,177,145\n\
         10000,1229,1245,1086\n\
         100000,9592,9629,8686\n\
         1000000,78498,78627,72382\n"
    );
}

#[test]
fn zeros_json() {
    let out = pntlab(&["zeros", "--count", "20", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    let zeros = v["zeros"].as_array().unwrap();
    assert_eq!(zeros.len(), 20);
    assert!((zeros[0]["t"].as_f64().unwrap() - 14.1347).abs() < 5e-5);
    assert!((zeros[19]["t"].as_f64().unwrap() - 77.1448).abs() < 5e-5);
}

#[test]
fn zeta_at_two() {
    let out = pntlab(&["zeta-eval", "--s", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["result"]["value_re"].as_f64().unwrap() - 1.6449340668).abs() < 1e-10);
    assert_eq!(v["result"]["method"], "floor_integral");
}

#[test]
fn zeta_on_the_critical_line() {
    let out = pntlab(&["zeta-eval", "--s", "0.5-14.134725141734693i", "--method", "eta"]);
    assert!(out.status.success());
    let line = stdout(&out).lines().nth(1).unwrap().to_string();
    let fields: Vec<f64> = line.split(',').take(4).map(|f| f.parse().unwrap()).collect();
    assert!(fields[2].hypot(fields[3]) < 1e-8, "{line}");
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = pntlab(&["verify-all", "--criterion", "3", "--criterion", "8", "--out", path.to_str().unwrap()]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn checkpoints_are_reused() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["pi-table", "--max", "1e5", "--checkpoint-dir", dir.path().to_str().unwrap()];
    let first = pntlab(&args);
    let stored = std::fs::read_to_string(dir.path().join("pi_checkpoints.tsv")).unwrap();
    assert_eq!(stored.lines().count(), 3);
    let second = pntlab(&args);
    assert_eq!(first.stdout, second.stdout);
    let again = std::fs::read_to_string(dir.path().join("pi_checkpoints.tsv")).unwrap();
    assert_eq!(stored, again);
}

#[test]
fn exit_codes() {
    assert_eq!(pntlab(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(pntlab(&["zeta-eval", "--s", "two"]).status.code(), Some(2));
    assert_eq!(pntlab(&["zeta-eval", "--s", "1"]).status.code(), Some(2));
    assert_eq!(pntlab(&["zeros", "--count", "21"]).status.code(), Some(2));
    assert_eq!(pntlab(&["zeta-eval", "--s", "2", "--tol", "1e-30"]).status.code(), Some(3));
    assert_eq!(pntlab(&["theta-ratio", "--max", "1e13"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("pi_checkpoints.tsv"), "not a checkpoint\n").unwrap();
    let bad = pntlab(&["pi-table", "--max", "1e4", "--checkpoint-dir", dir.path().to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(5));
}

#[test]
fn euler_product_closes_in() {
    let out = pntlab(&["euler-product", "--s", "2", "--max", "1e5"]);
    let text = stdout(&out);
    let gaps: Vec<f64> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect();
    assert!(gaps.last().unwrap() < &1e-5);
    assert!(gaps.first().unwrap() > gaps.last().unwrap());
}

#[test]
fn tauber_demo_catalog() {
    let out = pntlab(&["tauber-demo", "--signal", "damped", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["envelope_decreases"], true);
    assert!(v["g0"].is_null());
}

#[test]
fn pnt_tail_small() {
    let out = pntlab(&["pnt-tail", "--max", "1e6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let gap = (v["g0_tail"].as_f64().unwrap() - v["g0_phi"].as_f64().unwrap()).abs();
    assert!(gap < 1e-2, "{gap}");
}

#[test]
fn theta_ratio_grid() {
    let out = pntlab(&["theta-ratio", "--max", "1e6", "--count", "1"]);
    let text = stdout(&out);
    assert!(text.starts_with("x,theta_over_x\n10,"));
    assert_eq!(text.lines().count(), 7);
}
