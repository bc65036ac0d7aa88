use num_complex::Complex64;
use pntlab::zeros::{first_n_zeros, scan_critical_line, PUBLISHED_ORDINATES, RESIDUAL_LIMIT};
use pntlab::zeta::{zeta_eta_oracle, zeta_floor_integral};

#[test]
fn twenty_zeros_match_the_list() {
    let zeros = first_n_zeros(20).unwrap();
    assert_eq!(zeros.len(), 20);
    for (z, t) in zeros.iter().zip(PUBLISHED_ORDINATES) {
        assert!((z.t - t).abs() <= 5e-5, "{} vs {t}", z.t);
        assert!(z.residual <= RESIDUAL_LIMIT);
        assert!(z.bracket.contains(z.t));
    }
}

#[test]
fn conjugate_zeros() {
    for z in first_n_zeros(20).unwrap() {
        let below = zeta_floor_integral(Complex64::new(0.5, -z.t), 1e-10).unwrap();
        assert!(below.value.norm() <= 1e-6, "t = {}", z.t);
    }
}

#[test]
fn minimum_sits_on_the_line() {
    for z in first_n_zeros(20).unwrap() {
        let on = zeta_eta_oracle(Complex64::new(0.5, z.t), 1e-12).unwrap().value.norm();
        let off = zeta_eta_oracle(Complex64::new(0.6, z.t), 1e-12).unwrap().value.norm();
        assert!(off > on, "t = {}", z.t);
    }
}

#[test]
fn zeros_are_separated() {
    let zeros = first_n_zeros(20).unwrap();
    for w in zeros.windows(2) {
        assert!(w[1].t - w[0].t >= 0.5);
        assert!(w[0].bracket.t_hi <= w[1].bracket.t_lo);
    }
}

#[test]
fn no_zero_on_the_one_line() {
    let min = (0..=7990)
        .map(|i| 0.1 + 0.01 * i as f64)
        .map(|t| zeta_floor_integral(Complex64::new(1.0, t), 1e-10).unwrap().value.norm())
        .fold(f64::INFINITY, f64::min);
    assert!(min > 0.01, "{min}");
}

#[test]
fn scan_brackets_are_ordered() {
    let brackets = scan_critical_line(10.0, 80.0, 0.05).unwrap();
    assert!(brackets.len() >= 20);
    for w in brackets.windows(2) {
        assert!(w[0].t_lo < w[0].t_hi && w[0].t_hi <= w[1].t_lo);
    }
}
