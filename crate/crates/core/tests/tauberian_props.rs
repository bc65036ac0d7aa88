use num_complex::Complex64;
use pntlab::quad::adaptive_simpson;
use pntlab::tauberian::{
    bound_rz1_check, bound_rz2_check, cauchy_square_residual, circle_factor_check, laplace_exact_step,
    newman_contour_residual, pnt_integral_profile, BoundedSignal, ContourSpec, ThetaStep,
};
use pntlab::verify::random_steps;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

fn step() -> &'static ThetaStep {
    static STEP: OnceLock<ThetaStep> = OnceLock::new();
    STEP.get_or_init(|| ThetaStep::new(1_000).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn step_laplace_matches_quadrature(re in 0.0f64..3.0, im in -10.0f64..10.0, t_end in 0.1f64..6.9) {
        let s = Complex64::new(re, im);
        let exact = laplace_exact_step(step(), s, t_end).unwrap();
        let mut edges: Vec<f64> = step().breakpoints().iter().copied().filter(|&b| b < t_end).collect();
        edges.push(t_end);
        let mut sum = Complex64::new(0.0, 0.0);
        for (i, w) in edges.windows(2).enumerate() {
            let c = step().cumulative()[i];
            let q = adaptive_simpson(|t: f64| c * (-s * t).exp(), w[0], w[1], 1e-13).unwrap();
            sum += q.value;
        }
        prop_assert!((exact - sum).norm() <= 1e-9, "{s}, T = {t_end}: {exact} vs {sum}");
    }

    #[test]
    fn bounds_hold_for_random_steps(seed in any::<u64>(), re in 0.01f64..3.0, im in -20.0f64..20.0, t_end in 0.1f64..20.0) {
        let signal = random_steps(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(bound_rz1_check(&signal, Complex64::new(re, im), t_end).unwrap());
        prop_assert!(bound_rz2_check(&signal, Complex64::new(-re, im), t_end).unwrap());
    }

    #[test]
    fn bounds_hold_for_catalog(re in 0.01f64..3.0, im in -20.0f64..20.0, t_end in 0.1f64..20.0) {
        for signal in BoundedSignal::catalog() {
            prop_assert!(bound_rz1_check(&signal, Complex64::new(re, im), t_end).unwrap());
            prop_assert!(bound_rz2_check(&signal, Complex64::new(-re, im), t_end).unwrap());
        }
    }

    #[test]
    fn circle_factor(r in prop::sample::select(vec![1.0, 5.0, 10.0]), angle in -PI..PI) {
        prop_assert!(circle_factor_check(Complex64::from_polar(r, angle), r).unwrap());
    }

    #[test]
    fn steps_respect_sup_norm(seed in any::<u64>(), t in 0.0f64..15.0) {
        let signal = random_steps(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(signal.eval(t).unwrap().norm() <= signal.sup_norm);
    }

    #[test]
    fn contour_residual_on_random_steps(seed in any::<u64>(), t_end in 1.0f64..10.0) {
        let signal = random_steps(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let spec = ContourSpec::new(2.0, 0.5, ContourSpec::DEFAULT_POINTS).unwrap();
        prop_assert!(newman_contour_residual(&signal, &spec, t_end).unwrap() <= 1e-6);
    }
}

#[test]
fn prime_deviation_is_bounded() {
    let signal = BoundedSignal::prime_deviation(Arc::new(ThetaStep::new(1_000_000).unwrap()));
    let horizon = 1e6f64.ln();
    for i in 0..10_000 {
        let t = horizon * i as f64 / 9_999.0;
        assert!(signal.eval(t).unwrap().norm() <= signal.sup_norm);
    }
}

#[test]
fn constant_signal_is_rejected() {
    let spec = ContourSpec::new(1.0, 0.25, ContourSpec::DEFAULT_POINTS).unwrap();
    assert!(newman_contour_residual(&BoundedSignal::constant(1.0), &spec, 5.0).is_err());
}

#[test]
fn cauchy_square_vanishes() {
    for signal in BoundedSignal::catalog() {
        let r = cauchy_square_residual(&signal, Complex64::new(2.0, 1.0), 0.5).unwrap();
        assert!(r <= 1e-8, "{}: {r:e}", signal.description);
    }
}

#[test]
fn substitution_identity() {
    // ∫₁ˣ (θ(x) − x)/x² dx against ∫₀^{log X} (θ(eᵗ)e^{−t} − 1) dt.
    let cutoff = 1_000_000u64;
    let signal = BoundedSignal::prime_deviation(Arc::new(ThetaStep::new(cutoff).unwrap()));
    let xs = [1.0, 10.0, 1e3, 1e5, 1e6];
    let profile = pnt_integral_profile(&xs, cutoff).unwrap();
    for (x, partial) in xs.iter().zip(&profile.partial).skip(1) {
        let x_form = profile.partial[0] - partial;
        let t_form = signal.g_t(Complex64::new(0.0, 0.0), x.ln()).unwrap();
        assert!((t_form.re - x_form).abs() <= 1e-9, "x = {x}: {} vs {x_form}", t_form.re);
    }
}
