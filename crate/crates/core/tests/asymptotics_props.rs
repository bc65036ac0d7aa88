use pntlab::asymptotics::{li, li_ratio_series, log_grid, pnt_ratio_series, sandwich_positivity, table_one};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn li_derivative_is_reciprocal_log(x in 3.0f64..1e9) {
        let h = 1e-3 * x;
        let tol = 1e-9;
        let d = (li(x + h, tol).unwrap().li - li(x - h, tol).unwrap().li) / (2.0 * h);
        // Central-difference truncation: h²·|f'''|/6 with f''' ≤ 3/(x³ log² x).
        let slack = h * h / (x.powi(3) * x.ln().powi(2)) + 10.0 * tol * li(x, tol).unwrap().li / h;
        prop_assert!((d - 1.0 / x.ln()).abs() <= slack, "x = {x}");
    }

    #[test]
    fn li_strictly_increasing(a in 2.0f64..1e9, b in 2.0f64..1e9) {
        prop_assume!(a != b);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let l = li(lo, 1e-9).unwrap();
        let h = li(hi, 1e-9).unwrap();
        prop_assert!(h.li > l.li);
        prop_assert!(l.quad_err <= 1e-9 * l.li.max(1.0));
    }

    #[test]
    fn sandwich_signs(alpha in 1.0f64..=1e6, beta in 0.0f64..1.0) {
        prop_assume!(alpha > 1.0 && beta > 0.0);
        let (upper, lower) = sandwich_positivity(alpha, beta).unwrap();
        prop_assert!(upper > 0.0);
        prop_assert!(lower < 0.0);
    }
}

#[test]
fn li_of_two_is_zero() {
    assert_eq!(li(2.0, 1e-9).unwrap().li, 0.0);
}

#[test]
fn table_rows_through_1e9() {
    let published = [
        (1_000, 168, 177, 145),
        (10_000, 1_229, 1_245, 1_086),
        (100_000, 9_592, 9_629, 8_686),
        (1_000_000, 78_498, 78_627, 72_382),
        (10_000_000, 664_579, 664_917, 620_421),
        (100_000_000, 5_761_455, 5_762_208, 5_428_681),
        (1_000_000_000, 50_847_534, 50_849_234, 48_254_942),
    ];
    let xs: Vec<u64> = published.iter().map(|r| r.0).collect();
    for (row, want) in table_one(&xs, None).unwrap().iter().zip(published) {
        assert_eq!((row.x, row.pi, row.li_rounded, row.x_over_logx_rounded), want);
    }
}

#[test]
fn li_ratio_decreases_toward_one() {
    let grid: Vec<f64> = log_grid(1_000, 1_000_000_000_000, 4).iter().map(|&x| x as f64).collect();
    let series = li_ratio_series(&grid).unwrap();
    for w in series.ratios.windows(2) {
        assert!(w[1] < w[0] && w[1] > 1.0, "{:?}", series.ratios);
    }
}

#[test]
fn pnt_ratio_in_the_squeeze() {
    let grid = log_grid(100_000, 10_000_000_000, 8);
    let series = pnt_ratio_series(&grid, None).unwrap();
    assert!(series.ratios.iter().all(|r| (0.9..=1.2).contains(r)), "{:?}", series.ratios);
}
