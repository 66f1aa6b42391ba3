mod common;

use common::{close, param_grid, unit_probs};
use saltbox_roof::numverify::integrate_with_breakpoints;
use saltbox_roof::truncation::{
    apex_from_heights, one_sided_quantile, parent_triangle, tri_cdf, tri_quantile, truncated_cdf, truncated_pdf,
    truncated_quantile, truncated_quantile_argument, OracleRoute,
};
use saltbox_roof::{
    c_limit, compare_quantiles, quantile_comparison, Error, ResolvedSaltbox, RoofParams, TriangularSupport,
    TruncationWindow,
};

/// Agreement required of the two routes: tight in the interior, looser
/// within 1e-4 of the shed-flat boundary where apex recovery is ill-conditioned.
fn tolerance(d: &ResolvedSaltbox) -> f64 {
    let u = d.unit_shape();
    if u.c_limit - u.c_hat <= 1e-4 {
        1e-7
    } else {
        1e-9
    }
}

fn grid() -> Vec<ResolvedSaltbox> {
    let mut v: Vec<_> = param_grid(300, 3, 50.0).iter().map(|p| p.resolve().unwrap()).collect();
    // approach the boundary from inside
    for rho in [0.05, 0.3, 0.6, 0.95] {
        for gap in [1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 0.0] {
            let c_hat = (c_limit(rho).unwrap() - gap).max(0.0);
            v.push(
                RoofParams::new(2.0, 5.0, 2.0 + 3.0 * c_hat, rho)
                    .unwrap()
                    .resolve()
                    .unwrap(),
            );
        }
    }
    v
}

#[test]
fn evaluators_agree_with_the_truncated_triangle() {
    for d in grid() {
        let route = OracleRoute::for_dist(&d).unwrap();
        let tol = tolerance(&d);
        let w = d.b() - d.a();
        for i in 0..=500 {
            let x = d.a() + w * i as f64 / 500.0;
            let (p, q) = (d.pdf(x).unwrap(), route.pdf(x).unwrap());
            // compare densities on the unit scale, where they are O(1)
            if x != d.c() {
                assert!(close(p * w, q * w, tol), "{d:?} pdf at {x}: {p} vs {q}");
            }
            let (p, q) = (d.cdf(x).unwrap(), route.cdf(x).unwrap());
            assert!(close(p, q, tol), "{d:?} cdf at {x}: {p} vs {q}");
        }
        for u in unit_probs(501) {
            let (p, q) = (d.quantile(u).unwrap(), route.quantile(u).unwrap());
            assert!(close(p, q, tol * w.max(1.0)), "{d:?} quantile at {u}: {p} vs {q}");
        }
    }
}

#[test]
fn seeded_comparison_stays_within_tolerance() {
    for (i, d) in grid().iter().enumerate() {
        let diff = compare_quantiles(d, 50, i as u64).unwrap();
        let w = d.b() - d.a();
        assert!(diff <= tolerance(d) * w.max(1.0), "{d:?}: {diff}");
    }
}

#[test]
fn comparison_rows_report_both_routes() {
    let d = ResolvedSaltbox::new(0.0, 1.0, 0.5, 0.5).unwrap();
    let cmp = quantile_comparison(&d, 50, 7).unwrap();
    assert_eq!(cmp.rows.len(), 50);
    assert!(matches!(cmp.route, OracleRoute::Truncation { .. }));
    for row in &cmp.rows {
        assert_eq!(row.explicit, d.quantile(row.u).unwrap());
        assert!(row.abs_diff() <= 1e-9);
    }
    assert!(cmp.max_abs_diff() <= 1e-9);
}

#[test]
fn boundary_routes_through_closed_forms() {
    let on = RoofParams::new(0.0, 1.0, c_limit(0.5).unwrap(), 0.5)
        .unwrap()
        .resolve()
        .unwrap();
    assert!(matches!(
        OracleRoute::for_dist(&on).unwrap(),
        OracleRoute::ClosedForm(_)
    ));
    assert!(matches!(parent_triangle(&on), Err(Error::FlatShape)));
    let left = ResolvedSaltbox::new(0.0, 1.0, 1.0, 1.0).unwrap();
    assert!(matches!(
        OracleRoute::for_dist(&left).unwrap(),
        OracleRoute::ClosedForm(_)
    ));
    assert!(compare_quantiles(&on, 50, 1).unwrap() <= 1e-9);
    assert!(compare_quantiles(&left, 50, 1).unwrap() <= 1e-9);
}

#[test]
fn apex_comes_from_similar_triangles() {
    let d = ResolvedSaltbox::new(0.0, 1.0, 0.5, 0.5).unwrap();
    let e = apex_from_heights(0.0, 1.0, 0.5, d.h_c(), d.h_b()).unwrap();
    assert!(close(e, 2.0, 1e-12));
    // the triangle's density reproduces h_c at the mode and h_b at b after conditioning
    let (s, win) = parent_triangle(&d).unwrap();
    assert!(close(truncated_pdf(&s, &win, 0.5).unwrap(), d.h_c(), 1e-12));
    assert!(close(truncated_pdf(&s, &win, 1.0).unwrap(), d.h_b(), 1e-12));
    assert!(close(win.mass().unwrap(), 2.0 / 3.0, 1e-12));
}

#[test]
fn truncated_density_is_normalized() {
    let s = TriangularSupport::new(-1.0, 4.0, 0.5).unwrap();
    for (lo, hi) in [(-1.0, 4.0), (-1.0, 2.0), (0.0, 3.0), (1.0, 1.5), (-0.5, 0.2)] {
        let win = TruncationWindow::new(&s, lo, hi).unwrap();
        let r = integrate_with_breakpoints(|x| truncated_pdf(&s, &win, x).unwrap(), lo, hi, &[s.c], 1e-13).unwrap();
        assert!(close(r.value, 1.0, 1e-10), "[{lo}, {hi}]: {}", r.value);
        assert_eq!(truncated_cdf(&s, &win, lo).unwrap(), 0.0);
        assert_eq!(truncated_cdf(&s, &win, hi).unwrap(), 1.0);
        for u in unit_probs(201) {
            let x = truncated_quantile(&s, &win, u).unwrap();
            assert!((lo..=hi).contains(&x));
            assert!(
                close(truncated_cdf(&s, &win, x).unwrap(), u, 1e-12),
                "[{lo}, {hi}] u {u}"
            );
        }
    }
}

#[test]
fn one_sided_window_reduces_to_scaled_probability() {
    let s = TriangularSupport::new(0.0, 1.5, 0.5).unwrap();
    let win = TruncationWindow::new(&s, 0.0, 1.0).unwrap();
    assert_eq!(win.g_lo, 0.0);
    for u in unit_probs(101) {
        let arg = truncated_quantile_argument(&win, u).unwrap();
        assert_eq!(arg, u * win.g_hi);
        assert_eq!(
            truncated_quantile(&s, &win, u).unwrap(),
            one_sided_quantile(&s, win.g_hi, u).unwrap().clamp(0.0, 1.0)
        );
    }
}

#[test]
fn two_sided_window_identities() {
    let s = TriangularSupport::new(0.0, 10.0, 3.0).unwrap();
    let win = TruncationWindow::new(&s, 2.0, 7.0).unwrap();
    let mass = tri_cdf(&s, 7.0).unwrap() - tri_cdf(&s, 2.0).unwrap();
    assert!(close(win.mass().unwrap(), mass, 1e-15));
    for i in 0..=100 {
        let x = 2.0 + 5.0 * i as f64 / 100.0;
        let direct = (tri_cdf(&s, x).unwrap() - win.g_lo) / mass;
        assert!(close(truncated_cdf(&s, &win, x).unwrap(), direct, 1e-15));
    }
    for u in unit_probs(101) {
        let direct = tri_quantile(&s, win.g_lo + u * mass).unwrap().clamp(2.0, 7.0);
        assert!(close(truncated_quantile(&s, &win, u).unwrap(), direct, 1e-14));
    }
    assert_eq!(truncated_pdf(&s, &win, 1.0).unwrap(), 0.0);
    assert_eq!(truncated_pdf(&s, &win, 8.0).unwrap(), 0.0);
}

#[test]
fn degenerate_windows_are_rejected() {
    let s = TriangularSupport::new(0.0, 1.0, 0.5).unwrap();
    assert!(matches!(
        TruncationWindow::new(&s, 2.0, 3.0),
        Err(Error::DegenerateWindow { .. })
    ));
    assert!(TruncationWindow::new(&s, 0.7, 0.7).is_err());
    assert!(TriangularSupport::new(1.0, 0.0, 0.5).is_err());
}
