mod common;

use common::{close, unit_probs};
use proptest::prelude::*;
use saltbox_roof::numverify::{bisect_quantile, fd_derivative, integrate_with_breakpoints, moment_numeric};
use saltbox_roof::{c_limit, ResolvedSaltbox, RoofParams};

fn params() -> impl Strategy<Value = RoofParams> {
    (-50.0..50.0f64, -3.0..3.0f64, 0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(a, log_w, rho, frac)| {
        let w = 10f64.powf(log_w);
        let c = (a + frac * c_limit(rho).unwrap() * w).min(a + w);
        RoofParams::new(a, a + w, c, rho).unwrap()
    })
}

fn dist() -> impl Strategy<Value = ResolvedSaltbox> {
    params().prop_map(|p| p.resolve().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn density_integrates_to_one(d in dist()) {
        let r = integrate_with_breakpoints(|x| d.pdf(x).unwrap(), d.a(), d.b(), &[d.c()], 1e-12).unwrap();
        prop_assert!(close(r.value, 1.0, 1e-10), "area {}", r.value);
        prop_assert!(close(d.total_area(), 1.0, 1e-12));
    }

    #[test]
    fn heights_respect_order(d in dist()) {
        prop_assert!(d.h_c() >= d.h_b() && d.h_b() >= 0.0);
        let w = d.b() - d.a();
        prop_assert!(close(d.h_c() * w, 1.0 + d.shape(), 1e-14));
    }

    #[test]
    fn cdf_slope_is_pdf(d in dist()) {
        let w = d.b() - d.a();
        let h = 1e-3 * w;
        for i in 1..=100 {
            let x = d.a() + w * i as f64 / 101.0;
            if (x - d.c()).abs() < 2.0 * h {
                continue;
            }
            let fd = fd_derivative(|t| d.cdf(t).unwrap(), x, h).unwrap();
            let f = d.pdf(x).unwrap();
            // central differences of a piecewise quadratic are exact away from c,
            // so only round-off of x ± h remains
            prop_assert!(close(fd, f, 1e-6 * d.h_c().max(1.0)), "x {x}: fd {fd} vs pdf {f}");
        }
    }

    #[test]
    fn quantile_inverts_cdf(d in dist()) {
        for u in unit_probs(1000) {
            let x = d.quantile(u).unwrap();
            prop_assert!(close(d.cdf(x).unwrap(), u, 1e-9), "u {u}");
        }
        // where the density is not vanishingly small the inverse is well conditioned
        let w = d.b() - d.a();
        for i in 0..=1000 {
            let x = d.a() + w * i as f64 / 1000.0;
            if d.pdf(x).unwrap() < 1e-3 * d.h_c() {
                continue;
            }
            let back = d.quantile(d.cdf(x).unwrap()).unwrap();
            prop_assert!(close(back, x, 1e-9), "x {x} -> {back}");
        }
    }

    #[test]
    fn evaluators_are_monotone(d in dist()) {
        let w = d.b() - d.a();
        let mut prev_f = 0.0;
        let mut prev_q = d.a();
        for i in 0..=2000 {
            let t = i as f64 / 2000.0;
            let f = d.cdf(d.a() - 0.1 * w + 1.2 * w * t).unwrap();
            prop_assert!(f >= prev_f);
            prev_f = f;
            let q = d.quantile(t).unwrap();
            prop_assert!(q >= prev_q && q <= d.b());
            prev_q = q;
            prop_assert!(d.pdf(d.a() - 0.1 * w + 1.2 * w * t).unwrap() >= 0.0);
        }
    }

    #[test]
    fn closed_moments_match_quadrature(d in dist()) {
        let pdf = |x: f64| d.pdf(x).unwrap();
        let mean = moment_numeric(pdf, d.a(), d.b(), 1, &[d.c()]).unwrap();
        let mu = d.mean();
        let w = d.b() - d.a();
        // centre inside the integrand: shifting the limits instead would move the
        // density's jump at b off the panel edge by an ulp
        let var = integrate_with_breakpoints(|x| (x - mu).powi(2) * pdf(x), d.a(), d.b(), &[d.c()], 1e-13 * w * w)
            .unwrap()
            .value;
        let scale = d.a().abs().max(d.b().abs()).max(1.0);
        prop_assert!(close(mu, mean, 1e-8 * scale), "mean {mu} vs {mean}");
        prop_assert!(close(d.variance(), var, 1e-8 * w * w.max(1.0)), "var {} vs {var}", d.variance());
        prop_assert!(d.variance() > 0.0);
        prop_assert!(mu >= d.a() && mu <= d.b());
        let m = d.median();
        prop_assert!(m >= d.a() && m <= d.b());
        prop_assert_eq!(d.mode(), d.c());
    }

    #[test]
    fn median_agrees_with_bisection_and_ascending_form(d in dist()) {
        let m = d.median();
        let b = bisect_quantile(|x| d.cdf(x).unwrap(), 0.5, d.a(), d.b(), 1e-15).unwrap();
        let w = d.b() - d.a();
        prop_assert!(close(m, b, 1e-9 * w.max(1.0)));
        if let Some(asc) = d.ascending_median() {
            prop_assert!(close(m, asc, 1e-9));
        }
    }

    #[test]
    fn quantile_is_affine_equivariant(p in params()) {
        let d = p.resolve().unwrap();
        let unit = RoofParams::unit((p.c - p.a) / p.width(), p.shape).unwrap().resolve().unwrap();
        for u in unit_probs(101) {
            let scaled = p.a + p.width() * unit.quantile(u).unwrap();
            prop_assert!(close(d.quantile(u).unwrap(), scaled, 1e-9 * p.width().max(1.0)));
        }
    }

    #[test]
    fn density_peaks_at_mode(d in dist()) {
        prop_assume!(d.h_c() - d.h_b() > 1e-6 * d.h_c());
        let n = 20_000;
        let w = d.b() - d.a();
        let step = w / n as f64;
        let (arg, _) = (0..=n)
            .map(|i| d.a() + step * i as f64)
            .map(|x| (x, d.pdf(x).unwrap()))
            .fold((d.a(), f64::MIN), |best, cur| if cur.1 > best.1 { cur } else { best });
        prop_assert!((arg - d.c()).abs() <= step * (1.0 + 1e-9), "argmax {arg} vs c {}", d.c());
    }

    #[test]
    fn samples_stay_in_support(d in dist(), seed in any::<u64>()) {
        let xs = d.sample(seed, 200);
        prop_assert_eq!(xs.len(), 200);
        prop_assert!(xs.iter().all(|&x| x >= d.a() && x <= d.b()));
        prop_assert_eq!(xs, d.sample(seed, 200));
    }
}

#[test]
fn unit_shape_consistent_with_resolved_heights() {
    for p in common::param_grid(200, 11, 100.0) {
        let d = p.resolve().unwrap();
        let u = p.to_unit().unwrap();
        let w = p.width();
        assert!(close(u.hc_hat, d.h_c() * w, 1e-12));
        assert!(close(u.hb_hat, d.h_b() * w, 1e-9));
        assert!(u.c_hat <= u.c_limit + 1e-12);
    }
}

#[test]
fn friction_angle_histogram_peaks_near_mode() {
    let d = ResolvedSaltbox::new(20.0, 45.0, 32.0, 0.8).unwrap();
    let xs = d.sample(0, 2000);
    assert!(xs.iter().all(|&x| (20.0..=45.0).contains(&x)));
    let hist = saltbox_roof::cli::histogram(&xs, 20.0, 45.0, 25).unwrap();
    let peak = hist.iter().max_by_key(|b| b.count).unwrap();
    assert!(
        peak.lo <= 32.0 && 32.0 <= peak.hi,
        "peak bin [{}, {}]",
        peak.lo,
        peak.hi
    );
}
