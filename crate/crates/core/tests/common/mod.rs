#![allow(dead_code)]

use saltbox_roof::{c_limit, rho_boundary, ResolvedSaltbox, RoofParams, UnitStream};

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

/// Corner and edge points of the `(c_hat, rho_hat)` domain.
pub fn canonical_unit_shapes() -> Vec<(f64, f64)> {
    let mut v = vec![(0.0, 0.0), (0.0, 1.0), (1.0, 1.0)];
    for &x in &[0.1, 0.25, 0.5, 0.75, 0.9] {
        v.push((x, 1.0));
        v.push((0.0, x));
        v.push((c_limit(x).unwrap(), x));
        v.push((x, rho_boundary(x).unwrap()));
    }
    v
}

/// Deterministic parameter grid: `n` tuples drawn over a range of supports,
/// with corners, edges and the shed-flat boundary mixed in.
pub fn param_grid(n: usize, seed: u64, max_width: f64) -> Vec<RoofParams> {
    let mut s = UnitStream::new(seed);
    let corners = canonical_unit_shapes();
    (0..n)
        .map(|i| {
            let a = -10.0 + 20.0 * s.next_unit();
            let width = (max_width.ln() * s.next_unit()).exp().max(1e-3);
            let (c_hat, rho) = match i % 5 {
                0 => corners[(i / 5) % corners.len()],
                1 => {
                    // at the boundary
                    let rho = s.next_unit();
                    (c_limit(rho).unwrap(), rho)
                }
                _ => {
                    let rho = s.next_unit();
                    (c_limit(rho).unwrap() * s.next_unit(), rho)
                }
            };
            let c = (a + c_hat * width).min(a + width);
            RoofParams::new(a, a + width, c, rho).unwrap_or_else(|e| panic!("{a} {width} {c_hat} {rho}: {e}"))
        })
        .collect()
}

pub fn unit_probs(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| i as f64 / (n - 1) as f64)
}

pub fn resolved(p: &RoofParams) -> ResolvedSaltbox {
    p.resolve().unwrap()
}
