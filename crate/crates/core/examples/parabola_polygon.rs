//! A 20-point polygon for y = x^2 on [-1, 0.2] with vertices concentrated
//! where the curvature is largest, compared with equal spacing.
//!
//! cargo run --example parabola_polygon

use saltbox_roof::cli::{curve_rows, CurveSpec};
use saltbox_roof::ResolvedSaltbox;

fn main() -> saltbox_roof::Result<()> {
    let (x_m, x_max, n) = (-1.0, 0.2, 20);
    let d = ResolvedSaltbox::new(0.0, 1.0, 5.0 / 6.0, 0.75)?;
    let curve = CurveSpec::new(0.0, 0.0, 1.0, x_m, x_max)?;
    println!("{:>10} {:>10} {:>10} {:>10}", "x", "y", "curvature", "uniform x");
    for (i, row) in curve_rows(&curve, &d, n)?.iter().enumerate() {
        let uniform = x_m + (x_max - x_m) * i as f64 / (n - 1) as f64;
        println!(
            "{:>10.5} {:>10.5} {:>10.5} {uniform:>10.5}",
            row.x, row.y, row.curvature
        );
    }
    Ok(())
}
