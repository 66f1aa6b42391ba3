//! The admissible (relative mode, shape) domain and the kind at each point.
//!
//! cargo run --example domain_map

use saltbox_roof::roof::CLASSIFY_TOL;
use saltbox_roof::{c_limit, rho_boundary, RoofParams};

fn main() -> saltbox_roof::Result<()> {
    println!("boundary curve: largest relative mode per shape");
    for i in 0..=10 {
        let rho = i as f64 / 10.0;
        let c = c_limit(rho)?;
        println!(
            "  shape {rho:.1} -> c_limit {c:.6} (back: {:.6})",
            rho_boundary(c.min(1.0 - 1e-15))?
        );
    }
    println!("classification of canonical points");
    for (c_hat, rho) in [
        (0.5, 0.5),
        (0.5, 1.0 / 3.0),
        (0.0, 0.5),
        (0.0, 0.0),
        (0.0, 1.0),
        (1.0, 1.0),
        (0.5, 1.0),
    ] {
        let unit = RoofParams::unit(c_hat, rho)?.to_unit()?;
        println!("  ({c_hat:.3}, {rho:.3}) -> {:?}", unit.classify(CLASSIFY_TOL));
    }
    match RoofParams::unit(0.9, 0.5) {
        Ok(_) => unreachable!("0.9 lies beyond the limit for shape 0.5"),
        Err(e) => println!("(0.9, 0.5) rejected: {e}"),
    }
    Ok(())
}
