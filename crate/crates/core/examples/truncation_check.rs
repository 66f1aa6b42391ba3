//! Reproduces the saltbox quantile through a truncated triangle whose far
//! vertex is recovered from the two heights.
//!
//! cargo run --example truncation_check

use saltbox_roof::truncation::{parent_triangle, OracleRoute};
use saltbox_roof::{c_limit, quantile_comparison, ResolvedSaltbox};

fn main() -> saltbox_roof::Result<()> {
    let d = ResolvedSaltbox::new(0.0, 1.0, 0.5, 0.5)?;
    let (triangle, window) = parent_triangle(&d)?;
    println!("parent triangle {triangle:?}, window mass {:.6}", window.mass()?);
    let cmp = quantile_comparison(&d, 50, 0)?;
    for row in cmp.rows.iter().take(5) {
        println!(
            "u {:.6}: explicit {:.12}, truncated {:.12}",
            row.u, row.explicit, row.oracle
        );
    }
    println!(
        "max |difference| over {} probabilities: {:.2e}",
        cmp.rows.len(),
        cmp.max_abs_diff()
    );

    for gap in [1e-2, 1e-5, 1e-8, 0.0] {
        let near = ResolvedSaltbox::new(0.0, 1.0, c_limit(0.5)? - gap, 0.5)?;
        let cmp = quantile_comparison(&near, 50, 0)?;
        let route = match cmp.route {
            OracleRoute::Truncation { .. } => "truncated triangle",
            OracleRoute::ClosedForm(_) => "shed-flat closed form",
        };
        println!(
            "{gap:.0e} below the mode limit: {route}, max diff {:.2e}",
            cmp.max_abs_diff()
        );
    }
    Ok(())
}
