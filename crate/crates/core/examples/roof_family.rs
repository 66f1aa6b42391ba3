//! The six degenerate roofs next to the saltbox points that reduce to them.
//!
//! cargo run --example roof_family

use saltbox_roof::roof::CLASSIFY_TOL;
use saltbox_roof::{c_limit, ResolvedSaltbox};

fn main() -> saltbox_roof::Result<()> {
    let points = [
        ("uniform", 0.0, 0.0),
        ("triangular", 0.4, 1.0),
        ("right shed", 0.0, 1.0),
        ("left shed", 1.0, 1.0),
        ("shed flat", c_limit(0.6)?, 0.6),
        ("skillion", 0.0, 0.6),
        ("saltbox", 0.4, 0.6),
    ];
    for (name, c, rho) in points {
        let d = ResolvedSaltbox::new(0.0, 1.0, c, rho)?;
        let closed = d.degenerate_form(CLASSIFY_TOL);
        print!("{name:<11} ({c:.3}, {rho:.1}) {:?}", d.kind());
        match closed {
            Some(f) => {
                let diff = (0..=100)
                    .map(|i| i as f64 / 100.0)
                    .map(|u| Ok((d.quantile(u)? - f.quantile(u)?).abs()))
                    .collect::<saltbox_roof::Result<Vec<_>>>()?
                    .into_iter()
                    .fold(0.0, f64::max);
                println!(", closed form agrees to {diff:.1e}");
            }
            None => println!(", no closed-form reduction"),
        }
    }
    Ok(())
}
