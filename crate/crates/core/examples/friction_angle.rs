//! Bounded sampling of a basic friction angle between 20 and 45 degrees
//! with a most likely value of 32, summarised as a text histogram.
//!
//! cargo run --example friction_angle [seed]

use saltbox_roof::cli::histogram;
use saltbox_roof::numverify::ks_statistic;
use saltbox_roof::ResolvedSaltbox;

fn main() -> saltbox_roof::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let d = ResolvedSaltbox::new(20.0, 45.0, 32.0, 0.8)?;
    let mut xs = d.sample(seed, 2000);
    for bin in histogram(&xs, 20.0, 45.0, 25)? {
        println!(
            "{:>4}-{:<4} {:>4} {}",
            bin.lo,
            bin.hi,
            bin.count,
            "#".repeat(bin.count / 4)
        );
    }
    xs.sort_by(f64::total_cmp);
    let ks = ks_statistic(&xs, |x| d.cdf(x).unwrap())?;
    println!(
        "seed {seed}: KS distance {ks:.4} (1% critical value {:.4})",
        1.63 / 2000f64.sqrt()
    );
    println!(
        "mean {:.3}, median {:.3}, residual density at 45: {:.4}",
        d.mean(),
        d.median(),
        d.h_b()
    );
    Ok(())
}
