//! Density, CDF, quantile and moments of one saltbox roof.
//!
//! cargo run --example basic_evaluation

use saltbox_roof::ResolvedSaltbox;

fn main() -> saltbox_roof::Result<()> {
    let d = ResolvedSaltbox::new(0.0, 1.0, 0.5, 0.5)?;
    println!("{:?}: h_c = {}, h_b = {}", d.kind(), d.h_c(), d.h_b());
    println!("{:>6} {:>10} {:>10}", "x", "pdf", "cdf");
    for i in 0..=10 {
        let x = i as f64 / 10.0;
        println!("{x:>6.2} {:>10.6} {:>10.6}", d.pdf(x)?, d.cdf(x)?);
    }
    for u in [0.05, 0.25, 0.5, 0.75, 0.95] {
        println!("quantile({u}) = {:.6}", d.quantile(u)?);
    }
    let m = d.moments();
    println!("{m:#?}");
    Ok(())
}
