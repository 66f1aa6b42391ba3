//! Non-random points on [0, 1] clustered around 0.7: equal steps in
//! probability pushed through the quantile function.
//!
//! cargo run --example ruled_spacing

use saltbox_roof::cli::spaced_points;
use saltbox_roof::ResolvedSaltbox;

fn main() -> saltbox_roof::Result<()> {
    let d = ResolvedSaltbox::new(0.0, 1.0, 0.7, 0.8)?;
    let pts = spaced_points(&d, 30, 0.0, 1.0)?;
    let mut line = vec![b'.'; 61];
    for &x in pts.as_slice() {
        line[(x * 60.0).round() as usize] = b'|';
    }
    println!("{}", String::from_utf8(line).unwrap());
    for w in pts.as_slice().windows(2) {
        println!("{:.5} -> {:.5} (step {:.5})", w[0], w[1], w[1] - w[0]);
    }
    Ok(())
}
