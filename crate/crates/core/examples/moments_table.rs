//! Complex moments from permanents, the real moments they determine, and the
//! joint cumulants of `(Re P, Im P)`.
//!
//! ```text
//! cargo run --release --example moments_table -- [order]
//! ```

use trdetect::moments::max_imaginary_residue;
use trdetect::{ComplexScalar, MomentSet, ProductModel};

fn main() -> trdetect::Result<()> {
    let order: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let model = ProductModel::new(
        ComplexScalar::new(2.0, 2.5),
        ComplexScalar::new(2.1, 1.8),
        1.0,
        1.0,
        ComplexScalar::new(0.3, 0.3),
    )?;
    let set = MomentSet::compute(&model, order)?;

    println!("E[P^m P*^n]");
    for (m, n, z) in set.complex.iter() {
        println!("  M({m},{n}) = {z:.6}");
    }
    println!("largest relative imaginary residue: {:.2e}", max_imaginary_residue(&set.complex)?);
    println!("\nE[P1^a P2^b]");
    for (a, b, v) in set.real.iter() {
        println!("  ({a},{b}) {v:>16.6}");
    }
    println!("\njoint cumulants");
    let mean = set.cumulants.mean();
    println!("  (1,0) {:>16.6}\n  (0,1) {:>16.6}", mean[0], mean[1]);
    for (a, b, v) in set.cumulants.iter() {
        println!("  ({a},{b}) {v:>16.6}");
    }
    Ok(())
}
