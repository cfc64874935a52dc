//! Edgeworth approximation error as the means grow.
//!
//! Scales both means of the reference model by ½, 1 and 2, draws 10⁶ products for
//! each, and prints the mean square error of the sixth-order expansion against a
//! 200×200 histogram of the same samples.
//!
//! ```text
//! cargo run --release --example table_mse
//! ```

use trdetect::montecarlo::{mse, sample_products, Estimator};
use trdetect::{build_edgeworth, ComplexScalar, ProductModel};

fn main() -> trdetect::Result<()> {
    let base = ProductModel::new(
        ComplexScalar::new(2.0, 2.5),
        ComplexScalar::new(2.1, 1.8),
        1.0,
        1.0,
        ComplexScalar::new(0.3, 0.3),
    )?;
    let n = 1_000_000;
    println!("{:>6} {:>14} {:>14}", "scale", "mse (s=6)", "mse (s=3)");
    for (i, scale) in [0.5, 1.0, 2.0].into_iter().enumerate() {
        let model = base.with_scaled_means(scale)?;
        let samples = sample_products(&model, n, 2024, (i as u64) << 32, 0)?;
        let six = build_edgeworth(&model, 6)?;
        let three = build_edgeworth(&model, 3)?;
        let e6 = mse(|p| six.pdf(p), &samples, Estimator::default())?;
        let e3 = mse(|p| three.pdf(p), &samples, Estimator::default())?;
        println!("{scale:>6} {:>14.3e} {:>14.3e}", e6.mse, e3.mse);
    }
    Ok(())
}
