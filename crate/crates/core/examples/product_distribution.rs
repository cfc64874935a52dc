//! Closed-form facts about `P = X Y*`: mean, variance, characteristic function
//! and the zero-mean density, cross-checked against direct sampling.
//!
//! ```text
//! cargo run --release --example product_distribution
//! ```

use trdetect::montecarlo::{sample_product, RngStream};
use trdetect::{null_pdf, ComplexScalar, ProductModel};

fn main() -> trdetect::Result<()> {
    let model = ProductModel::new(
        ComplexScalar::new(2.0, 2.5),
        ComplexScalar::new(2.1, 1.8),
        1.0,
        1.0,
        ComplexScalar::new(0.3, 0.3),
    )?;
    let summary = model.summary();
    println!("mean     {:.6}", summary.mean);
    println!("variance {:.6}", summary.variance);

    let n = 1_000_000;
    let mut rng = RngStream::new(1, 0).rng();
    let draws: Vec<ComplexScalar> = (0..n).map(|_| sample_product(&model, &mut rng)).collect();
    let mean = draws.iter().sum::<ComplexScalar>() / n as f64;
    let var = draws.iter().map(|p| (p - mean).norm_sqr()).sum::<f64>() / (n - 1) as f64;
    println!("sampled  {mean:.6}, variance {var:.6}");

    println!("\ncharacteristic function along t = r e^(iπ/3):");
    for r in [0.0, 0.25, 0.5, 1.0, 2.0] {
        let t = ComplexScalar::from_polar(r, std::f64::consts::FRAC_PI_3);
        let emp = draws
            .iter()
            .map(|p| ComplexScalar::new(0.0, (t.conj() * p).re).exp())
            .sum::<ComplexScalar>()
            / n as f64;
        println!("  r = {r:<4}  exact {:.5}  empirical {:.5}", model.char_fn(t), emp);
    }

    let null = ProductModel::centered(1.0, 1.0, ComplexScalar::new(0.3, 0.3))?;
    println!("\nzero-mean density, ρ = 0.3+0.3i:");
    for p in [(0.25, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, -1.0), (2.0, 1.0)] {
        let p = ComplexScalar::new(p.0, p.1);
        println!("  f({p}) = {:.6e}", null_pdf(&null, p)?);
    }
    Ok(())
}
