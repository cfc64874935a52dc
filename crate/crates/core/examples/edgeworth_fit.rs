//! Edgeworth densities of increasing order against an empirical density, plus
//! the normalisation of each expansion on a quadrature grid.
//!
//! ```text
//! cargo run --release --example edgeworth_fit
//! ```

use trdetect::montecarlo::{empirical_pdf, sample_products, Estimator};
use trdetect::{build_edgeworth, ComplexScalar, ProductModel};

fn main() -> trdetect::Result<()> {
    let model = ProductModel::new(
        ComplexScalar::new(2.0, 2.5),
        ComplexScalar::new(2.1, 1.8),
        1.0,
        1.0,
        ComplexScalar::new(0.3, 0.3),
    )?;
    let samples = sample_products(&model, 1_000_000, 11, 0, 0)?;
    let hist = empirical_pdf(&samples, Estimator::default())?;
    let mu = model.summary().mean;
    let sd = model.summary().variance.sqrt();

    println!("{:>3} {:>12} {:>12} {:>12}", "s", "mass", "f_s(mean)", "min on grid");
    for s in 2..=8 {
        let e = build_edgeworth(&model, s)?;
        let (n, half) = (400, 10.0 * sd);
        let h = 2.0 * half / n as f64;
        let (mut mass, mut min) = (0.0, f64::INFINITY);
        for i in 0..n {
            for j in 0..n {
                let p = [mu.re - half + (i as f64 + 0.5) * h, mu.im - half + (j as f64 + 0.5) * h];
                let f = e.pdf(p);
                mass += f * h * h;
                min = min.min(f);
            }
        }
        println!("{s:>3} {mass:>12.6} {:>12.6} {min:>12.3e}", e.pdf([mu.re, mu.im]));
    }
    println!("histogram at the mean: {:.6}", hist.density([mu.re, mu.im]));
    Ok(())
}
