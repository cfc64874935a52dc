//! Numerical Fourier inversion of the characteristic function against the
//! closed-form zero-mean density.
//!
//! ```text
//! cargo run --release --example cf_inversion
//! ```

use std::time::Instant;

use trdetect::{cf_invert_pdf, null_pdf, ComplexScalar, ProductModel, QuadratureSpec};

fn main() -> trdetect::Result<()> {
    let spec = QuadratureSpec::default();
    for (sx, sy, rho) in [(1.0, 1.0, (0.0, 0.0)), (1.0, 1.0, (0.3, 0.3)), (0.7, 1.6, (-0.5, 0.4))] {
        let model = ProductModel::centered(sx, sy, ComplexScalar::new(rho.0, rho.1))?;
        println!("σx = {sx}, σy = {sy}, ρ = {rho:?}");
        for (r, angle) in [(0.2, 0.3), (0.7, 2.0), (1.5, -1.0), (3.0, 4.0), (5.0, 1.1)] {
            let p = ComplexScalar::from_polar(r, angle);
            let start = Instant::now();
            let numeric = cf_invert_pdf(&model, p, &spec)?;
            let exact = null_pdf(&model, p)?;
            println!(
                "  |p| = {r:<3}  exact {exact:.8e}  inverted {numeric:.8e}  rel err {:.1e}  ({:.1?})",
                (numeric / exact - 1.0).abs(),
                start.elapsed()
            );
        }
    }
    Ok(())
}
