//! The spherical function is an eigenfunction of circle averaging: the
//! discrete circle mean converges to `P(cosh r) φ(base)` as samples grow.
//!
//! `cargo run --release --example verify_eigenfunction`

use spectral_chroma::geometry::Point;
use spectral_chroma::spectrum::verify_eigenfunction;
use spectral_chroma::spherical::{QuadratureSpec, SpectralParameter};

fn main() -> spectral_chroma::Result<()> {
    let quad = QuadratureSpec::default();
    let param = SpectralParameter::principal(2.0)?;
    let base = Point::new(0.7, 2.0)?;
    let r = 1.5;
    println!("{param}, r = {r}, base = (0.7, 2.0)");
    println!("{:>6} {:>22} {:>22} {:>10}", "n", "circle mean", "predicted", "residual");
    for n in [8, 16, 32, 64, 128, 256, 512, 1024, 2048] {
        let c = verify_eigenfunction(param, r, base, n, &quad)?;
        println!(
            "{n:>6} {:>22.15e} {:>22.15e} {:>10.2e}",
            c.circle_average, c.predicted, c.residual
        );
    }
    Ok(())
}
