//! Spherical function values next to the envelope `(r+1)e^{-r/2}` and the
//! independent ODE oracle.
//!
//! `cargo run --release --example eval_spherical`

use spectral_chroma::spherical::{envelope, eval_detailed, eval_oracle, QuadratureSpec, SpectralParameter};

fn main() -> spectral_chroma::Result<()> {
    let quad = QuadratureSpec::default();
    let params = [
        SpectralParameter::principal(0.0)?,
        SpectralParameter::principal(1.0)?,
        SpectralParameter::principal(5.0)?,
        SpectralParameter::principal(20.0)?,
        SpectralParameter::complementary(0.25)?,
        SpectralParameter::complementary(0.5)?,
    ];
    println!(
        "{:>12} {:>6} {:>22} {:>10} {:>10} {:>12}",
        "param", "r", "value", "err est", "|oracle|", "envelope"
    );
    for r in [0.5, 2.0, 4.0, 10.0] {
        for &p in &params {
            let e = eval_detailed(p, r, &quad)?;
            let oracle = eval_oracle(p, r)?;
            println!(
                "{:>12} {r:>6} {:>22.15e} {:>10.1e} {:>10.1e} {:>12.6}",
                p.to_string(),
                e.value,
                e.error_estimate,
                (e.value - oracle).abs(),
                envelope(r)
            );
        }
    }
    Ok(())
}
