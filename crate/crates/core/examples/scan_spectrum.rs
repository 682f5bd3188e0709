//! Infimum of the spectrum of the circle-averaging operator, scanned over the
//! principal series, against the certified floor `-(r+1)e^{-r/2}`.
//!
//! `cargo run --release --example scan_spectrum`

use spectral_chroma::spectrum::{default_grid_step, default_s_max, scan_principal};
use spectral_chroma::spherical::QuadratureSpec;

fn main() -> spectral_chroma::Result<()> {
    let quad = QuadratureSpec::default();
    println!(
        "{:>5} {:>3} {:>20} {:>12} {:>14} {:>8}",
        "r", "M", "m_numeric", "argmin_s", "m_analytic", "ratio"
    );
    for r in [1.0, 2.0, 4.0, 8.0, 16.0] {
        let s = scan_principal(r, default_s_max(r), default_grid_step(r), &quad)?;
        println!(
            "{r:>5} {:>3} {:>20.15} {:>12.8} {:>14.8} {:>8.4}",
            s.m_max,
            s.m_numeric,
            s.argmin_s,
            s.m_analytic,
            s.m_numeric / s.m_analytic
        );
    }
    Ok(())
}
