//! Density and chromatic bounds for the distance-`r` graph of the hyperbolic
//! plane, and the comparison with the spectral-gap bound on surfaces.
//!
//! `cargo run --example bounds_report`

use spectral_chroma::bounds::{compare, main_bounds};

fn main() -> spectral_chroma::Result<()> {
    println!(
        "{:>5} {:>14} {:>14} {:>12} {:>8} {:>6}",
        "r", "ind_exact", "ind_relaxed", "chi_lower", "pp_chi", "vacuous"
    );
    for r in [1.0, 2.0, 4.0, 6.0, 10.0, 15.0, 20.0, 30.0] {
        let b = main_bounds(r, false, None)?;
        let pp = b.pp_chi_upper.map_or_else(|| "-".to_string(), |v| v.to_string());
        println!(
            "{r:>5} {:>14.8} {:>14.8} {:>12.4} {pp:>8} {:>6}",
            b.ind_ratio_exact, b.ind_ratio_relaxed, b.chi_lower, b.vacuous
        );
    }

    println!();
    let r = 10.0;
    for (lambda, c) in [(2.0, None), (0.25, None), (100.0, None), (0.1, Some(0.5)), (0.1, Some(0.9))] {
        let report = compare(r, Some(lambda), c)?;
        let nevo = report.nevo.expect("lambda was given");
        println!(
            "r={r} lambda={lambda:<5} C={:<5} beta={:.6} alpha={:.6} main={:.6} winner={:?}",
            c.map_or_else(|| "-".to_string(), |c| c.to_string()),
            nevo.bound.beta,
            nevo.bound.alpha_bound,
            report.ind_ratio_exact,
            nevo.winner
        );
    }
    Ok(())
}
