//! Points on a hyperbolic circle, and the isometry invariance of distance.
//!
//! `cargo run --example circle_geometry`

use spectral_chroma::geometry::{apply, circle_point, distance, MoebiusMap, Point};

fn main() -> spectral_chroma::Result<()> {
    let center = Point::new(0.7, 2.0)?;
    let r = 1.5;
    println!("circle of radius {r} about ({}, {})", center.x(), center.y());
    println!("{:>8} {:>12} {:>12} {:>14}", "theta", "x", "y", "d(z, center)");
    for k in 0..8 {
        let theta = k as f64 * std::f64::consts::FRAC_PI_4;
        let z = circle_point(center, r, theta)?;
        println!(
            "{theta:>8.4} {:>12.6} {:>12.6} {:>14.12}",
            z.x(),
            z.y(),
            distance(z, center)
        );
    }

    let g = MoebiusMap::new(2.0, 1.0, 1.0, 1.0)?
        .compose(&MoebiusMap::rotation(0.3))
        .compose(&MoebiusMap::boost(0.8));
    let p = Point::new(-0.4, 0.25)?;
    let q = Point::new(3.0, 5.0)?;
    println!();
    println!("g = {:?}, det = {}", g.entries(), g.determinant());
    println!("d(p, q)       = {:.15}", distance(p, q));
    println!("d(g p, g q)   = {:.15}", distance(apply(&g, p), apply(&g, q)));
    Ok(())
}
