//! Hoffman bounds for finite graphs. Pass an edge-list path to bound your own
//! graph; otherwise a few standard graphs are shown.
//!
//! `cargo run --example hoffman_graph -- examples/graphs/petersen.txt`

use spectral_chroma::bounds::{hoffman_finite, AdjacencyMatrix};

fn report(name: &str, g: &AdjacencyMatrix) -> spectral_chroma::Result<()> {
    let h = hoffman_finite(g, false)?;
    println!(
        "{name:<12} n={:<4} edges={:<5} M={:>8.4} m={:>8.4} alpha<={:.6} chi>={:.6}{}",
        h.n,
        h.edges,
        h.max_eigenvalue,
        h.min_eigenvalue,
        h.alpha_bound,
        h.chi_bound,
        if h.regular { "" } else { "  (irregular: alpha bound not guaranteed)" }
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        let g: AdjacencyMatrix = std::fs::read_to_string(&path)?.parse()?;
        report(&path, &g)?;
        return Ok(());
    }
    report("K5", &AdjacencyMatrix::complete(5))?;
    report("C5", &AdjacencyMatrix::cycle(5))?;
    report("C6", &AdjacencyMatrix::cycle(6))?;
    report("Petersen", &AdjacencyMatrix::petersen())?;
    let star = AdjacencyMatrix::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])?;
    report("star K1,4", &star)?;
    Ok(())
}
