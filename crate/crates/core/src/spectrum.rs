//! Spectral data of the circle-averaging operator `A_r`.
//!
//! On `L²(Γ\ℍ)` the spectrum of `A_r` lies in
//! `W(A_r) = { P_{-1/2+is}(cosh r) : s ∈ ℝ or is ∈ [−1/2, 1/2] }`.
//! Complementary values are positive, so the infimum is attained on the
//! principal series. [`scan_principal`] estimates it numerically;
//! [`full_range_floor`] gives the certified floor `−(r+1)e^{−r/2}`.
//!
//! The top of the spectrum is always 1 on a finite-covolume quotient (the
//! constant function), so `M` is assigned rather than scanned. On `ℍ`
//! itself the supremum over the principal series is strictly below 1.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::geometry::{circle_point, distance, Point};
use crate::spherical::{envelope, eval, QuadratureSpec, SpectralParameter};

/// Width in `s` of the final golden-section bracket.
pub const REFINE_TOL: f64 = 1e-9;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    pub r: f64,
    /// Top of the spectrum on a finite-covolume quotient; always 1.
    #[serde(rename = "M")]
    pub m_max: f64,
    /// Scanned infimum over the principal series (numerical, uncertified).
    pub m_numeric: f64,
    /// Certified floor `−(r+1)e^{−r/2}`.
    pub m_analytic: f64,
    pub argmin_s: f64,
    pub s_max_scanned: f64,
    pub grid_step: f64,
    /// Set when `envelope(r)` is below the quadrature resolution, so the
    /// scanned minimum cannot be told apart from 0.
    pub degenerate: bool,
}

/// One grid sample `(s, P_{-1/2+is}(cosh r))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub s: f64,
    pub value: f64,
}

/// `max(100, 40 / r)`.
pub fn default_s_max(r: f64) -> f64 {
    (40.0 / r).max(100.0)
}

/// `min(0.05, π / (8r))`: at least 16 samples per oscillation in `s`.
pub fn default_grid_step(r: f64) -> f64 {
    (std::f64::consts::PI / (8.0 * r)).min(0.05)
}

/// `−(r+1)e^{−r/2}`, a lower bound for every element of `W(A_r)`.
pub fn full_range_floor(r: f64) -> f64 {
    -envelope(r)
}

/// Scans `s ∈ [0, s_max]` on a uniform grid, then refines the smallest
/// sample by golden-section search on its neighbouring cells.
pub fn scan_principal(
    r: f64,
    s_max: f64,
    grid_step: f64,
    quad: &QuadratureSpec,
) -> Result<SpectrumSummary> {
    scan_principal_with_grid(r, s_max, grid_step, quad).map(|(summary, _)| summary)
}

/// As [`scan_principal`], also returning the grid samples.
pub fn scan_principal_with_grid(
    r: f64,
    s_max: f64,
    grid_step: f64,
    quad: &QuadratureSpec,
) -> Result<(SpectrumSummary, Vec<GridPoint>)> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(domain(format!("radius must be positive, got {r}")));
    }
    if !(s_max >= 1.0) || !s_max.is_finite() {
        return Err(domain(format!("s_max must be at least 1, got {s_max}")));
    }
    if !(grid_step > 0.0) || grid_step > s_max {
        return Err(domain(format!(
            "grid_step must be in (0, s_max], got {grid_step}"
        )));
    }
    quad.validate()?;

    let count = (s_max / grid_step).round() as usize;
    let grid: Vec<GridPoint> = (0..=count)
        .into_par_iter()
        .map(|k| {
            let s = (k as f64 * grid_step).min(s_max);
            let value = eval(SpectralParameter::principal(s)?, r, quad)?;
            Ok(GridPoint { s, value })
        })
        .collect::<Result<_>>()?;

    let (imin, _) = grid
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.value.total_cmp(&b.1.value))
        .expect("grid is non-empty");

    let lo = grid[imin.saturating_sub(1)].s;
    let hi = grid[(imin + 1).min(grid.len() - 1)].s;
    let f = |s: f64| eval(SpectralParameter::principal(s)?, r, quad);
    let (mut argmin_s, mut m_numeric) = golden_section(f, lo, hi)?;
    if grid[imin].value < m_numeric {
        argmin_s = grid[imin].s;
        m_numeric = grid[imin].value;
    }

    // The infimum over all of ℝ is at most 0 (values decay as s → ∞).
    if m_numeric > 0.0 {
        m_numeric = 0.0;
        argmin_s = s_max;
    }

    let summary = SpectrumSummary {
        r,
        m_max: 1.0,
        m_numeric,
        m_analytic: full_range_floor(r),
        argmin_s,
        s_max_scanned: s_max,
        grid_step,
        degenerate: envelope(r) < 100.0 * quad.abs_tol,
    };
    Ok((summary, grid))
}

fn golden_section<F>(f: F, mut a: f64, mut b: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while b - a > REFINE_TOL {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc < fd { (c, fc) } else { (d, fd) })
}

/// Outcome of a discrete check of `A_r φ = P_{-1/2+is}(cosh r) φ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenfunctionCheck {
    pub n_points: usize,
    /// Trapezoid average of `φ` over the circle of radius `r` about `base`.
    pub circle_average: f64,
    /// `eval(param, r) · φ(base)`.
    pub predicted: f64,
    pub residual: f64,
}

/// Averages the spherical function `φ(z) = eval(param, d(z, i))` over `n`
/// equally spaced points of the circle of radius `r` about `base` and
/// compares with the eigenvalue times `φ(base)`.
pub fn verify_eigenfunction(
    param: SpectralParameter,
    r: f64,
    base: Point,
    n_points: usize,
    quad: &QuadratureSpec,
) -> Result<EigenfunctionCheck> {
    if n_points < 8 {
        return Err(domain(format!("n_points must be at least 8, got {n_points}")));
    }
    if !(r > 0.0) {
        return Err(domain(format!("radius must be positive, got {r}")));
    }
    let phi = |z: Point| eval(param, distance(z, Point::ORIGIN), quad);

    let step = 2.0 * std::f64::consts::PI / n_points as f64;
    let samples: Vec<f64> = (0..n_points)
        .into_par_iter()
        .map(|j| phi(circle_point(base, r, j as f64 * step)?))
        .collect::<Result<_>>()?;
    let circle_average = samples.iter().sum::<f64>() / n_points as f64;
    let predicted = eval(param, r, quad)? * phi(base)?;

    Ok(EigenfunctionCheck {
        n_points,
        circle_average,
        predicted,
        residual: (circle_average - predicted).abs(),
    })
}
