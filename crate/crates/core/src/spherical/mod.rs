//! Spherical functions of the hyperbolic plane.
//!
//! The eigenvalue of the circle-averaging operator `A_r` on the spherical
//! function with parameter `1/2 + is` is the conical Legendre value
//!
//! ```text
//! P_{-1/2+is}(cosh r) = 1/(√2 π) ∫_{-r}^{r} e^{isx} / √(cosh r − cosh x) dx.
//! ```
//!
//! [`eval`] folds the integral onto `[0, r]`, removes the inverse square
//! root at `x = r` with the substitution `x = r − u²`, and integrates with
//! adaptive Gauss–Kronrod panels whose width in `x` is capped so that each
//! panel sees a bounded number of oscillations. [`oracle::eval_oracle`]
//! computes the same values from the radial ODE instead.

pub mod oracle;

use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::quadrature;

pub use oracle::eval_oracle;

/// Which part of the unitary dual a parameter lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    /// `1/2 + is` with `s` real.
    Principal,
    /// `1/2 + σ` with `σ ∈ [−1/2, 1/2]`; `σ = ±1/2` is the trivial parameter.
    Complementary,
}

/// A spectral parameter, stored in canonical form `value >= 0`.
///
/// The eigenvalue is even in the parameter, so only `|value|` matters; the
/// sign the caller supplied is kept for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralParameter {
    kind: SeriesKind,
    value: f64,
    negative_input: bool,
}

impl SpectralParameter {
    pub fn principal(s: f64) -> Result<Self> {
        if !s.is_finite() {
            return Err(domain(format!("principal parameter s must be finite, got {s}")));
        }
        Ok(SpectralParameter {
            kind: SeriesKind::Principal,
            value: s.abs(),
            negative_input: s.is_sign_negative() && s != 0.0,
        })
    }

    pub fn complementary(sigma: f64) -> Result<Self> {
        if !(sigma.abs() <= 0.5) {
            return Err(domain(format!(
                "complementary parameter requires |sigma| <= 1/2, got {sigma}"
            )));
        }
        Ok(SpectralParameter {
            kind: SeriesKind::Complementary,
            value: sigma.abs(),
            negative_input: sigma.is_sign_negative() && sigma != 0.0,
        })
    }

    /// The constant function, eigenvalue 1 for every `r`.
    pub fn trivial() -> Self {
        SpectralParameter {
            kind: SeriesKind::Complementary,
            value: 0.5,
            negative_input: false,
        }
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    /// `|s|` or `|σ|`.
    pub fn value(&self) -> f64 {
        self.value
    }

    /// The value as originally supplied, sign included.
    pub fn signed_value(&self) -> f64 {
        if self.negative_input {
            -self.value
        } else {
            self.value
        }
    }

    /// Laplace eigenvalue `1/4 + s²` (principal) or `1/4 − σ²` (complementary).
    /// This is also the constant term of the radial ODE.
    pub fn laplace_eigenvalue(&self) -> f64 {
        match self.kind {
            SeriesKind::Principal => 0.25 + self.value * self.value,
            SeriesKind::Complementary => 0.25 - self.value * self.value,
        }
    }
}

impl fmt::Display for SpectralParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SeriesKind::Principal => write!(f, "s={}", self.signed_value()),
            SeriesKind::Complementary => write!(f, "sigma={}", self.signed_value()),
        }
    }
}

/// Quadrature settings for [`eval`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Panels are at most `oscillation_panel_factor · π / max(s, 1)` wide in `x`.
    pub oscillation_panel_factor: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            max_subdivisions: 1 << 16,
            oscillation_panel_factor: 0.5,
        }
    }
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, max_subdivisions: usize, oscillation_panel_factor: f64) -> Result<Self> {
        let spec = QuadratureSpec {
            abs_tol,
            max_subdivisions,
            oscillation_panel_factor,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(domain(format!("abs_tol must be positive, got {}", self.abs_tol)));
        }
        if self.max_subdivisions < 1 {
            return Err(domain("max_subdivisions must be at least 1"));
        }
        if !(self.oscillation_panel_factor > 0.0) || !self.oscillation_panel_factor.is_finite() {
            return Err(domain(format!(
                "oscillation_panel_factor must be positive, got {}",
                self.oscillation_panel_factor
            )));
        }
        Ok(())
    }
}

/// `(r + 1) e^{−r/2}`, a bound on `|P_{-1/2+is}(cosh r)|` uniform in real `s`.
pub fn envelope(r: f64) -> f64 {
    if r > 700.0 {
        ((r + 1.0).ln() - 0.5 * r).exp()
    } else {
        (r + 1.0) * (-0.5 * r).exp()
    }
}

/// `ln(sinh a)` for `a > 0`, without overflow.
fn ln_sinh(a: f64) -> f64 {
    if a > 1.0 {
        a + (-(-2.0 * a).exp()).ln_1p() - std::f64::consts::LN_2
    } else {
        a.sinh().ln()
    }
}

/// `ln(sinh(y) / y)` for `y >= 0`.
fn ln_sinhc(y: f64) -> f64 {
    if y < 1e-4 {
        // sinh(y)/y = 1 + y²/6 + y⁴/120 + …
        (y * y / 6.0).ln_1p()
    } else {
        ln_sinh(y) - y.ln()
    }
}

/// Integrand in the substituted variable `u`, with `x = r − u²`.
///
/// Uses `cosh r − cosh x = 2 sinh(r − u²/2) sinh(u²/2)`, which has no
/// cancellation near the endpoint. The folded kernel is `2 cos(sx)` or
/// `2 cosh(σx)` and `dx = −2u du`; everything is assembled in log space.
fn integrand(kind: SeriesKind, value: f64, r: f64, u: f64) -> f64 {
    let y = 0.5 * u * u;
    let x = (r - u * u).max(0.0);
    let log_denominator = 0.5 * (ln_sinh(r - y) + ln_sinhc(y));
    match kind {
        SeriesKind::Principal => 4.0 * (value * x).cos() * (-log_denominator).exp(),
        SeriesKind::Complementary => {
            let t = value * x;
            // 2 cosh(t) = e^t (1 + e^{−2t})
            2.0 * (1.0 + (-2.0 * t).exp()) * (t - log_denominator).exp()
        }
    }
}

/// Breakpoints in `u` for panels of equal width `h` in `x`, measured from
/// the singular endpoint `x = r`.
fn panel_breaks(r: f64, h: f64) -> Vec<f64> {
    let full = (r / h).floor() as usize;
    let mut breaks: Vec<f64> = (0..=full).map(|k| (k as f64 * h).sqrt()).collect();
    let end = r.sqrt();
    if breaks.len() > 1 && end - breaks[breaks.len() - 1] <= 1e-12 * end {
        breaks.pop();
    }
    breaks.push(end);
    breaks
}

/// A quadrature result with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: f64,
    /// Estimated absolute error of `value`.
    pub error_estimate: f64,
    /// Panels used, including the initial partition.
    pub subdivisions: usize,
}

/// `P_{-1/2+is}(cosh r)` (principal) or `P_{-1/2+σ}(cosh r)` (complementary).
///
/// `r = 0` returns the limit value 1. The result is within `quad.abs_tol` of
/// the true value unless the subdivision budget runs out, in which case
/// [`Error::ToleranceNotReached`] is returned.
pub fn eval(param: SpectralParameter, r: f64, quad: &QuadratureSpec) -> Result<f64> {
    eval_detailed(param, r, quad).map(|e| e.value)
}

/// [`eval`] with the quadrature diagnostics.
pub fn eval_detailed(param: SpectralParameter, r: f64, quad: &QuadratureSpec) -> Result<Evaluation> {
    quad.validate()?;
    if !(r >= 0.0) || !r.is_finite() {
        return Err(domain(format!("radius must be finite and non-negative, got {r}")));
    }
    let exact = Evaluation {
        value: 1.0,
        error_estimate: 0.0,
        subdivisions: 0,
    };
    if r == 0.0 {
        return Ok(exact);
    }
    if param.kind == SeriesKind::Complementary && param.value == 0.5 {
        return Ok(exact);
    }

    let freq = match param.kind {
        SeriesKind::Principal => param.value.max(1.0),
        SeriesKind::Complementary => 1.0,
    };
    let h = quad.oscillation_panel_factor * PI / freq;
    let panels = (r / h).ceil();
    if panels > quad.max_subdivisions as f64 {
        return Err(Error::ToleranceNotReached {
            estimate: f64::INFINITY,
            requested: quad.abs_tol,
            subdivisions: panels as usize,
        });
    }
    let breaks = panel_breaks(r, h);

    let norm = SQRT_2 * PI;
    let est = quadrature::integrate(
        |u| integrand(param.kind, param.value, r, u),
        &breaks,
        quad.abs_tol * norm,
        quad.max_subdivisions,
    )?;
    Ok(Evaluation {
        value: est.value / norm,
        error_estimate: est.error / norm,
        subdivisions: est.subdivisions,
    })
}
