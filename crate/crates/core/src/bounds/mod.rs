//! Hoffman-type bounds.
//!
//! For a bounded self-adjoint operator `A` with numerical range in
//! `[m, M]`, a set `X` with `‖A 1_X − R 1_X‖ = ε` has
//!
//! ```text
//! α(A) <= (−m + 2ε) / (R − m − ε)      if R − m − ε > 0,
//! χ_A(X) >= (M − m) / (−m).
//! ```
//!
//! For the circle-averaging operator on a finite-covolume quotient of the
//! hyperbolic plane, `M = R = 1`, `ε = 0` and `m >= −(r+1)e^{−r/2}`, which
//! gives the distance-`r`-avoiding density bound in [`main_bounds`].

pub mod graph;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::spectrum::SpectrumSummary;
use crate::spherical::envelope;

pub use graph::{hoffman_finite, AdjacencyMatrix, GraphSpectrumResult};

/// Ties between the two independence bounds in [`compare`] are decided at
/// this absolute tolerance.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// How a reported number was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Closed-form bound that holds unconditionally.
    CertifiedAnalytic,
    /// Obtained by numerical computation (quadrature, grid scan, eigensolve).
    NumericalScan,
    /// Direct evaluation of a stated formula whose inputs the caller supplies.
    Formula,
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::CertifiedAnalytic => "certified-analytic",
            Provenance::NumericalScan => "numerical-scan",
            Provenance::Formula => "formula",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HoffmanInputs {
    #[serde(rename = "M")]
    pub max: f64,
    #[serde(rename = "m")]
    pub min: f64,
    #[serde(rename = "R")]
    pub r_value: f64,
    pub epsilon: f64,
}

impl HoffmanInputs {
    pub fn new(max: f64, min: f64, r_value: f64, epsilon: f64) -> Result<Self> {
        let inputs = HoffmanInputs {
            max,
            min,
            r_value,
            epsilon,
        };
        inputs.validate()?;
        Ok(inputs)
    }

    fn validate(&self) -> Result<()> {
        if ![self.max, self.min, self.r_value, self.epsilon]
            .iter()
            .all(|v| v.is_finite())
        {
            return Err(domain("Hoffman inputs must be finite"));
        }
        if self.min > self.max {
            return Err(domain(format!("m = {} exceeds M = {}", self.min, self.max)));
        }
        if self.epsilon < 0.0 {
            return Err(domain(format!("epsilon must be non-negative, got {}", self.epsilon)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OperatorBound {
    pub alpha_bound: f64,
    pub chi_bound: f64,
    /// `alpha_bound > 1`: true but uninformative.
    pub alpha_vacuous: bool,
    /// `chi_bound < 1`: true but uninformative.
    pub chi_vacuous: bool,
}

/// Evaluates the operator Hoffman bound. Fails, naming the hypothesis, when
/// `R − m − ε <= 0` or `m >= 0`.
pub fn hoffman_operator(inputs: &HoffmanInputs) -> Result<OperatorBound> {
    inputs.validate()?;
    let HoffmanInputs {
        max,
        min,
        r_value,
        epsilon,
    } = *inputs;
    let denominator = r_value - min - epsilon;
    if !(denominator > 0.0) {
        return Err(Error::Hypothesis("R - m - epsilon > 0"));
    }
    if !(min < 0.0) {
        return Err(Error::Hypothesis("m < 0"));
    }
    let alpha_bound = (-min + 2.0 * epsilon) / denominator;
    let chi_bound = (max - min) / -min;
    Ok(OperatorBound {
        alpha_bound,
        chi_bound,
        alpha_vacuous: alpha_bound > 1.0,
        chi_vacuous: chi_bound < 1.0,
    })
}

/// `5 (⌈r / ln 4⌉ + 1)`, the explicit upper bound on `χ(X(r))` valid for
/// `r > 5`; `None` otherwise.
pub fn pp_chi_upper(r: f64) -> Option<f64> {
    (r > 5.0).then(|| 5.0 * ((r / 4f64.ln()).ceil() + 1.0))
}

/// Which independence-ratio bound is smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Winner {
    MainTheorem,
    Nevo,
    Tie,
}

/// The bound `μ(I)/μ(X) <= β/(1 + β)` from the operator norm `β` of `A_r`
/// on mean-zero functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NevoBound {
    pub lambda: f64,
    /// Decay exponent `C`; only used when `λ < 1/4`.
    pub c_exponent: Option<f64>,
    pub beta: f64,
    pub alpha_bound: f64,
}

/// `β` from the spectral gap `λ`:
///
/// ```text
/// λ >= 1/4:  β = min{ (r/2) e^{−r/2},  (1 + (1+4λ)^{−1/2}) e^{−r/2} }
/// λ <  1/4:  β = min{ (r/2) e^{−Cr/2}, (1 + |1+4λ|^{−1/2}) e^{−Cr/2} },  0 <= C < 1
/// ```
///
/// `C` is not determined by `λ` alone, so it must be supplied in the
/// second case and is ignored in the first.
pub fn nevo_beta(r: f64, lambda: f64, c_exponent: Option<f64>) -> Result<NevoBound> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(domain(format!("radius must be positive, got {r}")));
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(domain(format!("lambda must be positive, got {lambda}")));
    }
    let c = if lambda >= 0.25 {
        None
    } else {
        match c_exponent {
            None => {
                return Err(domain(
                    "the decay exponent C is required when lambda < 1/4",
                ))
            }
            Some(c) if !(0.0..1.0).contains(&c) => {
                return Err(domain(format!("C must lie in [0, 1), got {c}")));
            }
            Some(c) => Some(c),
        }
    };
    let decay = (-0.5 * c.unwrap_or(1.0) * r).exp();
    let gap_term = 1.0 + (1.0 + 4.0 * lambda).abs().sqrt().recip();
    let beta = (0.5 * r).min(gap_term) * decay;
    Ok(NevoBound {
        lambda,
        c_exponent: c,
        beta,
        alpha_bound: beta / (1.0 + beta),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NevoComparison {
    #[serde(flatten)]
    pub bound: NevoBound,
    pub winner: Winner,
}

/// All bounds for a radius `r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub r: f64,
    /// The value of `m(A_r)` fed to the Hoffman bound.
    pub m_used: f64,
    pub m_provenance: Provenance,
    /// `x / (1 + x)` with `x = −m_used`.
    pub ind_ratio_exact: f64,
    /// `(r + 1) e^{−r/2}`.
    pub ind_ratio_relaxed: f64,
    /// `e^{r/2} / (r + 1)`.
    pub chi_lower: f64,
    /// Set when the relaxed ratio exceeds 1 (equivalently `chi_lower < 1`).
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pp_chi_upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nevo: Option<NevoComparison>,
}

/// The distance-`r`-avoiding density bound and its chromatic dual.
///
/// By default `m = −(r+1)e^{−r/2}`, which is certified. With
/// `use_scanned_m`, the scanned infimum from `summary` is used instead and
/// the result is labelled as numerical.
pub fn main_bounds(
    r: f64,
    use_scanned_m: bool,
    summary: Option<&SpectrumSummary>,
) -> Result<BoundReport> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(domain(format!("radius must be positive, got {r}")));
    }
    let relaxed = envelope(r);
    let (m_used, m_provenance) = if use_scanned_m {
        let summary = summary.ok_or_else(|| domain("use_scanned_m requires a spectrum summary"))?;
        if summary.r != r {
            return Err(domain(format!(
                "spectrum summary is for r = {}, not r = {r}",
                summary.r
            )));
        }
        (summary.m_numeric, Provenance::NumericalScan)
    } else {
        (-relaxed, Provenance::CertifiedAnalytic)
    };

    let bound = hoffman_operator(&HoffmanInputs::new(1.0, m_used, 1.0, 0.0)?)?;
    let chi_lower = ((0.5 * r) - (r + 1.0).ln()).exp();

    Ok(BoundReport {
        r,
        m_used,
        m_provenance,
        ind_ratio_exact: bound.alpha_bound,
        ind_ratio_relaxed: relaxed,
        chi_lower,
        vacuous: relaxed > 1.0,
        pp_chi_upper: pp_chi_upper(r),
        nevo: None,
    })
}

/// [`main_bounds`] plus, when `lambda` is given, the comparison bound and
/// which of the two is sharper.
pub fn compare(r: f64, lambda: Option<f64>, c_exponent: Option<f64>) -> Result<BoundReport> {
    let mut report = main_bounds(r, false, None)?;
    if let Some(lambda) = lambda {
        let bound = nevo_beta(r, lambda, c_exponent)?;
        let diff = bound.alpha_bound - report.ind_ratio_exact;
        let winner = if diff.abs() <= TIE_TOLERANCE {
            Winner::Tie
        } else if diff < 0.0 {
            Winner::Nevo
        } else {
            Winner::MainTheorem
        };
        report.nevo = Some(NevoComparison { bound, winner });
    }
    Ok(report)
}
