//! Upper half-plane model of the hyperbolic plane.
//!
//! Points are `x + iy` with `y > 0`, isometries are elements of `PSL₂(ℝ)`
//! acting by Möbius transformations. The origin is `i`.
//!
//! All coordinates are `f64`. Circle parametrizations go through
//! `diag(e^{r/2}, e^{-r/2})`, whose entries lose meaningful precision past
//! `r = 40`; [`circle_point`] rejects larger radii.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Largest radius accepted by [`circle_point`].
pub const MAX_CIRCLE_RADIUS: f64 = 40.0;

/// A point `x + iy` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    /// The origin `i`.
    pub const ORIGIN: Point = Point { x: 0.0, y: 1.0 };

    /// Rejects `y <= 0` and non-finite coordinates. Boundary points are never clamped.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(domain(format!("point ({x}, {y}) has a non-finite coordinate")));
        }
        if y <= 0.0 {
            return Err(domain(format!(
                "point ({x}, {y}) is not in the upper half-plane (requires y > 0)"
            )));
        }
        Ok(Point { x, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Hyperbolic distance `acosh(1 + |p - q|² / (2 y_p y_q))`.
///
/// Evaluated as `ln1p(δ + sqrt(δ(2 + δ)))` so short distances keep full
/// relative precision. The expression is symmetric term by term, so
/// `distance(p, q)` and `distance(q, p)` agree bit for bit.
pub fn distance(p: Point, q: Point) -> f64 {
    let dx = q.x - p.x;
    let dy = q.y - p.y;
    let delta = (dx * dx + dy * dy) / (2.0 * (p.y * q.y));
    (delta + (delta * (2.0 + delta)).sqrt()).ln_1p()
}

/// An element of `PSL₂(ℝ)`, stored as a unit-determinant matrix
/// `[[a, b], [c, d]]` with a canonical sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoebiusMap {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl MoebiusMap {
    pub const IDENTITY: MoebiusMap = MoebiusMap {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Builds the map from any matrix with positive determinant, rescaling
    /// it to determinant one. `M` and `-M` produce equal maps.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return Err(domain("Möbius matrix has non-finite entries"));
        }
        let det = a * d - b * c;
        if !(det > 0.0) {
            return Err(domain(format!(
                "Möbius matrix must have positive determinant, got {det}"
            )));
        }
        let scale = det.sqrt().recip();
        Ok(Self::canonical(a * scale, b * scale, c * scale, d * scale))
    }

    fn canonical(a: f64, b: f64, c: f64, d: f64) -> Self {
        if c < 0.0 || (c == 0.0 && d < 0.0) {
            MoebiusMap {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            MoebiusMap { a, b, c, d }
        }
    }

    /// `a_r = diag(e^{r/2}, e^{-r/2})`, i.e. `z ↦ e^r z`.
    pub fn boost(r: f64) -> Self {
        let h = (0.5 * r).exp();
        Self::canonical(h, 0.0, 0.0, h.recip())
    }

    /// `k_φ = [[cos φ, sin φ], [-sin φ, cos φ]]`; rotates about `i` by `2φ`.
    pub fn rotation(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self::canonical(c, s, -s, c)
    }

    /// The affine map `z ↦ y z + x` sending the origin `i` to `p`.
    pub fn moving_origin_to(p: Point) -> Self {
        let sy = p.y.sqrt();
        Self::canonical(sy, p.x / sy, 0.0, sy.recip())
    }

    /// Matrix product `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &MoebiusMap) -> Self {
        Self::canonical(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }
}

/// Möbius action `(az + b) / (cz + d)`.
pub fn apply(g: &MoebiusMap, p: Point) -> Point {
    let MoebiusMap { a, b, c, d } = *g;
    // cz + d
    let re = c * p.x + d;
    let im = c * p.y;
    let norm = re * re + im * im;
    let x = ((a * p.x + b) * re + a * p.y * im) / norm;
    let y = p.y * g.determinant() / norm;
    Point { x, y }
}

/// Point at angle `theta` on the circle of radius `r` about `center`:
/// `g · k_{θ/2} · a_r · i` where `g · i = center`.
///
/// `theta` sweeps the circle once over `[0, 2π)`, starting at the point
/// directly above the center for the identity-frame case.
pub fn circle_point(center: Point, r: f64, theta: f64) -> Result<Point> {
    if !(r >= 0.0) {
        return Err(domain(format!("circle radius must be non-negative, got {r}")));
    }
    if r > MAX_CIRCLE_RADIUS {
        return Err(domain(format!(
            "circle radius {r} exceeds the supported range r <= {MAX_CIRCLE_RADIUS}"
        )));
    }
    if !theta.is_finite() {
        return Err(domain("circle angle must be finite"));
    }
    let frame = MoebiusMap::moving_origin_to(center)
        .compose(&MoebiusMap::rotation(0.5 * theta))
        .compose(&MoebiusMap::boost(r));
    Ok(apply(&frame, Point::ORIGIN))
}
