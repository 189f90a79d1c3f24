//! The elliptic-billiard view of the Poristic family.
//!
//! Every Poristic triangle is a similar copy of a 3-periodic orbit of one
//! fixed elliptic billiard. Normalizing by the perimeter, the billiard is the
//! unit-perimeter ellipse with semi-axes given by [`cb_axes_normalized`].

use crate::family::{perimeter_closed_form, theta_double_angle, x9_closed_form, FamilySample, PoristicConfig};
use crate::geom::{Point, Similarity, Triangle};
use crate::{tol, Error, Result};

/// Billiard semi-axes a ≥ b > 0 with δ = √(a⁴ − a²b² + b⁴), c² = a² − b².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilliardConfig {
    a: f64,
    b: f64,
    delta: f64,
    c2: f64,
}

impl BilliardConfig {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && b > 0.0 && a >= b) {
            return Err(Error::InvalidBilliard { a, b });
        }
        let (a2, b2) = (a * a, b * b);
        let delta = (a2 * a2 - a2 * b2 + b2 * b2).sqrt();
        Ok(BilliardConfig { a, b, delta, c2: a2 - b2 })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    fn is_circular(&self) -> bool {
        self.c2 <= tol::CIRCULAR * self.a * self.a
    }
}

/// r/R of the billiard's 3-periodics (1/2 for a circle).
pub fn billiard_rho(cfg: &BilliardConfig) -> f64 {
    if cfg.is_circular() {
        return 0.5;
    }
    let (a2, b2) = (cfg.a * cfg.a, cfg.b * cfg.b);
    2.0 * (cfg.delta - b2) * (a2 - cfg.delta) / (cfg.c2 * cfg.c2)
}

/// Semi-axes (a_c, b_c) of the confocal caustic.
pub fn caustic_axes(cfg: &BilliardConfig) -> Result<(f64, f64)> {
    if cfg.is_circular() {
        return Err(Error::CircularBilliard);
    }
    let (a2, b2) = (cfg.a * cfg.a, cfg.b * cfg.b);
    Ok((cfg.a * (cfg.delta - b2) / cfg.c2, cfg.b * (a2 - cfg.delta) / cfg.c2))
}

/// Circumbilliard semi-axes and focal distance over the perimeter:
/// (a₉/L, b₉/L, c₉/L).
pub fn cb_axes_normalized(rho: f64) -> Result<(f64, f64, f64)> {
    if !(rho > 0.0 && rho <= 0.5) {
        return Err(Error::InvalidRatio { big_r: 1.0, small_r: rho });
    }
    // √(1−2ρ) is exactly 0 at ρ = 1/2; no limits needed.
    let s = (1.0 - 2.0 * rho).sqrt();
    let k = 2f64.sqrt() / (2.0 * rho + 8.0);
    let a = k * (rho + 1.0 + s).sqrt();
    let b = k * (rho + 1.0 - s).sqrt();
    // c² = a² − b² = k²·2s, without cancellation.
    let c = k * (2.0 * s).sqrt();
    Ok((a, b, c))
}

/// a₉/b₉ as a function of ρ.
pub fn cb_aspect_ratio(rho: f64) -> Result<f64> {
    let (a, b, _) = cb_axes_normalized(rho)?;
    Ok(a / b)
}

/// Similarity carrying a Poristic triangle onto the fixed billiard:
/// p ↦ Rot(θ)·(p − X9)/L.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityParams {
    /// L(t)
    pub scale: f64,
    /// θ(t)
    pub angle: f64,
    /// X9(t)
    pub translation: Point,
}

impl SimilarityParams {
    /// From the closed forms L(t), θ(t) (double-angle form) and X9(t).
    pub fn closed_form(cfg: &PoristicConfig, t: f64) -> Self {
        SimilarityParams {
            scale: perimeter_closed_form(cfg, t),
            angle: theta_double_angle(cfg, t),
            translation: x9_closed_form(cfg, t),
        }
    }

    /// The normalizing map (Poristic frame → billiard frame).
    pub fn to_billiard(&self) -> Similarity {
        let inv = 1.0 / self.scale;
        Similarity::new(inv, self.angle, (-self.translation).rotated(self.angle) * inv)
    }

    /// The inverse map, x = L·Rot(−θ)·(u, v) + X9.
    pub fn to_poristic(&self) -> Similarity {
        Similarity::new(self.scale, -self.angle, self.translation)
    }
}

/// Maps a sample onto the fixed unit-perimeter billiard.
pub fn normalize_sample(cfg: &PoristicConfig, s: &FamilySample) -> Result<Triangle> {
    s.triangle.transformed(&SimilarityParams::closed_form(cfg, s.t).to_billiard())
}

/// (u/a)² + (v/b)² − 1.
pub fn ellipse_residual(axes: (f64, f64), p: Point) -> f64 {
    (p.x / axes.0).powi(2) + (p.y / axes.1).powi(2) - 1.0
}

/// Largest difference, in radians, between the angles the two chords at a
/// vertex make with the ellipse normal there.
pub fn reflection_law_residual(axes: (f64, f64), t: &Triangle) -> f64 {
    (0..3)
        .map(|i| {
            let p = t.vertex(i);
            let n = Point::new(p.x / (axes.0 * axes.0), p.y / (axes.1 * axes.1)).unit();
            let u = (t.vertex(i + 2) - p).unit();
            let w = (t.vertex(i + 1) - p).unit();
            let angle = |v: Point| v.cross(n).abs().atan2(v.dot(n));
            (angle(u) - angle(w)).abs()
        })
        .fold(0.0, f64::max)
}

/// Circle predicted to carry the circumbilliard foci.
pub fn foci_locus(cfg: &PoristicConfig) -> crate::family::CircleLocus {
    let (big_r, d) = (cfg.big_r(), cfg.d());
    let (p, m, p3, m3) = (big_r + d, big_r - d, 3.0 * big_r + d, 3.0 * big_r - d);
    let radius_printed = if d == 0.0 { 0.0 } else { 4.0 * d * m * (d * big_r).sqrt() / (m3 * (m3 * p).sqrt()) };
    crate::family::CircleLocus {
        center: cfg.from_x3_frame(Point::new(m * d / p3, 0.0)),
        radius_printed,
        radius: (4.0 * d * big_r * p * m3).sqrt() / p3,
    }
}

/// One billiard-side identity: two expressions that should agree.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
}

impl CrossCheck {
    pub fn rel_diff(&self) -> f64 {
        let scale = self.lhs.abs().max(self.rhs.abs());
        if scale == 0.0 {
            0.0
        } else {
            (self.lhs - self.rhs).abs() / scale
        }
    }
}

/// Evaluates the (a, b)-forms of the aspect-ratio invariants against their
/// ρ-forms.
pub fn billiard_cross_checks(cfg: &BilliardConfig) -> Vec<CrossCheck> {
    let (a, b, delta, c2) = (cfg.a, cfg.b, cfg.delta, cfg.c2);
    let (a2, b2) = (a * a, b * b);
    let rho = billiard_rho(cfg);
    let s = (1.0 - 2.0 * rho).sqrt();
    let rho_form = (1.0 + s) / rho - 1.0;
    let exc_x3 = (2.0 * delta * (delta + c2) - a2 * b2).sqrt() / b2;
    let e1 = (2.0 * delta * delta + 2.0 * c2 * delta - a2 * b2).sqrt() / b2;
    let x5_first = (b2 + delta) * (delta + a2 - b2).sqrt() / (2.0 * b * a2);
    let x5_second = (a2 + delta) * (delta + b2 - a2).sqrt() / (2.0 * a * b2);
    let mut checks = vec![
        CrossCheck { name: "exc_inconic_x3", lhs: exc_x3, rhs: rho_form },
        CrossCheck { name: "circum_x1", lhs: e1, rhs: rho_form },
        CrossCheck { name: "exc_inconic_x5_dual", lhs: x5_first, rhs: x5_second },
        CrossCheck { name: "exc_inconic_x5", lhs: x5_first, rhs: 1.0 / (2.0 * rho).sqrt() },
    ];
    if let Ok(ratio) = cb_aspect_ratio(rho) {
        checks.push(CrossCheck { name: "circumbilliard_aspect", lhs: ratio, rhs: a / b });
    }
    checks
}
