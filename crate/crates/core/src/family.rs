//! The Poristic family: triangles sharing a fixed incircle and circumcircle.
//!
//! Canonical frame: origin at X40, X3 = (d, 0), X1 = (2d, 0). Several of the
//! closed forms below are naturally stated with X3 at the origin; those are
//! shifted by `+d` on x and say so.

use std::f64::consts::PI;

use crate::centers::{self, CenterId};
use crate::conics::{circumconic_centered, inconic_centered};
use crate::geom::{wrap_half_turn, Circle, ConicMatrix, Line, Point, Triangle};
use crate::{tol, Error, Result};

/// Circumradius R, inradius r and center distance d, tied by d² = R(R−2r).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoristicConfig {
    big_r: f64,
    r: f64,
    d: f64,
}

impl PoristicConfig {
    pub fn from_radii(big_r: f64, r: f64) -> Result<Self> {
        if !big_r.is_finite() || !r.is_finite() {
            return Err(Error::NonFinite);
        }
        if big_r <= 0.0 || r <= 0.0 || r > 0.5 * big_r {
            return Err(Error::InvalidRatio { big_r, small_r: r });
        }
        let d = (big_r * (big_r - 2.0 * r)).sqrt();
        Ok(PoristicConfig { big_r, r, d })
    }

    /// R = 1, r = ρ.
    pub fn from_rho(rho: f64) -> Result<Self> {
        Self::from_radii(1.0, rho)
    }

    pub fn big_r(&self) -> f64 {
        self.big_r
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn rho(&self) -> f64 {
        self.r / self.big_r
    }

    pub fn x1(&self) -> Point {
        Point::new(2.0 * self.d, 0.0)
    }

    pub fn x3(&self) -> Point {
        Point::new(self.d, 0.0)
    }

    pub fn x40(&self) -> Point {
        Point::ORIGIN
    }

    pub fn circumcircle(&self) -> Circle {
        Circle { center: self.x3(), radius: self.big_r }
    }

    pub fn incircle(&self) -> Circle {
        Circle { center: self.x1(), radius: self.r }
    }

    /// Locus of the excenters: center X40, radius 2R.
    pub fn excenter_circle(&self) -> Circle {
        Circle { center: self.x40(), radius: 2.0 * self.big_r }
    }

    /// Maps a point given with X3 at the origin into the canonical frame.
    pub fn from_x3_frame(&self, p: Point) -> Point {
        Point::new(p.x + self.d, p.y)
    }

    pub fn to_x3_frame(&self, p: Point) -> Point {
        Point::new(p.x - self.d, p.y)
    }

    fn require_axis(&self) -> Result<()> {
        if self.d < 1e-12 * self.big_r {
            Err(Error::AxisAtInfinity)
        } else {
            Ok(())
        }
    }
}

/// One member of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySample {
    pub t: f64,
    pub triangle: Triangle,
    pub excentral: Triangle,
    pub omega: f64,
    /// Sum of side lengths computed from the vertices.
    pub perimeter: f64,
}

/// ω(t) = √(R² − (d cos t + r)²).
pub fn omega(cfg: &PoristicConfig, t: f64) -> f64 {
    let (big_r, r, d) = (cfg.big_r, cfg.r, cfg.d);
    (big_r * big_r - (d * t.cos() + r).powi(2)).sqrt()
}

/// P1, P2, P3 in the order of the closed-form parametrization (clockwise).
pub fn vertices(cfg: &PoristicConfig, t: f64) -> [Point; 3] {
    let (big_r, r, d) = (cfg.big_r, cfg.r, cfg.d);
    let (c, s) = (t.cos(), t.sin());
    let w = omega(cfg, t);
    let k = d * c + r;
    let den = big_r * big_r - 2.0 * d * big_r * c + d * d;
    [
        Point::new(c * k - w * s + d, k * s + w * c),
        Point::new(c * k + w * s + d, k * s - w * c),
        Point::new(
            big_r * (2.0 * d * big_r - (big_r * big_r + d * d) * c) / den + d,
            big_r * (d * d - big_r * big_r) * s / den,
        ),
    ]
}

pub fn sample(cfg: &PoristicConfig, t: f64) -> Result<FamilySample> {
    let [p1, p2, p3] = vertices(cfg, t);
    let triangle = Triangle::new(p1, p2, p3)?;
    let excentral = centers::excentral(&triangle)?;
    Ok(FamilySample { t, triangle, excentral, omega: omega(cfg, t), perimeter: triangle.perimeter() })
}

/// `n` uniform parameters on [0, 2π).
pub fn t_grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| 2.0 * PI * k as f64 / n as f64).collect()
}

/// Perimeter from the closed form in t.
pub fn perimeter_closed_form(cfg: &PoristicConfig, t: f64) -> f64 {
    let (big_r, d) = (cfg.big_r, cfg.d);
    let c = t.cos();
    (3.0 * big_r * big_r - 4.0 * d * big_r * c + d * d) * (3.0 * big_r * big_r + 2.0 * d * big_r * c - d * d).sqrt()
        / (big_r * (big_r * big_r - 2.0 * d * big_r * c + d * d).sqrt())
}

/// Mittenpunkt X9(t) from its closed form (stated with X3 at the origin,
/// shifted here by +d).
pub fn x9_closed_form(cfg: &PoristicConfig, t: f64) -> Point {
    let (big_r, r, d) = (cfg.big_r, cfg.r, cfg.d);
    let (c, s) = (t.cos(), t.sin());
    let x = d * (4.0 * d * c * c * (big_r * c - d) - r * (3.0 * d * c + big_r) - r * r)
        / ((4.0 * big_r + r) * (d * c - big_r + r));
    let y = 4.0 * big_r * d * d * s * (big_r * big_r - (2.0 * big_r * c - d).powi(2))
        / ((big_r * big_r + d * d - 2.0 * d * big_r * c) * (9.0 * big_r * big_r - d * d));
    cfg.from_x3_frame(Point::new(x, y))
}

/// A circular locus with both the literature radius and the measured one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleLocus {
    pub center: Point,
    /// Radius as printed in the literature.
    pub radius_printed: f64,
    /// Radius that the constructed points actually lie at.
    pub radius: f64,
}

impl CircleLocus {
    pub fn circle(&self) -> Circle {
        Circle { center: self.center, radius: self.radius }
    }
}

/// The circle traced by X9.
pub fn x9_locus(cfg: &PoristicConfig) -> CircleLocus {
    let (big_r, d) = (cfg.big_r, cfg.d);
    let den = 9.0 * big_r * big_r - d * d;
    CircleLocus {
        center: cfg.from_x3_frame(Point::new(d * (3.0 * big_r * big_r + d * d) / den, 0.0)),
        radius_printed: big_r * d * d * big_r / den,
        radius: 4.0 * big_r * d * d / den,
    }
}

/// θ(t) from the single-angle tangent as printed, in (−π/2, π/2].
///
/// This expression does not track the circumbilliard axis; it is kept for
/// validation reports only. Use [`theta_double_angle`].
pub fn theta_closed_form(cfg: &PoristicConfig, t: f64) -> f64 {
    let (big_r, d) = (cfg.big_r, cfg.d);
    let (c, s) = (t.cos(), t.sin());
    wrap_half_turn(((1.0 - c) * (big_r + d - 2.0 * big_r * c)).atan2((2.0 * big_r * c + big_r - d) * s))
}

/// θ(t) from tan 2θ, in (−π/2, π/2]. The circumbilliard major axis sits at
/// angle −θ.
pub fn theta_double_angle(cfg: &PoristicConfig, t: f64) -> f64 {
    let (big_r, d) = (cfg.big_r, cfg.d);
    let (c, s) = (t.cos(), t.sin());
    let k = (2.0 * big_r * c - d).powi(2);
    let num = s * (big_r * big_r - k);
    let den = c * (k - 3.0 * big_r * big_r) + 2.0 * d * big_r;
    wrap_half_turn(0.5 * num.atan2(den))
}

/// θ measured from the constructed circumbilliard; 0 when it is a circle.
pub fn theta_constructive(s: &FamilySample) -> Result<f64> {
    let e9 = named_conic(s, NamedConic::E9)?.canonicalize()?;
    Ok(if e9.is_circle() { 0.0 } else { wrap_half_turn(-e9.angle) })
}

/// The stationary antiorthic axis, x = (3R²+d²)/(2d) (that is,
/// (3R²−d²)/(2d) measured from X3).
pub fn antiorthic_axis(cfg: &PoristicConfig) -> Result<Line> {
    Ok(Line::vertical(axis_foot(cfg)?.x))
}

/// Intersection of the antiorthic axis with the x-axis (this is X1155).
pub fn axis_foot(cfg: &PoristicConfig) -> Result<Point> {
    cfg.require_axis()?;
    let (big_r, d) = (cfg.big_r, cfg.d);
    Ok(cfg.from_x3_frame(Point::new((3.0 * big_r * big_r - d * d) / (2.0 * d), 0.0)))
}

/// The two equal-power circles about (−R, 0) (from X3): the first shares the
/// incircle's power along the antiorthic axis, the second the circumcircle's.
pub fn weaver_circles(cfg: &PoristicConfig) -> Result<(Circle, Circle)> {
    cfg.require_axis()?;
    let (big_r, d) = (cfg.big_r, cfg.d);
    let center = cfg.from_x3_frame(Point::new(-big_r, 0.0));
    let r1 = (d + big_r) / (2.0 * big_r)
        * ((3.0 * big_r - d) * (4.0 * big_r * big_r - big_r * d - d * d) / d).sqrt();
    let r2 = ((3.0 * big_r - d) * (d + big_r) * big_r / d).sqrt();
    Ok((Circle { center, radius: r1 }, Circle { center, radius: r2 }))
}

/// Excentral side lines ℓ′₁, ℓ′₂, ℓ′₃ from their closed forms (X40 frame).
pub fn excentral_side_lines(cfg: &PoristicConfig, t: f64) -> Result<[Line; 3]> {
    let (big_r, r, d) = (cfg.big_r, cfg.r, cfg.d);
    let (c, s) = (t.cos(), t.sin());
    let w = omega(cfg, t);
    let k = big_r * big_r - d * d;
    Ok([
        Line::new((d * s - w) * s - r * c, -((d * c + r) * s - w * c), k)?,
        Line::new((d * s + w) * s - r * c, -((d * c + r) * s + w * c), k)?,
        Line::new(big_r * c - d, big_r * s, -2.0 * d * big_r * c + big_r * big_r + d * d)?,
    ])
}

/// Implicit equation of the X40-centered excentral inconic.
pub fn i3x_implicit(cfg: &PoristicConfig, t: f64) -> Result<ConicMatrix> {
    let (big_r, d) = (cfg.big_r, cfg.d);
    let (c, s) = (t.cos(), t.sin());
    let k = (big_r * big_r - d * d).powi(2);
    let xx = k - 8.0 * d * big_r * big_r * (big_r * c - d) * s * s;
    let yy = k - 4.0 * d * big_r * c * ((big_r * c - d).powi(2) - big_r * big_r * s * s);
    let xy = 4.0 * d * big_r * s * (2.0 * big_r * c - big_r - d) * (2.0 * big_r * c + big_r - d);
    let one = -k * (big_r * big_r + d * d - 2.0 * d * big_r * c);
    ConicMatrix::from_polynomial(xx, xy, yy, 0.0, 0.0, one)
}

/// Conics attached to a sample. Primed (x-suffixed) tags live on the
/// excentral triangle; their centers are named by the reference triangle's
/// centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedConic {
    /// Circumconic centered at X1.
    E1,
    /// Circumbilliard: circumconic centered at X9.
    E9,
    /// Circumconic centered at X10.
    E10,
    /// Mandart inellipse: inconic centered at X9.
    I9,
    /// Excentral circumcircle (center X40).
    E3x,
    /// Excentral circumconic centered at X3.
    E5x,
    /// Excentral circumconic centered at X9.
    E6x,
    /// Excentral inconic centered at X40.
    I3x,
    /// Excentral MacBeath inconic, centered at X3.
    I5x,
    /// Feuerbach circumhyperbola, centered at X11.
    Feuerbach,
    /// Excentral Jerabek circumhyperbola, centered at the reference X100.
    JerabekExc,
}

impl NamedConic {
    pub const ALL: [NamedConic; 11] = [
        NamedConic::E1,
        NamedConic::E9,
        NamedConic::E10,
        NamedConic::I9,
        NamedConic::E3x,
        NamedConic::E5x,
        NamedConic::E6x,
        NamedConic::I3x,
        NamedConic::I5x,
        NamedConic::Feuerbach,
        NamedConic::JerabekExc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedConic::E1 => "E1",
            NamedConic::E9 => "E9",
            NamedConic::E10 => "E10",
            NamedConic::I9 => "I9",
            NamedConic::E3x => "E3x",
            NamedConic::E5x => "E5x",
            NamedConic::E6x => "E6x",
            NamedConic::I3x => "I3x",
            NamedConic::I5x => "I5x",
            NamedConic::Feuerbach => "Feuerbach",
            NamedConic::JerabekExc => "JerabekExc",
        }
    }

    fn on_excentral(self) -> bool {
        matches!(
            self,
            NamedConic::E3x | NamedConic::E5x | NamedConic::E6x | NamedConic::I3x | NamedConic::I5x | NamedConic::JerabekExc
        )
    }

    fn is_inconic(self) -> bool {
        matches!(self, NamedConic::I9 | NamedConic::I3x | NamedConic::I5x)
    }

    /// Center, named on the reference triangle.
    pub fn center_id(self) -> CenterId {
        match self {
            NamedConic::E1 => CenterId::X1,
            NamedConic::E9 | NamedConic::I9 | NamedConic::E6x => CenterId::X9,
            NamedConic::E10 => CenterId::X10,
            NamedConic::E3x | NamedConic::I3x => CenterId::X40,
            NamedConic::E5x | NamedConic::I5x => CenterId::X3,
            NamedConic::Feuerbach => CenterId::X11,
            NamedConic::JerabekExc => CenterId::X100,
        }
    }

    /// Predicted constant aspect ratio over the family, where one is known.
    pub fn expected_aspect_ratio(self, cfg: &PoristicConfig) -> Option<f64> {
        let (big_r, d) = (cfg.big_r, cfg.d);
        let (p, m) = (big_r + d, big_r - d);
        let (p3, m3) = (3.0 * big_r + d, 3.0 * big_r - d);
        match self {
            NamedConic::E1 | NamedConic::I3x => Some(p / m),
            NamedConic::E10 | NamedConic::E5x => Some((p / m).sqrt()),
            NamedConic::E6x => Some((p * p3 / (m3 * m)).sqrt()),
            NamedConic::E9 => Some((p * m3 / (m * p3)).sqrt()),
            NamedConic::I5x => Some(1.0 / (2.0 * cfg.rho()).sqrt()),
            NamedConic::E3x => Some(1.0),
            NamedConic::I9 | NamedConic::Feuerbach | NamedConic::JerabekExc => None,
        }
    }
}

/// Builds a named conic from a sample, using constructed centers.
pub fn named_conic(s: &FamilySample, tag: NamedConic) -> Result<ConicMatrix> {
    let center = centers::center(&s.triangle, tag.center_id())?;
    let host = if tag.on_excentral() { &s.excentral } else { &s.triangle };
    if tag.is_inconic() {
        Ok(inconic_centered(host, center)?.conic)
    } else {
        circumconic_centered(host, center)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObtuseClass {
    AllAcute,
    ContainsRight,
    ContainsObtuse,
}

/// Family-level classification: obtuse members exist iff d > r.
pub fn obtuse_class(cfg: &PoristicConfig) -> ObtuseClass {
    let gap = cfg.d - cfg.r;
    if gap.abs() <= tol::RIGHT_BAND * cfg.big_r {
        ObtuseClass::ContainsRight
    } else if gap > 0.0 {
        ObtuseClass::ContainsObtuse
    } else {
        ObtuseClass::AllAcute
    }
}

pub fn is_obtuse(s: &FamilySample) -> bool {
    s.triangle.is_obtuse()
}
