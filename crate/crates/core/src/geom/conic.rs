//! Conics as symmetric 3×3 quadratic forms.
//!
//! A conic is the zero set of `[x y 1] · M · [x y 1]ᵀ`. Matrices are kept
//! normalized so that the largest-magnitude entry is ±1, which pins the
//! projective scale up to sign.

use nalgebra::Matrix3;

use super::{wrap_half_turn, Line, Point, Similarity};
use crate::{tol, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Ellipse,
    Hyperbola,
    DegenerateLines,
    Empty,
}

/// Center, orientation and semi-axes of a central conic.
///
/// `angle` is the direction of the major (ellipse) or transverse
/// (hyperbola) axis, in (−π/2, π/2]. Circles report angle 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalConic {
    pub center: Point,
    pub angle: f64,
    pub semi_major: f64,
    pub semi_minor: f64,
    pub kind: ConicKind,
}

impl CanonicalConic {
    pub fn ellipse(center: Point, angle: f64, a: f64, b: f64) -> Self {
        let (major, minor, angle) =
            if a >= b { (a, b, angle) } else { (b, a, angle + std::f64::consts::FRAC_PI_2) };
        CanonicalConic {
            center,
            angle: wrap_half_turn(angle),
            semi_major: major,
            semi_minor: minor,
            kind: ConicKind::Ellipse,
        }
    }

    pub fn hyperbola(center: Point, angle: f64, transverse: f64, conjugate: f64) -> Self {
        CanonicalConic {
            center,
            angle: wrap_half_turn(angle),
            semi_major: transverse,
            semi_minor: conjugate,
            kind: ConicKind::Hyperbola,
        }
    }

    /// Major over minor semi-axis.
    pub fn aspect_ratio(&self) -> f64 {
        self.semi_major / self.semi_minor
    }

    pub fn is_circle(&self) -> bool {
        self.kind == ConicKind::Ellipse
            && (self.semi_major - self.semi_minor) <= tol::CIRCULAR * self.semi_major
    }

    /// Center-to-focus distance.
    pub fn focal_distance(&self) -> f64 {
        let (a, b) = (self.semi_major, self.semi_minor);
        match self.kind {
            ConicKind::Hyperbola => a.hypot(b),
            _ => ((a - b) * (a + b)).abs().sqrt(),
        }
    }

    /// The two foci. A circle returns its center twice.
    pub fn foci(&self) -> Result<(Point, Point)> {
        match self.kind {
            ConicKind::Ellipse | ConicKind::Hyperbola => {
                if self.is_circle() {
                    return Ok((self.center, self.center));
                }
                let off = Point::from_polar(self.focal_distance(), self.angle);
                Ok((self.center + off, self.center - off))
            }
            _ => Err(Error::DegenerateConic),
        }
    }

    pub fn major_direction(&self) -> Point {
        Point::from_polar(1.0, self.angle)
    }

    /// Point at parameter `s`: (a cos s, b sin s) for ellipses and
    /// (±a cosh s, b sinh s) for hyperbolas (branch picked by `branch`).
    pub fn point_at(&self, s: f64, branch: bool) -> Point {
        let local = match self.kind {
            ConicKind::Hyperbola => {
                let sign = if branch { 1.0 } else { -1.0 };
                Point::new(sign * self.semi_major * s.cosh(), self.semi_minor * s.sinh())
            }
            _ => Point::new(self.semi_major * s.cos(), self.semi_minor * s.sin()),
        };
        local.rotated(self.angle) + self.center
    }
}

/// Normalized symmetric matrix of a conic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicMatrix {
    m: Matrix3<f64>,
}

impl ConicMatrix {
    /// Accepts a symmetric, nonzero matrix and normalizes it.
    pub fn from_matrix(m: Matrix3<f64>) -> Result<Self> {
        if m.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let scale = m.amax();
        if scale == 0.0 {
            return Err(Error::InvalidConic);
        }
        if (m - m.transpose()).amax() > 1e-12 * scale {
            return Err(Error::InvalidConic);
        }
        let sym = (m + m.transpose()) * 0.5;
        Ok(ConicMatrix { m: normalize(sym) })
    }

    /// a·x² + 2b·xy + c·y² + 2d·x + 2e·y + f.
    pub fn from_coefficients(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Result<Self> {
        Self::from_matrix(Matrix3::new(a, b, d, b, c, e, d, e, f))
    }

    /// xx·x² + xy·xy + yy·y² + x·x + y·y + one, coefficients as they appear
    /// in a polynomial.
    pub fn from_polynomial(xx: f64, xy: f64, yy: f64, x: f64, y: f64, one: f64) -> Result<Self> {
        Self::from_coefficients(xx, 0.5 * xy, yy, 0.5 * x, 0.5 * y, one)
    }

    pub fn from_canonical(c: &CanonicalConic) -> Result<Self> {
        let (a2, b2) = (c.semi_major * c.semi_major, c.semi_minor * c.semi_minor);
        let local = match c.kind {
            ConicKind::Ellipse => Self::from_coefficients(1.0 / a2, 0.0, 1.0 / b2, 0.0, 0.0, -1.0)?,
            ConicKind::Hyperbola => {
                Self::from_coefficients(1.0 / a2, 0.0, -1.0 / b2, 0.0, 0.0, -1.0)?
            }
            _ => return Err(Error::DegenerateConic),
        };
        Ok(local.transformed(&Similarity::new(1.0, c.angle, c.center)))
    }

    pub fn circle(center: Point, radius: f64) -> Result<Self> {
        Self::from_coefficients(
            1.0,
            0.0,
            1.0,
            -center.x,
            -center.y,
            center.norm_sq() - radius * radius,
        )
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.m
    }

    /// [x y 1]·M·[x y 1]ᵀ; zero iff `p` is on the conic.
    pub fn eval(&self, p: Point) -> f64 {
        let m = &self.m;
        m[(0, 0)] * p.x * p.x
            + 2.0 * m[(0, 1)] * p.x * p.y
            + m[(1, 1)] * p.y * p.y
            + 2.0 * m[(0, 2)] * p.x
            + 2.0 * m[(1, 2)] * p.y
            + m[(2, 2)]
    }

    /// Gradient of the quadratic form at `p`.
    pub fn gradient(&self, p: Point) -> Point {
        let m = &self.m;
        Point::new(
            2.0 * (m[(0, 0)] * p.x + m[(0, 1)] * p.y + m[(0, 2)]),
            2.0 * (m[(0, 1)] * p.x + m[(1, 1)] * p.y + m[(1, 2)]),
        )
    }

    pub fn determinant(&self) -> f64 {
        self.m.determinant()
    }

    /// Dual-conic value L·adj(M)·Lᵀ for a unit-normal line, with adj(M)
    /// max-entry normalized. Zero iff the line is tangent.
    pub fn tangency_residual(&self, line: &Line) -> f64 {
        let adj = adjugate(&self.m);
        let scale = adj.amax();
        if scale == 0.0 {
            return f64::NAN;
        }
        let l = nalgebra::Vector3::from(line.coefficients());
        (l.transpose() * (adj / scale) * l)[(0, 0)]
    }

    /// Image of the conic under `s`.
    pub fn transformed(&self, s: &Similarity) -> ConicMatrix {
        let h = s.inverse().homogeneous();
        let h = Matrix3::from_row_slice(&[
            h[0][0], h[0][1], h[0][2], h[1][0], h[1][1], h[1][2], h[2][0], h[2][1], h[2][2],
        ]);
        let m = h.transpose() * self.m * h;
        ConicMatrix { m: normalize((m + m.transpose()) * 0.5) }
    }

    /// Image under translation by `offset`.
    pub fn translated(&self, offset: Point) -> ConicMatrix {
        self.transformed(&Similarity::translation(offset))
    }

    /// Max-entry difference, minimized over the sign ambiguity.
    pub fn distance(&self, other: &ConicMatrix) -> f64 {
        (self.m - other.m).amax().min((self.m + other.m).amax())
    }

    /// Center, rotation, semi-axes and kind.
    pub fn canonicalize(&self) -> Result<CanonicalConic> {
        let m = &self.m;
        let (mut a, mut b, mut c) = (m[(0, 0)], m[(0, 1)], m[(1, 1)]);
        let (d, e, f) = (m[(0, 2)], m[(1, 2)], m[(2, 2)]);
        let qscale = a.abs().max(b.abs()).max(c.abs());
        let det_q = a * c - b * b;
        if qscale == 0.0 || det_q.abs() <= 1e-12 * qscale * qscale {
            return if self.determinant().abs() < tol::DEGENERATE_CONIC {
                Err(Error::DegenerateConic)
            } else {
                Err(Error::NotCentral)
            };
        }
        let center = Point::new((b * e - c * d) / det_q, (b * d - a * e) / det_q);
        let constant = f + d * center.x + e * center.y;
        let cancel = f.abs().max((d * center.x).abs()).max((e * center.y).abs());
        if constant == 0.0 || constant.abs() <= tol::DEGENERATE_CONIC * cancel {
            return Ok(CanonicalConic {
                center,
                angle: 0.0,
                semi_major: 0.0,
                semi_minor: 0.0,
                kind: ConicKind::DegenerateLines,
            });
        }
        // Reduce to λ₁u² + λ₂v² = k with k > 0.
        let mut k = -constant;
        if k < 0.0 {
            a = -a;
            b = -b;
            c = -c;
            k = -k;
        }
        let (lam_hi, lam_lo, dir_hi) = sym2_eigen(a, b, c, det_q);
        if lam_lo > 0.0 {
            let major = (k / lam_lo).sqrt();
            let minor = (k / lam_hi).sqrt();
            let circular = (major - minor) <= tol::CIRCULAR * major;
            let angle = if circular { 0.0 } else { wrap_half_turn(dir_hi + std::f64::consts::FRAC_PI_2) };
            Ok(CanonicalConic { center, angle, semi_major: major, semi_minor: minor, kind: ConicKind::Ellipse })
        } else if lam_hi < 0.0 {
            Ok(CanonicalConic {
                center,
                angle: 0.0,
                semi_major: 0.0,
                semi_minor: 0.0,
                kind: ConicKind::Empty,
            })
        } else {
            Ok(CanonicalConic {
                center,
                angle: wrap_half_turn(dir_hi),
                semi_major: (k / lam_hi).sqrt(),
                semi_minor: (k / -lam_lo).sqrt(),
                kind: ConicKind::Hyperbola,
            })
        }
    }
}

/// Eigenvalues (larger, smaller) of [[a, b], [b, c]] and the angle of the
/// eigenvector of the larger one. The smaller-magnitude root comes from the
/// determinant to avoid cancellation.
fn sym2_eigen(a: f64, b: f64, c: f64, det: f64) -> (f64, f64, f64) {
    let mean = 0.5 * (a + c);
    let h = (0.5 * (a - c)).hypot(b);
    let dir = 0.5 * b.atan2(0.5 * (a - c));
    let (hi, lo) = if mean >= 0.0 {
        let hi = mean + h;
        (hi, if hi != 0.0 { det / hi } else { mean - h })
    } else {
        let lo = mean - h;
        (if lo != 0.0 { det / lo } else { mean + h }, lo)
    };
    (hi, lo, dir)
}

fn adjugate(m: &Matrix3<f64>) -> Matrix3<f64> {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| m[(r0, c0)] * m[(r1, c1)] - m[(r0, c1)] * m[(r1, c0)];
    Matrix3::new(
        c(1, 2, 1, 2),
        -c(0, 2, 1, 2),
        c(0, 1, 1, 2),
        -c(1, 2, 0, 2),
        c(0, 2, 0, 2),
        -c(0, 1, 0, 2),
        c(1, 2, 0, 1),
        -c(0, 2, 0, 1),
        c(0, 1, 0, 1),
    )
}

/// Max-entry scaling, with the sign fixed by the trace of the quadratic
/// block when it is significant, else by the first significant entry.
fn normalize(m: Matrix3<f64>) -> Matrix3<f64> {
    let m = m / m.amax();
    let trace = m[(0, 0)] + m[(1, 1)];
    let sign = if trace.abs() > 1e-9 {
        trace.signum()
    } else {
        [m[(0, 0)], m[(0, 1)], m[(1, 1)], m[(0, 2)], m[(1, 2)], m[(2, 2)]]
            .into_iter()
            .find(|v| v.abs() > 1e-9)
            .map_or(1.0, f64::signum)
    };
    m * sign
}
