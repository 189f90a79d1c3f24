//! Circumconics and inconics with a prescribed center, and the Brianchon
//! perspector.

use nalgebra::{Matrix6, SVD};

use crate::centers::{side_lengths, SideLengths};
use crate::geom::{ConicKind, ConicMatrix, Line, Point, Similarity, Triangle};
use crate::{tol, Error, Result};

/// A circumconic together with the conditioning of its linear solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircumconicFit {
    pub conic: ConicMatrix,
    /// σ₁/σ₅ of the 5×6 constraint matrix (in the normalized local frame).
    pub condition_number: f64,
}

/// The unique conic through the vertices of `t` centered at `center`.
pub fn circumconic_centered(t: &Triangle, center: Point) -> Result<ConicMatrix> {
    circumconic_centered_fit(t, center).map(|f| f.conic)
}

pub fn circumconic_centered_fit(t: &Triangle, center: Point) -> Result<CircumconicFit> {
    if !center.is_finite() {
        return Err(Error::NonFinite);
    }
    // Work in a frame centered at `center` and scaled to unit size so the
    // singular values are comparable across inputs.
    let scale = t.vertices().iter().map(|p| p.dist(center)).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::DegenerateConic);
    }
    let to_local = Similarity::new(1.0 / scale, 0.0, center * (-1.0 / scale));
    let c = to_local.apply(center);

    let mut a = Matrix6::<f64>::zeros();
    for (row, p) in t.vertices().iter().enumerate() {
        let p = to_local.apply(*p);
        let r = [p.x * p.x, 2.0 * p.x * p.y, p.y * p.y, 2.0 * p.x, 2.0 * p.y, 1.0];
        for (j, v) in r.into_iter().enumerate() {
            a[(row, j)] = v;
        }
    }
    // ∇ = 0 at the center: [a b d]·[cx cy 1] = 0 and [b c e]·[cx cy 1] = 0.
    let center_rows = [[c.x, c.y, 0.0, 1.0, 0.0, 0.0], [0.0, c.x, c.y, 0.0, 1.0, 0.0]];
    for (k, r) in center_rows.into_iter().enumerate() {
        for (j, v) in r.into_iter().enumerate() {
            a[(3 + k, j)] = v;
        }
    }
    // Row 5 stays zero: the padded square system has the null space we want.
    let svd = SVD::new(a, false, true);
    let v_t = svd.v_t.ok_or(Error::DegenerateConic)?;
    let mut order: Vec<usize> = (0..6).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let sigma_max = svd.singular_values[order[0]];
    let sigma_5 = svd.singular_values[order[4]];
    if sigma_5 <= 1e-12 * sigma_max {
        return Err(Error::DegenerateConic);
    }
    let v = v_t.row(order[5]);
    let local = ConicMatrix::from_coefficients(v[0], v[1], v[2], v[3], v[4], v[5])?;
    if local.determinant().abs() < tol::DEGENERATE_CONIC {
        return Err(Error::DegenerateConic);
    }
    Ok(CircumconicFit {
        conic: local.transformed(&to_local.inverse()),
        condition_number: sigma_max / sigma_5,
    })
}

/// Coefficients of the origin-centered conic A x² + 2B xy + C y² + D = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InconicCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    /// Relative gap between the closed-form D and the D solved from the
    /// tangency discriminant. `d` holds the closed form unless this exceeds
    /// the tolerance, in which case it holds the discriminant value.
    pub d_mismatch: f64,
}

impl InconicCoefficients {
    pub fn to_conic(&self) -> Result<ConicMatrix> {
        ConicMatrix::from_coefficients(self.a, self.b, self.c, 0.0, 0.0, self.d)
    }

    /// (AC−B²)c² + (Ab²−2Bab+Ca²)D for a unit-normal line, divided by the
    /// magnitude of its terms.
    pub fn discriminant(&self, l: &Line) -> f64 {
        let (a, b, c) = (l.a(), l.b(), l.c());
        let t1 = (self.a * self.c - self.b * self.b) * c * c;
        let t2 = (self.a * b * b - 2.0 * self.b * a * b + self.c * a * a) * self.d;
        let scale = t1.abs().max(t2.abs());
        if scale == 0.0 {
            0.0
        } else {
            (t1 + t2) / scale
        }
    }
}

/// Origin-centered conic tangent to three lines.
pub fn inconic_from_tangents(l1: &Line, l2: &Line, l3: &Line) -> Result<InconicCoefficients> {
    let [a1, b1, c1] = l1.coefficients();
    let [a2, b2, c2] = l2.coefficients();
    let [a3, b3, c3] = l3.coefficients();
    let d12 = a1 * b2 - a2 * b1;
    let d13 = a1 * b3 - a3 * b1;
    let d23 = a2 * b3 - a3 * b2;
    if d12.abs().min(d13.abs()).min(d23.abs()) < tol::PARALLEL_TANGENTS {
        return Err(Error::ParallelTangents);
    }
    let (k1, k2, k3) = (c1 * c1 * d23, c2 * c2 * d13, c3 * c3 * d12);
    let a = a2 * a3 * k1 - a1 * a3 * k2 + a1 * a2 * k3;
    let b = 0.5 * ((a2 * b3 + a3 * b2) * k1 - (a1 * b3 + a3 * b1) * k2 + (a1 * b2 + a2 * b1) * k3);
    let c = b2 * b3 * k1 - b1 * b3 * k2 + b1 * b2 * k3;
    let (u, v, w) = (d23 * c1, d13 * c2, d12 * c3);
    let d_closed = 0.25 * (u + v - w) * (u - v - w) * (u - v + w) * (u + v + w) / (d12 * d13 * d23);

    if a == 0.0 && b == 0.0 && c == 0.0 {
        return Err(Error::DegenerateConic);
    }
    // D from the discriminant of the best-conditioned line.
    let det = a * c - b * b;
    let d_disc = [(a1, b1, c1), (a2, b2, c2), (a3, b3, c3)]
        .into_iter()
        .map(|(ai, bi, ci)| (a * bi * bi - 2.0 * b * ai * bi + c * ai * ai, ci))
        .max_by(|x, y| x.0.abs().total_cmp(&y.0.abs()))
        .map(|(q, ci)| -det * ci * ci / q)
        .unwrap_or(d_closed);
    let denom = d_disc.abs().max(d_closed.abs());
    let d_mismatch = if denom == 0.0 { 0.0 } else { (d_closed - d_disc).abs() / denom };
    let d = if d_mismatch > tol::INCONIC_D_MISMATCH { d_disc } else { d_closed };
    Ok(InconicCoefficients { a, b, c, d, d_mismatch })
}

/// An inconic with its classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InconicFit {
    pub conic: ConicMatrix,
    pub kind: ConicKind,
    /// True when the center lies outside the ellipse regions and the result
    /// is a hyperbola.
    pub hyperbolic: bool,
    pub d_mismatch: f64,
}

/// The conic tangent to the three side lines of `t` centered at `center`.
pub fn inconic_centered(t: &Triangle, center: Point) -> Result<InconicFit> {
    let [l1, l2, l3] = t.side_lines().map(|l| l.in_frame(center));
    let coeffs = inconic_from_tangents(&l1, &l2, &l3)?;
    let conic = coeffs.to_conic()?.translated(center);
    let kind = conic.canonicalize()?.kind;
    Ok(InconicFit { conic, kind, hyperbolic: kind == ConicKind::Hyperbola, d_mismatch: coeffs.d_mismatch })
}

/// Perspector of the inconic whose center has barycentrics
/// (g(s₁,s₂,s₃) : g(s₂,s₃,s₁) : g(s₃,s₁,s₂)).
pub fn brianchon_point<G: Fn(f64, f64, f64) -> f64>(t: &Triangle, g: G) -> Result<Point> {
    let s: SideLengths = side_lengths(t);
    let [g1, g2, g3] = s.cyclic(g);
    let scale = g1.abs().max(g2.abs()).max(g3.abs());
    let dens = [g2 + g3 - g1, g3 + g1 - g2, g1 + g2 - g3];
    if scale == 0.0 || dens.iter().any(|x| x.abs() <= 1e-12 * scale) {
        return Err(Error::PerspectorAtInfinity);
    }
    Point::barycenter(t.vertices(), dens.map(|x| 1.0 / x)).map_err(|_| Error::PerspectorAtInfinity)
}

/// Distance between the foci (2c) of the circumhyperbola centered at `center`.
pub fn hyperbola_focal_length(t: &Triangle, center: Point) -> Result<f64> {
    let canon = circumconic_centered(t, center)?.canonicalize()?;
    if canon.kind != ConicKind::Hyperbola {
        return Err(Error::NotAHyperbola);
    }
    Ok(2.0 * canon.focal_distance())
}
