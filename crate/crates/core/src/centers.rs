//! Triangle centers, plus the medial and excentral triangles.
//!
//! The registry is closed: only the centers the Poristic analysis uses.
//! Centers with clean trilinears are evaluated from them; X4, X5, X10, X11,
//! X40 and X1155 are built constructively (the trilinear forms are kept in
//! the tests as independent oracles).

use crate::geom::{Circle, Line, Point, Triangle};
use crate::{tol, Error, Result};

/// Side lengths opposite vertices 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideLengths {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl SideLengths {
    pub fn new(s1: f64, s2: f64, s3: f64) -> Result<Self> {
        let ok = s1 > 0.0 && s2 > 0.0 && s3 > 0.0 && s1 < s2 + s3 && s2 < s3 + s1 && s3 < s1 + s2;
        if ok {
            Ok(SideLengths { s1, s2, s3 })
        } else {
            Err(Error::DegenerateTriangle)
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.s1, self.s2, self.s3]
    }

    pub fn perimeter(&self) -> f64 {
        self.s1 + self.s2 + self.s3
    }

    /// Evaluates `g` cyclically: g(s1,s2,s3), g(s2,s3,s1), g(s3,s1,s2).
    pub fn cyclic<G: Fn(f64, f64, f64) -> f64>(&self, g: G) -> [f64; 3] {
        let (a, b, c) = (self.s1, self.s2, self.s3);
        [g(a, b, c), g(b, c, a), g(c, a, b)]
    }
}

/// Homogeneous trilinears, stored with unit norm and first nonzero positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrilinearTriple([f64; 3]);

impl TrilinearTriple {
    pub fn new(f1: f64, f2: f64, f3: f64) -> Result<Self> {
        let v = [f1, f2, f3];
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = (f1 * f1 + f2 * f2 + f3 * f3).sqrt();
        if n == 0.0 {
            return Err(Error::PointAtInfinity);
        }
        let first = v.iter().copied().find(|x| *x != 0.0).unwrap_or(1.0);
        let k = first.signum() / n;
        Ok(TrilinearTriple([f1 * k, f2 * k, f3 * k]))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }
}

/// Supported Kimberling centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CenterId {
    X1,
    X3,
    X4,
    X5,
    X6,
    X7,
    X9,
    X10,
    X11,
    X40,
    X100,
    X1155,
}

impl CenterId {
    pub const ALL: [CenterId; 12] = [
        CenterId::X1,
        CenterId::X3,
        CenterId::X4,
        CenterId::X5,
        CenterId::X6,
        CenterId::X7,
        CenterId::X9,
        CenterId::X10,
        CenterId::X11,
        CenterId::X40,
        CenterId::X100,
        CenterId::X1155,
    ];

    pub fn index(self) -> u32 {
        match self {
            CenterId::X1 => 1,
            CenterId::X3 => 3,
            CenterId::X4 => 4,
            CenterId::X5 => 5,
            CenterId::X6 => 6,
            CenterId::X7 => 7,
            CenterId::X9 => 9,
            CenterId::X10 => 10,
            CenterId::X11 => 11,
            CenterId::X40 => 40,
            CenterId::X100 => 100,
            CenterId::X1155 => 1155,
        }
    }

    pub fn from_index(k: u32) -> Result<Self> {
        CenterId::ALL
            .into_iter()
            .find(|c| c.index() == k)
            .ok_or(Error::UnsupportedCenter(k))
    }
}

pub fn side_lengths(t: &Triangle) -> SideLengths {
    SideLengths { s1: t.side(0), s2: t.side(1), s3: t.side(2) }
}

pub fn barycentric_to_point(t: &Triangle, weights: [f64; 3]) -> Result<Point> {
    Point::barycenter(t.vertices(), weights)
}

/// Converts trilinears to a point via barycentric weights fᵢ·sᵢ.
pub fn trilinear_to_point(t: &Triangle, f: &TrilinearTriple) -> Result<Point> {
    let s = side_lengths(t).to_array();
    let f = f.components();
    barycentric_to_point(t, [f[0] * s[0], f[1] * s[1], f[2] * s[2]])
}

fn from_trilinears(t: &Triangle, f: [f64; 3]) -> Result<Point> {
    trilinear_to_point(t, &TrilinearTriple::new(f[0], f[1], f[2])?)
}

pub fn inradius(t: &Triangle) -> f64 {
    2.0 * t.area() / t.perimeter()
}

pub fn circumradius(t: &Triangle) -> f64 {
    let s = side_lengths(t);
    s.s1 * s.s2 * s.s3 / (4.0 * t.area())
}

pub fn incircle(t: &Triangle) -> Circle {
    Circle { center: incenter(t), radius: inradius(t) }
}

pub fn circumcircle(t: &Triangle) -> Circle {
    Circle { center: circumcenter(t), radius: circumradius(t) }
}

fn incenter(t: &Triangle) -> Point {
    let s = side_lengths(t).to_array();
    Point::barycenter(t.vertices(), s).expect("positive weights")
}

fn circumcenter(t: &Triangle) -> Point {
    let [a, b, c] = side_lengths(t).to_array();
    let (a2, b2, c2) = (a * a, b * b, c * c);
    Point::barycenter(t.vertices(), [a2 * (b2 + c2 - a2), b2 * (c2 + a2 - b2), c2 * (a2 + b2 - c2)])
        .expect("weights sum to 16·area²")
}

/// Cartesian location of a registered center.
pub fn center(t: &Triangle, id: CenterId) -> Result<Point> {
    let s = side_lengths(t);
    let [a, b, c] = s.to_array();
    match id {
        CenterId::X1 => Ok(incenter(t)),
        CenterId::X3 => Ok(circumcenter(t)),
        CenterId::X4 => {
            let [p1, p2, p3] = *t.vertices();
            Ok(p1 + p2 + p3 - circumcenter(t) * 2.0)
        }
        CenterId::X5 => {
            let o = circumcenter(t);
            let h = center(t, CenterId::X4)?;
            Ok(o.midpoint(h))
        }
        CenterId::X6 => from_trilinears(t, [a, b, c]),
        CenterId::X7 => barycentric_to_point(t, [1.0 / (b + c - a), 1.0 / (c + a - b), 1.0 / (a + b - c)]),
        CenterId::X9 => from_trilinears(t, [b + c - a, c + a - b, a + b - c]),
        CenterId::X10 => Ok(incenter(&medial(t))),
        CenterId::X11 => {
            let i = incenter(t);
            let n = center(t, CenterId::X5)?;
            let gap = i.dist(n);
            if gap <= 1e-12 * s.perimeter() {
                return Ok(i);
            }
            Ok(i + (i - n) * (inradius(t) / gap))
        }
        CenterId::X40 => Ok(circumcenter(t) * 2.0 - incenter(t)),
        CenterId::X100 => {
            let min_gap = (a - b).abs().min((b - c).abs()).min((c - a).abs());
            if min_gap < tol::ISOSCELES * s.perimeter() {
                return Err(Error::IsoscelesDegeneracy(100));
            }
            from_trilinears(t, [1.0 / (b - c), 1.0 / (c - a), 1.0 / (a - b)])
        }
        CenterId::X1155 => {
            let i = incenter(t);
            let o = circumcenter(t);
            if i.dist(o) <= 1e-12 * s.perimeter() {
                return Err(Error::IsoscelesDegeneracy(1155));
            }
            let axis = antiorthic_axis(t).map_err(|_| Error::IsoscelesDegeneracy(1155))?;
            let oi = Line::through(i, o)?;
            oi.intersect(&axis).ok_or(Error::IsoscelesDegeneracy(1155))
        }
    }
}

/// The antiorthic axis: points whose signed distances to the three side
/// lines (positive inside) sum to zero.
pub fn antiorthic_axis(t: &Triangle) -> Result<Line> {
    let (mut a, mut b, mut c) = (0.0, 0.0, 0.0);
    for i in 0..3 {
        let l = t.side_line(i);
        let sign = l.eval(t.vertex(i)).signum();
        a += sign * l.a();
        b += sign * l.b();
        c += sign * l.c();
    }
    if a.hypot(b) <= 1e-12 {
        return Err(Error::AxisAtInfinity);
    }
    Line::new(a, b, c)
}

/// Triangle of the three excenters; vertex i is the excenter opposite Pᵢ.
pub fn excentral(t: &Triangle) -> Result<Triangle> {
    let [a, b, c] = side_lengths(t).to_array();
    let v = t.vertices();
    let j1 = Point::barycenter(v, [-a, b, c])?;
    let j2 = Point::barycenter(v, [a, -b, c])?;
    let j3 = Point::barycenter(v, [a, b, -c])?;
    Triangle::new(j1, j2, j3)
}

/// Triangle of side midpoints; vertex i is the midpoint of the side opposite Pᵢ.
pub fn medial(t: &Triangle) -> Triangle {
    let [p1, p2, p3] = *t.vertices();
    Triangle::new(p2.midpoint(p3), p3.midpoint(p1), p1.midpoint(p2))
        .expect("medial of a non-degenerate triangle")
}
