use super::Point;
use crate::{Error, Result};

/// The locus a·x + b·y + c = 0, stored with a² + b² = 1 and the first
/// nonzero of (a, b) positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    a: f64,
    b: f64,
    c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = a.hypot(b);
        if n == 0.0 {
            return Err(Error::InvalidLine);
        }
        let sign = if a > 0.0 || (a == 0.0 && b > 0.0) { 1.0 } else { -1.0 };
        let k = sign / n;
        Ok(Line { a: a * k, b: b * k, c: c * k })
    }

    pub fn through(p: Point, q: Point) -> Result<Self> {
        let d = q - p;
        Line::new(d.y, -d.x, d.x * p.y - d.y * p.x)
    }

    /// The line x = x0.
    pub fn vertical(x0: f64) -> Self {
        Line { a: 1.0, b: 0.0, c: -x0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn coefficients(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn normal(&self) -> Point {
        Point::new(self.a, self.b)
    }

    pub fn direction(&self) -> Point {
        Point::new(-self.b, self.a)
    }

    /// Signed distance (the normal is unit length).
    pub fn eval(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    /// Intersection point, `None` for parallel lines.
    pub fn intersect(&self, o: &Line) -> Option<Point> {
        let det = self.a * o.b - o.a * self.b;
        if det.abs() < 1e-15 {
            return None;
        }
        let x = (self.b * o.c - o.b * self.c) / det;
        let y = (o.a * self.c - self.a * o.c) / det;
        Some(Point::new(x, y))
    }

    /// The same locus expressed in coordinates whose origin sits at `origin`.
    pub fn in_frame(&self, origin: Point) -> Line {
        Line { a: self.a, b: self.b, c: self.c + self.a * origin.x + self.b * origin.y }
    }

    /// x-coordinate where the line meets y = 0.
    pub fn x_intercept(&self) -> Option<f64> {
        (self.a.abs() > 1e-15).then(|| -self.c / self.a)
    }
}
