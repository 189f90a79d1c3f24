use super::{Line, Point, Similarity};
use crate::{tol, Error, Result};

/// A non-degenerate triangle with counter-clockwise vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    v: [Point; 3],
}

impl Triangle {
    /// Builds a triangle, swapping the last two vertices if they arrive
    /// clockwise.
    pub fn new(p1: Point, p2: Point, p3: Point) -> Result<Self> {
        if !(p1.is_finite() && p2.is_finite() && p3.is_finite()) {
            return Err(Error::NonFinite);
        }
        let area2 = (p2 - p1).cross(p3 - p1);
        let longest = (p2 - p1).norm_sq().max((p3 - p2).norm_sq()).max((p1 - p3).norm_sq());
        if area2.abs() * 0.5 <= tol::DEGENERATE_TRIANGLE * longest || longest == 0.0 {
            return Err(Error::DegenerateTriangle);
        }
        let v = if area2 > 0.0 { [p1, p2, p3] } else { [p1, p3, p2] };
        Ok(Triangle { v })
    }

    pub fn from_array(v: [Point; 3]) -> Result<Self> {
        Triangle::new(v[0], v[1], v[2])
    }

    pub fn vertices(&self) -> &[Point; 3] {
        &self.v
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.v[i % 3]
    }

    pub fn area(&self) -> f64 {
        0.5 * (self.v[1] - self.v[0]).cross(self.v[2] - self.v[0])
    }

    /// Side line opposite vertex `i`.
    pub fn side_line(&self, i: usize) -> Line {
        Line::through(self.vertex(i + 1), self.vertex(i + 2))
            .expect("distinct vertices of a non-degenerate triangle")
    }

    pub fn side_lines(&self) -> [Line; 3] {
        [self.side_line(0), self.side_line(1), self.side_line(2)]
    }

    /// Length of the side opposite vertex `i`.
    pub fn side(&self, i: usize) -> f64 {
        self.vertex(i + 1).dist(self.vertex(i + 2))
    }

    pub fn perimeter(&self) -> f64 {
        self.side(0) + self.side(1) + self.side(2)
    }

    pub fn centroid(&self) -> Point {
        (self.v[0] + self.v[1] + self.v[2]) / 3.0
    }

    pub fn transformed(&self, s: &Similarity) -> Result<Triangle> {
        Triangle::new(s.apply(self.v[0]), s.apply(self.v[1]), s.apply(self.v[2]))
    }

    /// Moves one vertex; used for mutation tests.
    pub fn with_vertex(&self, i: usize, p: Point) -> Result<Triangle> {
        let mut v = self.v;
        v[i % 3] = p;
        Triangle::from_array(v)
    }

    /// True when the largest angle exceeds π/2.
    pub fn is_obtuse(&self) -> bool {
        (0..3).any(|i| {
            let a = self.vertex(i);
            (self.vertex(i + 1) - a).dot(self.vertex(i + 2) - a) < 0.0
        })
    }
}
