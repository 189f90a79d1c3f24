use super::Point;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Circle { center, radius })
    }

    /// Power of `p`: |p − center|² − radius².
    pub fn power(&self, p: Point) -> f64 {
        (p - self.center).norm_sq() - self.radius * self.radius
    }

    /// Signed radial offset |p − center| − radius.
    pub fn radial_residual(&self, p: Point) -> f64 {
        p.dist(self.center) - self.radius
    }

    pub fn point_at(&self, angle: f64) -> Point {
        self.center + Point::from_polar(self.radius, angle)
    }

    /// Radical axis of two circles, `None` when concentric.
    pub fn radical_axis(&self, o: &Circle) -> Option<super::Line> {
        // power_self(p) − power_other(p) is affine in p.
        let d = o.center - self.center;
        let c = self.center.norm_sq() - o.center.norm_sq() - self.radius * self.radius
            + o.radius * o.radius;
        super::Line::new(2.0 * d.x, 2.0 * d.y, c).ok()
    }
}
