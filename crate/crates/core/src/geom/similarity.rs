use super::Point;

/// p ↦ scale · Rot(angle) · p + translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    pub scale: f64,
    pub angle: f64,
    pub translation: Point,
}

impl Similarity {
    pub const IDENTITY: Similarity =
        Similarity { scale: 1.0, angle: 0.0, translation: Point::ORIGIN };

    pub fn new(scale: f64, angle: f64, translation: Point) -> Self {
        Similarity { scale, angle, translation }
    }

    pub fn translation(offset: Point) -> Self {
        Similarity { translation: offset, ..Self::IDENTITY }
    }

    pub fn apply(&self, p: Point) -> Point {
        p.rotated(self.angle) * self.scale + self.translation
    }

    pub fn inverse(&self) -> Similarity {
        let t = (-self.translation).rotated(-self.angle) / self.scale;
        Similarity { scale: 1.0 / self.scale, angle: -self.angle, translation: t }
    }

    /// Row-major homogeneous matrix.
    pub fn homogeneous(&self) -> [[f64; 3]; 3] {
        let (s, c) = self.angle.sin_cos();
        let k = self.scale;
        [
            [k * c, -k * s, self.translation.x],
            [k * s, k * c, self.translation.y],
            [0.0, 0.0, 1.0],
        ]
    }
}
