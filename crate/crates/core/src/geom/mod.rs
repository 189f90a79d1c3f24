//! Plane-geometry primitives.

mod circle;
mod conic;
mod line;
mod point;
mod similarity;
mod triangle;

pub use circle::Circle;
pub use conic::{CanonicalConic, ConicKind, ConicMatrix};
pub use line::Line;
pub use point::Point;
pub use similarity::Similarity;
pub use triangle::Triangle;

/// Wraps an angle into (−π/2, π/2].
pub fn wrap_half_turn(angle: f64) -> f64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    let mut a = angle.rem_euclid(PI);
    if a > FRAC_PI_2 {
        a -= PI;
    }
    a
}

/// Distance between two axis directions modulo `period` (π or π/2).
pub fn axis_gap(a: f64, b: f64, period: f64) -> f64 {
    let g = (a - b).rem_euclid(period);
    g.min(period - g)
}
