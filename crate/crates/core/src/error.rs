use thiserror::Error;

/// Errors raised by the geometry kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("line coefficients a and b are both zero")]
    InvalidLine,
    #[error("circle radius must be positive, got {0}")]
    InvalidRadius(f64),
    #[error("conic matrix is zero or not symmetric")]
    InvalidConic,
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("conic is a parabola (no finite center)")]
    NotCentral,
    #[error("barycentric weights sum to zero")]
    PointAtInfinity,
    #[error("unsupported triangle center X{0}")]
    UnsupportedCenter(u32),
    #[error("center X{0} is undefined on an isosceles triangle")]
    IsoscelesDegeneracy(u32),
    #[error("tangent lines are parallel")]
    ParallelTangents,
    #[error("perspector is at infinity")]
    PerspectorAtInfinity,
    #[error("conic is not a hyperbola")]
    NotAHyperbola,
    #[error("invalid ratio r/R: need 0 < r <= R/2 (R={big_r}, r={small_r})")]
    InvalidRatio { big_r: f64, small_r: f64 },
    #[error("line is at infinity for d = 0")]
    AxisAtInfinity,
    #[error("billiard is circular")]
    CircularBilliard,
    #[error("invalid billiard semi-axes a={a}, b={b}")]
    InvalidBilliard { a: f64, b: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
