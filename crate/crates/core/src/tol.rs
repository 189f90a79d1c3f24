//! Scale-free thresholds shared by the kernel.

/// Triangle is degenerate when signed area < this × (longest side)².
pub const DEGENERATE_TRIANGLE: f64 = 1e-12;

/// Conic is degenerate when |det M| < this, with M max-entry normalized.
pub const DEGENERATE_CONIC: f64 = 1e-12;

/// Relative axis difference below which a conic counts as a circle.
pub const CIRCULAR: f64 = 1e-9;

/// Two sides closer than this × perimeter make X100 undefined.
pub const ISOSCELES: f64 = 1e-10;

/// Minimum |δᵢⱼ| for three tangent lines (unit normals).
pub const PARALLEL_TANGENTS: f64 = 1e-12;

/// Relative gap between the closed-form and discriminant-solved inconic D
/// above which the discriminant value wins.
pub const INCONIC_D_MISMATCH: f64 = 1e-9;

/// Relative size of a weight sum treated as zero.
pub const WEIGHT_SUM: f64 = 1e-12;

/// |d − r| band, relative to R, for a family containing a right triangle.
pub const RIGHT_BAND: f64 = 1e-12;
