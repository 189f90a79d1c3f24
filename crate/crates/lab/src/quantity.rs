//! Published registry of per-sample scalar quantities.

use porism_core::billiard::cb_axes_normalized;
use porism_core::centers::{self, side_lengths, CenterId};
use porism_core::conics::hyperbola_focal_length;
use porism_core::family::{
    named_conic, theta_double_angle, FamilySample, NamedConic, PoristicConfig,
};
use porism_core::geom::CanonicalConic;
use serde::Serialize;

use crate::error::{LabError, Result};

/// Below this d/R the family is equilateral and every quantity is constant.
const EQUILATERAL_D: f64 = 1e-9;

/// Sides closer than this × perimeter are treated as isosceles by quantities
/// that need a scalene triangle.
pub const NEAR_ISOSCELES: f64 = 1e-6;

/// What the run expects a quantity to do over the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Expectation {
    Invariant,
    Varying,
    /// Undefined everywhere on this family (e.g. the antiorthic axis at d = 0).
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Behavior {
    /// Constant for every family.
    Invariant,
    /// Varies with t, except on the equilateral family.
    VaryingUnlessEquilateral,
    /// Varies with t on every family.
    Varying,
    /// Constant, but only defined when d > 0.
    InvariantWhenScalene,
}

/// Denominator floor used in relative measures: quantities whose value can
/// legitimately be zero are compared against a natural scale instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scale {
    Own,
    Length,
    Angle,
}

type Eval = fn(&PoristicConfig, &FamilySample) -> porism_core::Result<f64>;
type Expected = fn(&PoristicConfig) -> f64;

pub struct Quantity {
    pub name: &'static str,
    pub description: &'static str,
    behavior: Behavior,
    scale: Scale,
    /// Multiplier on the run tolerance.
    pub tolerance_factor: f64,
    pub needs_scalene: bool,
    eval: Eval,
    expected: Option<Expected>,
}

impl Quantity {
    pub fn expectation(&self, cfg: &PoristicConfig) -> Expectation {
        let equilateral = cfg.d() <= EQUILATERAL_D * cfg.big_r();
        match self.behavior {
            Behavior::Invariant => Expectation::Invariant,
            Behavior::Varying => Expectation::Varying,
            Behavior::VaryingUnlessEquilateral if equilateral => Expectation::Invariant,
            Behavior::VaryingUnlessEquilateral => Expectation::Varying,
            Behavior::InvariantWhenScalene if equilateral => Expectation::NotApplicable,
            Behavior::InvariantWhenScalene => Expectation::Invariant,
        }
    }

    pub fn expected(&self, cfg: &PoristicConfig) -> Option<f64> {
        match self.expectation(cfg) {
            Expectation::Invariant => self.expected.map(|f| f(cfg)),
            _ => None,
        }
    }

    pub fn tolerance(&self, run_tolerance: f64) -> f64 {
        self.tolerance_factor * run_tolerance
    }

    /// Denominator for relative spread and deviation.
    pub fn denominator(&self, cfg: &PoristicConfig, mean: f64) -> f64 {
        let floor = match self.scale {
            Scale::Own => 0.0,
            Scale::Length => cfg.big_r(),
            Scale::Angle => 1.0,
        };
        mean.abs().max(floor)
    }

    /// Evaluates on one sample; `Err` carries the skip reason.
    pub fn eval(&self, cfg: &PoristicConfig, s: &FamilySample) -> std::result::Result<f64, String> {
        if self.needs_scalene {
            let [a, b, c] = side_lengths(&s.triangle).to_array();
            let gap = (a - b).abs().min((b - c).abs()).min((c - a).abs());
            if gap < NEAR_ISOSCELES * s.perimeter {
                return Err("near-isosceles sample".into());
            }
        }
        match (self.eval)(cfg, s) {
            Ok(v) if v.is_finite() => Ok(v),
            Ok(v) => Err(format!("non-finite value {v}")),
            Err(e) => Err(e.to_string()),
        }
    }
}

fn canon(s: &FamilySample, tag: NamedConic) -> porism_core::Result<CanonicalConic> {
    named_conic(s, tag)?.canonicalize()
}

fn ratio(s: &FamilySample, tag: NamedConic) -> porism_core::Result<f64> {
    Ok(canon(s, tag)?.aspect_ratio())
}

fn expected_ratio(cfg: &PoristicConfig, tag: NamedConic) -> f64 {
    tag.expected_aspect_ratio(cfg).expect("ratio-type conic")
}

fn cb_axes(cfg: &PoristicConfig) -> (f64, f64, f64) {
    cb_axes_normalized(cfg.rho()).expect("validated ratio")
}

macro_rules! ratio_quantity {
    ($name:literal, $tag:expr, $desc:literal) => {
        Quantity {
            name: $name,
            description: $desc,
            behavior: Behavior::Invariant,
            scale: Scale::Own,
            tolerance_factor: 1.0,
            needs_scalene: false,
            eval: |_, s| ratio(s, $tag),
            expected: Some(|c| expected_ratio(c, $tag)),
        }
    };
}

pub static REGISTRY: &[Quantity] = &[
    Quantity {
        name: "perimeter",
        description: "perimeter L from the vertices",
        behavior: Behavior::VaryingUnlessEquilateral,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(s.perimeter),
        expected: None,
    },
    Quantity {
        name: "r_over_L",
        description: "inradius over perimeter",
        behavior: Behavior::VaryingUnlessEquilateral,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |c, s| Ok(c.r() / s.perimeter),
        expected: None,
    },
    Quantity {
        name: "R_over_L",
        description: "circumradius over perimeter",
        behavior: Behavior::VaryingUnlessEquilateral,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |c, s| Ok(c.big_r() / s.perimeter),
        expected: None,
    },
    Quantity {
        name: "x9_x",
        description: "constructed mittenpunkt, x",
        behavior: Behavior::VaryingUnlessEquilateral,
        scale: Scale::Length,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(centers::center(&s.triangle, CenterId::X9)?.x),
        expected: None,
    },
    Quantity {
        name: "x9_y",
        description: "constructed mittenpunkt, y",
        behavior: Behavior::VaryingUnlessEquilateral,
        scale: Scale::Length,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(centers::center(&s.triangle, CenterId::X9)?.y),
        expected: None,
    },
    Quantity {
        name: "theta",
        description: "rotation of the normalizing similarity (double-angle closed form)",
        behavior: Behavior::Varying,
        scale: Scale::Angle,
        tolerance_factor: 10.0,
        needs_scalene: false,
        eval: |c, s| Ok(theta_double_angle(c, s.t)),
        expected: None,
    },
    Quantity {
        name: "eta1",
        description: "X1-centered circumellipse, semi-major",
        behavior: Behavior::Invariant,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::E1)?.semi_major),
        expected: Some(|c| c.big_r() + c.d()),
    },
    Quantity {
        name: "zeta1",
        description: "X1-centered circumellipse, semi-minor",
        behavior: Behavior::Invariant,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::E1)?.semi_minor),
        expected: Some(|c| c.big_r() - c.d()),
    },
    ratio_quantity!("ratio_e1", NamedConic::E1, "X1-centered circumellipse, aspect ratio"),
    ratio_quantity!("ratio_e9", NamedConic::E9, "circumbilliard, aspect ratio"),
    ratio_quantity!("ratio_e10", NamedConic::E10, "X10-centered circumellipse, aspect ratio"),
    ratio_quantity!("ratio_e3x", NamedConic::E3x, "excentral circumconic about X40, aspect ratio"),
    ratio_quantity!("ratio_e5x", NamedConic::E5x, "excentral circumconic about X3, aspect ratio"),
    ratio_quantity!("ratio_e6x", NamedConic::E6x, "excentral circumconic about X9, aspect ratio"),
    ratio_quantity!("ratio_i3x", NamedConic::I3x, "excentral inconic about X40, aspect ratio"),
    ratio_quantity!("ratio_i5x", NamedConic::I5x, "excentral inconic about X3, aspect ratio"),
    Quantity {
        name: "i3x_major",
        description: "excentral inconic about X40, semi-major",
        behavior: Behavior::Invariant,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::I3x)?.semi_major),
        expected: Some(|c| c.big_r() + c.d()),
    },
    Quantity {
        name: "i3x_minor",
        description: "excentral inconic about X40, semi-minor",
        behavior: Behavior::Invariant,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::I3x)?.semi_minor),
        expected: Some(|c| c.big_r() - c.d()),
    },
    Quantity {
        name: "i5x_major",
        description: "excentral inconic about X3, semi-major",
        behavior: Behavior::Invariant,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::I5x)?.semi_major),
        expected: Some(|c| c.big_r()),
    },
    Quantity {
        name: "i5x_minor",
        description: "excentral inconic about X3, semi-minor",
        behavior: Behavior::Invariant,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::I5x)?.semi_minor),
        expected: Some(|c| (c.big_r() * c.big_r() - c.d() * c.d()).sqrt()),
    },
    Quantity {
        name: "i5x_center_x",
        description: "excentral inconic about X3, center x (X40 at the origin)",
        behavior: Behavior::Invariant,
        scale: Scale::Length,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::I5x)?.center.x),
        expected: Some(|c| c.d()),
    },
    Quantity {
        name: "cb_a_over_L",
        description: "circumbilliard semi-major over perimeter",
        behavior: Behavior::Invariant,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::E9)?.semi_major / s.perimeter),
        expected: Some(|c| cb_axes(c).0),
    },
    Quantity {
        name: "cb_b_over_L",
        description: "circumbilliard semi-minor over perimeter",
        behavior: Behavior::Invariant,
        scale: Scale::Own,
        tolerance_factor: 1.0,
        needs_scalene: false,
        eval: |_, s| Ok(canon(s, NamedConic::E9)?.semi_minor / s.perimeter),
        expected: Some(|c| cb_axes(c).1),
    },
    Quantity {
        name: "antiorthic_x",
        description: "x-intercept of the constructed antiorthic axis",
        behavior: Behavior::InvariantWhenScalene,
        scale: Scale::Length,
        tolerance_factor: 0.1,
        needs_scalene: false,
        eval: |_, s| {
            centers::antiorthic_axis(&s.triangle)?.x_intercept().ok_or(porism_core::Error::AxisAtInfinity)
        },
        expected: Some(|c| {
            let (big_r, d) = (c.big_r(), c.d());
            (3.0 * big_r * big_r + d * d) / (2.0 * d)
        }),
    },
    Quantity {
        name: "focal_ratio",
        description: "focal length of the excentral Jerabek hyperbola over the Feuerbach hyperbola's",
        behavior: Behavior::InvariantWhenScalene,
        scale: Scale::Own,
        tolerance_factor: 100.0,
        needs_scalene: true,
        eval: |_, s| {
            let x11 = centers::center(&s.triangle, CenterId::X11)?;
            let x100 = centers::center(&s.triangle, CenterId::X100)?;
            Ok(hyperbola_focal_length(&s.excentral, x100)? / hyperbola_focal_length(&s.triangle, x11)?)
        },
        expected: Some(|c| (2.0 / c.rho()).sqrt()),
    },
];

pub fn names() -> Vec<&'static str> {
    REGISTRY.iter().map(|q| q.name).collect()
}

pub fn lookup(name: &str) -> Result<&'static Quantity> {
    REGISTRY.iter().find(|q| q.name == name).ok_or_else(|| LabError::UnknownQuantity {
        name: name.to_string(),
        valid: names().join(", "),
    })
}

/// Resolves a requested list; `None` selects the whole registry.
pub fn select(requested: Option<&[String]>) -> Result<Vec<&'static Quantity>> {
    match requested {
        None => Ok(REGISTRY.iter().collect()),
        Some(list) => list.iter().map(|n| lookup(n)).collect(),
    }
}
