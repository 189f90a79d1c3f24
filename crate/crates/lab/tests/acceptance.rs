//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs with its own harness so every line is printed, in order, whether it
//! passes or not. Oracles (ellipse fit, reflection angles, constructive
//! Gergonne point, antiorthic and focal closed forms) are written here,
//! independently of the library code they check.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;

use porism_core::billiard::{billiard_cross_checks, billiard_rho, cb_axes_normalized, normalize_sample, BilliardConfig};
use porism_core::centers::{self, CenterId};
use porism_core::conics::{brianchon_point, hyperbola_focal_length, inconic_from_tangents};
use porism_core::family::{
    excentral_side_lines, i3x_implicit, named_conic, perimeter_closed_form, sample, t_grid, weaver_circles,
    FamilySample, NamedConic, PoristicConfig,
};
use porism_core::geom::{axis_gap, CanonicalConic, Line, Point, Triangle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pinned tolerances, one per stated bound.
mod tol {
    /// Vertices on the circumcircle, sides tangent to the incircle.
    pub const CLOSURE: f64 = 1e-10;
    /// Semi-axes, centers, foci and conic-matrix agreement.
    pub const SHAPE: f64 = 1e-9;
    /// Axis directions, in radians.
    pub const ANGLE: f64 = 1e-8;
    /// Point-on-conic value for X100.
    pub const INCIDENCE: f64 = 1e-9;
    /// Relative spread of an invariant ratio, and its value.
    pub const RATIO: f64 = 1e-9;
    /// Normalized vertices on the fixed billiard.
    pub const BILLIARD: f64 = 1e-8;
    /// Reflection law at each normalized vertex, radians.
    pub const REFLECTION: f64 = 1e-8;
    /// Foci on the predicted circle.
    pub const FOCI: f64 = 1e-9;
    /// Focal-length ratio of the two circumhyperbolas.
    pub const FOCAL: f64 = 1e-7;
    /// Spread of the antiorthic axis x-intercept.
    pub const AXIS_SPREAD: f64 = 1e-10;
    /// Side-line intersections on the closed-form axis.
    pub const AXIS_COLLINEAR: f64 = 1e-9;
    /// Weaver circle power equalities.
    pub const POWER: f64 = 1e-10;
    /// Perimeter closed form, relative.
    pub const PERIMETER: f64 = 1e-12;
    /// Billiard-side identities.
    pub const CROSS: f64 = 1e-12;
    /// Brianchon point against the Gergonne point, over the longest side.
    pub const BRIANCHON: f64 = 1e-10;
    /// Near-isosceles exclusion: smallest side gap over the perimeter.
    pub const ISOSCELES: f64 = 1e-6;
}

const RHOS: [f64; 4] = [0.05, 0.2, 0.36266, 0.49];
const T_SAMPLES: usize = 720;

struct Outcome {
    label: String,
    pass: bool,
    detail: String,
}

fn outcome(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { label: label.into(), pass, detail: detail.into() }
}

fn families() -> Vec<(PoristicConfig, Vec<FamilySample>)> {
    RHOS.iter()
        .map(|&rho| {
            let cfg = PoristicConfig::from_rho(rho).unwrap();
            let samples = t_grid(T_SAMPLES).into_iter().map(|t| sample(&cfg, t).unwrap()).collect();
            (cfg, samples)
        })
        .collect()
}

fn canon(s: &FamilySample, tag: NamedConic) -> CanonicalConic {
    named_conic(s, tag).and_then(|c| c.canonicalize()).unwrap()
}

fn near_isosceles(t: &Triangle) -> bool {
    let [a, b, c] = [t.side(0), t.side(1), t.side(2)];
    (a - b).abs().min((b - c).abs()).min((c - a).abs()) < tol::ISOSCELES * (a + b + c)
}

/// Tracks a running maximum and where it happened.
#[derive(Default)]
struct Worst {
    value: f64,
    at: String,
}

impl Worst {
    fn see(&mut self, v: f64, at: impl FnOnce() -> String) {
        if v.is_nan() || v > self.value {
            self.value = if v.is_nan() { f64::INFINITY } else { v };
            self.at = at();
        }
    }
}

fn c01_closure(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let mut w = Worst::default();
    for (cfg, samples) in fams {
        for s in samples {
            for p in s.triangle.vertices() {
                w.see((p.dist(cfg.x3()) - cfg.big_r()).abs(), || format!("ρ={} t={:.4}", cfg.rho(), s.t));
            }
            for l in s.triangle.side_lines() {
                w.see((l.eval(cfg.x1()).abs() - cfg.r()).abs(), || format!("ρ={} t={:.4}", cfg.rho(), s.t));
            }
        }
    }
    vec![outcome(
        "criterion 1 (closure)",
        w.value < tol::CLOSURE,
        format!("max residual {:.2e} < {:.0e} ({})", w.value, tol::CLOSURE, w.at),
    )]
}

fn c02_excentral_caustic(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let mut w = Worst::default();
    for (cfg, samples) in fams {
        let (big_r, d) = (cfg.big_r(), cfg.d());
        // X40 frame: center (d, 0), foci X40 = (0, 0) and X1 = (2d, 0)
        let (center, f_a, f_b) = (Point::new(d, 0.0), Point::ORIGIN, Point::new(2.0 * d, 0.0));
        for s in samples {
            let c = canon(s, NamedConic::I5x);
            let (f1, f2) = c.foci().unwrap();
            let foci = (f1.dist(f_a).max(f2.dist(f_b))).min(f1.dist(f_b).max(f2.dist(f_a)));
            let res = [
                c.center.dist(center),
                (c.semi_major - big_r).abs(),
                (c.semi_minor - (big_r * big_r - d * d).sqrt()).abs(),
                foci,
            ];
            w.see(res.into_iter().fold(0.0, f64::max), || format!("ρ={} t={:.4}", cfg.rho(), s.t));
        }
    }
    vec![outcome(
        "criterion 2 (stationary excentral MacBeath inconic)",
        w.value < tol::SHAPE,
        format!("max center/axis/focus error {:.2e} < {:.0e} ({})", w.value, tol::SHAPE, w.at),
    )]
}

fn c03_i3x(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let (mut axes, mut matrix) = (Worst::default(), Worst::default());
    for (cfg, samples) in fams {
        let (big_r, d) = (cfg.big_r(), cfg.d());
        for s in samples {
            let c = canon(s, NamedConic::I3x);
            let e = (c.semi_major - (big_r + d)).abs().max((c.semi_minor - (big_r - d)).abs());
            axes.see(e, || format!("ρ={} t={:.4}", cfg.rho(), s.t));
            let [l1, l2, l3] = excentral_side_lines(cfg, s.t).unwrap();
            let tangent = inconic_from_tangents(&l1, &l2, &l3).unwrap().to_conic().unwrap();
            let implicit = i3x_implicit(cfg, s.t).unwrap();
            matrix.see(tangent.distance(&implicit), || format!("ρ={} t={:.4}", cfg.rho(), s.t));
        }
    }
    let pass = axes.value < tol::SHAPE && matrix.value < tol::SHAPE;
    vec![outcome(
        "criterion 3 (excentral X3-inconic)",
        pass,
        format!(
            "semi-axis error {:.2e}, tangent construction vs implicit matrix {:.2e}, both < {:.0e}",
            axes.value,
            matrix.value,
            tol::SHAPE
        ),
    )]
}

fn c04_e1(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let (mut axes, mut angle, mut x100) = (Worst::default(), Worst::default(), Worst::default());
    let mut excluded = 0;
    for (cfg, samples) in fams {
        let (big_r, d) = (cfg.big_r(), cfg.d());
        for s in samples {
            let e1 = canon(s, NamedConic::E1);
            let i3 = canon(s, NamedConic::I3x);
            let at = || format!("ρ={} t={:.4}", cfg.rho(), s.t);
            axes.see((e1.semi_major - (big_r + d)).abs().max((e1.semi_minor - (big_r - d)).abs()), at);
            angle.see(axis_gap(e1.angle, i3.angle + FRAC_PI_2, PI), at);
            if near_isosceles(&s.triangle) {
                excluded += 1;
                continue;
            }
            let p = centers::center(&s.triangle, CenterId::X100).unwrap();
            x100.see(named_conic(s, NamedConic::E1).unwrap().eval(p).abs(), at);
        }
    }
    let pass = axes.value < tol::SHAPE && angle.value < tol::ANGLE && x100.value < tol::INCIDENCE;
    vec![outcome(
        "criterion 4 (X1-centered circumellipse)",
        pass,
        format!(
            "semi-axes {:.2e} < {:.0e}; angle vs inconic + π/2 {:.2e} < {:.0e} rad; X100 on it {:.2e} < {:.0e} ({} isosceles samples excluded)",
            axes.value,
            tol::SHAPE,
            angle.value,
            tol::ANGLE,
            x100.value,
            tol::INCIDENCE,
            excluded
        ),
    )]
}

fn spread_rel(values: &[f64]) -> f64 {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    (max - min) / mean.abs()
}

fn c05_e10_e5x(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let (mut spread, mut value) = (0.0f64, 0.0f64);
    for (cfg, samples) in fams {
        let want = ((cfg.big_r() + cfg.d()) / (cfg.big_r() - cfg.d())).sqrt();
        for tag in [NamedConic::E10, NamedConic::E5x] {
            let ratios: Vec<f64> = samples.iter().map(|s| canon(s, tag).aspect_ratio()).collect();
            spread = spread.max(spread_rel(&ratios));
            value = ratios.iter().map(|r| (r - want).abs() / want).fold(value, f64::max);
        }
    }
    vec![outcome(
        "criterion 5 (Spieker and excentral X5 circumconic ratios)",
        spread < tol::RATIO && value < tol::RATIO,
        format!("spread_rel {:.2e}, deviation from √((R+d)/(R−d)) {:.2e}, both < {:.0e}", spread, value, tol::RATIO),
    )]
}

/// Least-squares axis-aligned central ellipse through `pts`: solves for
/// (1/a², 1/b²) in p·u² + q·v² = 1.
fn fit_axis_aligned_ellipse(pts: &[Point]) -> (f64, f64) {
    let (mut s11, mut s12, mut s22, mut r1, mut r2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for p in pts {
        let (x, y) = (p.x * p.x, p.y * p.y);
        s11 += x * x;
        s12 += x * y;
        s22 += y * y;
        r1 += x;
        r2 += y;
    }
    let det = s11 * s22 - s12 * s12;
    let p = (r1 * s22 - r2 * s12) / det;
    let q = (s11 * r2 - s12 * r1) / det;
    (1.0 / p.sqrt(), 1.0 / q.sqrt())
}

/// Angle between each chord at a vertex and the ellipse normal; returns the
/// largest mismatch over the three vertices.
fn reflection_mismatch(a: f64, b: f64, t: &Triangle) -> f64 {
    let v = t.vertices();
    (0..3)
        .map(|i| {
            let p = v[i];
            let n = Point::new(p.x / (a * a), p.y / (b * b));
            let angle = |q: Point| {
                let u = q - p;
                (u.cross(n).abs()).atan2(u.dot(n))
            };
            (angle(v[(i + 1) % 3]) - angle(v[(i + 2) % 3])).abs()
        })
        .fold(0.0, f64::max)
}

fn c06_billiard(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let (mut fit, mut on, mut refl) = (0.0f64, 0.0f64, 0.0f64);
    let mut check_family = |cfg: &PoristicConfig, samples: &[FamilySample]| {
        let (a, b, _) = cb_axes_normalized(cfg.rho()).unwrap();
        let tris: Vec<Triangle> = samples.iter().map(|s| normalize_sample(cfg, s).unwrap()).collect();
        let pts: Vec<Point> = tris.iter().flat_map(|t| *t.vertices()).collect();
        let (fa, fb) = fit_axis_aligned_ellipse(&pts);
        fit = fit.max((fa - a).abs()).max((fb - b).abs());
        for p in &pts {
            on = on.max(((p.x / a).powi(2) + (p.y / b).powi(2) - 1.0).abs());
        }
        for t in &tris {
            refl = refl.max(reflection_mismatch(a, b, t));
        }
    };
    for (cfg, samples) in fams {
        check_family(cfg, samples);
    }
    // the near-degenerate end of the range, measured as well
    let low = PoristicConfig::from_rho(0.01).unwrap();
    let low_samples: Vec<FamilySample> = t_grid(T_SAMPLES).into_iter().map(|t| sample(&low, t).unwrap()).collect();
    check_family(&low, &low_samples);
    let main = fit < tol::BILLIARD && on < tol::BILLIARD && refl < tol::REFLECTION;

    // ρ = 1/2: equilateral of perimeter 1 has circumradius (1/3)/√3 = √3/9
    let (ae, be, _) = cb_axes_normalized(0.5).unwrap();
    let eq = 3f64.sqrt() / 9.0;
    let eq_ok = (ae - eq).abs() < 1e-15 && (be - eq).abs() < 1e-15;
    let eq_cfg = PoristicConfig::from_rho(0.5).unwrap();
    let eq_tri = normalize_sample(&eq_cfg, &sample(&eq_cfg, 0.3).unwrap()).unwrap();
    let eq_measured = eq_tri.vertices().iter().map(|p| (p.norm() - eq).abs()).fold(0.0, f64::max);

    // ρ → 0: a₉/L rises toward 1/4 and b₉/L falls toward 0, monotonically
    let ladder = [0.5, 0.3, 0.1, 0.05, 0.01];
    let axes: Vec<(f64, f64)> = ladder.iter().map(|&r| {
        let (a, b, _) = cb_axes_normalized(r).unwrap();
        (a, b)
    }).collect();
    let monotone = axes.windows(2).all(|w| w[1].0 > w[0].0 && w[1].1 < w[0].1);
    let (a01, b01) = axes[axes.len() - 1];
    let (a05, b05) = axes[axes.len() - 2];
    let trend = monotone && a01 < 0.25 && 0.25 - a01 < 0.25 - a05 && 0.25 - a01 < 1e-3 && b01 > 0.0 && b01 < b05 && b01 < 0.03;

    vec![outcome(
        "criterion 6 (fixed circumbilliard)",
        main && eq_ok && eq_measured < tol::BILLIARD && trend,
        format!(
            "fitted axes {:.2e}, on-ellipse {:.2e} < {:.0e}; reflection {:.2e} < {:.0e} rad; ρ=1/2 gives √3/9 (measured {:.2e}); ρ=0.01 gives ({:.6}, {:.6}), monotone={}",
            fit,
            on,
            tol::BILLIARD,
            refl,
            tol::REFLECTION,
            eq_measured,
            a01,
            b01,
            monotone
        ),
    )]
}

fn e9_foci_distances(cfg: &PoristicConfig, samples: &[FamilySample], center: Point) -> Vec<f64> {
    samples
        .iter()
        .flat_map(|s| {
            let (f1, f2) = canon(s, NamedConic::E9).foci().unwrap();
            [f1.dist(center), f2.dist(center)]
        })
        .inspect(|d| assert!(d.is_finite(), "ρ={}", cfg.rho()))
        .collect()
}

fn c07_foci_circle(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let (mut printed, mut measured, mut closed) = (0.0f64, 0.0f64, 0.0f64);
    for (cfg, samples) in fams {
        let (big_r, d) = (cfg.big_r(), cfg.d());
        // stated with X3 at the origin; this frame has X3 at (d, 0)
        let center = Point::new((big_r - d) * d / (3.0 * big_r + d) + d, 0.0);
        let r9 = 4.0 * d * (big_r - d) * (d * big_r).sqrt()
            / ((3.0 * big_r - d) * ((3.0 * big_r - d) * (big_r + d)).sqrt());
        let dists = e9_foci_distances(cfg, samples, center);
        printed = dists.iter().map(|x| (x - r9).abs()).fold(printed, f64::max);
        // companion: the foci do sit on a circle about that center
        let mean = dists.iter().sum::<f64>() / dists.len() as f64;
        measured = dists.iter().map(|x| (x - mean).abs()).fold(measured, f64::max);
        let derived = (4.0 * d * big_r * (big_r + d) * (3.0 * big_r - d)).sqrt() / (3.0 * big_r + d);
        closed = dists.iter().map(|x| (x - derived).abs()).fold(closed, f64::max);
    }
    vec![
        outcome(
            "criterion 7 (circumbilliard foci on the predicted circle, radius r9)",
            printed < tol::FOCI,
            format!("max |dist − r9| {:.3e}, bound {:.0e}", printed, tol::FOCI),
        ),
        outcome(
            "criterion 7 companion (foci concyclic about the same center, radius √(4dR(R+d)(3R−d))/(3R+d))",
            measured < tol::FOCI && closed < tol::FOCI,
            format!("spread about mean {:.2e}, deviation from derived radius {:.2e}, both < {:.0e}", measured, closed, tol::FOCI),
        ),
    ]
}

fn c08_e6x(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let (mut ratio, mut conc, mut par) = (0.0f64, 0.0f64, 0.0f64);
    for (cfg, samples) in fams {
        let (big_r, d) = (cfg.big_r(), cfg.d());
        let want = ((big_r + d) * (3.0 * big_r + d) / ((3.0 * big_r - d) * (big_r - d))).sqrt();
        for s in samples {
            let e6 = canon(s, NamedConic::E6x);
            let e9 = canon(s, NamedConic::E9);
            ratio = ratio.max((e6.aspect_ratio() - want).abs() / want);
            conc = conc.max(e6.center.dist(e9.center));
            par = par.max(axis_gap(e6.angle, e9.angle, FRAC_PI_2));
        }
    }
    vec![outcome(
        "criterion 8 (excentral X6 circumconic vs circumbilliard)",
        ratio < tol::RATIO && conc < tol::SHAPE && par < tol::ANGLE,
        format!(
            "ratio {:.2e} < {:.0e}; center distance {:.2e} < {:.0e}; axis gap {:.2e} < {:.0e} rad",
            ratio,
            tol::RATIO,
            conc,
            tol::SHAPE,
            par,
            tol::ANGLE
        ),
    )]
}

fn c09_focal_ratio(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let mut w = Worst::default();
    let mut excluded = 0;
    for (cfg, samples) in fams {
        let want = (2.0 / cfg.rho()).sqrt();
        for s in samples {
            if near_isosceles(&s.triangle) {
                excluded += 1;
                continue;
            }
            let x11 = centers::center(&s.triangle, CenterId::X11).unwrap();
            let x100 = centers::center(&s.triangle, CenterId::X100).unwrap();
            let g = hyperbola_focal_length(&s.triangle, x11).unwrap();
            let gp = hyperbola_focal_length(&s.excentral, x100).unwrap();
            w.see((gp / g - want).abs() / want, || format!("ρ={} t={:.4}", cfg.rho(), s.t));
        }
    }
    vec![outcome(
        "criterion 9 (circumhyperbola focal-length ratio √(2/ρ))",
        w.value < tol::FOCAL,
        format!("max relative error {:.2e} < {:.0e} ({}; {} isosceles samples excluded)", w.value, tol::FOCAL, w.at, excluded),
    )]
}

fn c10_antiorthic(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let (mut spread, mut coll, mut power) = (0.0f64, 0.0f64, 0.0f64);
    for (cfg, samples) in fams {
        let (big_r, d) = (cfg.big_r(), cfg.d());
        let x0 = (3.0 * big_r * big_r + d * d) / (2.0 * d);
        let intercepts: Vec<f64> = samples
            .iter()
            .map(|s| centers::antiorthic_axis(&s.triangle).unwrap().x_intercept().unwrap())
            .collect();
        let min = intercepts.iter().copied().fold(f64::INFINITY, f64::min);
        let max = intercepts.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        spread = spread.max((max - min) / x0);
        for s in samples {
            // each side meets the external bisector at the opposite vertex on the axis
            for i in 0..3 {
                let v = s.triangle.vertex(i);
                let bisector = (cfg.x1() - v).unit();
                let external = Line::through(v, v + bisector.perp()).unwrap();
                if let Some(p) = s.triangle.side_line(i).intersect(&external) {
                    coll = coll.max((p.x - x0).abs() / big_r.max(p.norm()));
                }
            }
        }
        let (cw1, cw2) = weaver_circles(cfg).unwrap();
        let (inc, circ, exc) = (cfg.incircle(), cfg.circumcircle(), cfg.excenter_circle());
        for k in -3..=3 {
            let p = Point::new(x0, k as f64 * big_r);
            let rel = |u: f64, v: f64| (u - v).abs() / u.abs().max(v.abs());
            power = power.max(rel(cw1.power(p), inc.power(p)));
            power = power.max(rel(cw2.power(p), circ.power(p)));
            power = power.max(rel(exc.power(p), circ.power(p)));
        }
    }
    vec![outcome(
        "criterion 10 (antiorthic axis and Weaver circles)",
        spread < tol::AXIS_SPREAD && coll < tol::AXIS_COLLINEAR && power < tol::POWER,
        format!(
            "intercept spread {:.2e} < {:.0e}; side-line intersections off axis {:.2e} < {:.0e}; power mismatch {:.2e} < {:.0e}",
            spread,
            tol::AXIS_SPREAD,
            coll,
            tol::AXIS_COLLINEAR,
            power,
            tol::POWER
        ),
    )]
}

fn c11_perimeter(fams: &[(PoristicConfig, Vec<FamilySample>)]) -> Vec<Outcome> {
    let mut w = Worst::default();
    for (cfg, samples) in fams {
        for s in samples {
            let sum: f64 = (0..3).map(|i| s.triangle.vertex(i).dist(s.triangle.vertex(i + 1))).sum();
            let l = perimeter_closed_form(cfg, s.t);
            w.see((l - sum).abs() / sum, || format!("ρ={} t={:.4}", cfg.rho(), s.t));
        }
    }
    vec![outcome(
        "criterion 11 (perimeter closed form)",
        w.value < tol::PERIMETER,
        format!("max relative error {:.2e} < {:.0e} ({})", w.value, tol::PERIMETER, w.at),
    )]
}

fn c12_cross_checks() -> Vec<Outcome> {
    let rho = billiard_rho(&BilliardConfig::new(1.5, 1.0).unwrap());
    let in_range = (0.36265..=0.36267).contains(&rho);
    let mut worst = 0.0f64;
    let mut count = 0;
    for (a, b) in [(1.5, 1.0), (2.0, 1.0), (1.1, 1.0)] {
        for c in billiard_cross_checks(&BilliardConfig::new(a, b).unwrap()) {
            if c.name.starts_with("exc_inconic") {
                worst = worst.max(c.rel_diff());
                count += 1;
            }
        }
    }
    vec![outcome(
        "criterion 12 (billiard cross-checks)",
        in_range && count == 9 && worst < tol::CROSS,
        format!("ρ(1.5, 1) = {rho:.7} in [0.36265, 0.36267]; {count} dual-form identities, max rel diff {:.2e} < {:.0e}", worst, tol::CROSS),
    )]
}

/// Gergonne point from first principles: cevians to the incircle touch
/// points, with the incenter as the side-length weighted vertex average.
fn gergonne(t: &Triangle) -> Point {
    let v = t.vertices();
    let s = [t.side(0), t.side(1), t.side(2)];
    let per = s[0] + s[1] + s[2];
    let incenter = (v[0] * s[0] + v[1] * s[1] + v[2] * s[2]) * (1.0 / per);
    let touch = |i: usize| {
        let (p, q) = (v[(i + 1) % 3], v[(i + 2) % 3]);
        let dir = (q - p).unit();
        p + dir * (incenter - p).dot(dir)
    };
    let l0 = Line::through(v[0], touch(0)).unwrap();
    let l1 = Line::through(v[1], touch(1)).unwrap();
    l0.intersect(&l1).unwrap()
}

fn random_triangles(n: usize) -> Vec<Triangle> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = [(); 3].map(|_| Point::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        if let Ok(t) = Triangle::from_array(p) {
            // keep every angle above ~5° so the oracle itself is well conditioned
            let ok = (0..3).all(|i| {
                let (u, w) = (t.vertex(i + 1) - t.vertex(i), t.vertex(i + 2) - t.vertex(i));
                u.cross(w).abs().atan2(u.dot(w)) > 0.09
            });
            if ok {
                out.push(t);
            }
        }
    }
    out
}

fn c13_brianchon() -> Vec<Outcome> {
    let tris = random_triangles(100);
    let worst = |g: fn(f64, f64, f64) -> f64| {
        tris.iter()
            .map(|t| {
                let scale = (0..3).map(|i| t.side(i)).fold(0.0, f64::max);
                brianchon_point(t, g).map_or(f64::INFINITY, |b| b.dist(gergonne(t)) / scale)
            })
            .fold(0.0, f64::max)
    };
    let literal = worst(|_, s2, s3| s2 * s3);
    let incenter = worst(|s1, _, _| s1);
    vec![
        outcome(
            "criterion 13 (Brianchon point with g = s2·s3 is the Gergonne point)",
            literal < tol::BRIANCHON,
            format!("max distance / longest side {:.3e}, bound {:.0e}, over 100 triangles", literal, tol::BRIANCHON),
        ),
        outcome(
            "criterion 13 companion (g = s1, the incenter's barycentrics, gives the Gergonne point)",
            incenter < tol::BRIANCHON,
            format!("max distance / longest side {:.2e} < {:.0e} over 100 triangles", incenter, tol::BRIANCHON),
        ),
    ]
}

fn c14_mutation() -> Vec<Outcome> {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap().to_string();
    let base = ["porism-lab", "verify", "--rho", "0.36266", "--out", out.as_str()];
    let clean = porism_lab::run(base);
    let mut perturbed_args = base.to_vec();
    perturbed_args.extend(["--perturb-sample", "100"]);
    let perturbed = porism_lab::run(perturbed_args);
    vec![outcome(
        "criterion 14 (1e-6 vertex perturbation flips the verdict)",
        clean == 0 && perturbed == 1,
        format!("unperturbed exit {clean} (want 0), perturbed exit {perturbed} (want 1)"),
    )]
}

fn main() -> ExitCode {
    // behave like a test binary when asked to list tests
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let start = std::time::Instant::now();
    let fams = families();
    let mut all = Vec::new();
    all.extend(c01_closure(&fams));
    all.extend(c02_excentral_caustic(&fams));
    all.extend(c03_i3x(&fams));
    all.extend(c04_e1(&fams));
    all.extend(c05_e10_e5x(&fams));
    all.extend(c06_billiard(&fams));
    all.extend(c07_foci_circle(&fams));
    all.extend(c08_e6x(&fams));
    all.extend(c09_focal_ratio(&fams));
    all.extend(c10_antiorthic(&fams));
    all.extend(c11_perimeter(&fams));
    all.extend(c12_cross_checks());
    all.extend(c13_brianchon());
    all.extend(c14_mutation());

    println!();
    for o in &all {
        println!("{}: {} — {}", o.label, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    let failed: Vec<&str> = all.iter().filter(|o| !o.pass).map(|o| o.label.as_str()).collect();
    println!(
        "acceptance: {} passed, {} failed in {:.1}s",
        all.len() - failed.len(),
        failed.len(),
        start.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
