//! The full invariance suite behind `porism-lab verify`.

use std::f64::consts::{FRAC_PI_2, PI};

use porism_core::billiard::{
    billiard_cross_checks, billiard_rho, cb_axes_normalized, ellipse_residual, foci_locus, normalize_sample,
    reflection_law_residual, BilliardConfig,
};
use porism_core::centers::{self, CenterId};
use porism_core::conics::{brianchon_point, inconic_from_tangents, inconic_centered};
use porism_core::family::{
    self, axis_foot, excentral_side_lines, i3x_implicit, named_conic, perimeter_closed_form, t_grid,
    theta_closed_form, theta_constructive, theta_double_angle, weaver_circles, x9_closed_form, x9_locus,
    FamilySample, NamedConic, PoristicConfig,
};
use porism_core::geom::{axis_gap, CanonicalConic, Line, Point, Triangle};
use porism_core::par::map_range;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::LabConfig;
use crate::error::Result;
use crate::quantity::{self, Quantity, NEAR_ISOSCELES};
use crate::report::{CheckReport, Report, SkippedSample, SweepReport};

/// Size of the vertex displacement injected by `perturb_sample`, relative to R.
pub const PERTURBATION: f64 = 1e-6;

/// Random triangles in the Brianchon check.
pub const BRIANCHON_TRIALS: usize = 100;

/// Below this d/R the family is equilateral; direction-dependent checks are
/// not applicable.
const EQUILATERAL_D: f64 = 1e-9;

/// Builds the sweep's samples, in t order, applying the test perturbation if
/// one was requested.
pub fn build_samples(lab: &LabConfig, cfg: &PoristicConfig) -> Result<Vec<FamilySample>> {
    let ts = t_grid(lab.t_samples);
    let samples: porism_core::Result<Vec<FamilySample>> =
        map_range(ts.len(), |k| family::sample(cfg, ts[k])).into_iter().collect();
    let mut samples = samples?;
    if let Some(k) = lab.perturb_sample {
        let s = &mut samples[k % lab.t_samples];
        let p = s.triangle.vertex(0) + Point::new(PERTURBATION * cfg.big_r(), 0.0);
        let triangle = s.triangle.with_vertex(0, p)?;
        s.excentral = centers::excentral(&triangle)?;
        s.perimeter = triangle.perimeter();
        s.triangle = triangle;
    }
    Ok(samples)
}

/// Evaluates each quantity on each sample: `columns[q][k]`.
pub fn evaluate(
    cfg: &PoristicConfig,
    samples: &[FamilySample],
    quantities: &[&Quantity],
) -> Vec<Vec<std::result::Result<f64, String>>> {
    let rows = map_range(samples.len(), |k| quantities.iter().map(|q| q.eval(cfg, &samples[k])).collect::<Vec<_>>());
    (0..quantities.len()).map(|j| rows.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn run(lab: &LabConfig) -> Result<Report> {
    let cfg = lab.poristic()?;
    let samples = build_samples(lab, &cfg)?;
    let quantities = quantity::select(None)?;
    let columns = evaluate(&cfg, &samples, &quantities);
    let mut reports = Vec::with_capacity(quantities.len());
    let mut skipped = Vec::new();
    for (q, column) in quantities.iter().zip(&columns) {
        let values: Vec<Option<f64>> = column.iter().map(|v| v.as_ref().ok().copied()).collect();
        for (s, v) in samples.iter().zip(column) {
            if let Err(reason) = v {
                skipped.push(SkippedSample { t: s.t, quantity: q.name.to_string(), reason: reason.clone() });
            }
        }
        reports.push(SweepReport::from_values(q, &cfg, lab.tolerance, &values));
    }
    let checks = checks(lab, &cfg, &samples)?;
    Ok(Report::new(lab.clone(), reports, checks, skipped))
}

/// Per-sample residuals, flattened in sample order.
fn per_sample<F>(samples: &[FamilySample], f: F) -> Vec<f64>
where
    F: Fn(&FamilySample) -> Vec<f64> + Sync + Send,
{
    map_range(samples.len(), |k| f(&samples[k])).into_iter().flatten().collect()
}

fn canon(s: &FamilySample, tag: NamedConic) -> Option<CanonicalConic> {
    named_conic(s, tag).and_then(|c| c.canonicalize()).ok()
}

fn is_near_isosceles(s: &FamilySample) -> bool {
    let [a, b, c] = centers::side_lengths(&s.triangle).to_array();
    (a - b).abs().min((b - c).abs()).min((c - a).abs()) < NEAR_ISOSCELES * s.perimeter
}

pub fn checks(lab: &LabConfig, cfg: &PoristicConfig, samples: &[FamilySample]) -> Result<Vec<CheckReport>> {
    let tol = lab.tolerance;
    let angle_tol = 10.0 * tol;
    let big_r = cfg.big_r();
    let equilateral = cfg.d() <= EQUILATERAL_D * big_r;
    let mut out = Vec::new();

    let closure = per_sample(samples, |s| {
        let on_circle = s.triangle.vertices().map(|p| cfg.circumcircle().radial_residual(p).abs() / big_r);
        let tangent = s.triangle.side_lines().map(|l| (l.eval(cfg.x1()).abs() - cfg.r()).abs() / big_r);
        on_circle.into_iter().chain(tangent).collect()
    });
    out.push(CheckReport::new("closure", &closure, 0.1 * tol));

    let perimeter = per_sample(samples, |s| {
        let l = perimeter_closed_form(cfg, s.t);
        vec![(s.perimeter - l).abs() / l]
    });
    out.push(CheckReport::new("perimeter_closed_form", &perimeter, 1e-3 * tol));

    let x9 = per_sample(samples, |s| match centers::center(&s.triangle, CenterId::X9) {
        Ok(p) => vec![p.dist(x9_closed_form(cfg, s.t)) / big_r],
        Err(_) => vec![f64::NAN],
    });
    out.push(CheckReport::new("x9_closed_form", &x9, tol));

    let locus = x9_locus(cfg);
    for (name, radius, info) in [("x9_locus", locus.radius, false), ("x9_locus_printed_radius", locus.radius_printed, true)] {
        let res = per_sample(samples, |s| match centers::center(&s.triangle, CenterId::X9) {
            Ok(p) => vec![(p.dist(locus.center) - radius).abs() / big_r],
            Err(_) => vec![f64::NAN],
        });
        out.push(if info { CheckReport::informational(name, &res, tol) } else { CheckReport::new(name, &res, tol) });
    }

    if !equilateral {
        let theta = per_sample(samples, |s| match (theta_constructive(s), canon(s, NamedConic::E9)) {
            (Ok(th), Some(e9)) if !e9.is_circle() => vec![axis_gap(th, theta_double_angle(cfg, s.t), PI)],
            (Ok(_), Some(_)) => vec![],
            _ => vec![f64::NAN],
        });
        out.push(CheckReport::new("theta_double_angle", &theta, angle_tol));
        let printed = per_sample(samples, |s| vec![axis_gap(theta_closed_form(cfg, s.t), theta_double_angle(cfg, s.t), PI)]);
        out.push(CheckReport::informational("theta_printed_single_angle", &printed, angle_tol));
    }

    // billiard view
    let (a, b, _) = cb_axes_normalized(cfg.rho())?;
    let normalized: Vec<Option<Triangle>> = map_range(samples.len(), |k| normalize_sample(cfg, &samples[k]).ok());
    let on_ellipse: Vec<f64> = normalized
        .iter()
        .flat_map(|n| match n {
            Some(t) => t.vertices().map(|p| ellipse_residual((a, b), p).abs()).to_vec(),
            None => vec![f64::NAN],
        })
        .collect();
    out.push(CheckReport::new("billiard_ellipse", &on_ellipse, angle_tol));
    let reflection: Vec<f64> =
        normalized.iter().map(|n| n.as_ref().map_or(f64::NAN, |t| reflection_law_residual((a, b), t))).collect();
    out.push(CheckReport::new("billiard_reflection_law", &reflection, angle_tol));
    let unit: Vec<f64> = normalized.iter().map(|n| n.as_ref().map_or(f64::NAN, |t| (t.perimeter() - 1.0).abs())).collect();
    out.push(CheckReport::new("billiard_unit_perimeter", &unit, 1e-3 * tol));

    // excentral inconics
    let implicit = per_sample(samples, |s| {
        let from_tangents = excentral_side_lines(cfg, s.t)
            .and_then(|[l1, l2, l3]| inconic_from_tangents(&l1, &l2, &l3))
            .and_then(|c| c.to_conic());
        match (from_tangents, named_conic(s, NamedConic::I3x), i3x_implicit(cfg, s.t)) {
            (Ok(tangent), Ok(built), Ok(want)) => vec![tangent.distance(&want), built.distance(&want)],
            _ => vec![f64::NAN],
        }
    });
    out.push(CheckReport::new("i3x_implicit", &implicit, tol));

    let tangency = per_sample(samples, |s| {
        let mut res = Vec::new();
        for tag in [NamedConic::I3x, NamedConic::I5x, NamedConic::I9] {
            let host = if tag == NamedConic::I9 { &s.triangle } else { &s.excentral };
            let fit = centers::center(&s.triangle, tag.center_id()).and_then(|c| inconic_centered(host, c));
            match fit {
                Ok(fit) => res.extend(host.side_lines().iter().map(|l| fit.conic.tangency_residual(l).abs())),
                Err(_) => res.push(f64::NAN),
            }
        }
        res
    });
    out.push(CheckReport::new("inconic_tangency", &tangency, 0.1 * tol));

    let i5 = per_sample(samples, |s| {
        let Some(c) = canon(s, NamedConic::I5x) else { return vec![f64::NAN] };
        let minor = (big_r * big_r - cfg.d() * cfg.d()).sqrt();
        let mut res = vec![
            c.center.dist(cfg.x3()) / big_r,
            (c.semi_major - big_r).abs() / big_r,
            (c.semi_minor - minor).abs() / big_r,
        ];
        match c.foci() {
            Ok((f1, f2)) => {
                let direct = f1.dist(cfg.x40()).max(f2.dist(cfg.x1()));
                let swapped = f1.dist(cfg.x1()).max(f2.dist(cfg.x40()));
                res.push(direct.min(swapped) / big_r);
            }
            Err(_) => res.push(f64::NAN),
        }
        res
    });
    out.push(CheckReport::new("i5x_stationary", &i5, tol));

    if !equilateral {
        let perp = per_sample(samples, |s| match (canon(s, NamedConic::E1), canon(s, NamedConic::I3x)) {
            (Some(e1), Some(i3)) => vec![axis_gap(e1.angle, i3.angle + FRAC_PI_2, PI)],
            _ => vec![f64::NAN],
        });
        out.push(CheckReport::new("e1_perpendicular_i3x", &perp, angle_tol));

        let x100 = per_sample(samples, |s| {
            if is_near_isosceles(s) {
                return vec![];
            }
            let Ok(p) = centers::center(&s.triangle, CenterId::X100) else { return vec![f64::NAN] };
            [NamedConic::E1, NamedConic::I3x, NamedConic::E9]
                .map(|tag| named_conic(s, tag).map_or(f64::NAN, |c| c.eval(p).abs()))
                .to_vec()
        });
        out.push(CheckReport::new("x100_on_e1_i3x_e9", &x100, tol));

        let concentric = per_sample(samples, |s| match (canon(s, NamedConic::E6x), canon(s, NamedConic::E9)) {
            (Some(e6), Some(e9)) => vec![e6.center.dist(e9.center) / big_r],
            _ => vec![f64::NAN],
        });
        out.push(CheckReport::new("e6x_concentric_e9", &concentric, tol));
        let parallel = per_sample(samples, |s| match (canon(s, NamedConic::E6x), canon(s, NamedConic::E9)) {
            (Some(e6), Some(e9)) => vec![axis_gap(e6.angle, e9.angle, FRAC_PI_2)],
            _ => vec![f64::NAN],
        });
        out.push(CheckReport::new("e6x_parallel_e9", &parallel, angle_tol));

        let foot = axis_foot(cfg)?;
        let constructive = per_sample(samples, |s| {
            let mut res = Vec::new();
            for i in 0..3 {
                if let Some(p) = s.triangle.side_line(i).intersect(&s.excentral.side_line(i)) {
                    res.push((p.x - foot.x).abs() / big_r.max(p.norm()));
                }
            }
            if let Ok(p) = centers::center(&s.triangle, CenterId::X1155) {
                res.push(p.dist(foot) / big_r);
            }
            res
        });
        out.push(CheckReport::new("antiorthic_constructive", &constructive, tol));

        let (cw1, cw2) = weaver_circles(cfg)?;
        let (inc, circ, exc) = (cfg.incircle(), cfg.circumcircle(), cfg.excenter_circle());
        let mut powers = Vec::new();
        for k in -2..=2 {
            let p = foot + Point::new(0.0, k as f64 * big_r);
            let rel = |u: f64, v: f64| (u - v).abs() / u.abs().max(v.abs()).max(big_r * big_r);
            powers.push(rel(cw1.power(p), inc.power(p)));
            powers.push(rel(cw2.power(p), circ.power(p)));
            powers.push(rel(exc.power(p), circ.power(p)));
        }
        out.push(CheckReport::new("weaver_powers", &powers, 0.1 * tol));
    }

    let foci = foci_locus(cfg);
    for (name, radius, info) in [("cb_foci_circle", foci.radius, false), ("cb_foci_printed_radius", foci.radius_printed, true)] {
        let res = per_sample(samples, |s| match canon(s, NamedConic::E9).map(|c| c.foci()) {
            Some(Ok((f1, f2))) => [f1, f2].map(|f| (f.dist(foci.center) - radius).abs() / big_r).to_vec(),
            _ => vec![f64::NAN],
        });
        out.push(if info { CheckReport::informational(name, &res, tol) } else { CheckReport::new(name, &res, tol) });
    }

    let (with_s1, literal) = brianchon_residuals(lab.seed);
    out.push(CheckReport::new("brianchon_gergonne", &with_s1, 0.1 * tol));
    out.push(CheckReport::informational("brianchon_literal_s2s3", &literal, 0.1 * tol));

    let mut cross = Vec::new();
    let mut aspect = Vec::new();
    for (a, b) in [(1.5, 1.0), (2.0, 1.0), (1.1, 1.0)] {
        let bc = BilliardConfig::new(a, b)?;
        for c in billiard_cross_checks(&bc) {
            if c.name == "circumbilliard_aspect" { &mut aspect } else { &mut cross }.push(c.rel_diff());
        }
    }
    out.push(CheckReport::new("billiard_cross_checks", &cross, 1e-3 * tol));
    out.push(CheckReport::new("circumbilliard_aspect", &aspect, 0.1 * tol));
    let rho = billiard_rho(&BilliardConfig::new(1.5, 1.0)?);
    out.push(CheckReport::new("billiard_rho_example", &[(rho - 0.36266).abs()], 1e-5));

    Ok(out)
}

/// A seeded random triangle with no angle below ~5°.
pub fn random_triangle(rng: &mut ChaCha8Rng) -> Triangle {
    loop {
        let p = [(); 3].map(|_| Point::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        if let Ok(t) = Triangle::from_array(p) {
            let min_angle = (0..3)
                .map(|i| {
                    let (u, v) = (t.vertex(i + 1) - t.vertex(i), t.vertex(i + 2) - t.vertex(i));
                    u.cross(v).abs().atan2(u.dot(v))
                })
                .fold(PI, f64::min);
            if min_angle > 0.09 {
                return t;
            }
        }
    }
}

/// Gergonne point built from cevians: each vertex joined to the incircle's
/// touch point on the opposite side (the foot of the perpendicular from X1).
pub fn gergonne_constructive(t: &Triangle) -> Point {
    let x1 = centers::center(t, CenterId::X1).expect("nondegenerate");
    let cevian = |i: usize| {
        let side = t.side_line(i);
        let n = side.normal();
        let touch = x1 - n * side.eval(x1);
        Line::through(t.vertex(i), touch).expect("distinct points")
    };
    cevian(0).intersect(&cevian(1)).expect("cevians meet")
}

/// Distances from the Brianchon point to the independently built Gergonne
/// point, over the longest side: with g = s₁, and with the literal s₂s₃.
pub fn brianchon_residuals(seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut with_s1 = Vec::with_capacity(BRIANCHON_TRIALS);
    let mut literal = Vec::with_capacity(BRIANCHON_TRIALS);
    for _ in 0..BRIANCHON_TRIALS {
        let t = random_triangle(&mut rng);
        let scale = (0..3).map(|i| t.side(i)).fold(0.0, f64::max);
        let x7 = gergonne_constructive(&t);
        let dist = |p: porism_core::Result<Point>| p.map_or(f64::INFINITY, |p| p.dist(x7) / scale);
        with_s1.push(dist(brianchon_point(&t, |s1, _, _| s1)));
        literal.push(dist(brianchon_point(&t, |_, s2, s3| s2 * s3)));
    }
    (with_s1, literal)
}
