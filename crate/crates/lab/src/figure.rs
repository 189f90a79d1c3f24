//! `porism-lab figure`: static SVG renderings of the family and its conics.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use porism_core::billiard::{cb_axes_normalized, foci_locus};
use porism_core::centers::{self, CenterId};
use porism_core::family::{
    self, named_conic, obtuse_class, perimeter_closed_form, x9_locus, FamilySample, NamedConic, ObtuseClass,
    PoristicConfig,
};
use porism_core::geom::{CanonicalConic, Point};

use crate::config::LabConfig;
use crate::error::{LabError, Result};
use crate::svg::{Document, Frame, Style};

pub const FIGURES: [&str; 8] =
    ["obtuse", "odehnal", "inconics", "circumX10", "cb-focus-locus", "cb-poristic", "cb-plots", "circumhyps"];

/// The two family members drawn in two-configuration figures.
const T_PAIR: [f64; 2] = [0.7, 2.3];

const BLUE: &str = "#1f4fbf";
const GREEN: &str = "#2a9d3a";
const PURPLE: &str = "#7b3fa0";
const ORANGE: &str = "#e08a1e";
const RED: &str = "#d62728";
const BLACK: &str = "#000000";
const PINK: &str = "#e377c2";
const LIGHT_BLUE: &str = "#5fb4e6";
const CYAN: &str = "#17becf";
const GRAY: &str = "#888888";

const SIZE: f64 = 640.0;

pub fn check_id(id: &str) -> Result<()> {
    if FIGURES.contains(&id) {
        Ok(())
    } else {
        Err(LabError::UnknownFigure { id: id.to_string(), valid: FIGURES.join(", ") })
    }
}

/// Renders `id`; the same config always yields the same string.
pub fn render(id: &str, cfg: &PoristicConfig) -> Result<String> {
    check_id(id)?;
    match id {
        "obtuse" => obtuse(cfg),
        "odehnal" => odehnal(cfg),
        "inconics" => inconics(cfg),
        "circumX10" => circum_x10(cfg),
        "cb-focus-locus" => cb_focus_locus(cfg),
        "cb-poristic" => cb_poristic(cfg),
        "cb-plots" => cb_plots(cfg),
        "circumhyps" => circumhyps(cfg),
        _ => unreachable!("checked above"),
    }
}

/// Writes `<out>/<id>.svg` for the requested figure, or for all of them.
pub fn run(lab: &LabConfig, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let cfg = lab.poristic()?;
    let ids: Vec<&str> = match &lab.figure {
        Some(id) => {
            check_id(id)?;
            vec![id.as_str()]
        }
        None => FIGURES.to_vec(),
    };
    let mut written = Vec::new();
    for id in ids {
        let svg = render(id, &cfg)?;
        let path = out_dir.join(format!("{id}.svg"));
        std::fs::write(&path, svg).map_err(|e| LabError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

fn canon(s: &FamilySample, tag: NamedConic) -> Result<CanonicalConic> {
    Ok(named_conic(s, tag)?.canonicalize()?)
}

fn square_frame(center: Point, half_extent: f64) -> Frame {
    Frame::geometric((20.0, 40.0, SIZE - 40.0, SIZE - 60.0), center, half_extent)
}

fn header(doc: &mut Document, title: &str, cfg: &PoristicConfig) {
    let caption = format!("{title} (R = {:.4}, r = {:.4}, r/R = {:.5})", cfg.big_r(), cfg.r(), cfg.rho());
    doc.text(SIZE / 2.0, 24.0, &caption, 14.0, "middle", BLACK);
}

fn fixed_circles(doc: &mut Document, f: &Frame, cfg: &PoristicConfig) {
    doc.circle(f, &cfg.incircle(), Style::solid(GREEN, 1.5));
    doc.circle(f, &cfg.circumcircle(), Style::solid(PURPLE, 1.5));
    doc.dot(f, cfg.x1(), GREEN, "X1");
    doc.dot(f, cfg.x3(), PURPLE, "X3");
}

fn obtuse(cfg: &PoristicConfig) -> Result<String> {
    let mut doc = Document::new(SIZE, SIZE, "Poristic family: acute and obtuse members");
    header(&mut doc, "Poristic family", cfg);
    let f = square_frame(cfg.x3(), 1.25 * cfg.big_r());
    fixed_circles(&mut doc, &f, cfg);
    for t in family::t_grid(12).into_iter().skip(1) {
        let s = family::sample(cfg, t)?;
        let style = if family::is_obtuse(&s) { Style::dashed(BLUE, 1.0) } else { Style::dashed(GREEN, 1.0) };
        doc.triangle(&f, &s.triangle, style);
    }
    let s = family::sample(cfg, 0.0)?;
    doc.triangle(&f, &s.triangle, Style::solid(BLUE, 2.0));
    let class = match obtuse_class(cfg) {
        ObtuseClass::AllAcute => "d < r: every member is acute",
        ObtuseClass::ContainsRight => "d = r: acute members and one right triangle",
        ObtuseClass::ContainsObtuse => "d > r: acute (dashed green) and obtuse (dashed blue) members",
    };
    doc.text(SIZE / 2.0, SIZE - 8.0, class, 12.0, "middle", BLACK);
    Ok(doc.finish())
}

fn odehnal(cfg: &PoristicConfig) -> Result<String> {
    let mut doc = Document::new(SIZE, SIZE, "Excenters on a fixed circle; excentral caustic");
    header(&mut doc, "Excentral family", cfg);
    let f = square_frame(cfg.x40(), 2.3 * cfg.big_r());
    fixed_circles(&mut doc, &f, cfg);
    doc.circle(&f, &cfg.excenter_circle(), Style::solid(ORANGE, 1.5));
    for (k, t) in T_PAIR.into_iter().enumerate() {
        let s = family::sample(cfg, t)?;
        let (tri, exc) = if k == 0 {
            (Style::solid(BLUE, 1.5), Style::solid(GREEN, 1.2))
        } else {
            (Style::dashed(BLUE, 1.2), Style::dashed(GREEN, 1.0))
        };
        doc.triangle(&f, &s.triangle, tri);
        doc.triangle(&f, &s.excentral, exc);
        if k == 0 {
            doc.conic(&f, &canon(&s, NamedConic::I5x)?, Style::dotted(ORANGE, 1.5));
        }
    }
    doc.dot(&f, cfg.x40(), ORANGE, "X40");
    Ok(doc.finish())
}

fn inconics(cfg: &PoristicConfig) -> Result<String> {
    let mut doc = Document::new(2.0 * SIZE, SIZE, "Excentral inconics and the X1-centered circumellipse");
    doc.text(SIZE, 24.0, &format!("Inconic invariants, two configurations (r/R = {:.5})", cfg.rho()), 14.0, "middle", BLACK);
    for (k, t) in T_PAIR.into_iter().enumerate() {
        let px = (20.0 + k as f64 * SIZE, 40.0, SIZE - 40.0, SIZE - 60.0);
        let f = Frame::geometric(px, cfg.x40(), 2.3 * cfg.big_r());
        let s = family::sample(cfg, t)?;
        fixed_circles(&mut doc, &f, cfg);
        doc.triangle(&f, &s.triangle, Style::solid(BLUE, 1.5));
        doc.triangle(&f, &s.excentral, Style::solid(GREEN, 1.0));
        doc.conic(&f, &canon(&s, NamedConic::I5x)?, Style::dashed(GREEN, 1.5));
        doc.conic(&f, &canon(&s, NamedConic::I3x)?, Style::solid(RED, 1.5));
        doc.conic(&f, &canon(&s, NamedConic::E1)?, Style::solid(GREEN, 1.5));
        doc.dot(&f, cfg.x40(), RED, "X40");
        doc.text(px.0 + px.2 / 2.0, SIZE - 8.0, &format!("t = {t}"), 12.0, "middle", BLACK);
    }
    Ok(doc.finish())
}

fn circum_x10(cfg: &PoristicConfig) -> Result<String> {
    let mut doc = Document::new(SIZE, SIZE, "Spieker-centered circumconic and the excentral X5 circumconic");
    header(&mut doc, "E10 and excentral E5", cfg);
    let s = family::sample(cfg, T_PAIR[0])?;
    let e5x = canon(&s, NamedConic::E5x)?;
    // E5x is the largest layer; frame on it so it is never clipped
    let f = square_frame(e5x.center, 1.1 * e5x.semi_major.max(cfg.big_r()));
    fixed_circles(&mut doc, &f, cfg);
    doc.triangle(&f, &s.triangle, Style::solid(BLUE, 1.5));
    doc.triangle(&f, &s.excentral, Style::solid(GREEN, 1.0));
    doc.conic(&f, &canon(&s, NamedConic::E10)?, Style::solid(PINK, 1.5));
    doc.conic(&f, &e5x, Style::solid(LIGHT_BLUE, 1.5));
    doc.dot(&f, centers::center(&s.triangle, CenterId::X10)?, PINK, "X10");
    Ok(doc.finish())
}

fn cb_focus_locus(cfg: &PoristicConfig) -> Result<String> {
    let mut doc = Document::new(SIZE, SIZE, "Circumbilliard centers and foci");
    header(&mut doc, "Circumbilliard foci locus", cfg);
    let f = square_frame(cfg.x3(), 1.3 * cfg.big_r());
    doc.circle(&f, &cfg.circumcircle(), Style::solid(PURPLE, 1.0));
    let loc9 = x9_locus(cfg);
    let foci = foci_locus(cfg);
    if loc9.radius > 0.0 {
        doc.circle(&f, &loc9.circle(), Style::solid(RED, 1.5));
    }
    if foci.radius > 0.0 {
        doc.circle(&f, &foci.circle(), Style::solid(CYAN, 1.5));
    }
    doc.dot(&f, foci.center, CYAN, "C");
    for (k, t) in T_PAIR.into_iter().enumerate() {
        let s = family::sample(cfg, t)?;
        let e9 = canon(&s, NamedConic::E9)?;
        let (tri, cb, label) = if k == 0 {
            (Style::solid(BLUE, 1.5), Style::solid(BLACK, 1.5), "F")
        } else {
            (Style::dashed(BLUE, 1.2), Style::dotted(BLACK, 1.5), "F'")
        };
        doc.triangle(&f, &s.triangle, tri);
        doc.conic(&f, &e9, cb);
        let (f1, f2) = e9.foci()?;
        doc.dot(&f, f1, CYAN, label);
        doc.dot(&f, f2, CYAN, label);
        doc.dot(&f, e9.center, RED, if k == 0 { "X9" } else { "" });
    }
    Ok(doc.finish())
}

fn cb_poristic(cfg: &PoristicConfig) -> Result<String> {
    let mut doc = Document::new(2.0 * SIZE, SIZE, "Circumbilliard, excentral inconic and circumellipse");
    doc.text(SIZE, 24.0, &format!("Circumbilliard of the family, two configurations (r/R = {:.5})", cfg.rho()), 14.0, "middle", BLACK);
    for (k, t) in T_PAIR.into_iter().enumerate() {
        let px = (20.0 + k as f64 * SIZE, 40.0, SIZE - 40.0, SIZE - 60.0);
        let f = Frame::geometric(px, cfg.x40(), 2.3 * cfg.big_r());
        let s = family::sample(cfg, t)?;
        fixed_circles(&mut doc, &f, cfg);
        doc.circle(&f, &cfg.excenter_circle(), Style::solid(ORANGE, 1.2));
        doc.triangle(&f, &s.triangle, Style::solid(BLUE, 1.5));
        doc.triangle(&f, &s.excentral, Style::solid(GREEN, 1.0));
        doc.conic(&f, &canon(&s, NamedConic::I3x)?, Style::solid(RED, 1.5));
        doc.conic(&f, &canon(&s, NamedConic::E9)?, Style::solid(BLACK, 1.5));
        if let Ok(p) = centers::center(&s.triangle, CenterId::X100) {
            doc.dot(&f, p, BLACK, "X100");
        }
        doc.text(px.0 + px.2 / 2.0, SIZE - 8.0, &format!("t = {t}"), 12.0, "middle", BLACK);
    }
    Ok(doc.finish())
}

fn cb_plots(cfg: &PoristicConfig) -> Result<String> {
    let mut doc = Document::new(2.0 * SIZE, SIZE * 0.75, "Perimeter over the family; normalized circumbilliard semi-axes");
    let h = SIZE * 0.75;
    let left_px = (70.0, 40.0, SIZE - 100.0, h - 100.0);
    let right_px = (SIZE + 70.0, 40.0, SIZE - 100.0, h - 100.0);

    // left: L(t) for several r/R, the configured one highlighted
    let mut rhos = vec![0.1, 0.2, 0.3, 0.4, 0.5];
    if !rhos.iter().any(|r| (r - cfg.rho()).abs() < 1e-12) {
        rhos.push(cfg.rho());
    }
    let curves: Vec<(f64, Vec<Point>)> = rhos
        .iter()
        .map(|&rho| {
            let c = PoristicConfig::from_radii(cfg.big_r(), rho * cfg.big_r())?;
            let pts = (0..crate::svg::CONIC_POINTS)
                .map(|k| {
                    let t = 2.0 * PI * k as f64 / (crate::svg::CONIC_POINTS - 1) as f64;
                    Point::new(t, perimeter_closed_form(&c, t))
                })
                .collect();
            Ok((rho, pts))
        })
        .collect::<Result<_>>()?;
    let ymax = curves.iter().flat_map(|(_, p)| p.iter().map(|q| q.y)).fold(0.0, f64::max);
    let ymax = (ymax * 1.1 / cfg.big_r()).ceil() * cfg.big_r();
    let left = Frame::plot(left_px, (0.0, 2.0 * PI), (0.0, ymax));
    let yticks: Vec<f64> = (0..=4).map(|k| ymax * k as f64 / 4.0).collect();
    doc.axes(&left, &[0.0, PI / 2.0, PI, 1.5 * PI, 2.0 * PI], &yticks, "t", "L(t)");
    for (rho, pts) in &curves {
        let highlighted = (rho - cfg.rho()).abs() < 1e-12;
        let style = if highlighted { Style::solid(RED, 2.0) } else { Style::solid(BLUE, 1.0) };
        doc.polyline(&left, pts, style);
        let end = left.map(*pts.last().expect("nonempty"));
        doc.text(end.0 + 4.0, end.1 + 3.0, &format!("{rho:.3}"), 10.0, "start", if highlighted { RED } else { BLUE });
    }
    doc.text(left_px.0 + left_px.2 / 2.0, 28.0, "perimeter vs t for several r/R", 13.0, "middle", BLACK);

    // right: a9/L and b9/L against r/R
    let right = Frame::plot(right_px, (0.0, 0.5), (0.0, 0.3));
    doc.axes(&right, &[0.0, 0.1, 0.2, 0.3, 0.4, 0.5], &[0.0, 0.1, 0.2, 0.3], "r/R", "semi-axis / L");
    let n = crate::svg::CONIC_POINTS;
    let axes: Vec<(f64, (f64, f64, f64))> = (0..n)
        .map(|k| {
            let rho = 0.5 * (k + 1) as f64 / n as f64;
            cb_axes_normalized(rho).map(|a| (rho, a))
        })
        .collect::<porism_core::Result<_>>()?;
    let a_pts: Vec<Point> = axes.iter().map(|(r, (a, _, _))| Point::new(*r, *a)).collect();
    let b_pts: Vec<Point> = axes.iter().map(|(r, (_, b, _))| Point::new(*r, *b)).collect();
    doc.polyline(&right, &a_pts, Style::solid(RED, 1.5));
    doc.polyline(&right, &b_pts, Style::solid(GREEN, 1.5));
    let eq = 3f64.sqrt() / 9.0;
    doc.segment(&right, Point::new(0.0, eq), Point::new(0.5, eq), Style::dashed(BLUE, 1.0));
    doc.dot(&right, Point::new(0.0, 0.25), RED, "1/4");
    doc.dot(&right, Point::new(0.0, 0.0), GREEN, "0");
    let (a, b, _) = cb_axes_normalized(cfg.rho())?;
    doc.dot(&right, Point::new(cfg.rho(), a), BLACK, "a9/L");
    doc.dot(&right, Point::new(cfg.rho(), b), BLACK, "b9/L");
    doc.text(right_px.0 + right_px.2 / 2.0, 28.0, "circumbilliard semi-axes over perimeter", 13.0, "middle", BLACK);
    Ok(doc.finish())
}

fn circumhyps(cfg: &PoristicConfig) -> Result<String> {
    let mut doc = Document::new(SIZE, SIZE, "Feuerbach and excentral Jerabek hyperbolas");
    header(&mut doc, "Circumhyperbolas", cfg);
    let f = square_frame(cfg.x40(), 2.6 * cfg.big_r());
    // t = 0.7 is close to isosceles there, where both hyperbolas flatten into line pairs
    let s = family::sample(cfg, T_PAIR[1])?;
    doc.triangle(&f, &s.triangle, Style::solid(BLUE, 1.5));
    doc.triangle(&f, &s.excentral, Style::solid(GREEN, 1.0));
    let feuerbach = canon(&s, NamedConic::Feuerbach)?;
    doc.conic(&f, &feuerbach, Style::dashed(BLUE, 1.5));
    let (f1, f2) = feuerbach.foci()?;
    doc.segment(&f, f1, f2, Style::solid(BLUE, 1.0));
    doc.dot(&f, f1, BLUE, "F");
    doc.dot(&f, f2, BLUE, "F");
    match canon(&s, NamedConic::JerabekExc) {
        Ok(jerabek) => {
            doc.conic(&f, &jerabek, Style::dashed(GREEN, 1.5));
            let (g1, g2) = jerabek.foci()?;
            doc.segment(&f, g1, g2, Style::solid(GREEN, 1.0));
            doc.dot(&f, g1, GREEN, "F'");
            doc.dot(&f, g2, GREEN, "F'");
            // asymptote directions, through each center
            for h in [&feuerbach, &jerabek] {
                let slope = h.semi_minor.atan2(h.semi_major);
                for sign in [1.0, -1.0] {
                    let dir = Point::from_polar(4.0 * cfg.big_r(), h.angle + sign * slope);
                    doc.segment(&f, h.center - dir, h.center + dir, Style::dashed(GRAY, 0.8));
                }
            }
        }
        Err(LabError::Geometry(e)) => doc.comment(&format!("excentral hyperbola unavailable: {e}")),
        Err(e) => return Err(e),
    }
    Ok(doc.finish())
}
