//! Minimal SVG 1.1 writer. Coordinates are printed with fixed precision so
//! output bytes depend only on the inputs.

use std::fmt::Write;

use porism_core::geom::{CanonicalConic, Circle, ConicKind, Point, Triangle};

/// Points per sampled conic.
pub const CONIC_POINTS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Style {
    pub stroke: &'static str,
    pub width: f64,
    pub dash: Option<&'static str>,
    pub fill: Option<&'static str>,
}

impl Style {
    pub const fn solid(stroke: &'static str, width: f64) -> Self {
        Style { stroke, width, dash: None, fill: None }
    }

    pub const fn dashed(stroke: &'static str, width: f64) -> Self {
        Style { stroke, width, dash: Some("6 4"), fill: None }
    }

    pub const fn dotted(stroke: &'static str, width: f64) -> Self {
        Style { stroke, width, dash: Some("1.5 3"), fill: None }
    }

    fn attrs(&self) -> String {
        let mut s = format!(r#"fill="{}" stroke="{}" stroke-width="{}""#, self.fill.unwrap_or("none"), self.stroke, num(self.width));
        if let Some(d) = self.dash {
            let _ = write!(s, r#" stroke-dasharray="{d}""#);
        }
        s
    }
}

fn num(v: f64) -> String {
    // avoid "-0.00"
    let s = format!("{v:.2}");
    if s == "-0.00" { "0.00".into() } else { s }
}

pub fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Maps a world rectangle onto a pixel rectangle (y up in the world).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub px: (f64, f64, f64, f64),
    pub world: (f64, f64, f64, f64),
}

impl Frame {
    /// Equal-aspect frame centred on `center`, showing at least `half_extent`
    /// in each direction.
    pub fn geometric(px: (f64, f64, f64, f64), center: Point, half_extent: f64) -> Self {
        let (_, _, w, h) = px;
        let (hx, hy) = if w >= h { (half_extent * w / h, half_extent) } else { (half_extent, half_extent * h / w) };
        Frame { px, world: (center.x - hx, center.x + hx, center.y - hy, center.y + hy) }
    }

    pub fn plot(px: (f64, f64, f64, f64), x: (f64, f64), y: (f64, f64)) -> Self {
        Frame { px, world: (x.0, x.1, y.0, y.1) }
    }

    pub fn map(&self, p: Point) -> (f64, f64) {
        let (x0, y0, w, h) = self.px;
        let (xa, xb, ya, yb) = self.world;
        (x0 + (p.x - xa) / (xb - xa) * w, y0 + (yb - p.y) / (yb - ya) * h)
    }

    pub fn scale(&self) -> f64 {
        self.px.2 / (self.world.1 - self.world.0)
    }

    fn contains(&self, p: Point, margin: f64) -> bool {
        let (xa, xb, ya, yb) = self.world;
        let (mx, my) = ((xb - xa) * margin, (yb - ya) * margin);
        p.x >= xa - mx && p.x <= xb + mx && p.y >= ya - my && p.y <= yb + my
    }
}

pub struct Document {
    width: f64,
    height: f64,
    title: String,
    body: String,
}

impl Document {
    pub fn new(width: f64, height: f64, title: &str) -> Self {
        Document { width, height, title: title.to_string(), body: String::new() }
    }

    fn points(frame: &Frame, pts: &[Point]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = frame.map(p);
                format!("{},{}", num(x), num(y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn comment(&mut self, text: &str) {
        let _ = writeln!(self.body, "  <!-- {} -->", escape(text).replace("--", "- -"));
    }

    pub fn circle(&mut self, frame: &Frame, c: &Circle, style: Style) {
        let (x, y) = frame.map(c.center);
        let _ = writeln!(
            self.body,
            r#"  <circle cx="{}" cy="{}" r="{}" {}/>"#,
            num(x),
            num(y),
            num(c.radius * frame.scale()),
            style.attrs()
        );
    }

    /// Open polyline; runs outside the frame (with a small margin) are cut.
    pub fn polyline(&mut self, frame: &Frame, pts: &[Point], style: Style) {
        let mut run: Vec<Point> = Vec::new();
        let flush = |run: &mut Vec<Point>, body: &mut String| {
            if run.len() >= 2 {
                let _ = writeln!(body, r#"  <polyline points="{}" {}/>"#, Self::points(frame, run), style.attrs());
            }
            run.clear();
        };
        for &p in pts {
            if p.is_finite() && frame.contains(p, 0.05) {
                run.push(p);
            } else {
                flush(&mut run, &mut self.body);
            }
        }
        flush(&mut run, &mut self.body);
    }

    pub fn polygon(&mut self, frame: &Frame, pts: &[Point], style: Style) {
        let _ = writeln!(self.body, r#"  <polygon points="{}" {}/>"#, Self::points(frame, pts), style.attrs());
    }

    pub fn triangle(&mut self, frame: &Frame, t: &Triangle, style: Style) {
        self.polygon(frame, t.vertices(), style);
    }

    /// A central conic as a 256-point polyline (two 128-point branches for a
    /// hyperbola, clipped to the frame).
    pub fn conic(&mut self, frame: &Frame, c: &CanonicalConic, style: Style) {
        match c.kind {
            ConicKind::Hyperbola => {
                let (xa, xb, ya, yb) = frame.world;
                let reach = (xb - xa).hypot(yb - ya) + c.center.dist(Point::new(0.5 * (xa + xb), 0.5 * (ya + yb)));
                let s_max = (reach / c.semi_minor.min(c.semi_major)).asinh();
                let half = CONIC_POINTS / 2;
                for branch in [true, false] {
                    let pts: Vec<Point> = (0..half)
                        .map(|k| c.point_at(-s_max + 2.0 * s_max * k as f64 / (half - 1) as f64, branch))
                        .collect();
                    self.polyline(frame, &pts, style);
                }
            }
            _ => {
                let pts: Vec<Point> = (0..CONIC_POINTS)
                    .map(|k| c.point_at(2.0 * std::f64::consts::PI * k as f64 / CONIC_POINTS as f64, true))
                    .collect();
                self.polygon(frame, &pts, style);
            }
        }
    }

    pub fn segment(&mut self, frame: &Frame, a: Point, b: Point, style: Style) {
        let ((x1, y1), (x2, y2)) = (frame.map(a), frame.map(b));
        let _ = writeln!(
            self.body,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" {}/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            style.attrs()
        );
    }

    /// A labeled point marker.
    pub fn dot(&mut self, frame: &Frame, p: Point, color: &str, label: &str) {
        let (x, y) = frame.map(p);
        let _ = writeln!(self.body, r#"  <circle cx="{}" cy="{}" r="2.50" fill="{color}" stroke="none"/>"#, num(x), num(y));
        if !label.is_empty() {
            self.text(x + 4.0, y - 4.0, label, 11.0, "start", color);
        }
    }

    /// Text at pixel coordinates.
    pub fn text(&mut self, x: f64, y: f64, text: &str, size: f64, anchor: &str, color: &str) {
        let _ = writeln!(
            self.body,
            r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="{}" text-anchor="{anchor}" fill="{color}">{}</text>"#,
            num(x),
            num(y),
            num(size),
            escape(text)
        );
    }

    /// Axis box with ticks for a plot frame.
    pub fn axes(&mut self, frame: &Frame, xticks: &[f64], yticks: &[f64], xlabel: &str, ylabel: &str) {
        let (x0, y0, w, h) = frame.px;
        let _ = writeln!(
            self.body,
            r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#000000" stroke-width="1.00"/>"##,
            num(x0),
            num(y0),
            num(w),
            num(h)
        );
        let (_, _, ya, _) = frame.world;
        let (xa, _, _, _) = frame.world;
        for &t in xticks {
            let (x, y) = frame.map(Point::new(t, ya));
            self.raw_line(x, y, x, y - 5.0);
            self.text(x, y + 14.0, &tick_label(t), 10.0, "middle", "#000000");
        }
        for &t in yticks {
            let (x, y) = frame.map(Point::new(xa, t));
            self.raw_line(x, y, x + 5.0, y);
            self.text(x - 4.0, y + 3.5, &tick_label(t), 10.0, "end", "#000000");
        }
        self.text(x0 + 0.5 * w, y0 + h + 30.0, xlabel, 12.0, "middle", "#000000");
        self.text(x0 - 36.0, y0 + 0.5 * h, ylabel, 12.0, "middle", "#000000");
    }

    fn raw_line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64) {
        let _ = writeln!(
            self.body,
            r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-width="1.00"/>"##,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    }

    pub fn finish(self) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = num(self.width),
            h = num(self.height)
        );
        let _ = writeln!(out, "  <title>{}</title>", escape(&self.title));
        let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.to_string() }
}
