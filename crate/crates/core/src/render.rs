//! Deterministic SVG drawings of chord diagrams.
//!
//! Position `k` of `2n` sits at angle `2πk / 2n` on the unit circle, counted
//! counterclockwise from the positive x axis. SVG's y axis points down, so
//! points are drawn at `(cos θ, -sin θ)`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::diagram::{ChordDiagram, Window};
use crate::graph::{ChordColoring, Color};

const RED: &str = "#d62728";
const BLUE: &str = "#1f77b4";
const PLAIN: &str = "#333333";
const HIGHLIGHT: &str = "#2ca02c";

#[derive(Debug, Clone, Default)]
pub struct RenderOptions<'a> {
    pub coloring: Option<&'a ChordColoring>,
    pub window: Option<Window>,
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn angle(pos: f64, m: usize) -> f64 {
    2.0 * PI * pos / m as f64
}

fn point(theta: f64, r: f64) -> (String, String) {
    (num(r * theta.cos()), num(-r * theta.sin()))
}

pub fn render_svg(d: &ChordDiagram, opts: &RenderOptions<'_>) -> String {
    let m = d.circumference();
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"-1.3 -1.3 2.6 2.6\">\n",
    );
    s.push_str("  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.01\"/>\n");

    if let Some(w) = opts.window.filter(|w| m > 0 && w.length > 0) {
        // The arc covers the window's positions with half a step of margin on
        // each side; the separating line joins the two margin points.
        let a0 = angle(w.start as f64 - 0.5, m);
        let a1 = angle((w.start + w.length) as f64 - 0.5, m);
        let large = u8::from(2 * w.length > m);
        let (x0, y0) = point(a0, 1.06);
        let (x1, y1) = point(a1, 1.06);
        let _ = writeln!(
            s,
            "  <path class=\"window\" d=\"M {x0} {y0} A 1.06 1.06 0 {large} 0 {x1} {y1}\" fill=\"none\" stroke=\"{HIGHLIGHT}\" stroke-width=\"0.05\" stroke-opacity=\"0.5\"/>"
        );
        let (lx0, ly0) = point(a0, 1.2);
        let (lx1, ly1) = point(a1, 1.2);
        let _ = writeln!(
            s,
            "  <line class=\"separator\" x1=\"{lx0}\" y1=\"{ly0}\" x2=\"{lx1}\" y2=\"{ly1}\" stroke=\"{HIGHLIGHT}\" stroke-width=\"0.01\" stroke-dasharray=\"0.04 0.03\"/>"
        );
    }

    for ch in d.chords() {
        let stroke = match opts.coloring.and_then(|c| c.get(&ch.label)) {
            Some(Color::Red) => RED,
            Some(Color::Blue) => BLUE,
            None => PLAIN,
        };
        let (x1, y1) = point(angle(ch.endpoints.0 as f64, m), 1.0);
        let (x2, y2) = point(angle(ch.endpoints.1 as f64, m), 1.0);
        let _ = writeln!(
            s,
            "  <line class=\"chord\" data-label=\"{}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{stroke}\" stroke-width=\"0.015\"/>",
            escape(&ch.label)
        );
    }

    for p in 0..m {
        let theta = angle(p as f64, m);
        let (x, y) = point(theta, 1.0);
        let _ = writeln!(s, "  <circle cx=\"{x}\" cy=\"{y}\" r=\"0.02\" fill=\"#000000\"/>");
        let (tx, ty) = point(theta, 1.13);
        let _ = writeln!(
            s,
            "  <text x=\"{tx}\" y=\"{ty}\" font-size=\"0.08\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
            escape(d.label_at(p))
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
