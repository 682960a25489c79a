//! Text output: polynomial pretty-printing, the bit-exact CSV format, and
//! the dependency-free SVG plot.

use conekit_core::{rational_to_f64, Rational, RationalPoly};
use num_traits::{One, Signed, Zero};

/// One computed sweep row. Exact values are kept rational; the CSV writer
/// converts to floats at the last moment.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub b: Rational,
    pub beta: Rational,
    pub sigma0_csck: Rational,
    pub lambda_ext: Rational,
    pub sigma0_ext: Rational,
    pub positivity_ok: bool,
    pub identity_ok: bool,
    pub fut_classical: f64,
    /// `NaN` when the run is exact-only and the fit was skipped.
    pub asympt_rel_err: f64,
}

/// The CSV header; every emitted file starts with exactly this line.
pub const CSV_HEADER: &str =
    "b,beta,sigma0_cscK,lambda_ext,sigma0_ext,positivity_ok,identity_ok,fut_classical,asympt_rel_err";

fn float(value: &Rational) -> f64 {
    rational_to_f64(value).expect("sweep quantities fit in a double")
}

/// Renders rows to the CSV format: shortest round-trip floats, `true`/
/// `false` booleans, LF line endings, header exactly [`CSV_HEADER`].
pub fn format_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            float(&row.b),
            float(&row.beta),
            float(&row.sigma0_csck),
            float(&row.lambda_ext),
            float(&row.sigma0_ext),
            row.positivity_ok,
            row.identity_ok,
            row.fut_classical,
            row.asympt_rel_err,
        ));
    }
    out
}

fn coeff_string(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

/// Ascending-power polynomial string in the variable `τ`, e.g.
/// `1 - τ - 2τ^2` or `(1/2) + (3/2)τ`.
pub fn poly_string(p: &RationalPoly) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign_negative = c.is_negative();
        let magnitude = c.abs();
        if out.is_empty() {
            if sign_negative {
                out.push('-');
            }
        } else {
            out.push_str(if sign_negative { " - " } else { " + " });
        }
        let show_coeff = k == 0 || !magnitude.is_one();
        if show_coeff {
            out.push_str(&coeff_string(&magnitude));
        }
        match k {
            0 => {}
            1 => out.push('τ'),
            _ => out.push_str(&format!("τ^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn tick_label(v: f64) -> String {
    let mut s = format!("{v:.4}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Renders the `(b, beta)` polyline as a self-contained 800x600 SVG with
/// linear axes, five ticks per axis, and the run name as caption.
pub fn render_svg(name: &str, points: &[(f64, f64)]) -> String {
    const W: f64 = 800.0;
    const H: f64 = 600.0;
    const LEFT: f64 = 72.0;
    const RIGHT: f64 = 24.0;
    const TOP: f64 = 48.0;
    const BOTTOM: f64 = 56.0;

    let (mut x_min, mut x_max) = points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            (lo.min(p.0), hi.max(p.0))
        });
    let (mut y_min, mut y_max) = points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            (lo.min(p.1), hi.max(p.1))
        });
    if !(x_min.is_finite() && x_max.is_finite()) {
        x_min = 0.0;
        x_max = 1.0;
    }
    if !(y_min.is_finite() && y_max.is_finite()) {
        y_min = 0.0;
        y_max = 1.0;
    }
    if x_max - x_min < 1e-12 {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if y_max - y_min < 1e-12 {
        y_min -= 0.5;
        y_max += 0.5;
    }
    let px = |x: f64| LEFT + (x - x_min) / (x_max - x_min) * (W - LEFT - RIGHT);
    let py = |y: f64| (H - BOTTOM) - (y - y_min) / (y_max - y_min) * (H - TOP - BOTTOM);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">{}</text>\n",
        W / 2.0,
        xml_escape(name)
    ));
    // axes
    svg.push_str(&format!(
        "<line x1=\"{LEFT}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        H - BOTTOM,
        W - RIGHT,
        H - BOTTOM
    ));
    svg.push_str(&format!(
        "<line x1=\"{LEFT}\" y1=\"{TOP}\" x2=\"{LEFT}\" y2=\"{}\" stroke=\"black\"/>\n",
        H - BOTTOM
    ));
    // ticks
    for i in 0..5 {
        let f = i as f64 / 4.0;
        let xv = x_min + f * (x_max - x_min);
        let x = px(xv);
        svg.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{}\" x2=\"{x:.2}\" y2=\"{}\" stroke=\"black\"/>\n",
            H - BOTTOM,
            H - BOTTOM + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
            H - BOTTOM + 20.0,
            tick_label(xv)
        ));
        let yv = y_min + f * (y_max - y_min);
        let y = py(yv);
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{y:.2}\" x2=\"{LEFT}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            LEFT - 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
            LEFT - 8.0,
            y + 4.0,
            tick_label(yv)
        ));
    }
    // axis names
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">b</text>\n",
        (LEFT + W - RIGHT) / 2.0,
        H - 12.0
    ));
    svg.push_str(&format!(
        "<text x=\"20\" y=\"{:.1}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">β</text>\n",
        (TOP + H - BOTTOM) / 2.0
    ));
    // data
    if points.len() >= 2 {
        let coords: Vec<String> = points
            .iter()
            .map(|(x, y)| format!("{:.2},{:.2}", px(*x), py(*y)))
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"#2266aa\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            coords.join(" ")
        ));
    }
    for (x, y) in points {
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2\" fill=\"#2266aa\"/>\n",
            px(*x),
            py(*y)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
