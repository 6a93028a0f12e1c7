//! SVG drawing of the region boundary in the `(m, d)` plane: the upper branch
//! of the hyperbola, its asymptote and the Nagata line.
//!
//! Scale is fixed at [`PX_PER_UNIT`] pixels per lattice unit with the origin at
//! the bottom-left corner of the plot area; both are recorded in the file's
//! `<metadata>`.

use std::fmt::Write;

use canonical_bounds::blowup::{asymptote_offset, hyperbola_d_of_m, nagata_line};
use canonical_bounds::{Error, QuadSurd, Rational, Result};
use num_traits::ToPrimitive;

pub const PX_PER_UNIT: f64 = 40.0;
pub const MIN_SAMPLES: usize = 200;
const MARGIN: f64 = 60.0;

/// Pixel coordinates with at most three decimals and no trailing zeros.
pub fn px(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

struct Frame {
    d_top: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn map(&self, m: f64, d: f64) -> (f64, f64) {
        (MARGIN + PX_PER_UNIT * m, MARGIN + PX_PER_UNIT * (self.d_top - d))
    }

    fn path(&self, points: &[(f64, f64)]) -> String {
        let mut out = String::new();
        for (i, &(m, d)) in points.iter().enumerate() {
            let (x, y) = self.map(m, d);
            let _ = write!(out, "{}{},{}", if i == 0 { "M" } else { " L" }, px(x), px(y));
        }
        out
    }
}

fn samples(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect()
}

pub fn figure1_svg(n: u64, beta0: &Rational, m_max: u64) -> Result<String> {
    if m_max == 0 {
        return Err(Error::Domain("m_max must be at least 1".into()));
    }
    let offset = asymptote_offset(n, beta0)?;
    let slope = nagata_line(1, n)?;
    let b = beta0.to_f64().unwrap_or(f64::NAN);
    let b2 = b - 2.0;
    let nf = n as f64;
    let sqrt_n = nf.sqrt();
    let c = offset.to_f64();

    // d ≥ 0 on the upper branch exactly when m ≥ (β₀−2)/β₀
    let m_start = b2 / b;
    let hyperbola = |m: f64| (-b2 + (b2 * b2 + 4.0 * b * (nf * b * m * m - b2 * nf * m)).sqrt()) / (2.0 * b);
    let mut hyp: Vec<(f64, f64)> = samples(m_start, m_max as f64, 2 * MIN_SAMPLES)
        .into_iter()
        .map(|m| (m, hyperbola(m).max(0.0)))
        .collect();
    for m in 1..=m_max {
        hyp.push((m as f64, hyperbola_d_of_m(m, n, beta0)?.to_f64()));
    }
    hyp.sort_by(|x, y| x.0.total_cmp(&y.0));
    hyp.dedup_by(|x, y| x.0 == y.0);

    let line_ms = samples(0.0, m_max as f64, MIN_SAMPLES + 1);
    let asymptote: Vec<(f64, f64)> = line_ms.iter().map(|&m| (m, sqrt_n * m + c)).collect();
    let nagata: Vec<(f64, f64)> = line_ms.iter().map(|&m| (m, sqrt_n * m)).collect();

    let d_top = (sqrt_n * m_max as f64).max(hyp.last().map_or(0.0, |p| p.1)).ceil() + 1.0;
    let frame = Frame {
        d_top,
        width: 2.0 * MARGIN + PX_PER_UNIT * m_max as f64,
        height: 2.0 * MARGIN + PX_PER_UNIT * d_top,
    };
    let (x0, y0) = frame.map(0.0, 0.0);
    let (x1, y1) = frame.map(m_max as f64, d_top);
    let slope_text = slope.to_string();

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = px(frame.width),
        h = px(frame.height)
    );
    let _ = writeln!(svg, "  <metadata>");
    let _ = writeln!(
        svg,
        r#"    <cb:figure xmlns:cb="urn:canonical-bounds" n="{n}" beta0="{beta0}" m-max="{m_max}" px-per-unit="{}" origin="bottom-left" x-axis="m" y-axis="d" margin="{}"/>"#,
        px(PX_PER_UNIT),
        px(MARGIN)
    );
    let _ = writeln!(
        svg,
        r#"    <cb:curve xmlns:cb="urn:canonical-bounds" id="hyperbola" equation="beta0*d^2 + (beta0-2)*d - n*beta0*m^2 + (beta0-2)*n*m = 0" branch="upper"/>"#
    );
    let _ = writeln!(
        svg,
        r#"    <cb:curve xmlns:cb="urn:canonical-bounds" id="asymptote" slope="{slope_text}" intercept="{offset}"/>"#
    );
    let _ = writeln!(
        svg,
        r#"    <cb:curve xmlns:cb="urn:canonical-bounds" id="nagata-line" slope="{slope_text}" intercept="0"/>"#
    );
    let _ = writeln!(svg, "  </metadata>");
    let _ = writeln!(
        svg,
        r#"  <defs><clipPath id="plot"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
        px(x0),
        px(y1),
        px(x1 - x0),
        px(y0 - y1)
    );
    let _ = writeln!(svg, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    axes(&mut svg, &frame, m_max as f64, d_top);
    let curves = [
        ("hyperbola", "black", &hyp, None),
        ("asymptote", "blue", &asymptote, Some(&slope_text)),
        ("nagata-line", "green", &nagata, Some(&slope_text)),
    ];
    for (id, colour, points, slope_attr) in curves {
        let extra = slope_attr.map_or(String::new(), |s| format!(r#" data-slope="{s}""#));
        let _ = writeln!(
            svg,
            r#"  <path id="{id}" d="{}" stroke="{colour}" stroke-width="2" fill="none" clip-path="url(#plot)"{extra}/>"#,
            frame.path(points)
        );
    }
    legend(&mut svg, &slope_text, &offset);
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn axes(svg: &mut String, frame: &Frame, m_max: f64, d_top: f64) {
    let (x0, y0) = frame.map(0.0, 0.0);
    let (x1, y1) = frame.map(m_max, d_top);
    let _ = writeln!(svg, r##"  <g id="axes" stroke="#444" stroke-width="1" font-family="sans-serif" font-size="12">"##);
    let _ = writeln!(svg, r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(x0), px(y0), px(x1), px(y0));
    let _ = writeln!(svg, r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(x0), px(y0), px(x0), px(y1));
    let step = |range: f64| (range / 20.0).ceil().max(1.0);
    let (sm, sd) = (step(m_max), step(d_top));
    let mut m = 0.0;
    while m <= m_max {
        let (x, y) = frame.map(m, 0.0);
        let _ = writeln!(
            svg,
            r#"    <line x1="{x}" y1="{y}" x2="{x}" y2="{}"/><text x="{x}" y="{}" text-anchor="middle" stroke="none">{m}</text>"#,
            px(y + 5.0),
            px(y + 20.0),
            x = px(x),
            y = px(y)
        );
        m += sm;
    }
    let mut d = 0.0;
    while d <= d_top {
        let (x, y) = frame.map(0.0, d);
        let _ = writeln!(
            svg,
            r#"    <line x1="{}" y1="{y}" x2="{x}" y2="{y}"/><text x="{}" y="{}" text-anchor="end" stroke="none">{d}</text>"#,
            px(x - 5.0),
            px(x - 8.0),
            px(y + 4.0),
            x = px(x),
            y = px(y)
        );
        d += sd;
    }
    let _ = writeln!(
        svg,
        r#"    <text x="{}" y="{}" stroke="none">m</text><text x="{}" y="{}" stroke="none">d</text>"#,
        px(x1 + 10.0),
        px(y0 + 4.0),
        px(x0 - 4.0),
        px(y1 - 12.0)
    );
    let _ = writeln!(svg, "  </g>");
}

fn legend(svg: &mut String, slope: &str, offset: &QuadSurd) {
    let entries = [
        ("black", "hyperbola (region boundary)".to_string()),
        ("blue", format!("asymptote d = {slope}*m + ({offset})")),
        ("green", format!("Nagata line d = {slope}*m")),
    ];
    let x = MARGIN + 15.0;
    let _ = writeln!(svg, r#"  <g id="legend" font-family="sans-serif" font-size="13">"#);
    let _ = writeln!(
        svg,
        r##"    <rect x="{}" y="{}" width="360" height="{}" fill="white" stroke="#999"/>"##,
        px(x - 8.0),
        px(MARGIN + 4.0),
        px(22.0 * entries.len() as f64 + 8.0)
    );
    for (i, (colour, label)) in entries.iter().enumerate() {
        let y = MARGIN + 20.0 + 22.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{colour}" stroke-width="2"/><text x="{}" y="{}">{label}</text>"#,
            px(x),
            px(y),
            px(x + 30.0),
            px(y),
            px(x + 40.0),
            px(y + 4.0)
        );
    }
    let _ = writeln!(svg, "  </g>");
}
