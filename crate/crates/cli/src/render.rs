//! SVG drawings of paths: unit grid, axes, the path, marked peaks as dots and
//! axis crossings as squares.
//!
//! Coordinates are lattice units inside a group flipped with
//! `scale(1,-1)`, so the vertex after step `i` sits at `(i, a_i)`.

use std::fmt::Write;

use fourpow::Path;

const PX_PER_UNIT: i64 = 20;

pub fn svg(path: &Path, marked_peak: Option<usize>) -> String {
    let alts = path.altitudes();
    let len = path.len() as i64;
    let lo = alts.iter().copied().min().unwrap_or(0).min(-1);
    let hi = alts.iter().copied().max().unwrap_or(0).max(1);
    let (x0, x1) = (-1, len + 1);
    let (w, h) = (x1 - x0, hi - lo + 2);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {} {w} {h}" width="{}" height="{}">"#,
        -(hi + 1),
        w * PX_PER_UNIT,
        h * PX_PER_UNIT
    );
    let _ = writeln!(s, r#"<title>{path}</title>"#);
    let _ = writeln!(s, r#"<g transform="scale(1,-1)">"#);

    let _ = writeln!(s, r##"<g stroke="#ddd" stroke-width="0.03">"##);
    for x in 0..=len {
        let _ = writeln!(s, r#"<line x1="{x}" y1="{lo}" x2="{x}" y2="{hi}"/>"#);
    }
    for y in lo..=hi {
        let _ = writeln!(s, r#"<line x1="0" y1="{y}" x2="{len}" y2="{y}"/>"#);
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(
        s,
        r##"<g stroke="#000" stroke-width="0.05"><line x1="{x0}" y1="0" x2="{x1}" y2="0"/><line x1="0" y1="{lo}" x2="0" y2="{hi}"/></g>"##
    );

    let points: Vec<String> = alts
        .iter()
        .enumerate()
        .map(|(i, a)| format!("{i},{a}"))
        .collect();
    let _ = writeln!(
        s,
        r##"<polyline fill="none" stroke="#1f4e9c" stroke-width="0.12" stroke-linejoin="round" points="{}"/>"##,
        points.join(" ")
    );

    if let Some(i) = marked_peak {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="0.25" fill="#d62728"/>"##,
            i + 1,
            alts[i + 1]
        );
    }
    for c in path.crossings() {
        let _ = writeln!(
            s,
            r##"<rect x="{}.8" y="-0.2" width="0.4" height="0.4" fill="#d62728"/>"##,
            c - 1
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}
