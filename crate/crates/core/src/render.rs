//! Deterministic SVG 1.1 rendering of patches.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::tiling::{Patch, TileKind};

#[derive(Clone, Debug, PartialEq)]
pub struct StyleConfig {
    /// Pixels per plane unit.
    pub scale: f64,
    pub stroke: String,
    pub stroke_width: f64,
    pub background: Option<String>,
}

impl Default for StyleConfig {
    fn default() -> Self {
        Self {
            scale: 100.0,
            stroke: "#202020".into(),
            stroke_width: 1.0,
            background: Some("#ffffff".into()),
        }
    }
}

impl StyleConfig {
    pub fn with_scale(scale: f64) -> Self {
        Self {
            scale,
            ..Self::default()
        }
    }

    pub fn fill(&self, kind: TileKind) -> &'static str {
        match kind {
            TileKind::ThickRhombusRoot => "#e8a33d",
            TileKind::ThinRhombusRoot => "#3d7fe8",
            TileKind::UnitRhombusWeight => "#7fc97f",
            TileKind::TauRhombusWeight => "#beaed4",
            TileKind::ThickHexagonWeight => "#fdc086",
            TileKind::ThinHexagonWeight => "#f0027f",
            TileKind::DegenerateSegment => "none",
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        "0.000".into()
    } else {
        s
    }
}

/// Polygons in key order, y axis pointing up, viewBox = bounds + 5% margin.
pub fn render_svg(p: &Patch, style: &StyleConfig) -> Result<String> {
    let tiles: Vec<_> = p
        .tiles()
        .filter(|t| t.kind != TileKind::DegenerateSegment)
        .collect();
    if tiles.is_empty() {
        return Err(Error::EmptyPatch);
    }
    let pts: Vec<Vec<(f64, f64)>> = tiles
        .iter()
        .map(|t| {
            t.xy()
                .into_iter()
                .map(|(x, y)| (x * style.scale, -y * style.scale))
                .collect()
        })
        .collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in pts.iter().flatten() {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let (mx, my) = (0.05 * (x1 - x0), 0.05 * (y1 - y0));
    let (vx, vy, vw, vh) = (x0 - mx, y0 - my, x1 - x0 + 2.0 * mx, y1 - y0 + 2.0 * my);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        num(vw),
        num(vh),
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    );
    if let Some(bg) = &style.background {
        let _ = writeln!(
            out,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{bg}\"/>",
            num(vx),
            num(vy),
            num(vw),
            num(vh)
        );
    }
    let _ = writeln!(
        out,
        "<g stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\">",
        style.stroke,
        num(style.stroke_width)
    );
    for (t, poly) in tiles.iter().zip(&pts) {
        let coords: Vec<String> = poly.iter().map(|&(x, y)| format!("{},{}", num(x), num(y))).collect();
        let _ = writeln!(
            out,
            "<polygon class=\"{}\" fill=\"{}\" points=\"{}\"/>",
            t.kind,
            style.fill(t.kind),
            coords.join(" ")
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
