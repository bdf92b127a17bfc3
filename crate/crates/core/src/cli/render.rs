//! Terminal and SVG renderings of a lattice classification.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lab::{GridClass, GridClassification};

const CELL: u32 = 24;
const MARGIN_LEFT: u32 = 48;
const MARGIN_TOP: u32 = 24;
const MARGIN_BOTTOM: u32 = 48;
const LEGEND_WIDTH: u32 = 220;

fn fill(class: GridClass) -> &'static str {
    match class {
        GridClass::FreeCyclic => "#ffffff",
        GridClass::CyclicNonfree => "#f2d49b",
        GridClass::IndecomposableNoncyclic => "#9bb7f2",
        GridClass::Decomposable => "#7f7f7f",
    }
}

fn present_classes(grid: &GridClassification) -> Vec<GridClass> {
    GridClass::ALL.into_iter().filter(|c| grid.points.iter().any(|p| p.class == *c)).collect()
}

fn legend_line(classes: &[GridClass]) -> String {
    classes.iter().map(|c| format!("{}={}", c.glyph(), c.label())).collect::<Vec<_>>().join("  ")
}

/// One glyph per lattice point. Two-parameter grids put `t1` on the
/// horizontal axis and `t2` increasing upward.
pub fn ascii_grid(grid: &GridClassification) -> String {
    let mut out = format!("{}  sop ({})  max {}\n", grid.ring, grid.sop.join(", "), grid.max);
    if grid.points.is_empty() {
        out.push_str("(empty grid)\n");
        return out;
    }
    let t = grid.max;
    let w = t.to_string().len();
    match grid.dims() {
        1 => {
            let _ = write!(out, "{:>w$} ", "t1");
            for p in &grid.points {
                out.push(p.class.glyph());
            }
            out.push('\n');
        }
        2 => {
            for t2 in (1..=t).rev() {
                let _ = write!(out, "{t2:>w$} |");
                for t1 in 1..=t {
                    let g = grid.class_at(&[t1, t2]).map_or('?', GridClass::glyph);
                    out.push(' ');
                    out.push(g);
                }
                out.push('\n');
            }
            let _ = writeln!(out, "{:>w$} +{}", "", "--".repeat(t as usize));
            let _ = write!(out, "{:>w$}  ", "");
            for t1 in 1..=t {
                let _ = write!(out, "{}", t1 % 10);
                if t1 < t {
                    out.push(' ');
                }
            }
            out.push('\n');
        }
        _ => {
            for p in &grid.points {
                let ts: Vec<String> = p.t.iter().map(u32::to_string).collect();
                let _ = writeln!(out, "({}) {}", ts.join(","), p.class.label());
            }
        }
    }
    let _ = writeln!(out, "{}", legend_line(&present_classes(grid)));
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Deterministic SVG 1.1 figure of a two-parameter grid.
pub fn render_grid_svg(grid: &GridClassification) -> Result<String> {
    if grid.dims() != 2 {
        return Err(Error::Precondition(format!(
            "figure rendering needs a two-parameter grid, got {} parameters",
            grid.dims()
        )));
    }
    let t = grid.max;
    let plot = t * CELL;
    let classes = present_classes(grid);
    let legend_h = 20 * classes.len() as u32 + 8;
    let width = MARGIN_LEFT + plot + 16 + LEGEND_WIDTH;
    let height = MARGIN_TOP + plot.max(legend_h) + MARGIN_BOTTOM;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, "<title>{} sop ({})</title>", escape(&grid.ring), escape(&grid.sop.join(", ")));
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##);
    for p in &grid.points {
        let (t1, t2) = (p.t[0], p.t[1]);
        let x = MARGIN_LEFT + (t1 - 1) * CELL;
        let y = MARGIN_TOP + (t - t2) * CELL;
        let _ = writeln!(
            s,
            r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{}" stroke="#333333" stroke-width="0.5"><title>({t1},{t2}) {}</title></rect>"##,
            fill(p.class),
            p.class.label()
        );
    }
    let base = MARGIN_TOP + plot;
    for k in 1..=t {
        let cx = MARGIN_LEFT + (k - 1) * CELL + CELL / 2;
        let _ = writeln!(s, r#"<text x="{cx}" y="{}" text-anchor="middle">{k}</text>"#, base + 14);
        let cy = MARGIN_TOP + (t - k) * CELL + CELL / 2 + 4;
        let _ = writeln!(s, r#"<text x="{}" y="{cy}" text-anchor="end">{k}</text>"#, MARGIN_LEFT - 6);
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="13">t₁</text>"#,
        MARGIN_LEFT + plot / 2,
        base + 34
    );
    let _ = writeln!(
        s,
        r#"<text x="14" y="{}" text-anchor="middle" font-size="13">t₂</text>"#,
        MARGIN_TOP + plot / 2
    );
    let lx = MARGIN_LEFT + plot + 16;
    for (k, c) in classes.iter().enumerate() {
        let ly = MARGIN_TOP + 20 * k as u32;
        let _ = writeln!(
            s,
            r##"<rect x="{lx}" y="{ly}" width="14" height="14" fill="{}" stroke="#333333" stroke-width="0.5"/>"##,
            fill(*c)
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, lx + 20, ly + 11, c.label());
    }
    s.push_str("</svg>\n");
    Ok(s)
}
