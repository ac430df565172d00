//! Text and SVG pictures of a board, a stone set, and its wasted triangles.
//!
//! Output is a pure function of the inputs; numbers in SVG carry exactly two
//! decimals so documents are byte-stable.

use std::fmt::Write as _;

use crate::board::Coord;
use crate::connection::StoneSet;
use crate::error::Result;
use crate::unitgrid::{all_triangles, UnitTriangle};

pub const STONE: char = '●';
pub const EMPTY: char = '·';
pub const EDGE: char = '○';

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: RenderFormat,
    /// Shade wasted unit triangles (SVG) or append their count (text).
    pub show_waste: bool,
    /// Draw the always-empty columns 0 and n+1.
    pub show_extension: bool,
}

impl RenderSpec {
    pub fn ascii() -> Self {
        RenderSpec { format: RenderFormat::Ascii, show_waste: false, show_extension: false }
    }

    pub fn svg() -> Self {
        RenderSpec { format: RenderFormat::Svg, show_waste: false, show_extension: false }
    }
}

pub fn render(s: &StoneSet, spec: &RenderSpec) -> Result<String> {
    Ok(match spec.format {
        RenderFormat::Ascii => ascii(s, spec),
        RenderFormat::Svg => svg(s, spec),
    })
}

fn wasted_triangles(s: &StoneSet) -> Vec<UnitTriangle> {
    all_triangles(s.size())
        .into_iter()
        .filter(|t| t.vertices().iter().all(|&v| !s.contains(v)))
        .collect()
}

/// One line per row, shifted right by the row index so the rhombus shows.
fn ascii(s: &StoneSet, spec: &RenderSpec) -> String {
    let n = s.size().side();
    let (x0, x1) = if spec.show_extension { (0, n + 1) } else { (1, n) };
    let mut out = String::new();
    for y in 1..=n {
        out.push_str(&" ".repeat((y - 1) as usize));
        let row: Vec<String> = (x0..=x1)
            .map(|x| {
                let c = Coord::new(x, y);
                if s.size().is_extension(c) {
                    EDGE
                } else if s.contains(c) {
                    STONE
                } else {
                    EMPTY
                }
                .to_string()
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if spec.show_waste {
        let _ = writeln!(out, "wasted triangles: {}", wasted_triangles(s).len());
    }
    out
}

const RADIUS: f64 = 10.0;
const MARGIN: f64 = 4.0;

fn center(c: Coord) -> (f64, f64) {
    let w = 3f64.sqrt() * RADIUS;
    (c.x as f64 * w + (c.y - 1) as f64 * w / 2.0, c.y as f64 * 1.5 * RADIUS)
}

fn hexagon(c: Coord) -> [(f64, f64); 6] {
    let (cx, cy) = center(c);
    std::array::from_fn(|k| {
        let a = (30.0 + 60.0 * k as f64).to_radians();
        (cx + RADIUS * a.cos(), cy + RADIUS * a.sin())
    })
}

fn points(ps: &[(f64, f64)]) -> String {
    let parts: Vec<String> = ps.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    parts.join(" ")
}

fn svg(s: &StoneSet, spec: &RenderSpec) -> String {
    let n = s.size().side();
    let board: Vec<Coord> = s.size().cells().collect();
    let edges: Vec<Coord> = if spec.show_extension {
        (1..=n).flat_map(|y| [Coord::new(0, y), Coord::new(n + 1, y)]).collect()
    } else {
        Vec::new()
    };
    let mut all_points: Vec<(f64, f64)> = Vec::new();
    for &c in board.iter().chain(&edges) {
        all_points.extend(hexagon(c));
    }
    let min_x = all_points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - MARGIN;
    let min_y = all_points.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - MARGIN;
    let max_x = all_points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + MARGIN;
    let max_y = all_points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + MARGIN;
    let (w, h) = (max_x - min_x, max_y - min_y);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"{min_x:.2} {min_y:.2} {w:.2} {h:.2}\">"
    );
    out.push_str(
        "<style>.cell{fill:#f3e6c4;stroke:#7d6b46;stroke-width:1}.edge{fill:#d8d8d8;stroke:#9a9a9a;stroke-width:1}.stone{fill:#151515}.waste{fill:#c0392b;fill-opacity:0.5;stroke:none}</style>\n",
    );
    for &c in &board {
        let _ = writeln!(out, "<polygon class=\"cell\" points=\"{}\"/>", points(&hexagon(c)));
    }
    for &c in &edges {
        let _ = writeln!(out, "<polygon class=\"edge\" points=\"{}\"/>", points(&hexagon(c)));
    }
    if spec.show_waste {
        for t in wasted_triangles(s) {
            let _ = writeln!(out, "<polygon class=\"waste\" points=\"{}\"/>", points(&t.vertices().map(center)));
        }
    }
    for c in s.iter() {
        let (cx, cy) = center(c);
        let _ = writeln!(out, "<circle class=\"stone\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{:.2}\"/>", RADIUS * 0.6);
    }
    out.push_str("</svg>\n");
    out
}
