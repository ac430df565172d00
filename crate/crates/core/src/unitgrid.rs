//! The triangular unit grid spanned by the centers of the extended board.
//!
//! Every triple of pairwise adjacent extended cells is a unit triangle. A
//! *down* triangle has two vertices in row `y` and one in row `y + 1`
//! (`{(x,y), (x+1,y), (x,y+1)}`); an *up* triangle has one vertex in row `y`
//! and two in row `y + 1` (`{(x+1,y), (x,y+1), (x+1,y+1)}`), so its apex
//! points at the top edge. A triangle is wasted when none of its vertices
//! holds a stone; extension cells never do.
//!
//! Region A is the lattice triangle at the top-left acute corner (all
//! vertices with `x + y <= n`), region B its 180° image. Reports for region
//! B are given in corner-local orientation, i.e. up and down are swapped so
//! that statements about region A carry over verbatim.

use std::collections::BTreeSet;
use std::fmt;

use crate::board::{corner_region, rotate180_unchecked, BoardSize, Coord, Corner};
use crate::connection::{is_minimal_winning_path, path_order, StoneSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }
}

/// A unit triangle. Vertices are kept in canonical (row, column) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitTriangle {
    vertices: [Coord; 3],
    orientation: Orientation,
}

impl UnitTriangle {
    /// `{(x,y), (x+1,y), (x,y+1)}`
    pub fn down(x: i32, y: i32) -> Self {
        UnitTriangle {
            vertices: [Coord::new(x, y), Coord::new(x + 1, y), Coord::new(x, y + 1)],
            orientation: Orientation::Down,
        }
    }

    /// `{(x+1,y), (x,y+1), (x+1,y+1)}`
    pub fn up(x: i32, y: i32) -> Self {
        UnitTriangle {
            vertices: [Coord::new(x + 1, y), Coord::new(x, y + 1), Coord::new(x + 1, y + 1)],
            orientation: Orientation::Up,
        }
    }

    /// Recognizes three pairwise adjacent cells as a unit triangle.
    pub fn from_vertices(a: Coord, b: Coord, c: Coord) -> Option<Self> {
        let mut v = [a, b, c];
        v.sort();
        let t = if v[0].y == v[1].y {
            UnitTriangle::down(v[0].x, v[0].y)
        } else {
            UnitTriangle::up(v[1].x, v[0].y)
        };
        (t.vertices == v).then_some(t)
    }

    pub fn vertices(&self) -> [Coord; 3] {
        self.vertices
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn rotate180(&self, n: BoardSize) -> UnitTriangle {
        let [a, b, c] = self.vertices.map(|v| rotate180_unchecked(v, n));
        UnitTriangle::from_vertices(a, b, c).expect("rotation preserves unit triangles")
    }

    fn within(&self, n: BoardSize) -> bool {
        self.vertices.iter().all(|&v| n.contains_extended(v))
    }

    fn is_wasted(&self, s: &StoneSet) -> bool {
        self.vertices.iter().all(|&v| !s.contains(v))
    }
}

impl fmt::Display for UnitTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        let o = match self.orientation {
            Orientation::Up => "up",
            Orientation::Down => "down",
        };
        write!(f, "{o}{{{a},{b},{c}}}")
    }
}

/// All `2(n+1)(n-1)` unit triangles, in canonical order.
pub fn all_triangles(n: BoardSize) -> Vec<UnitTriangle> {
    let m = n.side();
    let mut out = Vec::with_capacity(2 * (m as usize + 1) * (m as usize).saturating_sub(1));
    for y in 1..m {
        for x in 0..=m {
            out.push(UnitTriangle::down(x, y));
            out.push(UnitTriangle::up(x, y));
        }
    }
    debug_assert!(out.iter().all(|t| t.within(n)));
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionKind {
    WholeGrid,
    A,
    B,
    Custom,
}

/// A set of unit triangles of one board's grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    n: BoardSize,
    kind: RegionKind,
    triangles: BTreeSet<UnitTriangle>,
}

impl Region {
    pub fn whole(n: BoardSize) -> Self {
        Region { n, kind: RegionKind::WholeGrid, triangles: all_triangles(n).into_iter().collect() }
    }

    /// Triangles whose vertices all satisfy `x + y <= n`.
    pub fn a(n: BoardSize) -> Self {
        let m = n.side();
        let triangles = all_triangles(n)
            .into_iter()
            .filter(|t| t.vertices.iter().all(|v| v.x + v.y <= m))
            .collect();
        Region { n, kind: RegionKind::A, triangles }
    }

    /// The 180° image of region A.
    pub fn b(n: BoardSize) -> Self {
        let a = Region::a(n);
        Region { n, kind: RegionKind::B, triangles: a.triangles.iter().map(|t| t.rotate180(n)).collect() }
    }

    pub fn custom(n: BoardSize, triangles: impl IntoIterator<Item = UnitTriangle>) -> Result<Self> {
        let triangles: BTreeSet<UnitTriangle> = triangles.into_iter().collect();
        if let Some(t) = triangles.iter().find(|t| !t.within(n)) {
            return Err(Error::input(format!("triangle {t} is not on the {n}x{n} unit grid")));
        }
        Ok(Region { n, kind: RegionKind::Custom, triangles })
    }

    pub fn size(&self) -> BoardSize {
        self.n
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn triangles(&self) -> &BTreeSet<UnitTriangle> {
        &self.triangles
    }

    pub fn rotate180(&self) -> Region {
        let kind = match self.kind {
            RegionKind::A => RegionKind::B,
            RegionKind::B => RegionKind::A,
            k => k,
        };
        Region { n: self.n, kind, triangles: self.triangles.iter().map(|t| t.rotate180(self.n)).collect() }
    }

    /// Region B reports orientations as seen from its own corner.
    fn local(&self, o: Orientation) -> Orientation {
        match self.kind {
            RegionKind::B => o.flipped(),
            _ => o,
        }
    }

    fn count(&self, o: Orientation) -> i64 {
        self.triangles.iter().filter(|t| t.orientation == o).count() as i64
    }
}

/// Wasted-triangle tallies for one region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WasteReport {
    pub t: u64,
    pub t_up: u64,
    pub t_down: u64,
}

impl WasteReport {
    pub fn to_kv(&self) -> String {
        format!("t={}\nt_up={}\nt_down={}\n", self.t, self.t_up, self.t_down)
    }
}

/// Tallies wasted triangles in `region` (corner-local orientation for region B).
pub fn wasted(s: &StoneSet, region: &Region) -> Result<WasteReport> {
    let raw = wasted_raw(s, region)?;
    Ok(match region.kind {
        RegionKind::B => WasteReport { t: raw.t, t_up: raw.t_down, t_down: raw.t_up },
        _ => raw,
    })
}

/// Tallies wasted triangles in `region` using the board's own orientation.
pub fn wasted_raw(s: &StoneSet, region: &Region) -> Result<WasteReport> {
    if s.size() != region.n {
        return Err(Error::input("stone set and region belong to different board sizes"));
    }
    let mut r = WasteReport::default();
    for t in region.triangles.iter().filter(|t| t.is_wasted(s)) {
        r.t += 1;
        match t.orientation {
            Orientation::Up => r.t_up += 1,
            Orientation::Down => r.t_down += 1,
        }
    }
    Ok(r)
}

/// Area identity `4(k-1) + t = 2(n+1)(n-1)` for a winning path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq1Check {
    pub k: u64,
    pub t: u64,
    pub holds: bool,
}

pub fn eq1_check(s: &StoneSet) -> Result<Eq1Check> {
    if !is_minimal_winning_path(s) {
        return Err(Error::domain("the area identity applies to minimal winning paths only"));
    }
    let n = s.size().get() as i64;
    let k = s.len() as u64;
    let t = wasted(s, &Region::whole(s.size()))?.t;
    let holds = 4 * (k as i64 - 1) + t as i64 == 2 * (n + 1) * (n - 1);
    Ok(Eq1Check { k, t, holds })
}

/// `#down - #up` in the region, in corner-local orientation.
pub fn region_excess(region: &Region) -> i64 {
    let down = region.count(region.local(Orientation::Down));
    let up = region.count(region.local(Orientation::Up));
    down - up
}

/// Maximal runs of consecutive path stones on one side of a triangular
/// region's boundary; a run turning around a region corner splits in two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    pub components: Vec<Vec<Coord>>,
    pub b: usize,
    pub transversal: Vec<bool>,
}

impl BoundaryReport {
    pub fn to_kv(&self) -> String {
        let mut out = format!("b={}\n", self.b);
        for (comp, tr) in self.components.iter().zip(&self.transversal) {
            let cells: Vec<String> = comp.iter().map(|c| format!("{},{}", c.x, c.y)).collect();
            out.push_str(&format!("component={} transversal={}\n", cells.join(" "), tr));
        }
        out
    }

    /// Total stones over all components.
    pub fn stone_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }
}

fn in_closed_a(c: Coord, n: i32) -> bool {
    c.x + c.y <= n
}

fn on_boundary_a(c: Coord, n: i32) -> bool {
    in_closed_a(c, n) && (c.x == 0 || c.y == 1 || c.x + c.y == n)
}

/// Bitmask of the sides of region A a boundary cell lies on:
/// 1 left column, 2 top row, 4 hypotenuse.
fn sides_a(c: Coord, n: i32) -> u8 {
    u8::from(c.x == 0) | u8::from(c.y == 1) << 1 | u8::from(c.x + c.y == n) << 2
}

fn boundary_components_a(s: &StoneSet) -> Result<BoundaryReport> {
    let n = s.size().side();
    let order = path_order(s)?;
    let last = order.len() - 1;
    let mut components: Vec<Vec<Coord>> = Vec::new();
    let mut transversal = Vec::new();
    let mut run_start: Option<usize> = None;
    let mut close = |from: usize, to: usize, components: &mut Vec<Vec<Coord>>| {
        let comp = order[from..=to].to_vec();
        let single = from == to;
        let tr = single
            && from != 0
            && from != last
            && !in_closed_a(order[from - 1], n)
            && !in_closed_a(order[from + 1], n);
        components.push(comp);
        transversal.push(tr);
    };
    for (i, &c) in order.iter().enumerate() {
        match (on_boundary_a(c, n), run_start) {
            (true, None) => run_start = Some(i),
            (true, Some(st)) if sides_a(order[i - 1], n) & sides_a(c, n) == 0 => {
                // the run turns around a region corner: one component per side
                close(st, i - 1, &mut components);
                run_start = Some(i);
            }
            (false, Some(st)) => {
                close(st, i - 1, &mut components);
                run_start = None;
            }
            _ => {}
        }
    }
    if let Some(st) = run_start {
        close(st, last, &mut components);
    }
    let b = components.len();
    Ok(BoundaryReport { components, b, transversal })
}

fn triangular(region: &Region) -> Result<()> {
    match region.kind {
        RegionKind::A | RegionKind::B => Ok(()),
        _ => Err(Error::domain("boundary components are defined for regions A and B only")),
    }
}

/// Boundary components of a winning path on region A or B.
pub fn boundary_components(s: &StoneSet, region: &Region) -> Result<BoundaryReport> {
    triangular(region)?;
    if s.size() != region.n {
        return Err(Error::input("stone set and region belong to different board sizes"));
    }
    if !is_minimal_winning_path(s) {
        return Err(Error::domain("boundary components require a minimal winning path"));
    }
    match region.kind {
        RegionKind::A => boundary_components_a(s),
        _ => {
            let n = s.size();
            let mut r = boundary_components_a(&s.rotate180())?;
            for comp in &mut r.components {
                for c in comp.iter_mut() {
                    *c = rotate180_unchecked(*c, n);
                }
            }
            Ok(r)
        }
    }
}

/// Excess accounting `e = b + t_down - t_up` on a triangular region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq2Check {
    pub e: i64,
    pub b: i64,
    pub t_down: i64,
    pub t_up: i64,
    pub holds: bool,
}

pub fn eq2_check(s: &StoneSet, region: &Region) -> Result<Eq2Check> {
    let boundary = boundary_components(s, region)?;
    let w = wasted(s, region)?;
    let e = region_excess(region);
    let b = boundary.b as i64;
    let (t_down, t_up) = (w.t_down as i64, w.t_up as i64);
    Ok(Eq2Check { e, b, t_down, t_up, holds: e == b + t_down - t_up })
}

/// An up-pointing (corner-local) wasted triangle inside the 15-cell corner
/// region, possibly using left-edge extension cells. The first one in
/// canonical order is returned; none existing is reported as an internal
/// error.
pub fn corner_lemma_witness(s: &StoneSet, corner: Corner) -> Result<UnitTriangle> {
    let n = s.size();
    if !is_minimal_winning_path(s) {
        return Err(Error::domain("the corner lemma applies to minimal winning paths only"));
    }
    match corner {
        Corner::TopLeftAcute => top_left_witness(s),
        Corner::BottomRightAcute => Ok(top_left_witness(&s.rotate180())?.rotate180(n)),
    }
}

fn top_left_witness(s: &StoneSet) -> Result<UnitTriangle> {
    let n = s.size();
    let region = corner_region(n, Corner::TopLeftAcute)?;
    let admissible = |v: &Coord| region.contains(v) || (v.x == 0 && (1..=5).contains(&v.y));
    (1..5)
        .flat_map(|y| (0..5).map(move |x| UnitTriangle::up(x, y)))
        .filter(|t| t.vertices.iter().all(admissible))
        .filter(|t| t.is_wasted(s))
        .min()
        .ok_or_else(|| {
            Error::internal(format!("no up-pointing wasted triangle in the corner region of {s}"))
        })
}
