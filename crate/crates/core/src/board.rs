//! Cell coordinates, hex adjacency and symmetry on rhombic n x n boards.
//!
//! Cells use axial coordinates `(x, y)`: `x` is the column (1..=n on the
//! board), `y` the row (1 = top edge, n = bottom edge). The extended board
//! adds two always-empty columns, `x = 0` and `x = n + 1`, standing in for
//! the left and right edges. Two cells are adjacent when they differ by one
//! of `(±1, 0)`, `(0, ±1)`, `(+1, -1)` or `(-1, +1)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The six axial neighbor offsets.
pub const NEIGHBOR_OFFSETS: [(i32, i32); 6] = [(-1, 0), (1, 0), (0, -1), (0, 1), (1, -1), (-1, 1)];

/// Largest column that has a letter label (`t`).
pub const MAX_LABEL_COLUMN: i32 = 20;

/// A cell position. Ordered by row, then column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coord {
    pub x: i32,
    pub y: i32,
}

impl Coord {
    pub const fn new(x: i32, y: i32) -> Self {
        Coord { x, y }
    }

    pub fn is_adjacent(self, other: Coord) -> bool {
        let d = (other.x - self.x, other.y - self.y);
        NEIGHBOR_OFFSETS.contains(&d)
    }

    /// Label form (`a1`, `b1`, ...) when the column has a letter, `x,y` otherwise.
    pub fn label(self) -> String {
        format_label(self)
    }
}

impl Ord for Coord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Coord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i32, i32)> for Coord {
    fn from((x, y): (i32, i32)) -> Self {
        Coord { x, y }
    }
}

/// Side length of a board, always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoardSize(u32);

impl BoardSize {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("board size must be at least 1"));
        }
        if n > 100_000 {
            return Err(Error::input(format!("board size {n} is unreasonably large")));
        }
        Ok(BoardSize(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The side length as a signed coordinate bound.
    pub fn side(self) -> i32 {
        self.0 as i32
    }

    pub fn contains(self, c: Coord) -> bool {
        let n = self.side();
        (1..=n).contains(&c.x) && (1..=n).contains(&c.y)
    }

    pub fn contains_extended(self, c: Coord) -> bool {
        let n = self.side();
        (0..=n + 1).contains(&c.x) && (1..=n).contains(&c.y)
    }

    pub fn is_extension(self, c: Coord) -> bool {
        self.contains_extended(c) && (c.x == 0 || c.x == self.side() + 1)
    }

    /// Board cells in canonical (row, column) order.
    pub fn cells(self) -> impl Iterator<Item = Coord> {
        let n = self.side();
        (1..=n).flat_map(move |y| (1..=n).map(move |x| Coord::new(x, y)))
    }

    /// The four corner cells.
    pub fn corners(self) -> [Coord; 4] {
        let n = self.side();
        [Coord::new(1, 1), Coord::new(n, 1), Coord::new(1, n), Coord::new(n, n)]
    }
}

impl fmt::Display for BoardSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The two acute corners of the rhombus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    TopLeftAcute,
    BottomRightAcute,
}

impl Corner {
    pub fn opposite(self) -> Corner {
        match self {
            Corner::TopLeftAcute => Corner::BottomRightAcute,
            Corner::BottomRightAcute => Corner::TopLeftAcute,
        }
    }
}

fn check(c: Coord, n: BoardSize, extended: bool) -> Result<()> {
    let ok = if extended { n.contains_extended(c) } else { n.contains(c) };
    if ok {
        Ok(())
    } else {
        let board = if extended { "extended board" } else { "board" };
        Err(Error::input(format!("{c} is not a cell of the {n}x{n} {board}")))
    }
}

/// Neighbors of `c` that lie on the (optionally extended) board, sorted by
/// row then column.
pub fn neighbors(c: Coord, n: BoardSize, extended: bool) -> Result<Vec<Coord>> {
    check(c, n, extended)?;
    let mut out: Vec<Coord> = NEIGHBOR_OFFSETS
        .iter()
        .map(|&(dx, dy)| Coord::new(c.x + dx, c.y + dy))
        .filter(|&d| if extended { n.contains_extended(d) } else { n.contains(d) })
        .collect();
    out.sort();
    Ok(out)
}

/// Point reflection through the board center. Swaps columns 0 and n+1.
pub fn rotate180(c: Coord, n: BoardSize) -> Result<Coord> {
    check(c, n, true)?;
    Ok(rotate180_unchecked(c, n))
}

pub(crate) fn rotate180_unchecked(c: Coord, n: BoardSize) -> Coord {
    let s = n.side() + 1;
    Coord::new(s - c.x, s - c.y)
}

/// The 15-cell staircase region at an acute corner: rows 1..=5 with
/// `x <= 6 - y` at the top-left corner, and its 180° image at the other.
pub fn corner_region(n: BoardSize, corner: Corner) -> Result<BTreeSet<Coord>> {
    if n.get() < 5 {
        return Err(Error::domain(format!(
            "the corner region needs a board of size at least 5, got {n}"
        )));
    }
    let top_left = (1..=5).flat_map(|y| (1..=6 - y).map(move |x| Coord::new(x, y)));
    Ok(match corner {
        Corner::TopLeftAcute => top_left.collect(),
        Corner::BottomRightAcute => top_left.map(|c| rotate180_unchecked(c, n)).collect(),
    })
}

/// Formats a cell as `a1`-style label, or `x,y` when the column has no letter.
pub fn format_label(c: Coord) -> String {
    if (1..=MAX_LABEL_COLUMN).contains(&c.x) && c.y >= 1 {
        let letter = (b'a' + (c.x - 1) as u8) as char;
        format!("{letter}{}", c.y)
    } else {
        format!("{},{}", c.x, c.y)
    }
}

/// Parses `a1`-style labels (columns `a`..=`t`) or the numeric `x,y` form.
pub fn parse_label(s: &str) -> Result<Coord> {
    let s = s.trim();
    let bad = || Error::input(format!("malformed cell label {s:?}"));
    if let Some((xs, ys)) = s.split_once(',') {
        let x = xs.trim().parse::<i32>().map_err(|_| bad())?;
        let y = ys.trim().parse::<i32>().map_err(|_| bad())?;
        return Ok(Coord::new(x, y));
    }
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(bad)?;
    if !letter.is_ascii_lowercase() {
        return Err(bad());
    }
    let x = (letter as u8 - b'a') as i32 + 1;
    if x > MAX_LABEL_COLUMN {
        return Err(Error::input(format!(
            "column letter {letter:?} is beyond 't'; use the numeric x,y form"
        )));
    }
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return Err(bad());
    }
    let y = digits.parse::<i32>().map_err(|_| bad())?;
    Ok(Coord::new(x, y))
}

impl FromStr for Coord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_label(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u32) -> BoardSize {
        BoardSize::new(v).unwrap()
    }

    fn cs(v: &[(i32, i32)]) -> Vec<Coord> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn interior_neighbors() {
        let got = neighbors(Coord::new(3, 4), n(5), false).unwrap();
        assert_eq!(got, cs(&[(3, 3), (4, 3), (2, 4), (4, 4), (2, 5), (3, 5)]));
    }

    #[test]
    fn figure_path_cells_are_adjacent() {
        assert!(Coord::new(3, 4).is_adjacent(Coord::new(2, 5)));
        assert!(!Coord::new(3, 4).is_adjacent(Coord::new(4, 5)));
    }

    #[test]
    fn extended_corner_neighbors() {
        let got = neighbors(Coord::new(1, 1), n(5), true).unwrap();
        assert_eq!(got, cs(&[(0, 1), (2, 1), (0, 2), (1, 2)]));
    }

    #[test]
    fn neighbors_rejects_off_board() {
        assert!(matches!(neighbors(Coord::new(0, 1), n(5), false), Err(Error::Input(_))));
        assert!(matches!(neighbors(Coord::new(7, 1), n(5), true), Err(Error::Input(_))));
        assert!(matches!(neighbors(Coord::new(1, 6), n(5), true), Err(Error::Input(_))));
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate180(Coord::new(1, 1), n(5)).unwrap(), Coord::new(5, 5));
        assert_eq!(rotate180(Coord::new(0, 2), n(5)).unwrap(), Coord::new(6, 4));
        assert!(rotate180(Coord::new(8, 2), n(5)).is_err());
    }

    #[test]
    fn adjacency_symmetric_and_rotation_invariant() {
        for size in 1..=20 {
            let b = n(size);
            let m = b.side();
            for y in 1..=m {
                for x in 0..=m + 1 {
                    let a = Coord::new(x, y);
                    let ra = rotate180(a, b).unwrap();
                    assert_eq!(rotate180(ra, b).unwrap(), a);
                    let na = neighbors(a, b, true).unwrap();
                    if (1..=m).contains(&x) && y > 1 && y < m && x > 1 && x < m {
                        assert_eq!(neighbors(a, b, false).unwrap().len(), 6);
                    }
                    for c in &na {
                        assert!(neighbors(*c, b, true).unwrap().contains(&a));
                        let rc = rotate180(*c, b).unwrap();
                        assert!(neighbors(ra, b, true).unwrap().contains(&rc));
                    }
                }
            }
            if size >= 2 {
                for c in [Coord::new(0, 1), Coord::new(m + 1, m), Coord::new(0, m), Coord::new(m + 1, 1)] {
                    assert!(neighbors(c, b, true).unwrap().len() >= 2);
                }
            }
        }
    }

    #[test]
    fn corner_regions() {
        let tl = corner_region(n(5), Corner::TopLeftAcute).unwrap();
        assert_eq!(tl.len(), 15);
        assert_eq!(tl.iter().filter(|c| c.y == 1).count(), 5);
        assert_eq!(tl.iter().filter(|c| c.y == 5).collect::<Vec<_>>(), vec![&Coord::new(1, 5)]);
        let br = corner_region(n(5), Corner::BottomRightAcute).unwrap();
        let image: BTreeSet<Coord> = tl.iter().map(|&c| rotate180(c, n(5)).unwrap()).collect();
        assert_eq!(br, image);
        for size in 5..=30 {
            assert_eq!(corner_region(n(size), Corner::TopLeftAcute).unwrap().len(), 15);
            assert_eq!(corner_region(n(size), Corner::BottomRightAcute).unwrap().len(), 15);
        }
        assert!(matches!(corner_region(n(4), Corner::TopLeftAcute), Err(Error::Domain(_))));
    }

    #[test]
    fn labels() {
        assert_eq!(parse_label("a1").unwrap(), Coord::new(1, 1));
        assert_eq!(parse_label("b1").unwrap(), Coord::new(2, 1));
        assert_eq!(format_label(Coord::new(1, 2)), "a2");
        assert_eq!(format_label(Coord::new(20, 20)), "t20");
        assert_eq!(format_label(Coord::new(21, 3)), "21,3");
        assert_eq!(parse_label("21,3").unwrap(), Coord::new(21, 3));
        for bad in ["", "1a", "a", "a0", "a01", "u1", "A1", "a1x", "3;4"] {
            assert!(parse_label(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn zero_board_rejected() {
        assert!(BoardSize::new(0).is_err());
    }
}
