//! Bitboard layout for boards up to 11 x 11.
//!
//! Cell `(x, y)` lives at bit `(y - 1) * n + (x - 1)`. Extension columns have
//! no bits; triangles touching them are counted by dedicated families whose
//! remaining vertices are all board cells.

use crate::board::{BoardSize, Coord, NEIGHBOR_OFFSETS};
use crate::unitgrid::{Region, UnitTriangle};

pub(crate) type Bits = u128;

/// Largest side length that fits the bitboard.
pub const MAX_SEARCH_N: u32 = 11;

/// One family of unit triangles sharing a bit pattern relative to an anchor
/// bit. `shifts` lists the offsets of the other board vertices.
#[derive(Debug, Clone)]
pub(crate) struct Family {
    shifts: &'static [u32],
    stride: u32,
    in_a: Bits,
    in_b: Bits,
    other: Bits,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct WasteSplit {
    pub a: u32,
    pub b: u32,
    pub other: u32,
}

impl WasteSplit {
    #[cfg(test)]
    pub fn total(&self) -> u32 {
        self.a + self.b + self.other
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Geometry {
    pub n: u32,
    pub board: Bits,
    pub row1: Bits,
    pub row_n: Bits,
    pub not_col1: Bits,
    pub not_col_n: Bits,
    pub nbr: Vec<Bits>,
    families: Vec<Family>,
}

// Shift codes: 1 = next column, 2 = next row, 3 = next row one column left.
// Resolved against the stride `n`.
const DOWN_INTERIOR: &[u32] = &[1, 2]; // (x+1,y), (x,y+1)
const UP_INTERIOR: &[u32] = &[3, 2]; // (x-1,y+1), (x,y+1) from anchor (x+1,y)
const UP_LEFT: &[u32] = &[2]; // (1,y+1)
const DOWN_RIGHT: &[u32] = &[2]; // (n,y+1)
const SINGLE: &[u32] = &[];

fn resolve(code: u32, n: u32) -> u32 {
    match code {
        1 => 1,
        2 => n,
        3 => n - 1,
        _ => unreachable!(),
    }
}

impl Geometry {
    pub fn new(size: BoardSize) -> Geometry {
        let n = size.get();
        assert!((2..=MAX_SEARCH_N).contains(&n), "bitboard supports 2 <= n <= {MAX_SEARCH_N}");
        let m = n as i32;
        let bit = |x: i32, y: i32| -> Bits { 1 << ((y - 1) * m + (x - 1)) };
        let mut board = 0;
        let (mut row1, mut row_n, mut col1, mut col_n) = (0, 0, 0, 0);
        for c in size.cells() {
            let b = bit(c.x, c.y);
            board |= b;
            if c.y == 1 {
                row1 |= b;
            }
            if c.y == m {
                row_n |= b;
            }
            if c.x == 1 {
                col1 |= b;
            }
            if c.x == m {
                col_n |= b;
            }
        }
        let nbr = size
            .cells()
            .map(|c| {
                NEIGHBOR_OFFSETS
                    .iter()
                    .map(|&(dx, dy)| Coord::new(c.x + dx, c.y + dy))
                    .filter(|&d| size.contains(d))
                    .fold(0, |acc, d| acc | bit(d.x, d.y))
            })
            .collect();

        let region_a = Region::a(size);
        let region_b = Region::b(size);
        let mut families = Vec::new();
        // (shift codes, triangle for an anchor cell, anchor predicate)
        type Maker = fn(i32, i32) -> UnitTriangle;
        type Anchor = fn(i32, i32, i32) -> bool;
        let specs: [(&'static [u32], Maker, Anchor); 6] = [
            (DOWN_INTERIOR, |x, y| UnitTriangle::down(x, y), |x, y, m| x < m && y < m),
            (SINGLE, |_, y| UnitTriangle::down(0, y), |x, y, m| x == 1 && y < m),
            (DOWN_RIGHT, |x, y| UnitTriangle::down(x, y), |x, y, m| x == m && y < m),
            (UP_INTERIOR, |x, y| UnitTriangle::up(x - 1, y), |x, y, m| x >= 2 && y < m),
            (UP_LEFT, |_, y| UnitTriangle::up(0, y), |x, y, m| x == 1 && y < m),
            (SINGLE, |x, y| UnitTriangle::up(x, y - 1), |x, y, m| x == m && y >= 2),
        ];
        for (shifts, make, anchored) in specs {
            let mut fam = Family { shifts, stride: n, in_a: 0, in_b: 0, other: 0 };
            for c in size.cells() {
                if !anchored(c.x, c.y, m) {
                    continue;
                }
                let t = make(c.x, c.y);
                let b = bit(c.x, c.y);
                if region_a.triangles().contains(&t) {
                    fam.in_a |= b;
                } else if region_b.triangles().contains(&t) {
                    fam.in_b |= b;
                } else {
                    fam.other |= b;
                }
            }
            families.push(fam);
        }

        Geometry {
            n,
            board,
            row1,
            row_n,
            not_col1: board & !col1,
            not_col_n: board & !col_n,
            nbr,
            families,
        }
    }

    #[cfg(test)]
    pub fn index(&self, c: Coord) -> u32 {
        (c.y as u32 - 1) * self.n + (c.x as u32 - 1)
    }

    pub fn coord(&self, i: u32) -> Coord {
        Coord::new((i % self.n) as i32 + 1, (i / self.n) as i32 + 1)
    }

    pub fn row_of(&self, i: u32) -> u32 {
        i / self.n + 1
    }

    /// All board cells adjacent to some cell of `s`.
    #[inline]
    pub fn dilate(&self, s: Bits) -> Bits {
        let n = self.n;
        let right = (s & self.not_col_n) << 1;
        let left = (s & self.not_col1) >> 1;
        let up = s >> n;
        let down = s << n;
        let up_right = (s & self.not_col_n) >> (n - 1);
        let down_left = (s & self.not_col1) << (n - 1);
        (right | left | up | down | up_right | down_left) & self.board
    }

    /// Cells reachable from `seeds` through `allowed`, never passing through
    /// a bottom-row cell.
    #[inline]
    pub fn flood(&self, seeds: Bits, allowed: Bits) -> Bits {
        let mut reach = seeds & allowed;
        loop {
            let next = reach | (self.dilate(reach & !self.row_n) & allowed);
            if next == reach {
                return reach;
            }
            reach = next;
        }
    }

    /// Wasted triangles whose board vertices all lie in `empty`, split by
    /// corner region.
    #[inline]
    pub fn waste(&self, empty: Bits) -> WasteSplit {
        let mut w = WasteSplit::default();
        for f in &self.families {
            let mut t = empty;
            for &code in f.shifts {
                t &= empty >> resolve(code, f.stride);
            }
            w.a += (t & f.in_a).count_ones();
            w.b += (t & f.in_b).count_ones();
            w.other += (t & f.other).count_ones();
        }
        w
    }
}
