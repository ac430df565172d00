//! Stone sets and the winning-connection / winning-path predicates.
//!
//! A set of black stones is *winning* when some connected component touches
//! both row 1 and row n. A *minimal* winning set (a winning path) loses that
//! property whenever any single stone is removed; because winning is monotone
//! under adding stones, single-stone criticality is the same as minimality
//! over all proper subsets.

use std::collections::BTreeSet;
use std::fmt;

use crate::board::{rotate180_unchecked, BoardSize, Coord, NEIGHBOR_OFFSETS};
use crate::error::{Error, Result};

/// A set of black stones on an n x n board.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StoneSet {
    n: BoardSize,
    stones: BTreeSet<Coord>,
}

impl StoneSet {
    /// Builds a stone set, rejecting off-board cells and duplicates.
    pub fn new(n: BoardSize, stones: impl IntoIterator<Item = Coord>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for c in stones {
            if !n.contains(c) {
                return Err(Error::input(format!("stone {c} is off the {n}x{n} board")));
            }
            if !set.insert(c) {
                return Err(Error::input(format!("duplicate stone {c}")));
            }
        }
        Ok(StoneSet { n, stones: set })
    }

    pub fn empty(n: BoardSize) -> Self {
        StoneSet { n, stones: BTreeSet::new() }
    }

    /// Convenience constructor from `(x, y)` pairs.
    pub fn from_pairs(n: u32, pairs: &[(i32, i32)]) -> Result<Self> {
        StoneSet::new(BoardSize::new(n)?, pairs.iter().map(|&p| Coord::from(p)))
    }

    pub fn size(&self) -> BoardSize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.stones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stones.is_empty()
    }

    pub fn contains(&self, c: Coord) -> bool {
        self.stones.contains(&c)
    }

    /// Stones in canonical (row, column) order.
    pub fn iter(&self) -> impl Iterator<Item = Coord> + '_ {
        self.stones.iter().copied()
    }

    pub fn stones(&self) -> &BTreeSet<Coord> {
        &self.stones
    }

    pub fn insert(&mut self, c: Coord) -> Result<bool> {
        if !self.n.contains(c) {
            return Err(Error::input(format!("stone {c} is off the {}x{} board", self.n, self.n)));
        }
        Ok(self.stones.insert(c))
    }

    pub fn remove(&mut self, c: Coord) -> bool {
        self.stones.remove(&c)
    }

    pub fn without(&self, c: Coord) -> StoneSet {
        let mut s = self.clone();
        s.stones.remove(&c);
        s
    }

    pub fn rotate180(&self) -> StoneSet {
        StoneSet {
            n: self.n,
            stones: self.stones.iter().map(|&c| rotate180_unchecked(c, self.n)).collect(),
        }
    }

    /// Number of stones of `self` adjacent to `c`.
    pub fn degree(&self, c: Coord) -> usize {
        NEIGHBOR_OFFSETS
            .iter()
            .filter(|&&(dx, dy)| self.stones.contains(&Coord::new(c.x + dx, c.y + dy)))
            .count()
    }

    fn dense(&self) -> Dense {
        Dense::new(self)
    }
}

impl fmt::Display for StoneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (i, c) in self.stones.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl PartialOrd for StoneSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: board size, then the stone lists compared lexicographically.
impl Ord for StoneSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.stones.iter().cmp(other.stones.iter()))
    }
}

/// Row-major occupancy grid used for repeated connectivity checks.
struct Dense {
    n: i32,
    occupied: Vec<bool>,
    seen: Vec<u32>,
    epoch: u32,
    stack: Vec<Coord>,
}

impl Dense {
    fn new(s: &StoneSet) -> Self {
        let n = s.n.side();
        let mut occupied = vec![false; (n * n) as usize];
        for c in s.iter() {
            occupied[((c.y - 1) * n + c.x - 1) as usize] = true;
        }
        Dense { n, occupied, seen: vec![0; (n * n) as usize], epoch: 0, stack: Vec::new() }
    }

    fn idx(&self, c: Coord) -> usize {
        ((c.y - 1) * self.n + c.x - 1) as usize
    }

    fn occupied(&self, c: Coord) -> bool {
        c.x >= 1 && c.y >= 1 && c.x <= self.n && c.y <= self.n && self.occupied[self.idx(c)]
    }

    /// Flood fill from the row-1 stones, skipping `excluded`.
    fn winning(&mut self, excluded: Option<Coord>) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        self.stack.clear();
        for x in 1..=self.n {
            let c = Coord::new(x, 1);
            if self.occupied(c) && Some(c) != excluded {
                let i = self.idx(c);
                self.seen[i] = epoch;
                self.stack.push(c);
            }
        }
        while let Some(c) = self.stack.pop() {
            if c.y == self.n {
                return true;
            }
            for &(dx, dy) in &NEIGHBOR_OFFSETS {
                let d = Coord::new(c.x + dx, c.y + dy);
                if self.occupied(d) && Some(d) != excluded {
                    let i = self.idx(d);
                    if self.seen[i] != epoch {
                        self.seen[i] = epoch;
                        self.stack.push(d);
                    }
                }
            }
        }
        false
    }
}

/// True iff some connected component of `s` touches row 1 and row n.
pub fn is_winning(s: &StoneSet) -> bool {
    s.dense().winning(None)
}

/// The first stone (canonical order) whose removal keeps `s` winning.
pub fn removable_stone(s: &StoneSet) -> Option<Coord> {
    let mut d = s.dense();
    s.iter().find(|&c| d.winning(Some(c)))
}

/// True iff `s` is winning and no single stone can be removed while staying winning.
pub fn is_minimal_winning_path(s: &StoneSet) -> bool {
    let mut d = s.dense();
    d.winning(None) && s.iter().all(|c| !d.winning(Some(c)))
}

pub fn path_length(s: &StoneSet) -> usize {
    s.len()
}

/// The unique row-1 stone and the unique row-n stone of a winning path.
pub fn endpoints(s: &StoneSet) -> Result<(Coord, Coord)> {
    let n = s.size().side();
    if n < 2 {
        return Err(Error::domain("endpoints are defined for boards of size at least 2"));
    }
    if !is_minimal_winning_path(s) {
        return Err(Error::domain("stone set is not a minimal winning path"));
    }
    let top: Vec<Coord> = s.iter().filter(|c| c.y == 1).collect();
    let bottom: Vec<Coord> = s.iter().filter(|c| c.y == n).collect();
    match (top.as_slice(), bottom.as_slice()) {
        ([t], [b]) => Ok((*t, *b)),
        _ => Err(Error::internal("minimal winning path without unique edge stones")),
    }
}

/// True iff both endpoints are corner cells.
pub fn is_corner_to_corner(s: &StoneSet) -> Result<bool> {
    let (a, b) = endpoints(s)?;
    let corners = s.size().corners();
    Ok(corners.contains(&a) && corners.contains(&b))
}

/// The stones of `s` in path order, from the row-1 endpoint to the row-n
/// endpoint. Requires a minimal winning path.
pub fn path_order(s: &StoneSet) -> Result<Vec<Coord>> {
    if s.size().get() == 1 {
        return if is_minimal_winning_path(s) {
            Ok(s.iter().collect())
        } else {
            Err(Error::domain("stone set is not a minimal winning path"))
        };
    }
    let (start, end) = endpoints(s)?;
    let mut order = vec![start];
    let mut prev: Option<Coord> = None;
    let mut cur = start;
    while cur != end {
        let next = NEIGHBOR_OFFSETS
            .iter()
            .map(|&(dx, dy)| Coord::new(cur.x + dx, cur.y + dy))
            .find(|&d| s.contains(d) && Some(d) != prev)
            .ok_or_else(|| Error::internal("winning path is not a simple chain"))?;
        prev = Some(cur);
        cur = next;
        order.push(cur);
    }
    if order.len() != s.len() {
        return Err(Error::internal("winning path is not a simple chain"));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig1a() -> StoneSet {
        StoneSet::from_pairs(5, &[(3, 1), (3, 2), (3, 3), (3, 4), (2, 5)]).unwrap()
    }

    fn fig1c() -> StoneSet {
        StoneSet::from_pairs(
            5,
            &[
                (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (4, 3), (3, 3),
                (2, 3), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5), (5, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn shortest_path_figure() {
        let s = fig1a();
        assert!(is_winning(&s));
        assert!(is_minimal_winning_path(&s));
        assert_eq!(path_length(&s), 5);
        assert_eq!(endpoints(&s).unwrap(), (Coord::new(3, 1), Coord::new(2, 5)));
        assert!(!is_corner_to_corner(&s).unwrap());
    }

    #[test]
    fn non_minimal_connection() {
        let s = fig1c();
        assert!(is_winning(&s));
        assert!(!is_minimal_winning_path(&s));
        assert!(removable_stone(&s).is_some());
        assert!(matches!(endpoints(&s), Err(Error::Domain(_))));
    }

    #[test]
    fn non_minimal_connection_sheds_eight_stones() {
        // greedily dropping removable stones ends at a 7-stone winning path
        let mut s = fig1c();
        while let Some(c) = removable_stone(&s) {
            s.remove(c);
        }
        assert!(is_minimal_winning_path(&s));
        assert_eq!(fig1c().len() - s.len(), 8);
    }

    #[test]
    fn empty_and_column() {
        let b = BoardSize::new(5).unwrap();
        let e = StoneSet::empty(b);
        assert!(!is_winning(&e));
        assert_eq!(path_length(&e), 0);
        let col = StoneSet::new(b, (1..=5).map(|y| Coord::new(1, y))).unwrap();
        assert!(is_minimal_winning_path(&col));
        assert!(is_corner_to_corner(&col).unwrap());
        assert_eq!(path_order(&col).unwrap().len(), 5);
    }

    #[test]
    fn single_cell_board() {
        let s = StoneSet::from_pairs(1, &[(1, 1)]).unwrap();
        assert!(is_minimal_winning_path(&s));
        assert!(endpoints(&s).is_err());
    }

    #[test]
    fn rejects_bad_stones() {
        assert!(StoneSet::from_pairs(3, &[(0, 1)]).is_err());
        assert!(StoneSet::from_pairs(3, &[(1, 1), (1, 1)]).is_err());
    }

    #[test]
    fn path_order_walks_chain() {
        let order = path_order(&fig1a()).unwrap();
        assert_eq!(order.first(), Some(&Coord::new(3, 1)));
        assert_eq!(order.last(), Some(&Coord::new(2, 5)));
        assert!(order.windows(2).all(|w| w[0].is_adjacent(w[1])));
    }
}
