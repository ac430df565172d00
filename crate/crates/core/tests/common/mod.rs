#![allow(dead_code)]

use hexpath::board::{neighbors, BoardSize, Coord};
use hexpath::StoneSet;

/// Deterministic xorshift generator for reproducible random paths.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1)
    }

    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, k: usize) -> usize {
        (self.next() % k as u64) as usize
    }
}

/// A random chordless path from row 1 to row n with a single top stone,
/// built by a randomized walk with restarts. Returns the stones in order.
pub fn random_winning_path(n: u32, seed: u64) -> Vec<Coord> {
    let size = BoardSize::new(n).unwrap();
    let side = size.side();
    let mut rng = Rng::new(seed);
    if n == 1 {
        return vec![Coord::new(1, 1)];
    }
    loop {
        let mut path = vec![Coord::new(1 + rng.below(side as usize) as i32, 1)];
        loop {
            let head = *path.last().unwrap();
            if head.y == side {
                return path;
            }
            let options: Vec<Coord> = neighbors(head, size, false)
                .unwrap()
                .into_iter()
                .filter(|&c| c.y > 1)
                .filter(|c| !path.contains(c))
                .filter(|&c| path[..path.len() - 1].iter().all(|p| !p.is_adjacent(c)))
                .collect();
            if options.is_empty() {
                break;
            }
            path.push(options[rng.below(options.len())]);
        }
    }
}

pub fn stone_set(n: u32, cells: &[Coord]) -> StoneSet {
    StoneSet::new(BoardSize::new(n).unwrap(), cells.iter().copied()).unwrap()
}

pub fn size(n: u32) -> BoardSize {
    BoardSize::new(n).unwrap()
}

/// The 46-stone 10x10 path used as the worked waste example.
pub fn worked_example() -> StoneSet {
    let pairs = [
        (10, 1), (10, 2), (10, 3), (10, 4), (10, 5), (10, 6), (10, 7), (10, 8), (9, 9), (8, 9),
        (7, 9), (6, 9), (5, 9), (4, 9), (3, 9), (3, 8), (3, 7), (3, 6), (3, 5), (4, 4), (5, 4),
        (6, 4), (6, 5), (5, 6), (5, 7), (6, 7), (7, 7), (8, 6), (8, 5), (8, 4), (8, 3), (8, 2),
        (7, 2), (6, 2), (5, 2), (4, 2), (3, 2), (2, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
        (1, 8), (1, 9), (1, 10),
    ];
    StoneSet::from_pairs(10, &pairs).unwrap()
}
