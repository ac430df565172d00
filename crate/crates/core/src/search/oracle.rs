//! Reference census for tiny boards, sharing no code with the engine beyond
//! the board and connection predicates.

use std::collections::{BTreeMap, BTreeSet};

use crate::board::{neighbors, BoardSize, Coord};
use crate::connection::{is_minimal_winning_path, StoneSet};
use crate::error::{Error, Result};

/// Largest board the oracle accepts.
pub const BRUTE_MAX_N: u32 = 5;

/// Number of winning paths of each length.
///
/// Up to 4 x 4 every subset of cells is tested; at 5 x 5 every chordless
/// path from the top row, stopped at its first bottom-row cell, is tested.
pub fn brute_oracle(n: BoardSize) -> Result<BTreeMap<usize, u64>> {
    let paths = match n.get() {
        1..=4 => all_subsets(n),
        5 => chordless_paths(n)?,
        _ => {
            return Err(Error::Resource {
                message: format!("brute-force oracle supports n <= {BRUTE_MAX_N}, got {n}"),
                nodes_expanded: 0,
            })
        }
    };
    let mut tally = BTreeMap::new();
    for p in paths {
        *tally.entry(p.len()).or_insert(0) += 1;
    }
    Ok(tally)
}

fn all_subsets(n: BoardSize) -> Vec<StoneSet> {
    let cells: Vec<Coord> = n.cells().collect();
    (0u32..1 << cells.len())
        .map(|mask| {
            let chosen = cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c);
            StoneSet::new(n, chosen).expect("board cells")
        })
        .filter(is_minimal_winning_path)
        .collect()
}

fn chordless_paths(n: BoardSize) -> Result<Vec<StoneSet>> {
    let mut found = BTreeSet::new();
    for x in 1..=n.side() {
        let mut path = vec![Coord::new(x, 1)];
        extend(n, &mut path, &mut found)?;
    }
    Ok(found.into_iter().filter(is_minimal_winning_path).collect())
}

fn extend(n: BoardSize, path: &mut Vec<Coord>, found: &mut BTreeSet<StoneSet>) -> Result<()> {
    let head = *path.last().expect("non-empty path");
    if head.y == n.side() {
        found.insert(StoneSet::new(n, path.iter().copied())?);
        return Ok(());
    }
    for c in neighbors(head, n, false)? {
        if path.contains(&c) {
            continue;
        }
        let chord = path[..path.len() - 1].iter().any(|p| p.is_adjacent(c));
        if chord {
            continue;
        }
        path.push(c);
        extend(n, path, found)?;
        path.pop();
    }
    Ok(())
}
