//! Exhaustive search for the longest winning paths on small boards.
//!
//! Winning paths are exactly the chordless paths with one stone in the top
//! row and one in the bottom row, so the engine enumerates those directly.
//! For a fixed target length `k` the area identity fixes the number of
//! wasted triangles at `2n² + 2 - 4k`; any partial path whose cells that can
//! no longer be filled already waste more is cut off.
//!
//! Results do not depend on the worker budget: work is split into the same
//! units regardless of thread count and merged in unit order, and found paths
//! are sorted canonically.

mod engine;
mod geometry;
mod oracle;

use std::collections::BTreeSet;

use crate::board::{BoardSize, Coord};
use crate::bounds::{loose_bounds, theorem_bound};
use crate::connection::{is_corner_to_corner, StoneSet};
use crate::error::{Error, Result};

pub use geometry::MAX_SEARCH_N;
pub use oracle::{brute_oracle, BRUTE_MAX_N};

use engine::{Budget, Job, Tally};
use geometry::{Bits, Geometry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    FindOne,
    CountAll,
    EnumerateAll,
}

/// Individually switchable pruning rules. All are sound; switching any off
/// changes only the amount of work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruneSet {
    /// Lower-bound the final waste from cells that can no longer be used.
    pub waste_budget: bool,
    /// Drop paths whose head can no longer reach the bottom row.
    pub reachability: bool,
    /// Raise each acute corner region's waste to its guaranteed minimum.
    pub corner_floor: bool,
    /// Drop paths that cannot reach the bottom row within the target length.
    pub length: bool,
}

impl PruneSet {
    pub const ALL: PruneSet =
        PruneSet { waste_budget: true, reachability: true, corner_floor: true, length: true };
    pub const NONE: PruneSet =
        PruneSet { waste_budget: false, reachability: false, corner_floor: false, length: false };
}

impl Default for PruneSet {
    fn default() -> Self {
        PruneSet::ALL
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: BoardSize,
    /// Longest length to try; defaults to the best known upper bound.
    pub target_length: Option<u32>,
    pub mode: SearchMode,
    pub worker_budget: usize,
    pub node_limit: Option<u64>,
    pub prunes: PruneSet,
    /// Path length at which the search tree is cut into parallel work units.
    pub split_depth: u32,
}

impl SearchConfig {
    pub fn new(n: BoardSize) -> Self {
        SearchConfig {
            n,
            target_length: None,
            mode: SearchMode::CountAll,
            worker_budget: 1,
            node_limit: None,
            prunes: PruneSet::ALL,
            split_depth: 3,
        }
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn target(mut self, target: u32) -> Self {
        self.target_length = Some(target);
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.worker_budget = workers;
        self
    }

    pub fn node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn prunes(mut self, prunes: PruneSet) -> Self {
        self.prunes = prunes;
        self
    }

    pub fn split_depth(mut self, depth: u32) -> Self {
        self.split_depth = depth;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.worker_budget == 0 {
            return Err(Error::input("worker budget must be at least 1"));
        }
        if self.n.get() > MAX_SEARCH_N {
            return Err(Error::Resource {
                message: format!("search supports n <= {MAX_SEARCH_N}, got {}", self.n),
                nodes_expanded: 0,
            });
        }
        if let Some(t) = self.target_length {
            if t == 0 {
                return Err(Error::input("target length must be at least 1"));
            }
            if t as i64 > upper_bound(self.n) {
                return Err(Error::input(format!(
                    "target length {t} exceeds the upper bound {} for n = {}",
                    upper_bound(self.n),
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// Best proven upper bound on the length of a winning path.
pub fn upper_bound(n: BoardSize) -> i64 {
    match theorem_bound(n) {
        Ok(b) => b.bound,
        Err(_) => loose_bounds(n).1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub length: u32,
    /// Distinct optimal stone sets (1 in `FindOne` mode when found).
    pub count: u64,
    /// Present in `EnumerateAll` and `FindOne` modes; canonical order.
    pub paths: Option<Vec<StoneSet>>,
    pub nodes_expanded: u64,
    /// True when every length above `length` up to the proven upper bound was
    /// excluded by exhaustive search.
    pub proven_optimal: bool,
}

/// Paths of one exact length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthCensus {
    pub length: u32,
    pub count: u64,
    pub paths: Option<Vec<StoneSet>>,
    pub nodes_expanded: u64,
}

fn to_stone_set(g: &Geometry, n: BoardSize, occ: Bits) -> StoneSet {
    let mut cells = Vec::with_capacity(occ.count_ones() as usize);
    let mut rest = occ;
    while rest != 0 {
        cells.push(g.coord(rest.trailing_zeros()));
        rest &= rest - 1;
    }
    StoneSet::new(n, cells).expect("bitboard cells are on the board")
}

fn single_cell(cfg: &SearchConfig, length: u32) -> LengthCensus {
    let hit = length == 1;
    let path = StoneSet::new(cfg.n, [Coord::new(1, 1)]).expect("(1,1) is on the board");
    LengthCensus {
        length,
        count: hit as u64,
        paths: (cfg.mode != SearchMode::CountAll).then(|| if hit { vec![path] } else { vec![] }),
        nodes_expanded: 1,
    }
}

fn run_length(cfg: &SearchConfig, length: u32, budget: &Budget) -> Result<LengthCensus> {
    if cfg.n.get() == 1 {
        return Ok(single_cell(cfg, length));
    }
    let g = Geometry::new(cfg.n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.worker_budget)
        .build()
        .map_err(|e| Error::internal(format!("cannot start worker pool: {e}")))?;
    let collect = cfg.mode != SearchMode::CountAll;
    let find_one = cfg.mode == SearchMode::FindOne;
    let job = Job::new(&g, length, cfg.prunes, collect, find_one, cfg.split_depth.max(1), budget);
    let Tally { count, paths, nodes } = job.run(&pool);
    if budget.aborted() {
        return Err(Error::Resource {
            message: format!(
                "node limit {} exceeded while searching length {length}; partial results are not authoritative",
                cfg.node_limit.unwrap_or(0)
            ),
            nodes_expanded: budget.used(),
        });
    }
    let paths = collect.then(|| {
        let set: BTreeSet<StoneSet> = paths.into_iter().map(|p| to_stone_set(&g, cfg.n, p)).collect();
        set.into_iter().collect::<Vec<_>>()
    });
    if let Some(p) = &paths {
        if !find_one && p.len() as u64 != count {
            return Err(Error::internal("search produced duplicate paths"));
        }
    }
    Ok(LengthCensus { length, count, paths, nodes_expanded: nodes })
}

/// Finds (and counts or lists) the paths of exactly `length` stones.
pub fn search_length(cfg: &SearchConfig, length: u32) -> Result<LengthCensus> {
    cfg.validate()?;
    if length == 0 {
        return Err(Error::input("length must be at least 1"));
    }
    run_length(cfg, length, &Budget::new(cfg.node_limit))
}

/// Longest winning path length by descending search from the upper bound.
pub fn find_longest(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let bound = upper_bound(cfg.n) as u32;
    let start = cfg.target_length.unwrap_or(bound);
    let budget = Budget::new(cfg.node_limit);
    let mut nodes = 0;
    for length in (1..=start).rev() {
        let r = run_length(cfg, length, &budget)?;
        nodes += r.nodes_expanded;
        if r.count > 0 {
            return Ok(SearchOutcome {
                length,
                count: r.count,
                paths: r.paths,
                nodes_expanded: nodes,
                proven_optimal: start == bound,
            });
        }
    }
    Err(Error::internal(format!("no winning path found on a {0}x{0} board", cfg.n)))
}

/// Number of winning paths with exactly `length` stones.
pub fn count_of_length(n: BoardSize, length: u32) -> Result<u64> {
    let m = n.get() as u64;
    if length == 0 || length as u64 > m * m {
        return Err(Error::input(format!("length {length} is outside 1..={}", m * m)));
    }
    let cfg = SearchConfig::new(n).workers(default_workers());
    Ok(search_length(&cfg, length)?.count)
}

/// `(total, corner_to_corner)` over all winning paths of `length` stones.
pub fn corner_endpoint_census(n: BoardSize, length: u32) -> Result<(u64, u64)> {
    let cfg = SearchConfig::new(n).mode(SearchMode::EnumerateAll).workers(default_workers());
    let r = search_length(&cfg, length)?;
    let paths = r.paths.expect("enumeration lists paths");
    let corner = if n.get() == 1 {
        paths.len() as u64
    } else {
        let mut c = 0;
        for p in &paths {
            c += is_corner_to_corner(p)? as u64;
        }
        c
    };
    Ok((r.count, corner))
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
}
