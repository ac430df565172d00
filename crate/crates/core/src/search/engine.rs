//! Depth-first enumeration of induced top-to-bottom paths of one exact length.
//!
//! A node is a chordless path from a row-1 cell. `blocked` holds every cell
//! the path can never use again: the path itself, the neighbors of all
//! stones except the head, and the top row. Children are the head's
//! neighbors outside `blocked`; reaching the bottom row ends the path.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::geometry::{Bits, Geometry};
use super::PruneSet;

const FLUSH_EVERY: u64 = 1024;

/// Shared node budget; crossing it aborts every worker.
pub(crate) struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
    aborted: AtomicBool,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget { limit, used: AtomicU64::new(0), aborted: AtomicBool::new(false) }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn aborted(&self) -> bool {
        self.aborted.load(Ordering::Relaxed)
    }

    fn charge(&self, nodes: u64) -> bool {
        let total = self.used.fetch_add(nodes, Ordering::Relaxed) + nodes;
        if self.limit.is_some_and(|l| total > l) {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted()
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    len: u32,
    head: u32,
    occ: Bits,
    blocked: Bits,
}

#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub count: u64,
    pub paths: Vec<Bits>,
    pub nodes: u64,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.count += other.count;
        self.paths.extend(other.paths);
        self.nodes += other.nodes;
    }
}

pub(crate) struct Job<'a> {
    pub g: &'a Geometry,
    pub target: u32,
    pub prunes: PruneSet,
    pub collect: bool,
    pub find_one: bool,
    pub split_depth: u32,
    pub budget: &'a Budget,
    t_max: i64,
    floor: u32,
}

struct Walker<'a, 'b> {
    job: &'a Job<'b>,
    tally: Tally,
    pending: u64,
    stop: bool,
}

impl<'a> Job<'a> {
    pub fn new(
        g: &'a Geometry,
        target: u32,
        prunes: PruneSet,
        collect: bool,
        find_one: bool,
        split_depth: u32,
        budget: &'a Budget,
    ) -> Self {
        let n = g.n as i64;
        let t_max = 2 * n * n + 2 - 4 * target as i64;
        // Each acute corner region wastes at least ceil((n + 1) / 2) triangles
        // once the 15-cell corner pattern fits inside it (n >= 6). At n = 5 a
        // region can waste only 2.
        let floor = if prunes.corner_floor && g.n >= 6 { g.n.div_ceil(2) } else { 0 };
        Job { g, target, prunes, collect, find_one, split_depth, budget, t_max, floor }
    }

    fn viable(&self, node: &Node) -> bool {
        let g = self.g;
        if self.prunes.length {
            let remaining = g.n - g.row_of(node.head);
            if node.len + remaining > self.target {
                return false;
            }
        }
        if !(self.prunes.reachability || self.prunes.waste_budget) {
            return true;
        }
        let allowed = g.board & !node.blocked;
        let reach = g.flood(g.nbr[node.head as usize] & allowed, allowed);
        if self.prunes.reachability && reach & g.row_n == 0 {
            return false;
        }
        if self.prunes.waste_budget {
            let w = g.waste(g.board & !node.occ & !reach);
            let lb = w.other + w.a.max(self.floor) + w.b.max(self.floor);
            if lb as i64 > self.t_max {
                return false;
            }
        }
        true
    }

    fn roots(&self) -> Vec<Node> {
        let g = self.g;
        (0..g.n)
            .map(|x| {
                let b: Bits = 1 << x;
                Node { len: 1, head: x, occ: b, blocked: g.row1 | b }
            })
            .collect()
    }

    /// Runs the whole search for this target, splitting work at `split_depth`.
    pub fn run(&self, pool: &rayon::ThreadPool) -> Tally {
        let mut prefix = Walker { job: self, tally: Tally::default(), pending: 0, stop: false };
        let mut units = Vec::new();
        for root in self.roots() {
            if prefix.stop {
                break;
            }
            prefix.enter(root, &mut units);
        }
        prefix.flush();
        let mut total = prefix.tally;
        if total.count > 0 && self.find_one {
            return total;
        }
        let results: Vec<Tally> = pool.install(|| {
            units
                .par_iter()
                .map(|&u| {
                    let mut w = Walker { job: self, tally: Tally::default(), pending: 0, stop: false };
                    w.descend(u);
                    w.flush();
                    w.tally
                })
                .collect()
        });
        for r in results {
            if self.find_one && total.count > 0 {
                total.nodes += r.nodes;
                continue;
            }
            total.absorb(r);
        }
        if self.find_one && total.count > 1 {
            total.count = 1;
            total.paths.truncate(1);
        }
        total
    }
}

impl Walker<'_, '_> {
    fn flush(&mut self) {
        if self.pending > 0 {
            if !self.job.budget.charge(self.pending) {
                self.stop = true;
            }
            self.pending = 0;
        }
    }

    fn tick(&mut self) {
        self.tally.nodes += 1;
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush();
        }
        if self.job.budget.aborted() {
            self.stop = true;
        }
    }

    fn record(&mut self, occ: Bits) {
        self.tally.count += 1;
        if self.job.collect {
            self.tally.paths.push(occ);
        }
        if self.job.find_one {
            self.stop = true;
        }
    }

    /// Visits a root; nodes at the split depth become work units.
    fn enter(&mut self, node: Node, units: &mut Vec<Node>) {
        if self.job.viable(&node) {
            self.prefix(node, units);
        }
    }

    fn prefix(&mut self, node: Node, units: &mut Vec<Node>) {
        if self.stop {
            return;
        }
        if node.len >= self.job.split_depth {
            units.push(node);
            return;
        }
        self.tick();
        self.children(node, |w, child| w.prefix(child, units));
    }

    fn descend(&mut self, node: Node) {
        if self.stop {
            return;
        }
        self.tick();
        self.children(node, |w, child| w.descend(child));
    }

    fn children(&mut self, node: Node, mut visit: impl FnMut(&mut Self, Node)) {
        let g = self.job.g;
        let mut cands = g.nbr[node.head as usize] & !node.blocked;
        let blocked = node.blocked | g.nbr[node.head as usize];
        while cands != 0 && !self.stop {
            let c = cands.trailing_zeros();
            cands &= cands - 1;
            let bit: Bits = 1 << c;
            let child = Node { len: node.len + 1, head: c, occ: node.occ | bit, blocked: blocked | bit };
            if g.row_n & bit != 0 {
                if child.len == self.job.target {
                    self.record(child.occ);
                }
                continue;
            }
            if self.job.prunes.length && child.len >= self.job.target {
                continue;
            }
            if self.job.viable(&child) {
                visit(self, child);
            }
        }
    }
}
