//! The three frame templates that grow a winning path from n x n to
//! (n+8) x (n+8).
//!
//! A template has three parts:
//! - a core window on the seed board, translated by (+4, +4);
//! - the seed stones required outside the window;
//! - the frame stones added on the larger board.
//!
//! Frame rows are lists of runs. An end `L(k)` is column `k` and `H(k)` is
//! column `N - k`, with `N = n + 8`. The listed top rows start at row 1 and
//! the listed bottom rows end at row N. Every row in between repeats the
//! middle row. When a small board makes the two lists overlap, the
//! overlapping rows are united.

use std::collections::BTreeSet;
use std::fmt;

use crate::board::Coord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TemplateType {
    I,
    II,
    III,
}

impl TemplateType {
    pub const ALL: [TemplateType; 3] = [TemplateType::I, TemplateType::II, TemplateType::III];
}

impl fmt::Display for TemplateType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TemplateType::I => "I",
            TemplateType::II => "II",
            TemplateType::III => "III",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    L(i32),
    H(i32),
}

use End::{H, L};

impl End {
    fn at(self, side: i32) -> i32 {
        match self {
            L(k) => k,
            H(k) => side - k,
        }
    }
}

type Run = (End, End);

/// Frame rows; see the module docs.
struct FrameRows {
    top: &'static [&'static [Run]],
    middle: &'static [Run],
    bottom: &'static [&'static [Run]],
}

/// Window clip: on row `y = row.at(n)` keep columns `>= lo.at(n)` (top
/// staircase) or `<= hi.at(n)` (bottom staircase).
struct Clip {
    row: End,
    lo: Option<End>,
    hi: Option<End>,
}

pub struct FrameTemplate {
    pub type_id: TemplateType,
    clips: &'static [Clip],
    required: &'static [(End, End)],
    frame: FrameRows,
}

const MIDDLE: &[Run] = &[(L(1), L(1)), (L(3), L(3)), (H(2), H(2)), (H(0), H(0))];

/// Corner-to-left-edge interface: three stones down the left edge at the top,
/// three up the right edge at the bottom.
static TYPE_I: FrameTemplate = FrameTemplate {
    type_id: TemplateType::I,
    clips: &[
        Clip { row: L(2), lo: Some(L(4)), hi: None },
        Clip { row: L(3), lo: Some(L(2)), hi: None },
        Clip { row: H(1), lo: None, hi: Some(H(3)) },
        Clip { row: H(2), lo: None, hi: Some(H(1)) },
    ],
    required: &[(L(1), L(1)), (L(1), L(2)), (L(1), L(3)), (H(0), H(2)), (H(0), H(1)), (H(0), H(0))],
    frame: FrameRows {
        top: &[
            &[(L(1), L(1))],
            &[(L(1), L(1)), (L(4), L(6)), (L(8), H(0))],
            &[(L(1), L(1)), (L(3), L(3)), (L(6), L(7)), (H(0), H(0))],
            &[(L(1), L(1)), (L(3), L(4)), (L(8), H(2)), (H(0), H(0))],
            &[(L(1), L(1)), (L(4), L(4)), (L(6), L(7)), (H(2), H(2)), (H(0), H(0))],
            &[(L(1), L(1)), (L(3), L(3)), (L(5), L(5)), (H(2), H(2)), (H(0), H(0))],
            &[(L(1), L(1)), (L(3), L(3)), (L(5), L(5)), (H(2), H(2)), (H(0), H(0))],
        ],
        middle: MIDDLE,
        bottom: &[
            &[(H(0), H(0))],
            &[(L(1), H(7)), (H(5), H(3)), (H(0), H(0))],
            &[(L(1), L(1)), (H(6), H(5)), (H(2), H(2)), (H(0), H(0))],
            &[(L(1), L(1)), (L(3), H(7)), (H(3), H(2)), (H(0), H(0))],
            &[(L(1), L(1)), (L(3), L(3)), (H(6), H(5)), (H(3), H(3)), (H(0), H(0))],
            &[(L(1), L(1)), (L(3), L(3)), (H(4), H(4)), (H(2), H(2)), (H(0), H(0))],
            &[(L(1), L(1)), (L(3), L(3)), (H(4), H(4)), (H(2), H(2)), (H(0), H(0))],
        ],
    },
};

const BOTTOM_II_III: &[&[Run]] = &[
    &[(L(1), L(1))],
    &[(L(1), L(1)), (L(3), H(5)), (H(3), H(1))],
    &[(L(1), L(1)), (L(3), L(3)), (H(4), H(3)), (H(0), H(0))],
    &[(L(1), L(1)), (L(3), L(3)), (L(5), H(5)), (H(1), H(0))],
    &[(L(1), L(1)), (L(3), L(3)), (L(5), L(5)), (H(4), H(3)), (H(1), H(1))],
];

/// Obtuse-corner-to-obtuse-corner interface.
static TYPE_II: FrameTemplate = FrameTemplate {
    type_id: TemplateType::II,
    clips: &[
        Clip { row: L(2), lo: Some(L(2)), hi: None },
        Clip { row: H(1), lo: None, hi: Some(H(1)) },
    ],
    required: &[(H(0), L(1)), (L(1), H(0))],
    frame: FrameRows {
        top: &[
            &[(H(0), H(0))],
            &[(L(2), L(4)), (L(6), H(2)), (H(0), H(0))],
            &[(L(1), L(1)), (L(4), L(5)), (H(2), H(2)), (H(0), H(0))],
            &[(L(1), L(2)), (L(6), H(4)), (H(2), H(2)), (H(0), H(0))],
            &[(L(2), L(2)), (L(4), L(5)), (H(4), H(4)), (H(2), H(2)), (H(0), H(0))],
        ],
        middle: MIDDLE,
        bottom: BOTTOM_II_III,
    },
};

/// Top-hook interface: the path leaves the top-left corner along row 2.
static TYPE_III: FrameTemplate = FrameTemplate {
    type_id: TemplateType::III,
    clips: &[
        Clip { row: L(2), lo: Some(L(4)), hi: None },
        Clip { row: L(3), lo: Some(L(3)), hi: None },
        Clip { row: L(4), lo: Some(L(2)), hi: None },
        Clip { row: H(1), lo: None, hi: Some(H(1)) },
    ],
    required: &[(L(1), L(1)), (L(1), L(2)), (L(2), L(2)), (L(3), L(2)), (L(1), H(0))],
    frame: FrameRows {
        top: &[
            &[(L(1), L(1))],
            &[(L(1), H(0))],
            &[(H(0), H(0))],
            &[(L(2), L(4)), (L(6), H(2)), (H(0), H(0))],
            &[(L(1), L(1)), (L(4), L(5)), (H(2), H(2)), (H(0), H(0))],
            &[(L(1), L(2)), (L(6), L(7)), (H(2), H(2)), (H(0), H(0))],
            &[(L(2), L(2)), (L(4), L(5)), (H(2), H(2)), (H(0), H(0))],
        ],
        middle: MIDDLE,
        bottom: BOTTOM_II_III,
    },
};

/// Templates in classification order.
pub fn templates() -> [&'static FrameTemplate; 3] {
    [&TYPE_I, &TYPE_II, &TYPE_III]
}

pub fn template(t: TemplateType) -> &'static FrameTemplate {
    match t {
        TemplateType::I => &TYPE_I,
        TemplateType::II => &TYPE_II,
        TemplateType::III => &TYPE_III,
    }
}

/// Number of rows the board grows by on each side pair.
pub const GROWTH: i32 = 8;
/// Translation of the core window.
pub const SHIFT: i32 = 4;

impl FrameTemplate {
    /// Seed cells kept (and translated) by the construction, on an n x n seed.
    pub fn core_window(&self, n: i32) -> BTreeSet<Coord> {
        let mut out = BTreeSet::new();
        for y in 2..n {
            let mut lo = 1;
            let mut hi = n;
            for c in self.clips.iter().filter(|c| c.row.at(n) == y) {
                if let Some(l) = c.lo {
                    lo = lo.max(l.at(n));
                }
                if let Some(h) = c.hi {
                    hi = hi.min(h.at(n));
                }
            }
            out.extend((lo..=hi).map(|x| Coord::new(x, y)));
        }
        out
    }

    /// Seed stones that must lie outside the core window, exactly.
    pub fn required_frame_stones(&self, n: i32) -> BTreeSet<Coord> {
        self.required.iter().map(|&(x, y)| Coord::new(x.at(n), y.at(n))).collect()
    }

    /// Stones added on the (n+8) x (n+8) board.
    pub fn added_stones(&self, n: i32) -> BTreeSet<Coord> {
        let side = n + GROWTH;
        let mut out = BTreeSet::new();
        let mut put = |y: i32, runs: &[Run]| {
            for &(a, b) in runs {
                out.extend((a.at(side)..=b.at(side)).map(|x| Coord::new(x, y)));
            }
        };
        let rows = &self.frame;
        for (i, runs) in rows.top.iter().enumerate() {
            put(i as i32 + 1, runs);
        }
        for (k, runs) in rows.bottom.iter().enumerate() {
            put(side - k as i32, runs);
        }
        for y in rows.top.len() as i32 + 1..=side - rows.bottom.len() as i32 {
            put(y, rows.middle);
        }
        out
    }
}
