//! Closed-form upper bounds on the length of a winning path, the exact
//! optimal-length function, and the census of small boards.
//!
//! All arithmetic is exact. The generic functions take any primitive-like
//! integer `T`; the unsuffixed functions fix `T = i64`, which holds `n²` for
//! every supported board size.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::board::BoardSize;
use crate::error::{Error, Result};

/// Integer types usable for exact bound arithmetic.
pub trait BoundInt: Integer + Clone + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display {}

impl<T> BoundInt for T where T: Integer + Clone + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display {}

/// Which closed form produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundRule {
    Loose,
    Lemma2,
    Lemma3,
    ThmA,
    ThmB,
    ThmC,
    ThmD,
    ThmE,
}

impl BoundRule {
    /// Short tag used in command-line output.
    pub fn tag(self) -> &'static str {
        match self {
            BoundRule::Loose => "loose",
            BoundRule::Lemma2 => "quarter",
            BoundRule::Lemma3 => "quarter 3 mod 8",
            BoundRule::ThmA => "Thm 3a",
            BoundRule::ThmB => "Thm 3b",
            BoundRule::ThmC => "Thm 3c",
            BoundRule::ThmD => "Thm 3d",
            BoundRule::ThmE => "Thm 3e",
        }
    }
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// An integer bound together with the exact value it was truncated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResultOf<T: BoundInt> {
    pub n: BoardSize,
    pub bound: T,
    pub rule: BoundRule,
    pub exact_rational: Ratio<T>,
}

impl<T: BoundInt> fmt::Display for BoundResultOf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.bound, self.rule)
    }
}

fn lift<T: BoundInt>(v: i64) -> Result<T> {
    T::from_i64(v).ok_or_else(|| Error::input(format!("{v} does not fit the bound integer type")))
}

/// `n² / 2 - n / 4 + c` with `c = c_num / 4`.
fn quarter_form<T: BoundInt>(n: BoardSize, c_num: i64) -> Result<Ratio<T>> {
    let m = n.get() as i64;
    let num = 2 * m * m - m + c_num;
    Ok(Ratio::new(lift(num)?, lift(4)?))
}

fn require_five(n: BoardSize, what: &str) -> Result<()> {
    if n.get() < 5 {
        return Err(Error::domain(format!("{what} needs n >= 5 (N/A for n = {n})")));
    }
    Ok(())
}

/// `(n², ⌊(n²+1)/2⌋)`: all cells, and at most one stone per pair of cells.
pub fn loose_bounds_in<T: BoundInt>(n: BoardSize) -> Result<(T, T)> {
    let m = n.get() as i64;
    Ok((lift(m * m)?, lift((m * m + 1) / 2)?))
}

/// `n²/2 - n/4 + 1/4`, valid for every `n >= 5`.
pub fn lemma2_bound_in<T: BoundInt>(n: BoardSize) -> Result<Ratio<T>> {
    require_five(n, "the general quarter-integer bound")?;
    quarter_form(n, 1)
}

/// `n²/2 - n/4 - 3/4`, valid for `n >= 5` with `n ≡ 3 (mod 8)`.
pub fn lemma3_bound_in<T: BoundInt>(n: BoardSize) -> Result<Ratio<T>> {
    require_five(n, "the n ≡ 3 (mod 8) bound")?;
    if n.get() % 8 != 3 {
        return Err(Error::domain(format!("n = {n} is not congruent to 3 mod 8")));
    }
    quarter_form(n, -3)
}

/// The residue-class bound for `n >= 5`.
pub fn theorem_bound_in<T: BoundInt>(n: BoardSize) -> Result<BoundResultOf<T>> {
    require_five(n, "the residue-class bound")?;
    let (rule, exact) = match (n.get() % 4, n.get() % 8) {
        (0, _) => (BoundRule::ThmA, lemma2_bound_in(n)?),
        (1, _) => (BoundRule::ThmB, lemma2_bound_in(n)?),
        (2, _) => (BoundRule::ThmC, lemma2_bound_in(n)?),
        (_, 3) => (BoundRule::ThmD, lemma3_bound_in(n)?),
        _ => (BoundRule::ThmE, lemma2_bound_in(n)?),
    };
    Ok(BoundResultOf { n, bound: exact.floor().to_integer(), rule, exact_rational: exact })
}

/// Exact residue-class value for each case; always an integer.
pub fn residue_case_value_in<T: BoundInt>(n: BoardSize) -> Result<Ratio<T>> {
    require_five(n, "the residue-class bound")?;
    let c_num = match (n.get() % 4, n.get() % 8) {
        (0, _) => 0,
        (1, _) => -1,
        (2, _) => -2,
        (_, 3) => -3,
        _ => 1,
    };
    quarter_form(n, c_num)
}

/// `k + 8n + 30`: length after one frame extension from `n` to `n + 8`.
pub fn recurrence_step_in<T: BoundInt>(n: T, k: T) -> T {
    k + n * T::from_u8(8).expect("8 fits") + T::from_u8(30).expect("30 fits")
}

pub fn loose_bounds(n: BoardSize) -> (i64, i64) {
    loose_bounds_in(n).expect("i64 holds n² for supported n")
}

pub fn lemma2_bound(n: BoardSize) -> Result<Ratio<i64>> {
    lemma2_bound_in(n)
}

pub fn lemma3_bound(n: BoardSize) -> Result<Ratio<i64>> {
    lemma3_bound_in(n)
}

pub fn theorem_bound(n: BoardSize) -> Result<BoundResultOf<i64>> {
    theorem_bound_in(n)
}

pub fn recurrence_step(n: i64, k: i64) -> i64 {
    recurrence_step_in(n, k)
}

/// Optimal lengths for n = 1..=20, found by exhaustive search.
pub const CENSUS_LENGTHS: [i64; 20] =
    [1, 2, 5, 8, 11, 16, 23, 30, 37, 47, 57, 69, 81, 94, 109, 124, 140, 157, 175, 195];

/// Number of optimal paths (distinct stone sets) for n = 1..=20.
pub const CENSUS_COUNTS: [u64; 20] = [
    1, 3, 1, 4, 23, 51, 20, 115, 5568, 12, 3521, 40, 1058, 2104, 668, 7540, 1298, 83648, 16631833,
    70630,
];

/// Largest board size with a stored census entry.
pub const CENSUS_MAX: u32 = 20;

/// Length of the longest winning path on an n x n board.
///
/// Tabulated up to 20; beyond that the residue-class bound is attained.
pub fn optimal_length(n: BoardSize) -> i64 {
    match n.get() {
        m @ 1..=CENSUS_MAX => CENSUS_LENGTHS[m as usize - 1],
        _ => theorem_bound(n).expect("n > 20").bound,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub n: u32,
    pub length: i64,
    pub bound: Option<i64>,
    pub count: Option<u64>,
}

impl CensusRow {
    pub fn for_size(n: BoardSize) -> CensusRow {
        let m = n.get();
        CensusRow {
            n: m,
            length: optimal_length(n),
            bound: theorem_bound(n).ok().map(|b| b.bound),
            count: (m <= CENSUS_MAX).then(|| CENSUS_COUNTS[m as usize - 1]),
        }
    }

    fn cells(&self) -> [String; 4] {
        let opt = |v: Option<String>, none: &str| v.unwrap_or_else(|| none.to_string());
        [
            self.n.to_string(),
            self.length.to_string(),
            opt(self.bound.map(|b| b.to_string()), "N/A"),
            opt(self.count.map(|c| c.to_string()), "-"),
        ]
    }
}

/// Census rows for `1..=max`.
pub fn census(max: BoardSize) -> Vec<CensusRow> {
    (1..=max.get()).map(|m| CensusRow::for_size(BoardSize::new(m).expect("m >= 1"))).collect()
}

const HEADERS: [&str; 4] = ["n", "length", "bound", "count"];

/// Right-aligned columns with a header line.
pub fn census_text(rows: &[CensusRow]) -> String {
    let cells: Vec<[String; 4]> = rows.iter().map(CensusRow::cells).collect();
    let mut widths = HEADERS.map(str::len);
    for r in &cells {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |r: [&str; 4]| {
        let parts: Vec<String> = r.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
        parts.join("  ") + "\n"
    };
    let mut out = line(HEADERS);
    for r in &cells {
        out.push_str(&line([&r[0], &r[1], &r[2], &r[3]]));
    }
    out
}

/// Comma-separated rows with a header; missing values are empty fields.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = HEADERS.join(",") + "\n";
    for r in rows {
        let bound = r.bound.map(|b| b.to_string()).unwrap_or_default();
        let count = r.count.map(|c| c.to_string()).unwrap_or_default();
        out.push_str(&format!("{},{},{},{}\n", r.n, r.length, bound, count));
    }
    out
}
