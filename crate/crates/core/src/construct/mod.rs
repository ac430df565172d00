//! Optimal winning paths for every board size.
//!
//! Boards 1..=20 come from stored witnesses. Larger boards are reached by
//! wrapping a seed path in a frame: the seed's core moves by (+4, +4) onto a
//! board eight cells wider, and the frame adds stones so the length grows by
//! `8n + 30`. Starting from the witness for 13..=20 in the same residue class
//! mod 8, repeated framing attains the residue-class bound for every n > 20.
//! Every constructed path is re-verified before it is returned.

mod templates;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::board::{BoardSize, Coord};
use crate::bounds::{optimal_length, recurrence_step};
use crate::connection::{is_minimal_winning_path, StoneSet};
use crate::error::{Error, Result};
use crate::pathfile;
use crate::unitgrid::eq1_check;

pub use templates::{template, templates, FrameTemplate, TemplateType, GROWTH, SHIFT};

/// Smallest seed board the templates are defined for.
pub const MIN_SEED_N: u32 = 5;
/// Largest stored witness.
pub const WITNESS_MAX_N: u32 = 20;
/// Smallest board built by `generate`.
pub const GENERATE_MIN_N: u32 = 13;

const WITNESS_FILES: [&str; 20] = [
    include_str!("../../data/witness/n01.path"),
    include_str!("../../data/witness/n02.path"),
    include_str!("../../data/witness/n03.path"),
    include_str!("../../data/witness/n04.path"),
    include_str!("../../data/witness/n05.path"),
    include_str!("../../data/witness/n06.path"),
    include_str!("../../data/witness/n07.path"),
    include_str!("../../data/witness/n08.path"),
    include_str!("../../data/witness/n09.path"),
    include_str!("../../data/witness/n10.path"),
    include_str!("../../data/witness/n11.path"),
    include_str!("../../data/witness/n12.path"),
    include_str!("../../data/witness/n13.path"),
    include_str!("../../data/witness/n14.path"),
    include_str!("../../data/witness/n15.path"),
    include_str!("../../data/witness/n16.path"),
    include_str!("../../data/witness/n17.path"),
    include_str!("../../data/witness/n18.path"),
    include_str!("../../data/witness/n19.path"),
    include_str!("../../data/witness/n20.path"),
];

/// Raw text of the stored witness file for `n`.
pub fn witness_file(n: u32) -> Result<&'static str> {
    match n {
        1..=WITNESS_MAX_N => Ok(WITNESS_FILES[n as usize - 1]),
        _ => Err(Error::domain(format!("stored witnesses cover n = 1..={WITNESS_MAX_N}, got {n}"))),
    }
}

fn witness_db() -> &'static Vec<StoneSet> {
    static DB: OnceLock<Vec<StoneSet>> = OnceLock::new();
    DB.get_or_init(|| {
        WITNESS_FILES
            .iter()
            .map(|text| pathfile::parse(text).expect("stored witness parses"))
            .collect()
    })
}

/// The stored optimal winning path for an n x n board.
pub fn witness(n: BoardSize) -> Result<StoneSet> {
    witness_file(n.get())?;
    Ok(witness_db()[n.get() as usize - 1].clone())
}

/// The template whose required stones match `s` exactly outside its core
/// window. Seeds below 5 x 5 are never classified.
pub fn classify(s: &StoneSet) -> Option<TemplateType> {
    let n = s.size();
    if n.get() < MIN_SEED_N || !is_minimal_winning_path(s) {
        return None;
    }
    let m = n.side();
    let matches: Vec<TemplateType> = templates()
        .into_iter()
        .filter(|t| {
            let window = t.core_window(m);
            let outside: BTreeSet<Coord> = s.stones().difference(&window).copied().collect();
            outside == t.required_frame_stones(m)
        })
        .map(|t| t.type_id)
        .collect();
    match matches.as_slice() {
        [t] => Some(*t),
        _ => None,
    }
}

/// Frames `s` onto a board eight cells wider.
pub fn extend(s: &StoneSet) -> Result<StoneSet> {
    let t = classify(s).ok_or_else(|| Error::domain(format!("seed matches no frame template: {s}")))?;
    extend_with(s, t)
}

fn extend_with(s: &StoneSet, t: TemplateType) -> Result<StoneSet> {
    let m = s.size().side();
    let big = BoardSize::new(s.size().get() + GROWTH as u32)?;
    let tpl = template(t);
    let window = tpl.core_window(m);
    let core = s.stones().intersection(&window).map(|c| Coord::new(c.x + SHIFT, c.y + SHIFT));
    let frame = tpl.added_stones(m);
    let mut stones: BTreeSet<Coord> = core.collect();
    let core_len = stones.len();
    stones.extend(frame.iter().copied());
    if stones.len() != core_len + frame.len() {
        return Err(Error::internal(format!("type {t} frame overlaps the translated core at n = {m}")));
    }
    let out = StoneSet::new(big, stones)?;
    let expected = recurrence_step(m as i64, s.len() as i64);
    if out.len() as i64 != expected {
        return Err(Error::internal(format!(
            "type {t} frame at n = {m} gave {} stones, expected {expected}",
            out.len()
        )));
    }
    if !is_minimal_winning_path(&out) {
        return Err(Error::internal(format!("type {t} frame at n = {m} is not a winning path")));
    }
    if !eq1_check(&out)?.holds {
        return Err(Error::internal(format!("type {t} frame at n = {m} breaks the area identity")));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationStep {
    pub type_id: TemplateType,
    /// Seed board size.
    pub n: u32,
    /// Length after the step.
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationTrace {
    pub base_n: u32,
    pub steps: Vec<GenerationStep>,
    pub result: StoneSet,
}

impl fmt::Display for GenerationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = optimal_length(BoardSize::new(self.base_n).map_err(|_| fmt::Error)?);
        writeln!(f, "base n={} length={}", self.base_n, base)?;
        for s in &self.steps {
            writeln!(f, "extend type={} n={} -> n={} length={}", s.type_id, s.n, s.n + GROWTH as u32, s.length)?;
        }
        Ok(())
    }
}

/// Base witness size for `generate(n)`: the one in 13..=20 congruent to n mod 8.
pub fn generation_base(n: u32) -> Result<u32> {
    if n < GENERATE_MIN_N {
        return Err(Error::domain(format!("generation starts at n = {GENERATE_MIN_N}, got {n}")));
    }
    Ok(GENERATE_MIN_N + (n - GENERATE_MIN_N) % GROWTH as u32)
}

/// An optimal winning path for n >= 13 with the steps that built it.
pub fn generate(n: BoardSize) -> Result<(StoneSet, GenerationTrace)> {
    let base_n = generation_base(n.get())?;
    let mut s = witness(BoardSize::new(base_n)?)?;
    let mut steps = Vec::new();
    while s.size().get() < n.get() {
        let seed_n = s.size().get();
        let t = classify(&s)
            .ok_or_else(|| Error::internal(format!("intermediate path at n = {seed_n} matches no template")))?;
        s = extend_with(&s, t)?;
        steps.push(GenerationStep { type_id: t, n: seed_n, length: s.len() });
    }
    if s.len() as i64 != optimal_length(n) {
        return Err(Error::internal(format!(
            "generated {} stones at n = {n}, expected {}",
            s.len(),
            optimal_length(n)
        )));
    }
    let trace = GenerationTrace { base_n, steps, result: s.clone() };
    Ok((s, trace))
}
