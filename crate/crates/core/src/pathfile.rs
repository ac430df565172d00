//! Plain-text stone-set files.
//!
//! ```text
//! hexpath 1
//! size 5
//! # comment
//! 3 1
//! 3 2
//! ```
//!
//! Stones are `X Y` pairs (or a cell label such as `c4` when `n <= 20`).
//! Lines end in a line feed, including the last one. Emission is canonical:
//! stones in (row, column) order, no comments.

use crate::board::{parse_label, BoardSize, Coord, MAX_LABEL_COLUMN};
use crate::connection::StoneSet;
use crate::error::{Error, Result};

pub const HEADER: &str = "hexpath 1";

pub fn emit(s: &StoneSet) -> String {
    let mut out = format!("{HEADER}\nsize {}\n", s.size());
    for c in s.iter() {
        out.push_str(&format!("{} {}\n", c.x, c.y));
    }
    out
}

/// Like [`emit`] with leading comment lines.
pub fn emit_with_comments(s: &StoneSet, comments: &[&str]) -> String {
    let body = emit(s);
    let (header, rest) = body.split_at(HEADER.len() + 1);
    let mut out = header.to_string();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(rest);
    out
}

pub fn parse(text: &str) -> Result<StoneSet> {
    if text.is_empty() {
        return Err(Error::input("empty path file"));
    }
    if !text.ends_with('\n') {
        return Err(Error::input("path file must end with a newline"));
    }
    if text.contains('\r') {
        return Err(Error::input("path file lines must end in a bare line feed"));
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

    match lines.next() {
        Some((_, l)) if l.trim() == HEADER => {}
        Some((i, l)) => return Err(Error::input(format!("line {i}: expected '{HEADER}', found '{l}'"))),
        None => return Err(Error::input(format!("missing '{HEADER}' header"))),
    }
    let n = match lines.next() {
        Some((i, l)) => {
            let v = l
                .trim()
                .strip_prefix("size ")
                .ok_or_else(|| Error::input(format!("line {i}: expected 'size N', found '{l}'")))?;
            let m: u32 = v
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("line {i}: bad board size '{v}'")))?;
            BoardSize::new(m)?
        }
        None => return Err(Error::input("missing 'size N' line")),
    };
    let mut stones = Vec::new();
    for (i, l) in lines {
        stones.push(parse_stone(l, n).map_err(|e| Error::input(format!("line {i}: {e}")))?);
    }
    StoneSet::new(n, stones)
}

fn parse_stone(line: &str, n: BoardSize) -> Result<Coord> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    match parts.as_slice() {
        [x, y] => {
            let parse = |v: &str| v.parse::<i32>().map_err(|_| Error::input(format!("bad coordinate '{v}'")));
            Ok(Coord::new(parse(x)?, parse(y)?))
        }
        [label] if n.side() <= MAX_LABEL_COLUMN => parse_label(label),
        [label] => Err(Error::input(format!("cell label '{label}' needs n <= {MAX_LABEL_COLUMN}"))),
        _ => Err(Error::input(format!("expected 'X Y', found '{line}'"))),
    }
}
