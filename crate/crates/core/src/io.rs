//! The `holey v1` text format for arrangements and tilings.
//!
//! ```text
//! holey v1
//! n 3
//! hole 0 0 1        # apex row, apex column, size
//! hole 2 0 1
//! hole 2 2 1
//! rhombus 1 0 E     # down cell row, column, side glued to its up cell
//! rhombus 2 0 N
//! rhombus 2 1 W
//! ```
//!
//! `#` starts a comment. A file without `rhombus` records describes an
//! arrangement only. Records may come in any order; [`serialize_tiling`] and
//! [`serialize_arrangement`] write them sorted.

use std::fmt::Write as _;

use crate::arrangement::HoleArrangement;
use crate::error::{Error, Result};
use crate::grid::{intersection_size, Dir, DownCell, SubTriangle};
use crate::tiling::{Rhombus, Tiling};

pub const HEADER: &str = "holey v1";

/// A parsed file: the arrangement and, when rhombi were listed, the tiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub arrangement: HoleArrangement,
    pub tiling: Option<Tiling>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers<const K: usize>(line: usize, fields: &[&str]) -> Result<[usize; K]> {
    if fields.len() != K {
        return Err(err(line, format!("expected {K} numbers, found {}", fields.len())));
    }
    let mut out = [0; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| err(line, format!("not a non-negative integer: {f:?}")))?;
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<Document> {
    let mut header_seen = false;
    let mut n: Option<(usize, usize)> = None;
    let mut holes: Vec<(usize, SubTriangle)> = Vec::new();
    let mut rhombi: Vec<(usize, Rhombus)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !header_seen {
            if content != HEADER {
                return Err(err(line, format!("expected header {HEADER:?}")));
            }
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "n" => {
                if n.is_some() {
                    return Err(err(line, "size given twice"));
                }
                let [size] = numbers::<1>(line, &fields[1..])?;
                if size == 0 {
                    return Err(err(line, "size must be at least 1"));
                }
                n = Some((size, line));
            }
            "hole" => {
                let (size, _) = n.ok_or_else(|| err(line, "hole before the size line"))?;
                let [r, i, k] = numbers::<3>(line, &fields[1..])?;
                let h = SubTriangle::new(r, i, k);
                if k == 0 || !h.is_valid(size) {
                    return Err(err(line, format!("hole {h} does not fit in a size-{size} triangle")));
                }
                if let Some((other, _)) = holes.iter().find(|(_, g)| intersection_size(g, &h) > 0) {
                    return Err(err(line, format!("hole {h} overlaps the hole on line {other}")));
                }
                holes.push((line, h));
            }
            "rhombus" => {
                let (size, _) = n.ok_or_else(|| err(line, "rhombus before the size line"))?;
                if fields.len() != 4 {
                    return Err(err(line, "expected: rhombus <r> <i> <N|W|E>"));
                }
                let [r, i] = numbers::<2>(line, &fields[1..3])?;
                let dir = Dir::from_letter(fields[3]).ok_or_else(|| err(line, format!("bad side {:?}", fields[3])))?;
                let d = DownCell::new(r, i);
                if !d.is_valid(size) {
                    return Err(err(line, format!("down cell {d} does not fit in a size-{size} triangle")));
                }
                if let Some((other, _)) = rhombi.iter().find(|(_, rh)| rh.down == d) {
                    return Err(err(line, format!("second rhombus on {d} (first on line {other})")));
                }
                rhombi.push((line, Rhombus::new(d, dir)));
            }
            other => return Err(err(line, format!("unknown record {other:?}"))),
        }
    }
    if !header_seen {
        return Err(err(last_line.max(1), format!("missing header {HEADER:?}")));
    }
    let (size, size_line) = n.ok_or_else(|| err(last_line, "missing size line"))?;
    let total: usize = holes.iter().map(|(_, h)| h.k).sum();
    if total != size {
        return Err(err(size_line, format!("hole sizes sum to {total}, expected {size}")));
    }
    let arrangement = HoleArrangement::new(size, holes.into_iter().map(|(_, h)| h).collect())
        .map_err(|e| err(size_line, e.to_string()))?;
    let tiling = if rhombi.is_empty() {
        None
    } else {
        let first = rhombi.first().map_or(size_line, |(l, _)| *l);
        let t = Tiling::from_rhombi(arrangement.clone(), rhombi.into_iter().map(|(_, rh)| rh))
            .map_err(|e| err(first, format!("rhombi do not tile the holey triangle: {e}")))?;
        Some(t)
    };
    Ok(Document { arrangement, tiling })
}

pub fn parse_arrangement(text: &str) -> Result<HoleArrangement> {
    Ok(parse(text)?.arrangement)
}

/// Parse a file that must list a complete tiling.
pub fn parse_tiling(text: &str) -> Result<Tiling> {
    let doc = parse(text)?;
    match doc.tiling {
        Some(t) => Ok(t),
        // a triangle that is all hole has the empty tiling
        None if doc.arrangement.holes() == [SubTriangle::whole(doc.arrangement.n())] => {
            Ok(Tiling::all_vertical(doc.arrangement))
        }
        None => Err(err(text.lines().count().max(1), "file lists no rhombi")),
    }
}

fn write_holes(out: &mut String, arr: &HoleArrangement) {
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "n {}", arr.n());
    for h in arr.holes() {
        let _ = writeln!(out, "hole {} {} {}", h.r, h.i, h.k);
    }
}

pub fn serialize_arrangement(arr: &HoleArrangement) -> String {
    let mut out = String::new();
    write_holes(&mut out, arr);
    out
}

pub fn serialize_tiling(t: &Tiling) -> String {
    let mut out = String::new();
    write_holes(&mut out, t.arrangement());
    for rh in t.rhombi() {
        let _ = writeln!(out, "rhombus {} {} {}", rh.down.r, rh.down.i, rh.dir.letter());
    }
    out
}
