//! Trapezoid flips, which move a unit hole across an adjacent rhombus, and flip
//! distances between unit-hole tilings.
//!
//! A hole `u`, a neighbouring down cell `d` and the up cell `u'` glued to `d`
//! always form a straight strip of three cells, so every such triple is a flip:
//! afterwards `u'` is the hole and `d` is glued to `u`.

use serde::Serialize;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::arrangement::HoleArrangement;
use crate::census::spread_out_unit_arrangements;
use crate::error::{Error, Result};
use crate::grid::{self, Dir, DownCell, UpCell, Vertex};
use crate::tiling::{self, Tiling};

/// Where the hole lands, seen from the old hole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Landing {
    NW,
    NE,
    E,
    W,
    SW,
    SE,
}

impl Landing {
    pub const ALL: [Landing; 6] = [Landing::NW, Landing::NE, Landing::E, Landing::W, Landing::SW, Landing::SE];

    pub fn name(self) -> &'static str {
        match self {
            Landing::NW => "NW",
            Landing::NE => "NE",
            Landing::E => "E",
            Landing::W => "W",
            Landing::SW => "SW",
            Landing::SE => "SE",
        }
    }

    pub fn parse(s: &str) -> Option<Landing> {
        Landing::ALL.into_iter().find(|l| l.name().eq_ignore_ascii_case(s))
    }

    /// The down cell crossed and its side facing the landing cell.
    fn route(self, hole: UpCell) -> Option<(DownCell, Dir)> {
        let UpCell { r, i } = hole;
        match self {
            Landing::NE => Some((DownCell::new(r, i), Dir::N)),
            Landing::E => Some((DownCell::new(r, i), Dir::E)),
            Landing::NW => Some((DownCell::new(r, i.checked_sub(1)?), Dir::N)),
            Landing::W => Some((DownCell::new(r, i.checked_sub(1)?), Dir::W)),
            Landing::SW => Some((DownCell::new(r + 1, i), Dir::W)),
            Landing::SE => Some((DownCell::new(r + 1, i), Dir::E)),
        }
    }
}

impl fmt::Display for Landing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TrapezoidFlip {
    pub hole: UpCell,
    pub through: DownCell,
    pub landing: UpCell,
    pub dir: Landing,
}

impl fmt::Display for TrapezoidFlip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tz:{},{},{}", self.hole.r, self.hole.i, self.dir)
    }
}

impl TrapezoidFlip {
    /// The flip of `hole` towards `dir`, if that direction stays inside the triangle.
    pub fn towards(hole: UpCell, dir: Landing, n: usize) -> Option<TrapezoidFlip> {
        let (through, side) = dir.route(hole)?;
        through.is_valid(n).then(|| TrapezoidFlip { hole, through, landing: through.neighbor(side), dir })
    }

    pub fn reverse(&self) -> TrapezoidFlip {
        let back = match self.dir {
            Landing::NW => Landing::SE,
            Landing::NE => Landing::SW,
            Landing::E => Landing::W,
            Landing::W => Landing::E,
            Landing::SW => Landing::NE,
            Landing::SE => Landing::NW,
        };
        TrapezoidFlip { hole: self.landing, through: self.through, landing: self.hole, dir: back }
    }
}

fn require_unit(t: &Tiling) -> Result<()> {
    if t.arrangement().is_unit() {
        Ok(())
    } else {
        Err(Error::Unsupported("trapezoid flips need unit holes; unitize first".into()))
    }
}

pub fn list_trapezoid_flips(t: &Tiling) -> Result<Vec<TrapezoidFlip>> {
    require_unit(t)?;
    let n = t.n();
    let mut out = Vec::new();
    for h in t.arrangement().holes() {
        let hole = UpCell::new(h.r, h.i);
        for dir in Landing::ALL {
            if let Some(f) = TrapezoidFlip::towards(hole, dir, n) {
                if t.dir(f.through).map(|d| f.through.neighbor(d)) == Some(f.landing) {
                    out.push(f);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn apply_trapezoid(t: &Tiling, f: &TrapezoidFlip) -> Result<Tiling> {
    require_unit(t)?;
    let n = t.n();
    let valid = TrapezoidFlip::towards(f.hole, f.dir, n) == Some(*f)
        && t.arrangement().hole_containing_up(f.hole).is_some()
        && t.dir(f.through).map(|d| f.through.neighbor(d)) == Some(f.landing);
    if !valid {
        return Err(Error::Flip(format!("{f} is not available")));
    }
    let holes = t.arrangement().holes().iter().map(|h| UpCell::new(h.r, h.i)).map(|u| if u == f.hole { f.landing } else { u });
    let arr = HoleArrangement::from_unit_cells(n, holes)?;
    let mut dirs = t.dirs().to_vec();
    dirs[f.through.index()] = f.through.dir_to(f.hole);
    let out = Tiling::from_parts(arr, dirs);
    out.validate()?;
    Ok(out)
}

/// Distances from a unit hole to the three sides of the big triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HeightVector {
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
}

impl HeightVector {
    pub fn of(hole: UpCell, n: usize) -> Self {
        HeightVector { bottom: n - 1 - hole.r, left: hole.i, right: hole.r - hole.i }
    }

    pub fn get(&self, axis: usize) -> usize {
        [self.bottom, self.left, self.right][axis]
    }
}

/// `min` over the three axes of the summed heights of both arrangements; at most `⌊2n(n-1)/3⌋`.
pub fn upper_bound(a: &HoleArrangement, b: &HoleArrangement) -> Result<usize> {
    if a.n() != b.n() {
        return Err(Error::Validation(format!("sizes differ: {} vs {}", a.n(), b.n())));
    }
    if !a.is_unit() || !b.is_unit() {
        return Err(Error::Unsupported("upper bound needs unit holes".into()));
    }
    let n = a.n();
    let sum = |arr: &HoleArrangement, axis: usize| -> usize {
        arr.holes().iter().map(|h| HeightVector::of(UpCell::new(h.r, h.i), n).get(axis)).sum()
    };
    Ok((0..3).map(|axis| sum(a, axis) + sum(b, axis)).min().expect("three axes"))
}

fn class(v: Vertex) -> usize {
    (2 * v.j as i64 - v.rho as i64).rem_euclid(3) as usize
}

/// Two unit-hole tilings built from hexagons centred on one colour class of
/// vertices, one turning each hexagon clockwise and one counter-clockwise.
/// Cells cut off by the boundary become holes. The two share no rhombus.
pub fn hexagon_pair(n: usize, c: usize) -> Result<(Tiling, Tiling)> {
    if n < 3 {
        return Err(Error::Precondition(format!("hexagon pair needs n >= 3, got {n}")));
    }
    if c > 2 {
        return Err(Error::Validation(format!("colour class must be 0, 1 or 2, got {c}")));
    }
    let build = |cw: bool| -> Result<Tiling> {
        let mut dirs = Vec::with_capacity(grid::down_count(n));
        let mut used = vec![false; grid::up_count(n)];
        for idx in 0..grid::down_count(n) {
            let d = DownCell::from_index(idx);
            let [top_left, top_right, bottom] = d.vertices();
            let dir = if class(bottom) == c {
                if cw { Dir::E } else { Dir::W }
            } else if class(top_right) == c {
                if cw { Dir::N } else { Dir::E }
            } else {
                debug_assert_eq!(class(top_left), c);
                if cw { Dir::W } else { Dir::N }
            };
            used[d.neighbor(dir).index()] = true;
            dirs.push(Some(dir));
        }
        let holes = (0..grid::up_count(n)).filter(|&k| !used[k]).map(UpCell::from_index);
        let arr = HoleArrangement::from_unit_cells(n, holes)?;
        let t = Tiling::from_parts(arr, dirs);
        t.validate()?;
        Ok(t)
    };
    Ok((build(true)?, build(false)?))
}

/// Hexagons of class `c` lying entirely inside the triangle.
pub fn full_hexagon_count(n: usize, c: usize) -> usize {
    (2..n).flat_map(|rho| (1..rho).map(move |j| Vertex::new(rho, j))).filter(|&v| class(v) == c).count()
}

/// Trapezoid flips needed at least to get from one tiling of a hexagon pair to the other.
pub fn hexagon_lower_bound(n: usize, c: usize) -> usize {
    (n * n - n) / 2 + full_hexagon_count(n, c)
}

fn neighbors(t: &Tiling) -> Result<Vec<Tiling>> {
    list_trapezoid_flips(t)?.iter().map(|f| apply_trapezoid(t, f)).collect()
}

/// Breadth-first distances from `start` over unit-hole tilings reachable by trapezoid flips.
pub fn bfs_distances(start: &Tiling, limit: usize) -> Result<HashMap<Vec<u8>, usize>> {
    require_unit(start)?;
    let mut dist = HashMap::from([(start.key(), 0)]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(t) = queue.pop_front() {
        let here = dist[&t.key()];
        for next in neighbors(&t)? {
            let key = next.key();
            if !dist.contains_key(&key) {
                if dist.len() >= limit {
                    return Err(Error::Resource { limit, what: "flip states" });
                }
                dist.insert(key, here + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(dist)
}

/// Exact trapezoid-flip distance by breadth-first search.
pub fn flip_distance(a: &Tiling, b: &Tiling, limit: usize) -> Result<usize> {
    require_unit(a)?;
    require_unit(b)?;
    if a.n() != b.n() {
        return Err(Error::Validation(format!("sizes differ: {} vs {}", a.n(), b.n())));
    }
    let target = b.key();
    let mut dist = HashMap::from([(a.key(), 0usize)]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(t) = queue.pop_front() {
        let here = dist[&t.key()];
        if t.key() == target {
            return Ok(here);
        }
        for next in neighbors(&t)? {
            let key = next.key();
            if !dist.contains_key(&key) {
                if dist.len() >= limit {
                    return Err(Error::Resource { limit, what: "flip states" });
                }
                dist.insert(key, here + 1);
                queue.push_back(next);
            }
        }
    }
    Err(Error::Flip("target is not reachable by trapezoid flips".into()))
}

/// Every tiling of every spread-out unit arrangement of size `n`.
pub fn all_subdivisions(n: usize, limit: usize) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for arr in spread_out_unit_arrangements(n) {
        out.extend(tiling::enumerate_limited(&arr, limit.saturating_sub(out.len()).max(1))?);
        if out.len() > limit {
            return Err(Error::Resource { limit, what: "subdivisions" });
        }
    }
    Ok(out)
}
