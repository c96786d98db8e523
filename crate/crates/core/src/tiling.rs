//! Rhombus tilings of a holey triangle, stored as a matching of down cells to up cells.

use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

use crate::arrangement::HoleArrangement;
use crate::error::{Error, Result};
use crate::grid::{self, Dir, DownCell, UpCell};

/// A down cell glued to one of its up-neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rhombus {
    pub down: DownCell,
    pub dir: Dir,
}

impl Rhombus {
    pub fn new(down: DownCell, dir: Dir) -> Self {
        Rhombus { down, dir }
    }

    pub fn up(&self) -> UpCell {
        self.down.neighbor(self.dir)
    }

    /// Vertical rhombi have no horizontal edge; their short diagonal is horizontal.
    pub fn is_vertical(&self) -> bool {
        self.dir == Dir::N
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    arr: HoleArrangement,
    dirs: Vec<Option<Dir>>,
}

/// The first broken invariant found by [`Tiling::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    WrongLength { expected: usize, found: usize },
    Unmatched(DownCell),
    DownInHole(DownCell),
    UpInHole { down: DownCell, up: UpCell },
    UpReused { up: UpCell, first: DownCell, second: DownCell },
    Uncovered(UpCell),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { expected, found } => {
                write!(f, "matching has {found} entries, expected {expected}")
            }
            Violation::Unmatched(d) => write!(f, "{d} is not covered by a rhombus"),
            Violation::DownInHole(d) => write!(f, "{d} lies in a hole but is matched"),
            Violation::UpInHole { down, up } => write!(f, "{down} is matched to {up}, which lies in a hole"),
            Violation::UpReused { up, first, second } => write!(f, "{up} is matched to both {first} and {second}"),
            Violation::Uncovered(u) => write!(f, "{u} is neither a hole nor covered"),
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Validation(v.to_string())
    }
}

impl Serialize for Tiling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Tiling", 3)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("holes", self.arr.holes())?;
        st.serialize_field("rhombi", &self.rhombi().collect::<Vec<_>>())?;
        st.end()
    }
}

impl Tiling {
    /// Build without checking; call [`Tiling::validate`] before trusting it.
    pub fn from_parts(arr: HoleArrangement, dirs: Vec<Option<Dir>>) -> Self {
        Tiling { arr, dirs }
    }

    pub fn from_rhombi(arr: HoleArrangement, rhombi: impl IntoIterator<Item = Rhombus>) -> Result<Self> {
        let n = arr.n();
        let mut dirs = vec![None; grid::down_count(n)];
        for rh in rhombi {
            rh.down.check(n)?;
            let slot = &mut dirs[rh.down.index()];
            if slot.is_some() {
                return Err(Error::Validation(format!("{} has two rhombi", rh.down)));
            }
            *slot = Some(rh.dir);
        }
        let t = Tiling { arr, dirs };
        t.validate()?;
        Ok(t)
    }

    /// Every non-hole down cell glued to the up cell above it. Valid for the bottom-row arrangement.
    pub fn all_vertical(arr: HoleArrangement) -> Self {
        let holes = arr.down_hole_map();
        let dirs = holes.iter().map(|h| if h.is_none() { Some(Dir::N) } else { None }).collect();
        Tiling { arr, dirs }
    }

    pub fn n(&self) -> usize {
        self.arr.n()
    }

    pub fn arrangement(&self) -> &HoleArrangement {
        &self.arr
    }

    pub fn dirs(&self) -> &[Option<Dir>] {
        &self.dirs
    }

    pub fn dir(&self, d: DownCell) -> Option<Dir> {
        self.dirs[d.index()]
    }

    pub(crate) fn set_dir(&mut self, d: DownCell, dir: Option<Dir>) {
        self.dirs[d.index()] = dir;
    }

    pub fn rhombus_at(&self, d: DownCell) -> Option<Rhombus> {
        self.dir(d).map(|dir| Rhombus::new(d, dir))
    }

    /// Rhombi in down-cell order.
    pub fn rhombi(&self) -> impl Iterator<Item = Rhombus> + '_ {
        self.dirs
            .iter()
            .enumerate()
            .filter_map(|(idx, dir)| dir.map(|dir| Rhombus::new(DownCell::from_index(idx), dir)))
    }

    pub fn rhombus_count(&self) -> usize {
        self.dirs.iter().filter(|d| d.is_some()).count()
    }

    /// For each up cell (by index), the down cell it is glued to.
    pub fn up_partners(&self) -> Vec<Option<DownCell>> {
        let mut out = vec![None; grid::up_count(self.n())];
        for rh in self.rhombi() {
            out[rh.up().index()] = Some(rh.down);
        }
        out
    }

    /// Cells that are holes in a unit-hole tiling: the uncovered up cells.
    pub fn uncovered_up_cells(&self) -> Vec<UpCell> {
        self.up_partners()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(idx, _)| UpCell::from_index(idx))
            .collect()
    }

    /// Compact byte key, one byte per down cell.
    pub fn key(&self) -> Vec<u8> {
        self.dirs
            .iter()
            .map(|d| match d {
                None => 0,
                Some(Dir::N) => 1,
                Some(Dir::W) => 2,
                Some(Dir::E) => 3,
            })
            .collect()
    }

    /// Interior `(up, down)` adjacencies whose shared edge is a segment of this tiling,
    /// i.e. not a rhombus diagonal and not inside a hole.
    pub fn present_pairs(&self) -> Vec<(UpCell, DownCell)> {
        let up_holes = self.arr.up_hole_map();
        let down_holes = self.arr.down_hole_map();
        grid::interior_pairs(self.n())
            .filter(|&(u, d)| {
                let same_hole = down_holes[d.index()].is_some() && down_holes[d.index()] == up_holes[u.index()];
                let diagonal = self.dir(d).map(|dir| d.neighbor(dir)) == Some(u);
                !same_hole && !diagonal
            })
            .collect()
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.n();
        let expected = grid::down_count(n);
        if self.dirs.len() != expected {
            return Err(Violation::WrongLength { expected, found: self.dirs.len() });
        }
        let up_holes = self.arr.up_hole_map();
        let down_holes = self.arr.down_hole_map();
        let mut owner: Vec<Option<DownCell>> = vec![None; grid::up_count(n)];
        for (idx, dir) in self.dirs.iter().enumerate() {
            let d = DownCell::from_index(idx);
            match (dir, down_holes[idx].is_some()) {
                (None, true) => continue,
                (None, false) => return Err(Violation::Unmatched(d)),
                (Some(_), true) => return Err(Violation::DownInHole(d)),
                (Some(dir), false) => {
                    let u = d.neighbor(*dir);
                    if up_holes[u.index()].is_some() {
                        return Err(Violation::UpInHole { down: d, up: u });
                    }
                    if let Some(first) = owner[u.index()] {
                        return Err(Violation::UpReused { up: u, first, second: d });
                    }
                    owner[u.index()] = Some(d);
                }
            }
        }
        for (idx, o) in owner.iter().enumerate() {
            if o.is_none() && up_holes[idx].is_none() {
                return Err(Violation::Uncovered(UpCell::from_index(idx)));
            }
        }
        Ok(())
    }
}

/// A tiling found by maximum bipartite matching, or `None` when no perfect matching exists.
pub fn construct(arr: &HoleArrangement) -> Option<Tiling> {
    let n = arr.n();
    let up_holes = arr.up_hole_map();
    let down_holes = arr.down_hole_map();
    let downs: Vec<DownCell> =
        (0..grid::down_count(n)).filter(|&idx| down_holes[idx].is_none()).map(DownCell::from_index).collect();
    let mut up_owner: Vec<Option<usize>> = vec![None; grid::up_count(n)];
    let mut chosen: Vec<Option<Dir>> = vec![None; downs.len()];

    fn augment(
        at: usize,
        downs: &[DownCell],
        up_holes: &[Option<usize>],
        seen: &mut [bool],
        up_owner: &mut [Option<usize>],
        chosen: &mut [Option<Dir>],
    ) -> bool {
        for dir in Dir::ALL {
            let u = downs[at].neighbor(dir).index();
            if up_holes[u].is_some() || seen[u] {
                continue;
            }
            seen[u] = true;
            let free = match up_owner[u] {
                None => true,
                Some(other) => augment(other, downs, up_holes, seen, up_owner, chosen),
            };
            if free {
                up_owner[u] = Some(at);
                chosen[at] = Some(dir);
                return true;
            }
        }
        false
    }

    let mut seen = vec![false; grid::up_count(n)];
    for at in 0..downs.len() {
        seen.iter_mut().for_each(|s| *s = false);
        if !augment(at, &downs, &up_holes, &mut seen, &mut up_owner, &mut chosen) {
            return None;
        }
    }
    let mut dirs = vec![None; grid::down_count(n)];
    for (d, dir) in downs.iter().zip(chosen) {
        dirs[d.index()] = dir;
    }
    let t = Tiling::from_parts(arr.clone(), dirs);
    if t.validate().is_err() {
        // more non-hole up cells than down cells cannot happen for a valid arrangement
        return None;
    }
    Some(t)
}

/// Streaming backtracking enumeration: down cells row-major, partners in `N, W, E` order.
pub struct Tilings {
    arr: HoleArrangement,
    order: Vec<DownCell>,
    blocked: Vec<bool>,
    used: Vec<bool>,
    next_choice: Vec<u8>,
    /// Up cells whose last possible matcher sits at each position.
    finalize: Vec<Vec<usize>>,
    dirs: Vec<Option<Dir>>,
    pos: usize,
    done: bool,
}

impl Tilings {
    fn new(arr: &HoleArrangement) -> Self {
        let n = arr.n();
        let down_holes = arr.down_hole_map();
        let blocked: Vec<bool> = arr.up_hole_map().iter().map(|h| h.is_some()).collect();
        let order: Vec<DownCell> =
            (0..grid::down_count(n)).filter(|&idx| down_holes[idx].is_none()).map(DownCell::from_index).collect();
        let mut last: Vec<Option<usize>> = vec![None; grid::up_count(n)];
        for (p, d) in order.iter().enumerate() {
            for dir in Dir::ALL {
                last[d.neighbor(dir).index()] = Some(p);
            }
        }
        let mut finalize = vec![Vec::new(); order.len()];
        let mut done = false;
        for (u, l) in last.iter().enumerate() {
            if blocked[u] {
                continue;
            }
            match l {
                Some(p) => finalize[*p].push(u),
                None => done = true,
            }
        }
        Tilings {
            arr: arr.clone(),
            next_choice: vec![0; order.len()],
            order,
            used: vec![false; blocked.len()],
            blocked,
            finalize,
            dirs: vec![None; grid::down_count(n)],
            pos: 0,
            done,
        }
    }

    fn release(&mut self, p: usize) {
        let d = self.order[p];
        if let Some(dir) = self.dirs[d.index()].take() {
            self.used[d.neighbor(dir).index()] = false;
        }
    }
}

impl Iterator for Tilings {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        if self.done {
            return None;
        }
        let len = self.order.len();
        if len == 0 {
            self.done = true;
            return Some(Tiling::from_parts(self.arr.clone(), self.dirs.clone()));
        }
        loop {
            if self.pos == len {
                let t = Tiling::from_parts(self.arr.clone(), self.dirs.clone());
                self.pos = len - 1;
                self.release(self.pos);
                return Some(t);
            }
            let p = self.pos;
            let c = self.next_choice[p];
            if c == 3 {
                self.next_choice[p] = 0;
                if p == 0 {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
                self.release(self.pos);
                continue;
            }
            self.next_choice[p] = c + 1;
            let d = self.order[p];
            let dir = Dir::ALL[c as usize];
            let u = d.neighbor(dir).index();
            if self.blocked[u] || self.used[u] {
                continue;
            }
            self.used[u] = true;
            self.dirs[d.index()] = Some(dir);
            if self.finalize[p].iter().any(|&w| !self.used[w]) {
                self.release(p);
                continue;
            }
            self.pos += 1;
        }
    }
}

pub fn enumerate(arr: &HoleArrangement) -> Tilings {
    Tilings::new(arr)
}

pub fn count(arr: &HoleArrangement) -> usize {
    enumerate(arr).count()
}

/// Collect all tilings, failing once more than `limit` have been produced.
pub fn enumerate_limited(arr: &HoleArrangement, limit: usize) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for t in enumerate(arr) {
        if out.len() == limit {
            return Err(Error::Resource { limit, what: "tilings" });
        }
        out.push(t);
    }
    Ok(out)
}

/// A uniformly random tiling, chosen from the full enumeration.
pub fn pick_uniform<R: Rng + ?Sized>(arr: &HoleArrangement, rng: &mut R, limit: usize) -> Result<Option<Tiling>> {
    let mut all = enumerate_limited(arr, limit)?;
    if all.is_empty() {
        return Ok(None);
    }
    let at = rng.gen_range(0..all.len());
    Ok(Some(all.swap_remove(at)))
}

/// Number of rhombi two tilings have in common.
pub fn shared_rhombi(a: &Tiling, b: &Tiling) -> usize {
    a.dirs.iter().zip(&b.dirs).filter(|(x, y)| x.is_some() && x == y).count()
}
