//! GD flips: re-tiling the ring of `3(m+1)` rhombi between a frame's three corner
//! cells and its size-`m` middle triangle.
//!
//! Frame-relative coordinates (frame apex at `(0,0)`, last row `m+2`):
//!
//! | rhombus (down cell)        | clockwise | counter-clockwise |
//! |----------------------------|-----------|-------------------|
//! | `(1,0)`                    | `E`       | `W`               |
//! | `(r,0)`, `2 <= r <= m+1`   | `N`       | `W`               |
//! | `(r,r-1)`, `2 <= r <= m+1` | `E`       | `N`               |
//! | `(m+2,0)`                  | `N`       | `E`               |
//! | `(m+2,i)`, `1 <= i <= m`   | `W`       | `E`               |
//! | `(m+2,m+1)`                | `W`       | `N`               |
//!
//! In the clockwise ring the vertical rhombi run down the left side; in the
//! counter-clockwise ring they run down the right side.

use serde::Serialize;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::arrangement::HoleArrangement;
use crate::error::{Error, Result};
use crate::grid::{Dir, DownCell, Orientation, SubTriangle, UpCell};
use crate::regiongraph::{RegionGraph, RegionId};
use crate::tiling::{self, Rhombus, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GdFrame {
    pub r: usize,
    pub i: usize,
    /// Size of the middle triangle; the frame has side `m + 3`.
    pub m: usize,
}

impl fmt::Display for GdFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gd({},{},{})", self.r, self.i, self.m)
    }
}

impl GdFrame {
    pub fn new(r: usize, i: usize, m: usize) -> Self {
        GdFrame { r, i, m }
    }

    pub fn frame(&self) -> SubTriangle {
        SubTriangle::new(self.r, self.i, self.m + 3)
    }

    pub fn fits(&self, n: usize) -> bool {
        self.frame().is_valid(n)
    }

    pub fn corners(&self) -> [UpCell; 3] {
        let last = self.r + self.m + 2;
        [UpCell::new(self.r, self.i), UpCell::new(last, self.i), UpCell::new(last, self.i + self.m + 2)]
    }

    /// The middle triangle (a point when `m == 0`).
    pub fn interior(&self) -> SubTriangle {
        SubTriangle::new(self.r + 2, self.i + 1, self.m)
    }

    fn place(&self, r: usize, i: usize, dir: Dir) -> Rhombus {
        Rhombus::new(DownCell::new(self.r + r, self.i + i), dir)
    }

    /// The ring rhombi in the given handedness, in down-cell order.
    pub fn ring(&self, hand: Orientation) -> Vec<Rhombus> {
        let m = self.m;
        let last = m + 2;
        let mut out = Vec::with_capacity(3 * (m + 1));
        let cw = hand == Orientation::Cw;
        out.push(self.place(1, 0, if cw { Dir::E } else { Dir::W }));
        for r in 2..=m + 1 {
            out.push(self.place(r, 0, if cw { Dir::N } else { Dir::W }));
            out.push(self.place(r, r - 1, if cw { Dir::E } else { Dir::N }));
        }
        out.push(self.place(last, 0, if cw { Dir::N } else { Dir::E }));
        for i in 1..=m {
            out.push(self.place(last, i, if cw { Dir::W } else { Dir::E }));
        }
        out.push(self.place(last, m + 1, if cw { Dir::W } else { Dir::N }));
        out.sort();
        out
    }

    pub fn matches(&self, t: &Tiling, hand: Orientation) -> bool {
        self.fits(t.n()) && self.ring(hand).iter().all(|rh| t.dir(rh.down) == Some(rh.dir))
    }

    /// The frame region as its own arrangement: three corner holes plus the middle triangle.
    pub fn local_arrangement(&self) -> HoleArrangement {
        HoleArrangement::corners_and_center(self.m + 3).expect("frame size >= 3")
    }
}

/// Every frame position in `(r, i, m)` order.
pub fn frames(n: usize) -> impl Iterator<Item = GdFrame> {
    (0..n).flat_map(move |r| {
        (0..=r).flat_map(move |i| (0..(n - r).saturating_sub(2)).map(move |m| GdFrame::new(r, i, m)))
    })
}

pub fn find_gds(t: &Tiling, hand: Orientation) -> Vec<GdFrame> {
    frames(t.n()).filter(|f| f.matches(t, hand)).collect()
}

pub fn find_cw_gds(t: &Tiling) -> Vec<GdFrame> {
    find_gds(t, Orientation::Cw)
}

pub fn find_ccw_gds(t: &Tiling) -> Vec<GdFrame> {
    find_gds(t, Orientation::Ccw)
}

fn rewrite(t: &Tiling, f: &GdFrame, from: Orientation) -> Result<Tiling> {
    if !f.matches(t, from) {
        let which = if from == Orientation::Cw { "clockwise" } else { "counter-clockwise" };
        return Err(Error::Flip(format!("no {which} GD at {f}")));
    }
    let mut out = t.clone();
    for rh in f.ring(from.reversed()) {
        out.set_dir(rh.down, Some(rh.dir));
    }
    debug_assert!(out.validate().is_ok());
    Ok(out)
}

/// Replace a clockwise GD by the counter-clockwise one.
pub fn apply_gd_flip(t: &Tiling, f: &GdFrame) -> Result<Tiling> {
    rewrite(t, f, Orientation::Cw)
}

/// Replace a counter-clockwise GD by the clockwise one.
pub fn apply_gd_flip_inverse(t: &Tiling, f: &GdFrame) -> Result<Tiling> {
    rewrite(t, f, Orientation::Ccw)
}

/// Sum over vertical rhombi of the doubled x-coordinate of their centers.
pub fn potential(t: &Tiling) -> i64 {
    t.rhombi().filter(|rh| rh.is_vertical()).map(|rh| 2 * rh.down.i as i64 - rh.down.r as i64 + 1).sum()
}

pub fn vertical_count(t: &Tiling) -> usize {
    t.rhombi().filter(|rh| rh.is_vertical()).count()
}

/// The ring rhombi of a matching frame in cycle order, starting at the smallest down cell.
pub fn ring_cycle(t: &Tiling, f: &GdFrame) -> Result<Vec<DownCell>> {
    let hand = if f.matches(t, Orientation::Cw) {
        Orientation::Cw
    } else if f.matches(t, Orientation::Ccw) {
        Orientation::Ccw
    } else {
        return Err(Error::Flip(format!("no GD at {f}")));
    };
    let ring: Vec<DownCell> = f.ring(hand).iter().map(|rh| rh.down).collect();
    let g = RegionGraph::build(t)?;
    let mut cycle = vec![ring[0]];
    loop {
        let here = g.node_of(RegionId::Rhombus(*cycle.last().unwrap())).expect("ring rhombus");
        let next = g
            .successors(here)
            .iter()
            .filter_map(|&w| g.rhombus_down(w))
            .find(|d| ring.contains(d))
            .ok_or_else(|| Error::Flip(format!("ring of {f} is not a cycle")))?;
        if next == cycle[0] {
            break;
        }
        if cycle.contains(&next) || cycle.len() > ring.len() {
            return Err(Error::Flip(format!("ring of {f} is not a simple cycle")));
        }
        cycle.push(next);
    }
    Ok(cycle)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Target {
    /// Flip clockwise GDs until none remain.
    NoCw,
    /// Flip counter-clockwise GDs back until none remain.
    NoCcw,
}

/// Flip the smallest available frame until none is left. The result depends
/// only on the arrangement.
pub fn canonicalize(t: &Tiling, target: Target) -> Tiling {
    let hand = match target {
        Target::NoCw => Orientation::Cw,
        Target::NoCcw => Orientation::Ccw,
    };
    let mut cur = t.clone();
    while let Some(f) = frames(cur.n()).find(|f| f.matches(&cur, hand)) {
        cur = rewrite(&cur, &f, hand).expect("frame matched");
    }
    cur
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GdFlipGraph {
    pub tilings: usize,
    /// Undirected edges, one per clockwise-to-counter-clockwise flip.
    pub edges: usize,
    pub components: usize,
    pub connected: bool,
    /// Largest flip distance between two tilings, when the graph is connected.
    pub diameter: Option<usize>,
}

/// Build the flip graph over all tilings of `arr`.
pub fn gd_flip_graph(arr: &HoleArrangement, limit: usize) -> Result<GdFlipGraph> {
    let all = tiling::enumerate_limited(arr, limit)?;
    let index: HashMap<Vec<u8>, usize> = all.iter().enumerate().map(|(k, t)| (t.key(), k)).collect();
    let mut adj = vec![Vec::new(); all.len()];
    let mut edges = 0;
    for (k, t) in all.iter().enumerate() {
        for f in find_cw_gds(t) {
            let next = apply_gd_flip(t, &f)?;
            let j = *index.get(&next.key()).ok_or_else(|| Error::Flip("flip left the enumeration".into()))?;
            adj[k].push(j);
            adj[j].push(k);
            edges += 1;
        }
    }
    let bfs = |src: usize| {
        let mut dist = vec![usize::MAX; adj.len()];
        dist[src] = 0;
        let mut q = VecDeque::from([src]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    };
    let mut comp = vec![usize::MAX; all.len()];
    let mut components = 0;
    for s in 0..all.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        for (v, d) in bfs(s).iter().enumerate() {
            if *d != usize::MAX {
                comp[v] = components;
            }
        }
        components += 1;
    }
    let connected = components <= 1;
    let diameter = if connected && all.len() <= 4096 {
        Some((0..all.len()).map(|s| bfs(s).into_iter().max().unwrap_or(0)).max().unwrap_or(0))
    } else {
        None
    };
    Ok(GdFlipGraph { tilings: all.len(), edges, components, connected, diameter })
}

pub fn gd_connectivity(arr: &HoleArrangement, limit: usize) -> Result<bool> {
    Ok(gd_flip_graph(arr, limit)?.connected)
}
