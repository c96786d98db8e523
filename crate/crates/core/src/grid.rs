//! Exact integer geometry of the triangular grid inside a side-`n` upward triangle.
//!
//! Conventions:
//!
//! * Cells are addressed by `(row from the top, index in row)`. Row `r` holds
//!   `r + 1` upward cells and `r` downward cells.
//! * Vertices are addressed by `(rho, j)` with `0 <= j <= rho <= n`.
//! * The planar embedding used for orientation tests is `X = 2j - rho`,
//!   `Y = rho` with `Y` increasing downward, so every area computation is an
//!   exact integer shoelace sum.
//!
//! ```text
//!            (0,0)
//!            /\
//!           /  \        Up(0,0)
//!     (1,0)/____\(1,1)
//!         /\    /\
//!        /  \  /  \     Up(1,0)  Down(1,0)  Up(1,1)
//!       /____\/____\
//!   (2,0)   (2,1)   (2,2)
//! ```

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

/// Number of upward unit cells in a side-`n` triangle.
pub fn up_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Number of downward unit cells in a side-`n` triangle.
pub fn down_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of grid vertices in a side-`n` triangle.
pub fn vertex_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UpCell {
    pub r: usize,
    pub i: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DownCell {
    pub r: usize,
    pub i: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub rho: usize,
    pub j: usize,
}

/// Integer point of the planar embedding. Cell centroids are stored scaled by 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl UpCell {
    pub fn new(r: usize, i: usize) -> Self {
        UpCell { r, i }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        self.i <= self.r && self.r < n
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.is_valid(n) {
            Ok(())
        } else {
            Err(Error::Coordinate(format!("{self} is not an upward cell of a size-{n} triangle")))
        }
    }

    pub fn index(&self) -> usize {
        self.r * (self.r + 1) / 2 + self.i
    }

    pub fn from_index(idx: usize) -> Self {
        let mut r = 0;
        while (r + 1) * (r + 2) / 2 <= idx {
            r += 1;
        }
        UpCell { r, i: idx - r * (r + 1) / 2 }
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        let (r, i) = (self.r, self.i);
        [Vertex::new(r, i), Vertex::new(r + 1, i), Vertex::new(r + 1, i + 1)]
    }

    /// Centroid, scaled by 3.
    pub fn centroid3(&self) -> Point {
        let (r, i) = (self.r as i64, self.i as i64);
        Point { x: 3 * (2 * i - r), y: 3 * r + 2 }
    }

    /// The unit triangle occupied by this cell.
    pub fn as_triangle(&self) -> SubTriangle {
        SubTriangle::new(self.r, self.i, 1)
    }
}

impl DownCell {
    pub fn new(r: usize, i: usize) -> Self {
        DownCell { r, i }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        self.r >= 1 && self.i < self.r && self.r < n
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.is_valid(n) {
            Ok(())
        } else {
            Err(Error::Coordinate(format!("{self} is not a downward cell of a size-{n} triangle")))
        }
    }

    pub fn index(&self) -> usize {
        (self.r - 1) * self.r / 2 + self.i
    }

    pub fn from_index(idx: usize) -> Self {
        let mut r = 1;
        while r * (r + 1) / 2 <= idx {
            r += 1;
        }
        DownCell { r, i: idx - (r - 1) * r / 2 }
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        let (r, i) = (self.r, self.i);
        [Vertex::new(r, i), Vertex::new(r, i + 1), Vertex::new(r + 1, i + 1)]
    }

    pub fn centroid3(&self) -> Point {
        let (r, i) = (self.r as i64, self.i as i64);
        Point { x: 3 * (2 * i - r + 1), y: 3 * r + 1 }
    }

    /// The up cell across the given side. Always inside the triangle.
    pub fn neighbor(&self, dir: Dir) -> UpCell {
        match dir {
            Dir::N => UpCell::new(self.r - 1, self.i),
            Dir::W => UpCell::new(self.r, self.i),
            Dir::E => UpCell::new(self.r, self.i + 1),
        }
    }

    /// Which side of `self` faces `u`, if they are adjacent.
    pub fn dir_to(&self, u: UpCell) -> Option<Dir> {
        Dir::ALL.into_iter().find(|&d| self.neighbor(d) == u)
    }
}

/// One of the three up-neighbors of a down cell: above (`N`), left (`W`), right (`E`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Dir {
    N,
    W,
    E,
}

impl Dir {
    pub const ALL: [Dir; 3] = [Dir::N, Dir::W, Dir::E];

    pub fn letter(self) -> char {
        match self {
            Dir::N => 'N',
            Dir::W => 'W',
            Dir::E => 'E',
        }
    }

    pub fn from_letter(c: &str) -> Option<Dir> {
        match c {
            "N" => Some(Dir::N),
            "W" => Some(Dir::W),
            "E" => Some(Dir::E),
            _ => None,
        }
    }
}

impl Vertex {
    pub fn new(rho: usize, j: usize) -> Self {
        Vertex { rho, j }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        self.j <= self.rho && self.rho <= n
    }

    pub fn index(&self) -> usize {
        self.rho * (self.rho + 1) / 2 + self.j
    }

    pub fn point(&self) -> Point {
        Point { x: 2 * self.j as i64 - self.rho as i64, y: self.rho as i64 }
    }

    /// Step one unit along `dir`, if the result stays inside the size-`n` triangle.
    pub fn step(&self, dir: RayDir, n: usize) -> Option<Vertex> {
        let (drho, dj) = dir.delta();
        let rho = self.rho as i64 + drho;
        let j = self.j as i64 + dj;
        if rho < 0 || j < 0 || j > rho || rho > n as i64 {
            None
        } else {
            Some(Vertex::new(rho as usize, j as usize))
        }
    }

    /// All vertices of the size-`n` triangle, row by row.
    pub fn all(n: usize) -> impl Iterator<Item = Vertex> {
        (0..=n).flat_map(|rho| (0..=rho).map(move |j| Vertex::new(rho, j)))
    }

    /// The (up to six) neighboring vertices inside the triangle.
    pub fn neighbors(&self, n: usize) -> impl Iterator<Item = Vertex> + '_ {
        RayDir::ALL.into_iter().filter_map(move |d| self.step(d, n))
    }
}

/// The six lattice directions, in vertex coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RayDir {
    E,
    W,
    NE,
    NW,
    SE,
    SW,
}

impl RayDir {
    pub const ALL: [RayDir; 6] = [RayDir::E, RayDir::W, RayDir::NE, RayDir::NW, RayDir::SE, RayDir::SW];

    /// `(d rho, d j)` of a unit step.
    pub fn delta(self) -> (i64, i64) {
        match self {
            RayDir::E => (0, 1),
            RayDir::W => (0, -1),
            RayDir::NE => (-1, 0),
            RayDir::NW => (-1, -1),
            RayDir::SE => (1, 1),
            RayDir::SW => (1, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RayDir::E => "e",
            RayDir::W => "w",
            RayDir::NE => "ne",
            RayDir::NW => "nw",
            RayDir::SE => "se",
            RayDir::SW => "sw",
        }
    }

    pub fn parse(s: &str) -> Option<RayDir> {
        RayDir::ALL.into_iter().find(|d| d.name().eq_ignore_ascii_case(s))
    }
}

/// What lies across one side of an up cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Neighbor {
    Inside(DownCell),
    Outside,
}

/// The three up cells sharing an edge with `d`, in the order `N, W, E`.
pub fn up_neighbors(d: DownCell, n: usize) -> Result<[UpCell; 3]> {
    d.check(n)?;
    Ok(Dir::ALL.map(|dir| d.neighbor(dir)))
}

/// Across the left, right and bottom sides of `u`.
pub fn down_neighbors(u: UpCell, n: usize) -> Result<[Neighbor; 3]> {
    u.check(n)?;
    let inside = |d: DownCell| if d.is_valid(n) { Neighbor::Inside(d) } else { Neighbor::Outside };
    let left = if u.i >= 1 { inside(DownCell::new(u.r, u.i - 1)) } else { Neighbor::Outside };
    Ok([left, inside(DownCell::new(u.r, u.i)), inside(DownCell::new(u.r + 1, u.i))])
}

/// An upward grid-aligned triangle with apex at vertex `(r, i)` and side `k`.
///
/// `k == 0` is a single point and only ever appears as an intersection result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SubTriangle {
    pub r: usize,
    pub i: usize,
    pub k: usize,
}

impl SubTriangle {
    pub fn new(r: usize, i: usize, k: usize) -> Self {
        SubTriangle { r, i, k }
    }

    pub fn whole(n: usize) -> Self {
        SubTriangle::new(0, 0, n)
    }

    pub fn is_valid(&self, n: usize) -> bool {
        self.i <= self.r && self.r + self.k <= n
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.is_valid(n) {
            Ok(())
        } else {
            Err(Error::Coordinate(format!("{self} does not fit in a size-{n} triangle")))
        }
    }

    /// Distances `(left, right, bottom)` from the sides of the size-`n` triangle.
    pub fn distances(&self, n: usize) -> (usize, usize, usize) {
        (self.i, self.r - self.i, n - self.r - self.k)
    }

    /// Inverse of [`SubTriangle::distances`]; `None` if the size would be negative.
    pub fn from_distances(n: usize, left: usize, right: usize, bottom: usize) -> Option<Self> {
        let k = n.checked_sub(left + right + bottom)?;
        Some(SubTriangle::new(left + right, left, k))
    }

    fn bottom_line(&self) -> usize {
        self.r + self.k
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.rho >= self.r && v.rho <= self.bottom_line() && v.j >= self.i && v.j - self.i <= v.rho - self.r
    }

    pub fn contains_up(&self, u: UpCell) -> bool {
        u.vertices().iter().all(|&v| self.contains_vertex(v))
    }

    pub fn contains_down(&self, d: DownCell) -> bool {
        d.vertices().iter().all(|&v| self.contains_vertex(v))
    }

    /// Whether `other` lies inside `self` (as closed regions).
    pub fn contains(&self, other: &SubTriangle) -> bool {
        intersect(self, other) == Some(*other)
    }

    pub fn up_cells(&self) -> impl Iterator<Item = UpCell> + '_ {
        (0..self.k).flat_map(move |dr| (0..=dr).map(move |di| UpCell::new(self.r + dr, self.i + di)))
    }

    pub fn down_cells(&self) -> impl Iterator<Item = DownCell> + '_ {
        (1..self.k).flat_map(move |dr| (0..dr).map(move |di| DownCell::new(self.r + dr, self.i + di)))
    }

    /// The `k` up cells along the bottom edge.
    pub fn bottom_row(&self) -> impl Iterator<Item = UpCell> + '_ {
        let row = self.r + self.k - 1;
        (0..self.k).map(move |di| UpCell::new(row, self.i + di))
    }

    /// Adjacent `(inside up cell, outside down cell)` pairs across the boundary.
    /// Pairs whose outer side is the outside of the size-`n` triangle are omitted.
    pub fn boundary_pairs(&self, n: usize) -> Vec<(UpCell, DownCell)> {
        let mut out = Vec::new();
        for u in self.up_cells() {
            for nb in down_neighbors(u, n).expect("cell inside a valid triangle") {
                if let Neighbor::Inside(d) = nb {
                    if !self.contains_down(d) {
                        out.push((u, d));
                    }
                }
            }
        }
        out
    }

    /// Smallest upward triangle containing every given vertex.
    pub fn enclosing(n: usize, vertices: impl IntoIterator<Item = Vertex>) -> Option<SubTriangle> {
        let mut left = usize::MAX;
        let mut right = usize::MAX;
        let mut bottom = usize::MAX;
        for v in vertices {
            left = left.min(v.j);
            right = right.min(v.rho - v.j);
            bottom = bottom.min(n - v.rho);
        }
        if left == usize::MAX {
            return None;
        }
        SubTriangle::from_distances(n, left, right, bottom)
    }
}

/// Signed size of `A ∩ B` from the componentwise-max formula; negative when disjoint.
pub fn intersection_size(a: &SubTriangle, b: &SubTriangle) -> i64 {
    let left = a.i.max(b.i) as i64;
    let right = (a.r - a.i).max(b.r - b.i) as i64;
    let bottom = a.bottom_line().min(b.bottom_line()) as i64;
    bottom - left - right
}

/// `A ∩ B`. `None` means the closed regions are disjoint; a size-0 result is a single point.
pub fn intersect(a: &SubTriangle, b: &SubTriangle) -> Option<SubTriangle> {
    let size = intersection_size(a, b);
    if size < 0 {
        return None;
    }
    let left = a.i.max(b.i);
    let right = (a.r - a.i).max(b.r - b.i);
    Some(SubTriangle::new(left + right, left, size as usize))
}

/// `A ∨ B`: the smallest upward triangle containing both.
pub fn join(a: &SubTriangle, b: &SubTriangle) -> SubTriangle {
    let left = a.i.min(b.i);
    let right = (a.r - a.i).min(b.r - b.i);
    let bottom = a.bottom_line().max(b.bottom_line());
    SubTriangle::new(left + right, left, bottom - left - right)
}

/// Every sub-triangle with `k >= 1`, in `(r, i, k)` order.
pub fn enumerate_subtriangles(n: usize) -> impl Iterator<Item = SubTriangle> {
    (0..n).flat_map(move |r| {
        (0..=r).flat_map(move |i| (1..=n - r).map(move |k| SubTriangle::new(r, i, k)))
    })
}

/// A unit segment of the grid, stored with its endpoints in sorted order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GridSegment {
    pub a: Vertex,
    pub b: Vertex,
}

impl GridSegment {
    pub fn new(p: Vertex, q: Vertex) -> Self {
        if p <= q {
            GridSegment { a: p, b: q }
        } else {
            GridSegment { a: q, b: p }
        }
    }

    /// The edge shared by an adjacent up/down pair.
    pub fn between(u: UpCell, d: DownCell) -> Option<GridSegment> {
        let uv = u.vertices();
        let shared: Vec<Vertex> = d.vertices().into_iter().filter(|v| uv.contains(v)).collect();
        match shared.as_slice() {
            [p, q] => Some(GridSegment::new(*p, *q)),
            _ => None,
        }
    }

    /// The up/down pair separated by an interior segment.
    pub fn cells(&self, n: usize) -> Option<(UpCell, DownCell)> {
        let (a, b) = (self.a, self.b);
        if a.rho == b.rho && b.j == a.j + 1 {
            // horizontal: below is the top of a down cell, above the bottom of an up cell
            let u = UpCell::new(a.rho.checked_sub(1)?, a.j);
            let d = DownCell::new(a.rho, a.j);
            return (u.is_valid(n) && d.is_valid(n)).then_some((u, d));
        }
        if b.rho == a.rho + 1 && b.j == a.j + 1 {
            let u = UpCell::new(a.rho, a.j);
            let d = DownCell::new(a.rho, a.j);
            return (u.is_valid(n) && d.is_valid(n)).then_some((u, d));
        }
        if b.rho == a.rho + 1 && b.j == a.j {
            let u = UpCell::new(a.rho, a.j);
            let d = DownCell::new(a.rho, a.j.checked_sub(1)?);
            return (u.is_valid(n) && d.is_valid(n)).then_some((u, d));
        }
        None
    }
}

/// Every interior `(up, down)` adjacency of the size-`n` triangle, one per interior segment.
pub fn interior_pairs(n: usize) -> impl Iterator<Item = (UpCell, DownCell)> {
    (0..down_count(n)).flat_map(|idx| {
        let d = DownCell::from_index(idx);
        Dir::ALL.into_iter().map(move |dir| (d.neighbor(dir), d))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    Cw,
    Ccw,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Cw => Orientation::Ccw,
            Orientation::Ccw => Orientation::Cw,
        }
    }
}

/// Twice the signed area under the Y-down embedding. Positive means clockwise on screen.
pub fn shoelace(points: &[Point]) -> i64 {
    let m = points.len();
    (0..m)
        .map(|k| {
            let p = points[k];
            let q = points[(k + 1) % m];
            p.x * q.y - q.x * p.y
        })
        .sum()
}

pub fn orientation(points: &[Point]) -> Result<Orientation> {
    match shoelace(points) {
        0 => Err(Error::Degenerate),
        s if s > 0 => Ok(Orientation::Cw),
        _ => Ok(Orientation::Ccw),
    }
}

impl fmt::Display for UpCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Up({},{})", self.r, self.i)
    }
}

impl fmt::Display for DownCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Down({},{})", self.r, self.i)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rho, self.j)
    }
}

impl fmt::Display for SubTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T(r={},i={},k={})", self.r, self.i, self.k)
    }
}

impl fmt::Display for GridSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}
