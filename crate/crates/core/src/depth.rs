//! The depth function: for each vertex, how many rhombus short diagonals lie
//! on the lattice ray leaving it in a fixed direction.

use serde::Serialize;
use std::collections::HashSet;
use std::fmt::Write as _;

use crate::grid::{self, GridSegment, Point, RayDir, UpCell, Vertex};
use crate::tiling::Tiling;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthField {
    pub n: usize,
    pub dir: RayDir,
    /// Indexed by [`Vertex::index`].
    pub values: Vec<usize>,
}

impl DepthField {
    pub fn get(&self, v: Vertex) -> usize {
        self.values[v.index()]
    }

    /// Rows of the field, apex first.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..=self.n).map(|rho| (0..=rho).map(|j| self.get(Vertex::new(rho, j))).collect()).collect()
    }

    /// Triangular text matrix, one row per grid line.
    pub fn to_text(&self) -> String {
        let rows = self.rows();
        let width = self.values.iter().max().map_or(1, |m| m.to_string().len());
        let mut out = String::new();
        for (rho, row) in rows.iter().enumerate() {
            let pad = (self.n - rho) * (width + 1) / 2;
            out.push_str(&" ".repeat(pad));
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }

    /// Vertices where two fields disagree, with the signed change `other - self`.
    pub fn diff(&self, other: &DepthField) -> Vec<(Vertex, i64)> {
        Vertex::all(self.n)
            .filter_map(|v| {
                let delta = other.get(v) as i64 - self.get(v) as i64;
                (delta != 0).then_some((v, delta))
            })
            .collect()
    }

    /// Adjacent vertex pairs (each once, smaller first) whose values differ by more than one.
    pub fn steep_pairs(&self) -> Vec<(Vertex, Vertex)> {
        Vertex::all(self.n)
            .flat_map(|v| v.neighbors(self.n).filter(move |w| v < *w).map(move |w| (v, w)).collect::<Vec<_>>())
            .filter(|&(v, w)| self.get(v).abs_diff(self.get(w)) > 1)
            .collect()
    }

    /// Largest difference between the values at two adjacent vertices.
    pub fn max_step(&self) -> usize {
        Vertex::all(self.n)
            .flat_map(|v| v.neighbors(self.n).map(move |w| (v, w)).collect::<Vec<_>>())
            .map(|(v, w)| self.get(v).abs_diff(self.get(w)))
            .max()
            .unwrap_or(0)
    }
}

/// Short diagonals of all rhombi.
pub fn short_diagonals(t: &Tiling) -> HashSet<GridSegment> {
    t.rhombi().map(|rh| GridSegment::between(rh.up(), rh.down).expect("rhombus cells are adjacent")).collect()
}

fn cross(a: Point, b: Point) -> i64 {
    a.x * b.y - a.y * b.x
}

fn minus(a: Point, b: Point) -> Point {
    Point { x: a.x - b.x, y: a.y - b.y }
}

/// Holes lying between the rays from two adjacent vertices, ahead of the
/// segment joining them.
///
/// Along a ray the depth drops by one per short diagonal. Between two parallel
/// rays the difference is at most one plus this count: each such hole is an up
/// cell with no partner, which unbalances the strip between the two lines.
pub fn holes_between_rays(t: &Tiling, p: Vertex, q: Vertex, dir: RayDir) -> usize {
    let (drho, dj) = dir.delta();
    let ahead = Point { x: 2 * dj - drho, y: drho };
    let scaled = |v: Vertex| {
        let pt = v.point();
        Point { x: 3 * pt.x, y: 3 * pt.y }
    };
    let (pp, qq) = (scaled(p), scaled(q));
    let side = cross(minus(qq, pp), ahead).signum();
    if side == 0 {
        return 0;
    }
    t.arrangement()
        .holes()
        .iter()
        .flat_map(|h| h.bottom_row().collect::<Vec<_>>())
        .filter(|u: &UpCell| {
            let c = u.centroid3();
            let strip = cross(ahead, minus(c, pp)).signum() * cross(ahead, minus(c, qq)).signum() < 0;
            strip && cross(minus(qq, pp), minus(c, pp)).signum() == side
        })
        .count()
}

pub fn depth_field(t: &Tiling, dir: RayDir) -> DepthField {
    let n = t.n();
    let diagonals = short_diagonals(t);
    let mut values = vec![0; grid::vertex_count(n)];
    for p in Vertex::all(n) {
        let mut here = p;
        let mut count = 0;
        while let Some(next) = here.step(dir, n) {
            if diagonals.contains(&GridSegment::new(here, next)) {
                count += 1;
            }
            here = next;
        }
        values[p.index()] = count;
    }
    DepthField { n, dir, values }
}
