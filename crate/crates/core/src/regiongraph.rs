//! The directed multigraph on the regions of a tiling: holes, rhombi and the exterior.
//!
//! There is an edge `a -> b` for every unit edge where an up cell of `a` meets a
//! down cell of `b`, and for every boundary edge of an up cell of `a` (then `b`
//! is the exterior). Parallel edges are kept.

use serde::Serialize;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{self, down_neighbors, orientation, DownCell, Neighbor, Orientation, Point, UpCell};
use crate::tiling::Tiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RegionId {
    Hole(usize),
    Rhombus(DownCell),
    Exterior,
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionId::Hole(h) => write!(f, "H{h}"),
            RegionId::Rhombus(d) => write!(f, "R{}_{}", d.r, d.i),
            RegionId::Exterior => write!(f, "EXT"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RegionGraph {
    /// Node ids in increasing order: holes, then rhombi by down cell, then the exterior.
    ids: Vec<RegionId>,
    edges: Vec<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    up_region: Vec<usize>,
    down_region: Vec<usize>,
    rhombus_up: Vec<Option<UpCell>>,
}

impl RegionGraph {
    pub fn build(t: &Tiling) -> Result<Self> {
        t.validate()?;
        let n = t.n();
        let arr = t.arrangement();
        let holes = arr.holes().len();
        let mut ids: Vec<RegionId> = (0..holes).map(RegionId::Hole).collect();
        let mut rhombus_up = vec![None; holes];
        let mut down_region = vec![usize::MAX; grid::down_count(n)];
        let mut up_region = vec![usize::MAX; grid::up_count(n)];
        for (h, tri) in arr.holes().iter().enumerate() {
            tri.up_cells().for_each(|u| up_region[u.index()] = h);
            tri.down_cells().for_each(|d| down_region[d.index()] = h);
        }
        for rh in t.rhombi() {
            let node = ids.len();
            ids.push(RegionId::Rhombus(rh.down));
            rhombus_up.push(Some(rh.up()));
            down_region[rh.down.index()] = node;
            up_region[rh.up().index()] = node;
        }
        let exterior = ids.len();
        ids.push(RegionId::Exterior);
        rhombus_up.push(None);

        let mut edges = Vec::new();
        for (idx, &a) in up_region.iter().enumerate() {
            let u = UpCell::from_index(idx);
            for nb in down_neighbors(u, n)? {
                match nb {
                    Neighbor::Outside => edges.push((a, exterior)),
                    Neighbor::Inside(d) => {
                        let b = down_region[d.index()];
                        if b != a {
                            edges.push((a, b));
                        }
                    }
                }
            }
        }
        edges.sort();
        let mut succ = vec![Vec::new(); ids.len()];
        let mut pred = vec![Vec::new(); ids.len()];
        for &(a, b) in &edges {
            succ[a].push(b);
            pred[b].push(a);
        }
        Ok(RegionGraph { ids, edges, succ, pred, up_region, down_region, rhombus_up })
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn id(&self, node: usize) -> RegionId {
        self.ids[node]
    }

    pub fn ids(&self) -> &[RegionId] {
        &self.ids
    }

    pub fn node_of(&self, id: RegionId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn exterior(&self) -> usize {
        self.ids.len() - 1
    }

    /// Edges with multiplicity, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Successors with multiplicity.
    pub fn successors(&self, node: usize) -> &[usize] {
        &self.succ[node]
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.succ[node].len()
    }

    pub fn in_degree(&self, node: usize) -> usize {
        self.pred[node].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.succ[a].contains(&b)
    }

    pub fn is_rhombus(&self, node: usize) -> bool {
        matches!(self.ids[node], RegionId::Rhombus(_))
    }

    pub fn rhombus_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ids.len()).filter(|&v| self.is_rhombus(v))
    }

    pub fn region_of_up(&self, u: UpCell) -> usize {
        self.up_region[u.index()]
    }

    pub fn region_of_down(&self, d: DownCell) -> usize {
        self.down_region[d.index()]
    }

    /// For a rhombus node, its up cell.
    pub fn rhombus_up(&self, node: usize) -> Option<UpCell> {
        self.rhombus_up[node]
    }

    pub fn rhombus_down(&self, node: usize) -> Option<DownCell> {
        match self.ids[node] {
            RegionId::Rhombus(d) => Some(d),
            _ => None,
        }
    }

    pub fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.ids.len()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            for &w in &self.succ[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Tarjan's strongly connected components, with the condensation in
    /// topological order (ties broken by smallest member).
    pub fn sccs(&self) -> Condensation {
        let raw = tarjan(&self.succ);
        let count = raw.len();
        let mut component_of = vec![0; self.ids.len()];
        let mut members: Vec<Vec<usize>> = raw;
        for m in members.iter_mut() {
            m.sort();
        }
        for (c, m) in members.iter().enumerate() {
            for &v in m {
                component_of[v] = c;
            }
        }
        let mut indeg = vec![0usize; count];
        let mut dag = vec![Vec::new(); count];
        for &(a, b) in &self.edges {
            let (ca, cb) = (component_of[a], component_of[b]);
            if ca != cb {
                dag[ca].push(cb);
                indeg[cb] += 1;
            }
        }
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
            (0..count).filter(|&c| indeg[c] == 0).map(|c| Reverse((members[c][0], c))).collect();
        let mut order = Vec::with_capacity(count);
        while let Some(Reverse((_, c))) = heap.pop() {
            order.push(c);
            for &d in &dag[c] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    heap.push(Reverse((members[d][0], d)));
                }
            }
        }
        let mut rank = vec![0; count];
        for (pos, &c) in order.iter().enumerate() {
            rank[c] = pos;
        }
        let components = order.iter().map(|&c| members[c].clone()).collect();
        let component_of = component_of.iter().map(|&c| rank[c]).collect();
        Condensation { component_of, components }
    }

    /// Whether the rhombus subgraph has a directed cycle.
    pub fn has_rhombus_cycle(&self) -> bool {
        self.sccs().components.iter().any(|c| c.len() > 1)
    }

    /// Every simple directed cycle among rhombi, each listed once starting at its
    /// smallest node. Fails after `limit` cycles.
    pub fn simple_cycles(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.ids.len()];
        for start in self.rhombus_nodes() {
            self.cycles_from(start, start, &mut path, &mut on_path, &mut out, limit)?;
        }
        Ok(out)
    }

    fn cycles_from(
        &self,
        start: usize,
        v: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> Result<()> {
        path.push(v);
        on_path[v] = true;
        let mut next: Vec<usize> = self.succ[v].iter().copied().filter(|&w| self.is_rhombus(w) && w >= start).collect();
        next.dedup();
        for w in next {
            if w == start {
                if out.len() == limit {
                    return Err(Error::Resource { limit, what: "cycles" });
                }
                out.push(path.clone());
            } else if !on_path[w] {
                self.cycles_from(start, w, path, on_path, out, limit)?;
            }
        }
        path.pop();
        on_path[v] = false;
        Ok(())
    }

    /// Orientation of a rhombus cycle, traced through the centroids of its cells:
    /// down cell, then up cell of each rhombus in turn.
    pub fn cycle_orientation(&self, cycle: &[usize]) -> Result<Orientation> {
        let mut pts: Vec<Point> = Vec::with_capacity(2 * cycle.len());
        for &v in cycle {
            let d = self.rhombus_down(v).ok_or_else(|| Error::Precondition(format!("{} is not a rhombus", self.ids[v])))?;
            pts.push(d.centroid3());
            pts.push(self.rhombus_up[v].expect("rhombus").centroid3());
        }
        orientation(&pts)
    }

    /// Whether some simple rhombus cycle runs clockwise.
    pub fn has_cycle_with(&self, want: Orientation, limit: usize) -> Result<bool> {
        for c in self.simple_cycles(limit)? {
            if self.cycle_orientation(&c)? == want {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Rhombus components with no edge coming in from another rhombus component.
    pub fn source_rhombus_components(&self) -> Vec<Vec<usize>> {
        let cond = self.sccs();
        cond.components
            .iter()
            .enumerate()
            .filter(|(_, members)| self.is_rhombus(members[0]))
            .filter(|(c, members)| {
                members.iter().all(|&v| {
                    self.pred[v].iter().all(|&p| !self.is_rhombus(p) || cond.component_of[p] == *c)
                })
            })
            .map(|(_, m)| m.clone())
            .collect()
    }

    pub fn predecessors(&self, node: usize) -> &[usize] {
        &self.pred[node]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condensation {
    /// Position of each node's component in `components`.
    pub component_of: Vec<usize>,
    /// Components in topological order; members sorted.
    pub components: Vec<Vec<usize>>,
}

fn tarjan(succ: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State {
        index: usize,
        stack: Vec<usize>,
        on_stack: Vec<bool>,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        comps: Vec<Vec<usize>>,
    }

    fn strongconnect(v: usize, succ: &[Vec<usize>], s: &mut State) {
        s.idx[v] = Some(s.index);
        s.low[v] = s.index;
        s.index += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for &w in &succ[v] {
            match s.idx[w] {
                None => {
                    strongconnect(w, succ, s);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                _ => {}
            }
        }
        if Some(s.low[v]) == s.idx[v] {
            let mut comp = Vec::new();
            loop {
                let w = s.stack.pop().expect("tarjan stack");
                s.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            s.comps.push(comp);
        }
    }

    let n = succ.len();
    let mut s = State {
        index: 0,
        stack: Vec::new(),
        on_stack: vec![false; n],
        idx: vec![None; n],
        low: vec![0; n],
        comps: Vec::new(),
    };
    for v in 0..n {
        if s.idx[v].is_none() {
            strongconnect(v, succ, &mut s);
        }
    }
    s.comps
}

pub fn build(t: &Tiling) -> Result<RegionGraph> {
    RegionGraph::build(t)
}

/// Re-pair the up cell of each rhombus with the down cell of the next one along
/// the cycle `r1 -> r2 -> ... -> rk -> r1`. Rhombi are named by their down cells.
pub fn apply_cycle_flip(t: &Tiling, cycle: &[DownCell]) -> Result<Tiling> {
    if cycle.len() < 2 {
        return Err(Error::Flip("a cycle needs at least two rhombi".into()));
    }
    let mut sorted = cycle.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != cycle.len() {
        return Err(Error::Flip("cycle repeats a rhombus".into()));
    }
    let mut ups = Vec::with_capacity(cycle.len());
    for &d in cycle {
        let dir = t.dir(d).ok_or_else(|| Error::Flip(format!("{d} is not covered by a rhombus")))?;
        ups.push(d.neighbor(dir));
    }
    let mut out = t.clone();
    for m in 0..cycle.len() {
        let next = cycle[(m + 1) % cycle.len()];
        let dir = next
            .dir_to(ups[m])
            .ok_or_else(|| Error::Flip(format!("no edge from the rhombus at {} to the one at {next}", cycle[m])))?;
        out.set_dir(next, Some(dir));
    }
    out.validate()?;
    Ok(out)
}

/// Whether some tiling of the same arrangement glues the up cell of `a` to the
/// down cell of `b`. Requires the edge `a -> b`.
pub fn mergeable(t: &Tiling, a: DownCell, b: DownCell) -> Result<bool> {
    let g = RegionGraph::build(t)?;
    let (na, nb) = match (g.node_of(RegionId::Rhombus(a)), g.node_of(RegionId::Rhombus(b))) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(Error::Precondition("both cells must carry rhombi".into())),
    };
    if na == nb || !g.has_edge(na, nb) {
        return Err(Error::Precondition(format!("no edge from the rhombus at {a} to the one at {b}")));
    }
    Ok(g.reachable(nb, na))
}

/// A tiling is the only one for its holes iff its rhombus subgraph is acyclic.
pub fn unique_by_acyclicity(t: &Tiling) -> Result<bool> {
    Ok(!RegionGraph::build(t)?.has_rhombus_cycle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::HoleArrangement;
    use crate::grid::Dir;
    use crate::tiling::{self, Rhombus};

    fn corners3() -> HoleArrangement {
        HoleArrangement::from_unit_cells(3, [UpCell::new(0, 0), UpCell::new(2, 0), UpCell::new(2, 2)]).unwrap()
    }

    fn tiling_a() -> Tiling {
        let r = |r, i, d| Rhombus::new(DownCell::new(r, i), d);
        Tiling::from_rhombi(corners3(), [r(1, 0, Dir::W), r(2, 0, Dir::E), r(2, 1, Dir::N)]).unwrap()
    }

    fn tiling_b() -> Tiling {
        let r = |r, i, d| Rhombus::new(DownCell::new(r, i), d);
        Tiling::from_rhombi(corners3(), [r(1, 0, Dir::E), r(2, 0, Dir::N), r(2, 1, Dir::W)]).unwrap()
    }

    fn rh(g: &RegionGraph, r: usize, i: usize) -> usize {
        g.node_of(RegionId::Rhombus(DownCell::new(r, i))).unwrap()
    }

    #[test]
    fn single_hole() {
        let t = tiling::construct(&HoleArrangement::whole(1)).unwrap();
        let g = build(&t).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edges(), &[(0, 1), (0, 1), (0, 1)]);
        assert_eq!(g.sccs().components.len(), 2);
        assert!(unique_by_acyclicity(&t).unwrap());
    }

    #[test]
    fn corner_tiling_graph() {
        let g = build(&tiling_a()).unwrap();
        let (a, b, c) = (rh(&g, 1, 0), rh(&g, 2, 0), rh(&g, 2, 1));
        // A: D(1,0)+Up(1,0), D(2,0)+Up(2,1), D(2,1)+Up(1,1)
        assert!(g.has_edge(a, b));
        assert!(g.has_edge(b, c));
        assert!(g.has_edge(c, a));
        let cond = g.sccs();
        let sizes: Vec<usize> = cond.components.iter().map(|c| c.len()).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 1);
        assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 4);
        assert!(!unique_by_acyclicity(&tiling_a()).unwrap());
    }

    #[test]
    fn bottom_row_is_acyclic() {
        for n in 1..7 {
            let t = Tiling::all_vertical(HoleArrangement::bottom_row(n));
            let g = build(&t).unwrap();
            assert!(g.sccs().components.iter().all(|c| c.len() == 1));
            assert!(unique_by_acyclicity(&t).unwrap());
            for &(x, y) in g.edges() {
                if let (Some(dx), Some(dy)) = (g.rhombus_down(x), g.rhombus_down(y)) {
                    assert_eq!(dy.r + 1, dx.r);
                    assert!(!mergeable(&t, dx, dy).unwrap());
                }
            }
        }
    }

    #[test]
    fn degree_facts() {
        let t = tiling_a();
        let g = build(&t).unwrap();
        for v in 0..g.node_count() {
            match g.id(v) {
                RegionId::Rhombus(_) => {
                    assert_eq!(g.in_degree(v), 2);
                    assert_eq!(g.out_degree(v), 2);
                }
                RegionId::Hole(_) => {
                    assert_eq!(g.in_degree(v), 0);
                    assert_eq!(g.out_degree(v), 3);
                }
                RegionId::Exterior => {
                    assert_eq!(g.in_degree(v), 9);
                    assert_eq!(g.out_degree(v), 0);
                }
            }
        }
    }

    #[test]
    fn condensation_is_topological_and_deterministic() {
        let t = tiling_a();
        let g = build(&t).unwrap();
        let cond = g.sccs();
        for &(a, b) in g.edges() {
            assert!(cond.component_of[a] <= cond.component_of[b]);
        }
        assert_eq!(cond.components.first().unwrap(), &vec![0]);
        assert_eq!(cond.components.last().unwrap(), &vec![g.exterior()]);
        assert_eq!(cond, build(&t).unwrap().sccs());
    }

    #[test]
    fn cycle_flip_swaps_the_two_corner_tilings() {
        let a = tiling_a();
        let cycle = [DownCell::new(1, 0), DownCell::new(2, 0), DownCell::new(2, 1)];
        let b = apply_cycle_flip(&a, &cycle).unwrap();
        assert_eq!(b, tiling_b());
        // B's cycle runs the other way round
        let back = apply_cycle_flip(&b, &[DownCell::new(1, 0), DownCell::new(2, 1), DownCell::new(2, 0)]).unwrap();
        assert_eq!(back, a);
        assert!(matches!(
            apply_cycle_flip(&a, &[DownCell::new(1, 0), DownCell::new(2, 1), DownCell::new(2, 0)]),
            Err(Error::Flip(_))
        ));
    }

    #[test]
    fn corner_cycle_orientations() {
        let gb = build(&tiling_b()).unwrap();
        let cycles = gb.simple_cycles(100).unwrap();
        assert_eq!(cycles.len(), 1);
        // vertical rhombus on the left side: clockwise
        assert_eq!(gb.cycle_orientation(&cycles[0]).unwrap(), Orientation::Cw);
        let ga = build(&tiling_a()).unwrap();
        let cycles = ga.simple_cycles(100).unwrap();
        assert_eq!(ga.cycle_orientation(&cycles[0]).unwrap(), Orientation::Ccw);
    }

    #[test]
    fn mergeable_examples() {
        let t = tiling_a();
        let g = build(&t).unwrap();
        for &(x, y) in g.edges() {
            if let (Some(dx), Some(dy)) = (g.rhombus_down(x), g.rhombus_down(y)) {
                assert!(mergeable(&t, dx, dy).unwrap());
            }
        }
        assert!(matches!(mergeable(&t, DownCell::new(1, 0), DownCell::new(2, 1)), Err(Error::Precondition(_))));
    }
}
