//! Segments present in every tiling of an arrangement.
//!
//! Only interior segments are reported; the outer boundary is always present.

use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

use crate::arrangement::{require_spread_out, saturated_by, unitize, HoleArrangement};
use crate::error::{Error, Result};
use crate::grid::{self, down_neighbors, intersection_size, up_neighbors, DownCell, GridSegment, Neighbor, SubTriangle, UpCell};
use crate::regiongraph::RegionGraph;
use crate::tiling::{self, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Scc,
    Procedure,
    Oracle,
}

impl Method {
    pub fn parse(s: &str) -> Option<Method> {
        match s {
            "scc" => Some(Method::Scc),
            "procedure" => Some(Method::Procedure),
            "oracle" => Some(Method::Oracle),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Scc => "scc",
            Method::Procedure => "procedure",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedReport {
    pub arrangement: HoleArrangement,
    pub method: Method,
    pub forced: BTreeSet<GridSegment>,
}

fn segments(pairs: impl IntoIterator<Item = (UpCell, DownCell)>) -> BTreeSet<GridSegment> {
    pairs.into_iter().map(|(u, d)| GridSegment::between(u, d).expect("adjacent pair")).collect()
}

/// A present segment is forced iff the regions on its two sides lie in different strong components.
pub fn forced_segments_scc(t: &Tiling) -> Result<ForcedReport> {
    let g = RegionGraph::build(t).map_err(|e| Error::Precondition(e.to_string()))?;
    let comp = g.sccs().component_of;
    let forced = segments(
        t.present_pairs().into_iter().filter(|&(u, d)| comp[g.region_of_up(u)] != comp[g.region_of_down(d)]),
    );
    Ok(ForcedReport { arrangement: t.arrangement().clone(), method: Method::Scc, forced })
}

/// Intersection of the segment sets of all tilings.
pub fn forced_segments_oracle(arr: &HoleArrangement, limit: usize) -> Result<ForcedReport> {
    require_spread_out(arr)?;
    let all = tiling::enumerate_limited(arr, limit)?;
    let mut common: Option<BTreeSet<(UpCell, DownCell)>> = None;
    for t in &all {
        let here: BTreeSet<_> = t.present_pairs().into_iter().collect();
        common = Some(match common {
            None => here,
            Some(c) => c.intersection(&here).copied().collect(),
        });
    }
    let forced = segments(common.unwrap_or_default());
    Ok(ForcedReport { arrangement: arr.clone(), method: Method::Oracle, forced })
}

/// Saturated triangles, smallest first; each is filled by forced moves inside it
/// and then treated as a single hole.
///
/// Everything inside a saturated triangle is independent of the outside, so
/// the pairs that can carry a rhombus are exactly those that stay free after
/// forced moves, plus the diagonals of the forced rhombi.
pub fn forced_segments_procedure(arr: &HoleArrangement) -> Result<ForcedReport> {
    require_spread_out(arr)?;
    let n = arr.n();
    let units = unitize(arr)?;
    let mut holes: Vec<SubTriangle> = units.holes().to_vec();
    // cells already inside a processed triangle or a hole
    let mut up_done = vec![false; grid::up_count(n)];
    let mut down_done = vec![false; grid::down_count(n)];
    for h in &holes {
        h.up_cells().for_each(|u| up_done[u.index()] = true);
    }
    let mut unforced: BTreeSet<(UpCell, DownCell)> = BTreeSet::new();

    while !(holes.len() == 1 && holes[0] == SubTriangle::whole(n)) {
        // holes are either inside a candidate or meet it in at most a point
        let candidates: Vec<SubTriangle> = saturated_by(n, &holes)
            .into_iter()
            .filter(|t| !holes.iter().any(|h| h.contains(t)))
            .filter(|t| holes.iter().all(|h| t.contains(h) || intersection_size(h, t) <= 0))
            .collect();
        let t = candidates
            .iter()
            .find(|t| !candidates.iter().any(|s| s != *t && t.contains(s)))
            .copied()
            .ok_or_else(|| Error::Unsupported("no processable saturated triangle".into()))?;

        fill_by_forced_moves(n, &t, &mut up_done, &mut down_done, &mut unforced)?;
        holes.retain(|h| !t.contains(h));
        holes.push(t);
        holes.sort();
    }

    let up_holes = arr.up_hole_map();
    let down_holes = arr.down_hole_map();
    let forced = segments(grid::interior_pairs(n).filter(|&(u, d)| {
        let same_hole = down_holes[d.index()].is_some() && down_holes[d.index()] == up_holes[u.index()];
        !same_hole && !unforced.contains(&(u, d))
    }));
    Ok(ForcedReport { arrangement: arr.clone(), method: Method::Procedure, forced })
}

/// Place every rhombus inside `t` that is the only option for some cell, then
/// record which pairs inside `t` can still carry a rhombus.
fn fill_by_forced_moves(
    n: usize,
    t: &SubTriangle,
    up_done: &mut [bool],
    down_done: &mut [bool],
    unforced: &mut BTreeSet<(UpCell, DownCell)>,
) -> Result<()> {
    let downs: Vec<DownCell> = t.down_cells().filter(|d| !down_done[d.index()]).collect();
    let ups: Vec<UpCell> = t.up_cells().filter(|u| !up_done[u.index()]).collect();
    if downs.len() != ups.len() {
        return Err(Error::Unsupported(format!("saturated triangle {t} is unbalanced")));
    }
    let up_options = |d: DownCell, up_done: &[bool]| -> Result<Vec<UpCell>> {
        Ok(up_neighbors(d, n)?.into_iter().filter(|u| t.contains_up(*u) && !up_done[u.index()]).collect())
    };
    let down_options = |u: UpCell, down_done: &[bool]| -> Result<Vec<DownCell>> {
        Ok(down_neighbors(u, n)?
            .into_iter()
            .filter_map(|nb| match nb {
                Neighbor::Inside(d) if t.contains_down(d) && !down_done[d.index()] => Some(d),
                _ => None,
            })
            .collect())
    };
    let stuck = |cell: String| Error::Unsupported(format!("cell {cell} cannot be covered inside {t}"));
    loop {
        let mut placed = None;
        for &d in downs.iter().filter(|d| !down_done[d.index()]) {
            match up_options(d, up_done)?.as_slice() {
                [] => return Err(stuck(d.to_string())),
                [u] => {
                    placed = Some((*u, d));
                    break;
                }
                _ => {}
            }
        }
        if placed.is_none() {
            for &u in ups.iter().filter(|u| !up_done[u.index()]) {
                match down_options(u, down_done)?.as_slice() {
                    [] => return Err(stuck(u.to_string())),
                    [d] => {
                        placed = Some((u, *d));
                        break;
                    }
                    _ => {}
                }
            }
        }
        let Some((u, d)) = placed else { break };
        down_done[d.index()] = true;
        up_done[u.index()] = true;
        unforced.insert((u, d));
    }
    for &d in downs.iter().filter(|d| !down_done[d.index()]) {
        for u in up_options(d, up_done)? {
            unforced.insert((u, d));
        }
    }
    t.up_cells().for_each(|u| up_done[u.index()] = true);
    t.down_cells().for_each(|d| down_done[d.index()] = true);
    Ok(())
}

/// Forced segments by one method; the tiling-based method builds a tiling first.
pub fn forced_segments(arr: &HoleArrangement, method: Method, limit: usize) -> Result<ForcedReport> {
    match method {
        Method::Scc => {
            require_spread_out(arr)?;
            let t = tiling::construct(arr).ok_or_else(|| Error::Precondition("arrangement has no tiling".into()))?;
            forced_segments_scc(&t)
        }
        Method::Procedure => forced_segments_procedure(arr),
        Method::Oracle => forced_segments_oracle(arr, limit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::all_arrangements;
    use crate::grid::Vertex;

    fn corners3() -> HoleArrangement {
        HoleArrangement::corners_and_center(3).unwrap()
    }

    fn hole_boundary_3() -> BTreeSet<GridSegment> {
        // the inner side of each corner cell
        [
            GridSegment::new(Vertex::new(1, 0), Vertex::new(1, 1)),
            GridSegment::new(Vertex::new(2, 0), Vertex::new(3, 1)),
            GridSegment::new(Vertex::new(2, 2), Vertex::new(3, 2)),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn corner_examples() {
        let arr = corners3();
        let t = tiling::construct(&arr).unwrap();
        assert_eq!(forced_segments_scc(&t).unwrap().forced, hole_boundary_3());
        assert_eq!(forced_segments_oracle(&arr, 100).unwrap().forced, hole_boundary_3());
        assert_eq!(forced_segments_procedure(&arr).unwrap().forced, hole_boundary_3());
    }

    #[test]
    fn unique_tilings_force_everything() {
        for n in 1..=6 {
            let arr = HoleArrangement::bottom_row(n);
            let t = Tiling::all_vertical(arr.clone());
            let all = segments(t.present_pairs());
            assert_eq!(forced_segments_scc(&t).unwrap().forced, all);
            assert_eq!(forced_segments_procedure(&arr).unwrap().forced, all);
        }
        assert!(forced_segments_scc(&Tiling::all_vertical(HoleArrangement::whole(1))).unwrap().forced.is_empty());
        for arr in all_arrangements(2, true).into_iter().filter(crate::arrangement::is_spread_out) {
            let t = tiling::construct(&arr).unwrap();
            assert_eq!(forced_segments_procedure(&arr).unwrap().forced, segments(t.present_pairs()));
        }
    }

    #[test]
    fn methods_agree_exhaustively_small() {
        for n in 1..=4 {
            for arr in all_arrangements(n, true).into_iter().filter(crate::arrangement::is_spread_out) {
                let oracle = forced_segments_oracle(&arr, 10_000).unwrap().forced;
                let proc = forced_segments_procedure(&arr).unwrap().forced;
                assert_eq!(proc, oracle, "{arr:?}");
                for t in tiling::enumerate(&arr) {
                    assert_eq!(forced_segments_scc(&t).unwrap().forced, oracle, "{arr:?}");
                }
            }
        }
    }

    #[test]
    fn invalid_input_is_rejected() {
        let bad = HoleArrangement::from_unit_cells(3, [UpCell::new(0, 0), UpCell::new(1, 0), UpCell::new(1, 1)]).unwrap();
        assert!(matches!(forced_segments_procedure(&bad), Err(Error::Precondition(_))));
        assert!(matches!(forced_segments_oracle(&bad, 10), Err(Error::Precondition(_))));
        let broken = Tiling::from_parts(corners3(), vec![None; 3]);
        assert!(matches!(forced_segments_scc(&broken), Err(Error::Precondition(_))));
    }
}
