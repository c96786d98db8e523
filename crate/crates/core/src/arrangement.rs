//! Hole arrangements, the spread-out condition and the merge-based uniqueness test.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{self, enumerate_subtriangles, intersection_size, join, DownCell, SubTriangle, UpCell};

/// Interior-disjoint upward holes inside a size-`n` triangle whose sizes sum to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HoleArrangement {
    n: usize,
    holes: Vec<SubTriangle>,
}

impl HoleArrangement {
    pub fn new(n: usize, mut holes: Vec<SubTriangle>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("grid size must be at least 1".into()));
        }
        for h in &holes {
            if h.k == 0 {
                return Err(Error::Validation(format!("hole {h} has size 0")));
            }
            h.check(n)?;
        }
        holes.sort();
        for (a, h) in holes.iter().enumerate() {
            for g in &holes[a + 1..] {
                if intersection_size(h, g) > 0 {
                    return Err(Error::Validation(format!("holes {h} and {g} overlap")));
                }
            }
        }
        let total: usize = holes.iter().map(|h| h.k).sum();
        if total != n {
            return Err(Error::Validation(format!("hole sizes sum to {total}, expected {n}")));
        }
        Ok(HoleArrangement { n, holes })
    }

    pub fn from_unit_cells(n: usize, cells: impl IntoIterator<Item = UpCell>) -> Result<Self> {
        Self::new(n, cells.into_iter().map(|u| u.as_triangle()).collect())
    }

    /// The arrangement whose only hole is the whole triangle.
    pub fn whole(n: usize) -> Self {
        HoleArrangement { n, holes: vec![SubTriangle::whole(n)] }
    }

    /// All `n` holes on the bottom row.
    pub fn bottom_row(n: usize) -> Self {
        Self::from_unit_cells(n, (0..n).map(|i| UpCell::new(n - 1, i))).expect("bottom row is valid")
    }

    /// Unit holes in the three corners plus a size-`n-3` hole in the middle.
    pub fn corners_and_center(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Validation("corners-and-center needs n >= 3".into()));
        }
        let mut holes = vec![
            SubTriangle::new(0, 0, 1),
            SubTriangle::new(n - 1, 0, 1),
            SubTriangle::new(n - 1, n - 1, 1),
        ];
        if n > 3 {
            holes.push(SubTriangle::new(2, 1, n - 3));
        }
        Self::new(n, holes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn holes(&self) -> &[SubTriangle] {
        &self.holes
    }

    pub fn is_unit(&self) -> bool {
        self.holes.iter().all(|h| h.k == 1)
    }

    /// For each up cell (by index), the hole containing it.
    pub fn up_hole_map(&self) -> Vec<Option<usize>> {
        let mut map = vec![None; grid::up_count(self.n)];
        for (idx, h) in self.holes.iter().enumerate() {
            for u in h.up_cells() {
                map[u.index()] = Some(idx);
            }
        }
        map
    }

    /// For each down cell (by index), the hole containing it.
    pub fn down_hole_map(&self) -> Vec<Option<usize>> {
        let mut map = vec![None; grid::down_count(self.n)];
        for (idx, h) in self.holes.iter().enumerate() {
            for d in h.down_cells() {
                map[d.index()] = Some(idx);
            }
        }
        map
    }

    pub fn hole_containing_up(&self, u: UpCell) -> Option<usize> {
        self.holes.iter().position(|h| h.contains_up(u))
    }

    pub fn hole_containing_down(&self, d: DownCell) -> Option<usize> {
        self.holes.iter().position(|h| h.contains_down(d))
    }

    /// The up cells on the bottom rows of the holes.
    fn unit_cells(&self) -> Vec<UpCell> {
        let mut cells: Vec<UpCell> = self.holes.iter().flat_map(|h| h.bottom_row().collect::<Vec<_>>()).collect();
        cells.sort();
        cells
    }
}

/// `Σ max(0, size(s ∩ T))` over the given holes.
pub fn saturation_weight(holes: &[SubTriangle], t: &SubTriangle) -> usize {
    holes.iter().map(|s| intersection_size(s, t).max(0) as usize).sum()
}

/// The first sub-triangle (in `(r, i, k)` order) violating the spread-out inequality.
///
/// Counts the unitized holes with per-row prefix sums, growing each apex's
/// triangle one row at a time, so the whole scan is `O(n^3)`.
pub fn spread_out_witness(arr: &HoleArrangement) -> Option<SubTriangle> {
    let n = arr.n;
    let mut prefix: Vec<Vec<usize>> = (0..n).map(|r| vec![0; r + 2]).collect();
    for u in arr.unit_cells() {
        prefix[u.r][u.i + 1] += 1;
    }
    for row in prefix.iter_mut() {
        for x in 1..row.len() {
            row[x] += row[x - 1];
        }
    }
    for r in 0..n {
        for i in 0..=r {
            let mut count = 0;
            for k in 1..=n - r {
                let row = &prefix[r + k - 1];
                count += row[i + k] - row[i];
                if count > k {
                    return Some(SubTriangle::new(r, i, k));
                }
            }
        }
    }
    None
}

pub fn is_spread_out(arr: &HoleArrangement) -> bool {
    spread_out_witness(arr).is_none()
}

pub(crate) fn require_spread_out(arr: &HoleArrangement) -> Result<()> {
    match spread_out_witness(arr) {
        None => Ok(()),
        Some(t) => Err(Error::Precondition(format!("arrangement is not spread-out (witness {t})"))),
    }
}

/// All sub-triangles on which the spread-out inequality is tight.
pub fn saturated_triangles(arr: &HoleArrangement) -> Result<Vec<SubTriangle>> {
    require_spread_out(arr)?;
    Ok(saturated_by(arr.n, &arr.holes))
}

pub(crate) fn saturated_by(n: usize, holes: &[SubTriangle]) -> Vec<SubTriangle> {
    enumerate_subtriangles(n).filter(|t| saturation_weight(holes, t) == t.k).collect()
}

/// Replace every hole by the unit cells of its bottom row.
pub fn unitize(arr: &HoleArrangement) -> Result<HoleArrangement> {
    require_spread_out(arr)?;
    HoleArrangement::from_unit_cells(arr.n, arr.unit_cells())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeStep {
    pub first: SubTriangle,
    pub second: SubTriangle,
    pub joined: SubTriangle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeOutcome {
    pub unique: bool,
    pub trace: Vec<MergeStep>,
    /// The pairwise non-touching set left when no more merges apply.
    pub remaining: Vec<SubTriangle>,
}

/// Repeatedly join the first pair of triangles meeting in exactly one point.
/// The arrangement tiles uniquely iff this ends at the whole triangle.
pub fn unique_by_merge(arr: &HoleArrangement) -> Result<MergeOutcome> {
    require_spread_out(arr)?;
    let mut current = arr.holes.clone();
    let mut trace = Vec::new();
    'outer: loop {
        for a in 0..current.len() {
            for b in a + 1..current.len() {
                if intersection_size(&current[a], &current[b]) == 0 {
                    let (first, second) = (current[a], current[b]);
                    let joined = join(&first, &second);
                    current.remove(b);
                    current.remove(a);
                    current.push(joined);
                    current.sort();
                    trace.push(MergeStep { first, second, joined });
                    continue 'outer;
                }
            }
        }
        break;
    }
    let unique = current == [SubTriangle::whole(arr.n)];
    Ok(MergeOutcome { unique, trace, remaining: current })
}
