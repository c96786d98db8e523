//! Exhaustive arrangement generation and the uniquely-tileable census.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

use crate::arrangement::{is_spread_out, unique_by_merge, HoleArrangement};
use crate::grid::{self, enumerate_subtriangles, intersection_size, SubTriangle, UpCell};
use crate::tiling;

/// Every arrangement of size `n`: all `n`-subsets of up cells, plus, when
/// `generalized`, every interior-disjoint family of larger holes with sizes summing to `n`.
/// Spread-out or not; the order is deterministic.
pub fn all_arrangements(n: usize, generalized: bool) -> Vec<HoleArrangement> {
    let candidates: Vec<SubTriangle> = if generalized {
        enumerate_subtriangles(n).collect()
    } else {
        (0..grid::up_count(n)).map(|idx| UpCell::from_index(idx).as_triangle()).collect()
    };
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(n, &candidates, 0, n, &mut chosen, &mut out);
    out
}

fn extend(
    n: usize,
    candidates: &[SubTriangle],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<SubTriangle>,
    out: &mut Vec<HoleArrangement>,
) {
    if remaining == 0 {
        out.push(HoleArrangement::new(n, chosen.clone()).expect("disjoint holes of total size n"));
        return;
    }
    for (at, t) in candidates.iter().enumerate().skip(from) {
        if t.k > remaining || chosen.iter().any(|c| intersection_size(c, t) > 0) {
            continue;
        }
        chosen.push(*t);
        extend(n, candidates, at + 1, remaining - t.k, chosen, out);
        chosen.pop();
    }
}

/// All spread-out unit arrangements of size `n`.
pub fn spread_out_unit_arrangements(n: usize) -> Vec<HoleArrangement> {
    all_arrangements(n, false).into_iter().filter(is_spread_out).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    /// Number of `n`-subsets of up cells examined.
    pub arrangements: usize,
    pub spread_out: usize,
    pub uniquely_tileable: usize,
    /// tiling count -> number of spread-out arrangements with that count
    pub histogram: BTreeMap<usize, usize>,
}

/// Census over unit arrangements. Arrangements are processed in parallel; the
/// aggregate does not depend on scheduling.
pub fn census(n: usize) -> CensusReport {
    let all = all_arrangements(n, false);
    let rows: Vec<(bool, bool, usize)> = all
        .par_iter()
        .map(|arr| {
            if !is_spread_out(arr) {
                return (false, false, 0);
            }
            let unique = unique_by_merge(arr).expect("spread-out").unique;
            (true, unique, tiling::count(arr))
        })
        .collect();
    let mut histogram = BTreeMap::new();
    for (spread, _, count) in &rows {
        if *spread {
            *histogram.entry(*count).or_insert(0) += 1;
        }
    }
    CensusReport {
        n,
        arrangements: all.len(),
        spread_out: rows.iter().filter(|r| r.0).count(),
        uniquely_tileable: rows.iter().filter(|r| r.1).count(),
        histogram,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(a: usize, b: usize) -> usize {
        (0..b).fold(1, |acc, x| acc * (a - x) / (x + 1))
    }

    #[test]
    fn unit_arrangement_counts() {
        for n in 1..=5 {
            assert_eq!(all_arrangements(n, false).len(), binomial(grid::up_count(n), n));
        }
    }

    #[test]
    fn generalized_includes_units() {
        for n in 1..=4 {
            let g = all_arrangements(n, true);
            for u in all_arrangements(n, false) {
                assert!(g.contains(&u));
            }
            assert!(g.contains(&HoleArrangement::whole(n)));
        }
    }

    #[test]
    fn census_small() {
        let r = census(3);
        assert_eq!(r.uniquely_tileable, 16);
        assert_eq!(r.histogram.get(&1), Some(&16));
        assert_eq!(r.histogram.values().sum::<usize>(), r.spread_out);
    }
}
