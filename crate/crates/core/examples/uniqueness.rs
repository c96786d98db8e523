//! Three ways to decide whether an arrangement has exactly one tiling.
//!
//! `cargo run --example uniqueness`

use tritile::arrangement::unique_by_merge;
use tritile::census::spread_out_unit_arrangements;
use tritile::regiongraph::unique_by_acyclicity;
use tritile::tiling;

fn main() -> tritile::Result<()> {
    for n in 1..=4 {
        let arrs = spread_out_unit_arrangements(n);
        let mut unique = 0;
        for arr in &arrs {
            let merge = unique_by_merge(arr)?.unique;
            let graph = unique_by_acyclicity(&tiling::construct(arr).expect("spread-out"))?;
            let count = tiling::count(arr);
            assert_eq!(merge, graph);
            assert_eq!(merge, count == 1);
            unique += merge as usize;
        }
        println!("n = {n}: {} spread-out arrangements, {unique} uniquely tileable", arrs.len());
    }

    // the merge trace for the bottom row: touching holes join into saturated triangles
    let arr = tritile::HoleArrangement::bottom_row(4);
    let outcome = unique_by_merge(&arr)?;
    for step in &outcome.trace {
        println!("  {} + {} -> {}", step.first, step.second, step.joined);
    }
    println!("bottom row, n = 4: unique = {}", outcome.unique);
    Ok(())
}
