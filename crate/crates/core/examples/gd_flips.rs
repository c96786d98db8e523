//! GD flips on the size-6 arrangement with exactly two tilings, and the
//! canonical tiling without clockwise GDs.
//!
//! `cargo run --example gd_flips`

use tritile::gdflip::{apply_gd_flip, canonicalize, find_ccw_gds, find_cw_gds, gd_flip_graph, potential, Target};
use tritile::{io, tiling, HoleArrangement};

fn main() -> tritile::Result<()> {
    let arr = io::parse_arrangement(include_str!("data/corners6.holey"))?;
    let all = tiling::enumerate_limited(&arr, 100)?;
    println!("tilings: {}", all.len());
    for t in &all {
        println!("  cw {:?} ccw {:?} potential {}", find_cw_gds(t), find_ccw_gds(t), potential(t));
    }
    let start = canonicalize(&all[0], Target::NoCcw);
    let f = find_cw_gds(&start)[0];
    let end = apply_gd_flip(&start, &f)?;
    println!("flip {f}: potential {} -> {}", potential(&start), potential(&end));

    for n in 3..=5 {
        for arr in [HoleArrangement::corners_and_center(n)?, HoleArrangement::bottom_row(n)] {
            let g = gd_flip_graph(&arr, 10_000)?;
            println!(
                "n = {n} {:?}: {} tilings, {} flips, connected {}, diameter {:?}",
                arr.holes(),
                g.tilings,
                g.edges,
                g.connected,
                g.diameter
            );
        }
    }
    Ok(())
}
