//! Trapezoid flips, the height-vector bound, and the hexagon pair that is far apart.
//!
//! `cargo run --release --example trapezoid_distance`

use tritile::trapezoid::{
    all_subdivisions, bfs_distances, flip_distance, hexagon_lower_bound, hexagon_pair, list_trapezoid_flips, upper_bound,
};
use tritile::{tiling, HoleArrangement};

fn main() -> tritile::Result<()> {
    let bottom = tritile::Tiling::all_vertical(HoleArrangement::bottom_row(4));
    for f in list_trapezoid_flips(&bottom)? {
        println!("{f}: {} -> {}", f.hole, f.landing);
    }

    let all = all_subdivisions(3, 10_000)?;
    let mut worst = 0;
    for a in &all {
        let dist = bfs_distances(a, 10_000)?;
        for b in &all {
            let d = dist[&b.key()];
            assert!(d <= upper_bound(a.arrangement(), b.arrangement())?);
            worst = worst.max(d);
        }
    }
    println!("n = 3: {} subdivisions, largest distance {worst}, bound 4", all.len());

    for n in 3..=8 {
        let (cw, ccw) = hexagon_pair(n, 0)?;
        println!(
            "hexagon pair n = {n}: shared rhombi {}, lower bound {}, height bound {}",
            tiling::shared_rhombi(&cw, &ccw),
            hexagon_lower_bound(n, 0),
            upper_bound(cw.arrangement(), ccw.arrangement())?
        );
    }
    let (cw, ccw) = hexagon_pair(4, 0)?;
    println!("n = 4 exact distance {}", flip_distance(&cw, &ccw, 1_000_000)?);
    Ok(())
}
