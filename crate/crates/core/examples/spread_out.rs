//! The spread-out condition, saturated triangles and unitization.
//!
//! `cargo run --example spread_out`

use tritile::arrangement::{is_spread_out, saturated_triangles, spread_out_witness, unitize};
use tritile::{HoleArrangement, SubTriangle, UpCell};

fn main() -> tritile::Result<()> {
    let corners = HoleArrangement::from_unit_cells(3, [UpCell::new(0, 0), UpCell::new(2, 0), UpCell::new(2, 2)])?;
    println!("corner holes, n = 3: spread-out = {}", is_spread_out(&corners));
    for t in saturated_triangles(&corners)? {
        println!("  saturated {t}");
    }

    let crowded = HoleArrangement::from_unit_cells(3, [UpCell::new(0, 0), UpCell::new(1, 0), UpCell::new(1, 1)])?;
    match spread_out_witness(&crowded) {
        Some(w) => println!("crowded holes: {w} holds more holes than its size"),
        None => println!("crowded holes: spread-out"),
    }

    // a big hole behaves like its bottom row of unit holes
    let big = HoleArrangement::new(5, vec![SubTriangle::new(0, 0, 3), SubTriangle::new(4, 0, 1), SubTriangle::new(4, 4, 1)])?;
    let units = unitize(&big)?;
    println!("generalized {:?}", big.holes());
    println!("  unitized  {:?}", units.holes());
    Ok(())
}
