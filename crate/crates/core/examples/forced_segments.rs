//! Forced segments computed from strong components, from saturated
//! triangles, and by intersecting all tilings.
//!
//! `cargo run --example forced_segments`

use tritile::forced::{forced_segments, Method};
use tritile::{io, HoleArrangement, UpCell};

fn main() -> tritile::Result<()> {
    let arrs = [
        io::parse_arrangement(include_str!("data/corners3.holey"))?,
        HoleArrangement::corners_and_center(5)?,
        HoleArrangement::from_unit_cells(4, [UpCell::new(1, 0), UpCell::new(2, 2), UpCell::new(3, 0), UpCell::new(3, 3)])?,
    ];
    for arr in &arrs {
        println!("holes {:?}", arr.holes());
        let mut reports = Vec::new();
        for method in [Method::Scc, Method::Procedure, Method::Oracle] {
            let r = forced_segments(arr, method, 100_000)?;
            println!("  {method:<9} {} forced segments", r.forced.len());
            reports.push(r.forced);
        }
        assert!(reports.windows(2).all(|w| w[0] == w[1]));
        for s in &reports[0] {
            println!("    {s}");
        }
    }
    Ok(())
}
