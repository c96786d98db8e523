//! SVG pictures with the region graph, forced segments or depth values drawn on top.
//!
//! `cargo run --example render_svg -- [output directory]`

use std::path::PathBuf;
use tritile::grid::RayDir;
use tritile::render::{render_svg, Overlay, SvgOptions};
use tritile::{tiling, HoleArrangement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let t = tiling::construct(&HoleArrangement::corners_and_center(6)?).expect("tileable");
    for (name, overlay) in [
        ("plain", None),
        ("graph", Some(Overlay::Graph)),
        ("forced", Some(Overlay::Forced)),
        ("depth", Some(Overlay::Depth(RayDir::E))),
    ] {
        let path = dir.join(format!("corners6-{name}.svg"));
        std::fs::write(&path, render_svg(&t, &SvgOptions { overlay })?)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
