//! The region graph: strong components, rhombus cycles and their orientation.
//!
//! `cargo run --example region_graph`

use tritile::regiongraph::RegionGraph;
use tritile::render::region_graph_dot;
use tritile::{io, tiling};

fn main() -> tritile::Result<()> {
    let text = include_str!("data/corners3_cw.holey");
    let t = io::parse_tiling(text)?;
    let g = RegionGraph::build(&t)?;
    print!("{}", region_graph_dot(&g));

    for node in 0..g.node_count() {
        println!("{:>5}: in {} out {}", g.id(node).to_string(), g.in_degree(node), g.out_degree(node));
    }
    let cond = g.sccs();
    for comp in &cond.components {
        let names: Vec<String> = comp.iter().map(|&v| g.id(v).to_string()).collect();
        println!("component {{{}}}", names.join(", "));
    }
    for cycle in g.simple_cycles(100)? {
        let names: Vec<String> = cycle.iter().map(|&v| g.id(v).to_string()).collect();
        println!("cycle {} is {:?}", names.join(" -> "), g.cycle_orientation(&cycle)?);
    }

    let bottom = tiling::construct(&tritile::HoleArrangement::bottom_row(5)).expect("tileable");
    println!("bottom row, n = 5: rhombus cycle = {}", RegionGraph::build(&bottom)?.has_rhombus_cycle());
    Ok(())
}
