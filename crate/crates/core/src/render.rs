//! DOT and SVG output. Both are deterministic: nodes, edges and shapes are
//! written in a fixed order and SVG coordinates are rounded to two decimals.

use std::fmt::Write as _;

use crate::depth::depth_field;
use crate::forced::forced_segments_scc;
use crate::grid::{down_neighbors, Neighbor, Point, RayDir, Vertex};
use crate::error::Result;
use crate::regiongraph::RegionGraph;
use crate::tiling::{Rhombus, Tiling};

/// The region graph as a DOT digraph; parallel edges are written once each.
pub fn region_graph_dot(g: &RegionGraph) -> String {
    let mut out = String::from("digraph regions {\n");
    for node in 0..g.node_count() {
        let id = g.id(node);
        let _ = writeln!(out, "  n{node} [label=\"{id}\"];");
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overlay {
    /// Arrows across every up-cell side joining two regions.
    Graph,
    /// Forced segments drawn thick.
    Forced,
    /// Depth values at the vertices.
    Depth(RayDir),
}

impl Overlay {
    pub fn parse(s: &str) -> Option<Overlay> {
        match s {
            "graph" => Some(Overlay::Graph),
            "forced" => Some(Overlay::Forced),
            "depth" => Some(Overlay::Depth(RayDir::E)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SvgOptions {
    pub overlay: Option<Overlay>,
}

const MARGIN: f64 = 0.5;
const PIXELS_PER_UNIT: f64 = 60.0;

struct Frame {
    n: usize,
}

impl Frame {
    /// Screen position of a grid point in doubled-x, row units.
    fn at(&self, p: Point, scale: i64) -> (f64, f64) {
        let x = (p.x as f64 / scale as f64 + self.n as f64) / 2.0 + MARGIN;
        let y = p.y as f64 / scale as f64 * 3f64.sqrt() / 2.0 + MARGIN;
        (x, y)
    }

    fn vertex(&self, v: Vertex) -> (f64, f64) {
        self.at(v.point(), 1)
    }

    fn points(&self, vs: &[Vertex]) -> String {
        vs.iter().map(|&v| fmt_pair(self.vertex(v))).collect::<Vec<_>>().join(" ")
    }
}

fn fmt_pair((x, y): (f64, f64)) -> String {
    format!("{x:.2},{y:.2}")
}

fn rhombus_outline(rh: &Rhombus) -> [Vertex; 4] {
    let up = rh.up().vertices();
    let down = rh.down.vertices();
    let apex = *up.iter().find(|v| !down.contains(v)).expect("up cell has a free vertex");
    let far = *down.iter().find(|v| !up.contains(v)).expect("down cell has a free vertex");
    let shared: Vec<Vertex> = up.iter().copied().filter(|v| down.contains(v)).collect();
    [apex, shared[0], far, shared[1]]
}

pub fn render_svg(t: &Tiling, options: &SvgOptions) -> Result<String> {
    t.validate()?;
    let n = t.n();
    let frame = Frame { n };
    let width = n as f64 + 2.0 * MARGIN;
    let height = n as f64 * 3f64.sqrt() / 2.0 + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.2}\" height=\"{:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">",
        width * PIXELS_PER_UNIT,
        height * PIXELS_PER_UNIT
    );
    let _ = writeln!(
        out,
        "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"4\" markerHeight=\"4\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f5fbf\"/></marker></defs>"
    );

    let _ = writeln!(out, "  <g id=\"holes\" fill=\"#9a9a9a\" stroke=\"#000\" stroke-width=\"0.03\">");
    for (k, h) in t.arrangement().holes().iter().enumerate() {
        let corners = [Vertex::new(h.r, h.i), Vertex::new(h.r + h.k, h.i), Vertex::new(h.r + h.k, h.i + h.k)];
        let _ = writeln!(out, "    <polygon id=\"hole-{k}\" points=\"{}\"/>", frame.points(&corners));
    }
    out.push_str("  </g>\n");

    let _ = writeln!(out, "  <g id=\"rhombi\" fill=\"#f4efe1\" stroke=\"#000\" stroke-width=\"0.03\">");
    for rh in t.rhombi() {
        let _ = writeln!(
            out,
            "    <polygon id=\"rhombus-{}-{}\" points=\"{}\"/>",
            rh.down.r,
            rh.down.i,
            frame.points(&rhombus_outline(&rh))
        );
    }
    out.push_str("  </g>\n");

    match options.overlay {
        None => {}
        Some(Overlay::Graph) => {
            let g = RegionGraph::build(t)?;
            let _ = writeln!(out, "  <g id=\"graph\" stroke=\"#1f5fbf\" stroke-width=\"0.02\" marker-end=\"url(#arrow)\">");
            for idx in 0..crate::grid::up_count(n) {
                let u = crate::UpCell::from_index(idx);
                let from = u.centroid3();
                for (side, nb) in down_neighbors(u, n)?.into_iter().enumerate() {
                    let to = match nb {
                        Neighbor::Inside(d) if g.region_of_down(d) != g.region_of_up(u) => d.centroid3(),
                        Neighbor::Inside(_) => continue,
                        // reflect the centroid through the boundary side
                        Neighbor::Outside => match side {
                            0 => Point { x: from.x - 3, y: from.y - 1 },
                            1 => Point { x: from.x + 3, y: from.y - 1 },
                            _ => Point { x: from.x, y: from.y + 2 },
                        },
                    };
                    let (x1, y1) = frame.at(from, 3);
                    let (x2, y2) = frame.at(to, 3);
                    let _ = writeln!(out, "    <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>");
                }
            }
            out.push_str("  </g>\n");
        }
        Some(Overlay::Forced) => {
            let report = forced_segments_scc(t)?;
            let _ = writeln!(out, "  <g id=\"forced\" stroke=\"#c0392b\" stroke-width=\"0.08\" stroke-linecap=\"round\">");
            for s in &report.forced {
                let (x1, y1) = frame.vertex(s.a);
                let (x2, y2) = frame.vertex(s.b);
                let _ = writeln!(out, "    <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>");
            }
            out.push_str("  </g>\n");
        }
        Some(Overlay::Depth(dir)) => {
            let field = depth_field(t, dir);
            let _ = writeln!(
                out,
                "  <g id=\"depth\" font-family=\"sans-serif\" font-size=\"0.22\" text-anchor=\"middle\" fill=\"#1a7f37\">"
            );
            for v in Vertex::all(n) {
                let (x, y) = frame.vertex(v);
                let _ = writeln!(out, "    <text x=\"{x:.2}\" y=\"{:.2}\">{}</text>", y - 0.05, field.get(v));
            }
            out.push_str("  </g>\n");
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::HoleArrangement;
    use crate::tiling;

    #[test]
    fn single_hole() {
        let svg = render_svg(&Tiling::all_vertical(HoleArrangement::whole(1)), &SvgOptions::default()).unwrap();
        assert_eq!(svg.matches("<polygon id=\"hole-").count(), 1);
        assert_eq!(svg.matches("<polygon id=\"rhombus-").count(), 0);
        assert!(svg.contains("points=\"1.00,0.50 0.50,1.37 1.50,1.37\""));
    }

    #[test]
    fn corner_tiling_shapes() {
        let t = tiling::construct(&HoleArrangement::corners_and_center(3).unwrap()).unwrap();
        let svg = render_svg(&t, &SvgOptions::default()).unwrap();
        assert_eq!(svg.matches("<polygon id=\"hole-").count(), 3);
        assert_eq!(svg.matches("<polygon id=\"rhombus-").count(), 3);
    }

    #[test]
    fn overlays_are_deterministic() {
        let t = tiling::construct(&HoleArrangement::corners_and_center(5).unwrap()).unwrap();
        for overlay in [None, Some(Overlay::Graph), Some(Overlay::Forced), Some(Overlay::Depth(RayDir::E))] {
            let opts = SvgOptions { overlay };
            assert_eq!(render_svg(&t, &opts).unwrap(), render_svg(&t.clone(), &opts).unwrap());
        }
        let g = RegionGraph::build(&t).unwrap();
        let svg = render_svg(&t, &SvgOptions { overlay: Some(Overlay::Graph) }).unwrap();
        assert_eq!(svg.matches("<line").count(), g.edges().len());
    }

    #[test]
    fn dot_lists_every_edge() {
        let t = Tiling::all_vertical(HoleArrangement::bottom_row(3));
        let g = RegionGraph::build(&t).unwrap();
        let dot = region_graph_dot(&g);
        assert_eq!(dot.matches(" -> ").count(), g.edges().len());
        assert!(dot.contains("label=\"EXT\""));
        assert_eq!(dot, region_graph_dot(&RegionGraph::build(&t).unwrap()));
    }
}
