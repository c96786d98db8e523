//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! All comparisons are exact integer comparisons; there are no tolerances.
//! Criteria listed in `KNOWN_FAILURES` are reported as FAIL with the
//! measured counterexample counts but do not fail the run; any other FAIL,
//! or a known failure that starts passing, makes the process exit non-zero.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::SeedableRng;

use tritile::arrangement::{is_spread_out, saturated_triangles, unique_by_merge};
use tritile::census::{all_arrangements, census, spread_out_unit_arrangements};
use tritile::depth::{depth_field, holes_between_rays};
use tritile::forced::{forced_segments_oracle, forced_segments_procedure, forced_segments_scc};
use tritile::gdflip::{apply_gd_flip, canonicalize, find_cw_gds, gd_flip_graph, potential, Target};
use tritile::grid::{intersection_size, up_count, GridSegment, Orientation, RayDir};
use tritile::regiongraph::{unique_by_acyclicity, RegionGraph, RegionId};
use tritile::trapezoid::{all_subdivisions, bfs_distances, flip_distance, hexagon_lower_bound, hexagon_pair, upper_bound};
use tritile::{tiling, HoleArrangement, Tiling, UpCell, Vertex};

const LIMIT: usize = 5_000_000;
const KNOWN_FAILURES: &[u32] = &[11];

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Spread-out unit arrangements with all their tilings, for sizes `1..=max_n`.
fn all_tilings(max_n: usize) -> Vec<(HoleArrangement, Vec<Tiling>)> {
    (1..=max_n)
        .flat_map(spread_out_unit_arrangements)
        .map(|arr| {
            let ts = tiling::enumerate(&arr).collect();
            (arr, ts)
        })
        .collect()
}

fn census_counts() -> Outcome {
    let got: Vec<usize> = (1..=5).map(|n| census(n).uniquely_tileable).collect();
    check(got == [1, 3, 16, 122, 1188], format!("uniquely tileable for n = 1..5: {got:?}, expected [1, 3, 16, 122, 1188]"))
}

fn two_tilings() -> Outcome {
    let arr = HoleArrangement::corners_and_center(6).map_err(|e| e.to_string())?;
    let ts = tiling::enumerate_limited(&arr, LIMIT).map_err(|e| e.to_string())?;
    let g = gd_flip_graph(&arr, LIMIT).map_err(|e| e.to_string())?;
    let joined = ts.len() == 2
        && ts.iter().any(|a| {
            let other = ts.iter().find(|b| *b != a).expect("two tilings");
            let flips = find_cw_gds(a);
            flips.len() == 1 && apply_gd_flip(a, &flips[0]).as_ref() == Ok(other)
        });
    check(
        ts.len() == 2 && g.edges == 1 && g.connected && joined,
        format!("{} tilings, {} GD flips between them", ts.len(), g.edges),
    )
}

fn spread_out_iff_tileable() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=5 {
        for arr in all_arrangements(n, false) {
            checked += 1;
            let built = tiling::construct(&arr);
            let valid = built.as_ref().is_none_or(|t| t.validate().is_ok());
            if built.is_some() != is_spread_out(&arr) || !valid {
                bad.push(arr);
            }
        }
    }
    check(bad.is_empty(), format!("{checked} unit arrangements n <= 5, {} mismatches", bad.len()))
}

fn uniqueness_agreement() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for (arr, ts) in all_tilings(4) {
        checked += 1;
        let merge = unique_by_merge(&arr).map_err(|e| e.to_string())?.unique;
        let graph_all = ts.iter().all(|t| unique_by_acyclicity(t) == Ok(merge));
        if !graph_all || merge != (ts.len() == 1) {
            bad += 1;
        }
    }
    check(bad == 0, format!("{checked} spread-out arrangements n <= 4, {bad} disagreements"))
}

fn non_touching_two_tilings() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=4 {
        for arr in all_arrangements(n, true) {
            let holes = arr.holes();
            // a single hole is the whole triangle, whose only tiling is empty
            if holes.len() < 2 || !is_spread_out(&arr) {
                continue;
            }
            let apart = holes.iter().enumerate().all(|(a, s)| holes[a + 1..].iter().all(|t| intersection_size(s, t) < 0));
            if !apart {
                continue;
            }
            checked += 1;
            let count = tiling::enumerate(&arr).take(2).count();
            if count < 2 {
                bad.push(arr);
            }
        }
    }
    check(
        checked > 0 && bad.is_empty(),
        format!("{checked} non-touching spread-out arrangements n <= 4 (at least two holes), {} with fewer than 2 tilings", bad.len()),
    )
}

fn degree_violations(t: &Tiling) -> usize {
    let g = RegionGraph::build(t).expect("valid tiling");
    let arr = t.arrangement();
    (0..g.node_count())
        .filter(|&v| {
            let (i, o) = (g.in_degree(v), g.out_degree(v));
            match g.id(v) {
                RegionId::Rhombus(_) => (i, o) != (2, 2),
                RegionId::Hole(h) => (i, o) != (0, 3 * arr.holes()[h].k),
                RegionId::Exterior => i != 3 * arr.n(),
            }
        })
        .count()
}

fn degree_facts() -> Outcome {
    let mut graphs = 0;
    let mut bad = 0;
    for n in 1..=4 {
        for arr in all_arrangements(n, true).into_iter().filter(is_spread_out) {
            for t in tiling::enumerate(&arr) {
                graphs += 1;
                bad += degree_violations(&t);
            }
        }
    }
    let exhaustive = graphs;
    let mut rng = StdRng::seed_from_u64(20_260_101);
    for n in 5..=8 {
        let mut built = 0;
        while built < 200 {
            let cells = sample(&mut rng, up_count(n), n).into_iter().map(UpCell::from_index);
            let arr = HoleArrangement::from_unit_cells(n, cells).expect("distinct cells");
            if let Some(t) = tiling::construct(&arr) {
                built += 1;
                graphs += 1;
                bad += degree_violations(&t);
            }
        }
    }
    check(bad == 0, format!("{exhaustive} graphs exhaustive n <= 4, {} random n = 5..8, {bad} bad nodes", graphs - exhaustive))
}

fn cw_cycle_iff_cw_gd() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for (_, ts) in all_tilings(4) {
        for t in &ts {
            checked += 1;
            let g = RegionGraph::build(t).map_err(|e| e.to_string())?;
            let cycle = g.has_cycle_with(Orientation::Cw, LIMIT).map_err(|e| e.to_string())?;
            if cycle != !find_cw_gds(t).is_empty() {
                bad += 1;
            }
        }
    }
    check(bad == 0, format!("{checked} tilings n <= 4, {bad} mismatches"))
}

fn gd_connectivity() -> Outcome {
    let (mut arrs, mut disconnected, mut non_constant, mut flips, mut non_increasing) = (0, 0, 0, 0, 0);
    for (arr, ts) in all_tilings(4) {
        arrs += 1;
        if !gd_flip_graph(&arr, LIMIT).map_err(|e| e.to_string())?.connected {
            disconnected += 1;
        }
        let canon: HashSet<Tiling> = ts.iter().map(|t| canonicalize(t, Target::NoCw)).collect();
        if canon.len() != 1 || canon.iter().any(|c| !find_cw_gds(c).is_empty()) {
            non_constant += 1;
        }
        for t in &ts {
            for f in find_cw_gds(t) {
                flips += 1;
                let next = apply_gd_flip(t, &f).map_err(|e| e.to_string())?;
                if potential(&next) <= potential(t) {
                    non_increasing += 1;
                }
            }
        }
    }
    check(
        disconnected + non_constant + non_increasing == 0,
        format!(
            "{arrs} arrangements n <= 4: {disconnected} disconnected, {non_constant} with several canonical tilings; {flips} flips, {non_increasing} not raising the potential"
        ),
    )
}

fn forced_agreement() -> Outcome {
    let (mut arrs, mut bad) = (0, 0);
    let mut notes = BTreeSet::new();
    for (arr, ts) in all_tilings(4) {
        arrs += 1;
        let scc: Vec<BTreeSet<GridSegment>> = ts.iter().map(|t| forced_segments_scc(t).map(|r| r.forced)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let procedure = forced_segments_procedure(&arr).map_err(|e| e.to_string())?.forced;
        let oracle = forced_segments_oracle(&arr, LIMIT).map_err(|e| e.to_string())?.forced;
        if scc.iter().any(|s| *s != scc[0]) {
            notes.insert("tiling-dependent SCC output");
            bad += 1;
        }
        if scc[0] != procedure || scc[0] != oracle {
            notes.insert("methods disagree");
            bad += 1;
        }
        for s in saturated_triangles(&arr).map_err(|e| e.to_string())? {
            for (u, d) in s.boundary_pairs(arr.n()) {
                let seg = GridSegment::between(u, d).expect("adjacent cells");
                if !oracle.contains(&seg) {
                    notes.insert("saturated boundary not forced");
                    bad += 1;
                }
            }
        }
    }
    check(bad == 0, format!("{arrs} arrangements n <= 4, {bad} problems {notes:?}"))
}

fn trapezoid_bounds() -> Outcome {
    let all = all_subdivisions(3, LIMIT).map_err(|e| e.to_string())?;
    let (mut pairs, mut bad, mut worst) = (0, 0, 0);
    for a in &all {
        let dist = bfs_distances(a, LIMIT).map_err(|e| e.to_string())?;
        for b in &all {
            pairs += 1;
            let ub = upper_bound(a.arrangement(), b.arrangement()).map_err(|e| e.to_string())?;
            let d = *dist.get(&b.key()).ok_or("unreachable subdivision")?;
            worst = worst.max(d);
            if d > ub || ub > 2 * 3 * 2 / 3 {
                bad += 1;
            }
        }
    }
    let n = 4;
    let (cw, ccw) = hexagon_pair(n, 0).map_err(|e| e.to_string())?;
    let shared = tiling::shared_rhombi(&cw, &ccw);
    let lower = hexagon_lower_bound(n, 0);
    let d = flip_distance(&cw, &ccw, LIMIT).map_err(|e| e.to_string())?;
    check(
        bad == 0 && d >= lower && lower == (n * n - n) / 2 + 1 && shared == 0,
        format!(
            "n = 3: {pairs} pairs, max distance {worst}, {bad} above bound or bound above 4; n = 4 hexagon pair: distance {d} >= {lower}, shared rhombi {shared}"
        ),
    )
}

fn depth_properties() -> Outcome {
    let (mut pairs, mut steep, mut steep_interior, mut max_step, mut refined_bad) = (0usize, 0usize, 0usize, 0usize, 0usize);
    let (mut flips, mut locality_bad) = (0, 0);
    for (_, ts) in all_tilings(4) {
        for t in &ts {
            let n = t.n();
            for dir in RayDir::ALL {
                let d = depth_field(t, dir);
                for v in Vertex::all(n) {
                    for w in v.neighbors(n).filter(|w| v < *w) {
                        pairs += 1;
                        let step = d.get(v).abs_diff(d.get(w));
                        max_step = max_step.max(step);
                        if step > 1 {
                            steep += 1;
                            let on_boundary = |x: Vertex| x.rho == n || x.j == 0 || x.j == x.rho;
                            if !on_boundary(v) && !on_boundary(w) {
                                steep_interior += 1;
                            }
                        }
                        if step > 1 + holes_between_rays(t, v, w, dir) {
                            refined_bad += 1;
                        }
                    }
                }
            }
            for f in find_cw_gds(t) {
                flips += 1;
                let next = apply_gd_flip(t, &f).map_err(|e| e.to_string())?;
                let core = f.interior();
                let expect: Vec<Vertex> = Vertex::all(t.n()).filter(|v| core.contains_vertex(*v)).collect();
                for dir in RayDir::ALL {
                    let diff = depth_field(t, dir).diff(&depth_field(&next, dir));
                    let moved: Vec<Vertex> = diff.iter().map(|x| x.0).collect();
                    if moved != expect || diff.iter().any(|x| x.1.abs() != 1) {
                        locality_bad += 1;
                    }
                }
            }
        }
    }
    let detail = format!(
        "adjacent differ by <= 1: {steep} of {pairs} (pair, direction) cases exceed it, max step {max_step}, {steep_interior} away from the boundary; \
         GD locality: {flips} flips x 6 directions, {locality_bad} bad; \
         |d(p) - d(q)| <= 1 + holes between the two rays: {refined_bad} exceptions"
    );
    check(steep == 0 && locality_bad == 0, detail)
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).display().to_string()
}

fn call(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = tritile::cli::run(std::iter::once("tritile").chain(args.iter().copied()), &mut out, &mut err);
    (code, out, err)
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("tritile-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let svg = dir.join("out.svg").display().to_string();
    let (c6, c3, b4, crowded) = (data("corners6.holey"), data("corners3_cw.holey"), data("bottom4.holey"), data("crowded.holey"));
    let mut commands: Vec<Vec<&str>> = vec![
        vec!["check", &c6],
        vec!["check", &crowded],
        vec!["saturated", &c6],
        vec!["unique", &c6],
        vec!["unique", &c6, "--method", "merge"],
        vec!["unique", &c6, "--method", "graph"],
        vec!["unique", &c6, "--method", "enumerate"],
        vec!["tile", &c6],
        vec!["enumerate", &c6],
        vec!["enumerate", &c6, "--count-only"],
        vec!["canonical", &c3, "--target", "no-cw"],
        vec!["canonical", &c3, "--target", "no-ccw"],
        vec!["flips", &c6, "--kind", "gd"],
        vec!["flips", &b4, "--kind", "trapezoid"],
        vec!["apply", &c3, "--flip", "gd:0,0,0,cw"],
        vec!["apply", &b4, "--flip", "tz:3,0,NE"],
        vec!["graph", &c6, "--format", "dot"],
        vec!["hexpair", "4"],
        vec!["hexpair", "5", "--class", "2", "--only", "ccw"],
        vec!["distance", &b4, &b4, "--exact"],
        vec!["distance", &b4, &b4, "--bound"],
        vec!["census", "4"],
        vec!["render", &c6],
    ];
    for m in ["scc", "procedure", "oracle"] {
        commands.push(vec!["forced", &c6, "--method", m]);
    }
    for d in ["e", "w", "ne", "nw", "se", "sw"] {
        commands.push(vec!["depth", &c6, "--dir", d]);
    }
    for o in ["graph", "forced", "depth"] {
        commands.push(vec!["render", &c6, "--overlay", o]);
    }
    let mut runs = 0;
    let mut differing = Vec::new();
    for base in &commands {
        for json in [false, true] {
            let mut args = if json { vec!["--json"] } else { vec![] };
            args.extend_from_slice(base);
            let first = call(&args);
            let second = call(&args);
            runs += 2;
            if first != second || first.0 > 1 {
                differing.push(args.join(" "));
            }
        }
    }
    let file_run = |path: &str| -> Option<Vec<u8>> {
        call(&["render", &c6, "-o", path, "--overlay", "graph"]);
        std::fs::read(path).ok()
    };
    let files_equal = file_run(&svg).is_some() && file_run(&svg) == file_run(&svg);
    let _ = std::fs::remove_dir_all(&dir);
    check(
        differing.is_empty() && files_equal,
        format!("{runs} command runs, {} differing or failing {differing:?}, SVG file output stable: {files_equal}", differing.len()),
    )
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "census of uniquely tileable arrangements", census_counts),
        (2, "two-tiling instance at n = 6", two_tilings),
        (3, "spread-out iff tileable", spread_out_iff_tileable),
        (4, "uniqueness criteria agree", uniqueness_agreement),
        (5, "non-touching holes give two tilings", non_touching_two_tilings),
        (6, "region graph degrees", degree_facts),
        (7, "clockwise cycle iff clockwise GD", cw_cycle_iff_cw_gd),
        (8, "GD connectivity and canonical tiling", gd_connectivity),
        (9, "forced segments by three methods", forced_agreement),
        (10, "trapezoid flip bounds", trapezoid_bounds),
        (11, "depth function properties", depth_properties),
        (12, "determinism", determinism),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.contains(&id);
        match &outcome {
            Ok(detail) => {
                passed += 1;
                println!("PASS {id:>2} {name}: {detail} [{secs:.1}s]");
                if known {
                    unexpected.push(id);
                    println!("       criterion {id} is listed as a known failure but passed");
                }
            }
            Err(detail) => {
                println!("FAIL {id:>2} {name}: {detail} [{secs:.1}s]");
                if known {
                    println!("       known failure: the step bound fails next to holes; see the depth section of README.md");
                } else {
                    unexpected.push(id);
                }
            }
        }
    }
    println!("{passed} of 12 criteria passed; unexpected outcomes: {unexpected:?}");
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
