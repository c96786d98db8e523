//! Command-line front end. [`run`] takes the arguments and output streams so
//! it can be driven from tests; the binary only forwards to it.
//!
//! Exit codes: 0 success or "yes", 1 "no", 2 bad input, 3 resource limit.
//! Commands that need a tiling build one when the file lists only holes.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::arrangement::{
    is_spread_out, require_spread_out, saturated_triangles, saturation_weight, spread_out_witness, unique_by_merge,
    HoleArrangement,
};
use crate::census::census;
use crate::depth::depth_field;
use crate::error::{Error, Result};
use crate::forced::{forced_segments, Method};
use crate::gdflip::{apply_gd_flip, apply_gd_flip_inverse, canonicalize, find_ccw_gds, find_cw_gds, GdFrame, Target};
use crate::grid::{Orientation, RayDir, UpCell};
use crate::io;
use crate::regiongraph::{unique_by_acyclicity, RegionGraph};
use crate::render::{region_graph_dot, render_svg, Overlay, SvgOptions};
use crate::tiling::{self, Tiling};
use crate::trapezoid::{
    apply_trapezoid, flip_distance, full_hexagon_count, hexagon_lower_bound, hexagon_pair, list_trapezoid_flips,
    upper_bound, Landing, TrapezoidFlip,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "tritile", version, about = "Rhombus tilings of holey triangles")]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// A `holey v1` file.
    pub file: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum UniqueMethod {
    Merge,
    Graph,
    Enumerate,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TargetArg {
    NoCw,
    NoCcw,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FlipKind {
    Gd,
    Trapezoid,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ForcedMethod {
    Scc,
    Procedure,
    Oracle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GraphFormat {
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DirArg {
    E,
    W,
    Ne,
    Nw,
    Se,
    Sw,
}

impl From<DirArg> for RayDir {
    fn from(d: DirArg) -> Self {
        match d {
            DirArg::E => RayDir::E,
            DirArg::W => RayDir::W,
            DirArg::Ne => RayDir::NE,
            DirArg::Nw => RayDir::NW,
            DirArg::Se => RayDir::SE,
            DirArg::Sw => RayDir::SW,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OverlayArg {
    Graph,
    Forced,
    Depth,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Hand {
    Cw,
    Ccw,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test the spread-out condition and print a violating triangle if any.
    Check(Input),
    /// List the saturated triangles.
    Saturated(Input),
    /// Decide whether the arrangement has exactly one tiling.
    Unique {
        #[command(flatten)]
        input: Input,
        /// Use one method; by default all three run and must agree.
        #[arg(long, value_enum)]
        method: Option<UniqueMethod>,
    },
    /// Build one tiling.
    Tile(Input),
    /// List or count all tilings.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        count_only: bool,
        /// Give up after this many tilings (default: TRITILE_LIMIT).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Flip to the tiling with no clockwise (or counter-clockwise) GD.
    Canonical {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        target: TargetArg,
    },
    /// List the available flips.
    Flips {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "gd")]
        kind: FlipKind,
    },
    /// Apply one flip: `gd:<r>,<i>,<m>,cw|ccw` or `tz:<r>,<i>,<dir>`.
    Apply {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        flip: String,
    },
    /// Segments present in every tiling.
    Forced {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "scc")]
        method: ForcedMethod,
    },
    /// The region graph.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// The depth function as a triangular matrix.
    Depth {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "e")]
        dir: DirArg,
    },
    /// The pair of hexagon tilings with no rhombus in common.
    Hexpair {
        n: usize,
        #[arg(long, default_value_t = 0)]
        class: usize,
        /// Print just one tiling as a file.
        #[arg(long, value_enum)]
        only: Option<Hand>,
    },
    /// Trapezoid-flip distance between two unit-hole tilings.
    Distance {
        a: PathBuf,
        b: PathBuf,
        /// Breadth-first search only.
        #[arg(long, conflicts_with = "bound")]
        exact: bool,
        /// Height-vector bound only.
        #[arg(long)]
        bound: bool,
    },
    /// Count uniquely tileable unit arrangements.
    Census { n: usize },
    /// Draw the tiling as SVG.
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        overlay: Option<OverlayArg>,
        /// Ray direction for the depth overlay.
        #[arg(long, value_enum, default_value = "e")]
        dir: DirArg,
    },
}

/// What a command produced: text, the same data as JSON, and the exit code.
struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: EXIT_OK }
    }

    fn decision(yes: bool, text: String, json: Value) -> Self {
        Report { text, json, code: if yes { EXIT_OK } else { EXIT_NO } }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

/// A parsed `--flip` argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipSpec {
    Gd(GdFrame, Orientation),
    Trapezoid(UpCell, Landing),
}

impl FlipSpec {
    pub fn parse(s: &str) -> Result<FlipSpec> {
        let bad = || Error::Validation(format!("bad flip {s:?}; expected gd:r,i,m,cw|ccw or tz:r,i,dir"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        let num = |k: usize| parts.get(k).and_then(|p| p.parse::<usize>().ok()).ok_or_else(bad);
        match (kind, parts.len()) {
            ("gd", 4) => {
                let hand = match parts[3].to_ascii_lowercase().as_str() {
                    "cw" => Orientation::Cw,
                    "ccw" => Orientation::Ccw,
                    _ => return Err(bad()),
                };
                Ok(FlipSpec::Gd(GdFrame::new(num(0)?, num(1)?, num(2)?), hand))
            }
            ("tz", 3) => Ok(FlipSpec::Trapezoid(UpCell::new(num(0)?, num(1)?), Landing::parse(parts[2]).ok_or_else(bad)?)),
            _ => Err(bad()),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<io::Document> {
    io::parse(&read(path)?)
}

fn load_arrangement(path: &Path) -> Result<HoleArrangement> {
    Ok(load(path)?.arrangement)
}

fn load_tiling(path: &Path) -> Result<Tiling> {
    let doc = load(path)?;
    match doc.tiling {
        Some(t) => Ok(t),
        None => build_tiling(&doc.arrangement),
    }
}

fn build_tiling(arr: &HoleArrangement) -> Result<Tiling> {
    is_spread_out(arr)
        .then(|| tiling::construct(arr))
        .flatten()
        .ok_or_else(|| Error::Precondition("arrangement is not spread-out, so it has no tiling".into()))
}

fn rhombi_json(t: &Tiling) -> Value {
    to_json(t)
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("json"))
            } else {
                write!(out, "{}", report.text)
            };
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cmd: &Command) -> Result<Report> {
    let limit = crate::configured_limit();
    match cmd {
        Command::Check(input) => {
            let arr = load_arrangement(&input.file)?;
            let witness = spread_out_witness(&arr);
            let json = json!({
                "spread_out": witness.is_none(),
                "witness": witness,
                "holes_in_witness": witness.map(|w| saturation_weight(arr.holes(), &w)),
            });
            let text = match witness {
                None => "spread-out: yes\n".to_string(),
                Some(w) => format!(
                    "spread-out: no\nwitness: {w} contains {} holes\n",
                    saturation_weight(arr.holes(), &w)
                ),
            };
            Ok(Report::decision(witness.is_none(), text, json))
        }
        Command::Saturated(input) => {
            let arr = load_arrangement(&input.file)?;
            let sat = saturated_triangles(&arr)?;
            let mut text = String::new();
            for t in &sat {
                let _ = writeln!(text, "{} {} {}", t.r, t.i, t.k);
            }
            Ok(Report::ok(text, json!({ "saturated": sat })))
        }
        Command::Unique { input, method } => {
            let arr = load_arrangement(&input.file)?;
            unique(&arr, *method, limit)
        }
        Command::Tile(input) => {
            let arr = load_arrangement(&input.file)?;
            match tiling::construct(&arr) {
                Some(t) => Ok(Report::ok(io::serialize_tiling(&t), rhombi_json(&t))),
                None => Ok(Report::decision(false, "no tiling\n".into(), json!({ "tiling": null }))),
            }
        }
        Command::Enumerate { input, count_only, limit: cap } => {
            let arr = load_arrangement(&input.file)?;
            require_spread_out(&arr)?;
            let all = tiling::enumerate_limited(&arr, cap.unwrap_or(limit))?;
            if *count_only {
                return Ok(Report::ok(format!("{}\n", all.len()), json!({ "count": all.len() })));
            }
            let text = all.iter().map(io::serialize_tiling).collect::<Vec<_>>().join("\n");
            let json = json!({ "count": all.len(), "tilings": all.iter().map(rhombi_json).collect::<Vec<_>>() });
            Ok(Report::ok(text, json))
        }
        Command::Canonical { input, target } => {
            let t = load_tiling(&input.file)?;
            let target = match target {
                TargetArg::NoCw => Target::NoCw,
                TargetArg::NoCcw => Target::NoCcw,
            };
            let c = canonicalize(&t, target);
            Ok(Report::ok(io::serialize_tiling(&c), rhombi_json(&c)))
        }
        Command::Flips { input, kind } => {
            let t = load_tiling(&input.file)?;
            let specs: Vec<String> = match kind {
                FlipKind::Gd => {
                    let cw = find_cw_gds(&t).into_iter().map(|f| format!("gd:{},{},{},cw", f.r, f.i, f.m));
                    let ccw = find_ccw_gds(&t).into_iter().map(|f| format!("gd:{},{},{},ccw", f.r, f.i, f.m));
                    cw.chain(ccw).collect()
                }
                FlipKind::Trapezoid => list_trapezoid_flips(&t)?.iter().map(TrapezoidFlip::to_string).collect(),
            };
            let text = specs.iter().map(|s| format!("{s}\n")).collect();
            Ok(Report::ok(text, json!({ "flips": specs })))
        }
        Command::Apply { input, flip } => {
            let t = load_tiling(&input.file)?;
            let next = match FlipSpec::parse(flip)? {
                FlipSpec::Gd(f, Orientation::Cw) => apply_gd_flip(&t, &f)?,
                FlipSpec::Gd(f, Orientation::Ccw) => apply_gd_flip_inverse(&t, &f)?,
                FlipSpec::Trapezoid(hole, dir) => {
                    let f = TrapezoidFlip::towards(hole, dir, t.n())
                        .ok_or_else(|| Error::Flip(format!("tz:{},{},{dir} leaves the triangle", hole.r, hole.i)))?;
                    apply_trapezoid(&t, &f)?
                }
            };
            Ok(Report::ok(io::serialize_tiling(&next), rhombi_json(&next)))
        }
        Command::Forced { input, method } => {
            let doc = load(&input.file)?;
            let method = match method {
                ForcedMethod::Scc => Method::Scc,
                ForcedMethod::Procedure => Method::Procedure,
                ForcedMethod::Oracle => Method::Oracle,
            };
            let report = match (&doc.tiling, method) {
                (Some(t), Method::Scc) => crate::forced::forced_segments_scc(t)?,
                _ => forced_segments(&doc.arrangement, method, limit)?,
            };
            let mut text = String::new();
            for s in &report.forced {
                let _ = writeln!(text, "{} {} {} {}", s.a.rho, s.a.j, s.b.rho, s.b.j);
            }
            let json = json!({ "method": report.method, "forced": report.forced });
            Ok(Report::ok(text, json))
        }
        Command::Graph { input, format: GraphFormat::Dot } => {
            let t = load_tiling(&input.file)?;
            let g = RegionGraph::build(&t)?;
            let nodes: Vec<String> = g.ids().iter().map(|id| id.to_string()).collect();
            let edges: Vec<(String, String)> =
                g.edges().iter().map(|&(a, b)| (nodes[a].clone(), nodes[b].clone())).collect();
            Ok(Report::ok(region_graph_dot(&g), json!({ "nodes": nodes, "edges": edges })))
        }
        Command::Depth { input, dir } => {
            let t = load_tiling(&input.file)?;
            let field = depth_field(&t, (*dir).into());
            Ok(Report::ok(field.to_text(), json!({ "dir": field.dir.name(), "rows": field.rows() })))
        }
        Command::Hexpair { n, class, only } => {
            let (cw, ccw) = hexagon_pair(*n, *class)?;
            let shared = tiling::shared_rhombi(&cw, &ccw);
            let json = json!({
                "n": n,
                "class": class,
                "full_hexagons": full_hexagon_count(*n, *class),
                "lower_bound": hexagon_lower_bound(*n, *class),
                "shared_rhombi": shared,
                "cw": rhombi_json(&cw),
                "ccw": rhombi_json(&ccw),
            });
            let text = match only {
                Some(Hand::Cw) => io::serialize_tiling(&cw),
                Some(Hand::Ccw) => io::serialize_tiling(&ccw),
                None => format!(
                    "# full hexagons {}, shared rhombi {shared}, flip distance at least {}\n# clockwise\n{}# counter-clockwise\n{}",
                    full_hexagon_count(*n, *class),
                    hexagon_lower_bound(*n, *class),
                    io::serialize_tiling(&cw),
                    io::serialize_tiling(&ccw)
                ),
            };
            Ok(Report::ok(text, json))
        }
        Command::Distance { a, b, exact, bound } => {
            let ta = load_tiling(a)?;
            let tb = load_tiling(b)?;
            let ub = if *exact { None } else { Some(upper_bound(ta.arrangement(), tb.arrangement())?) };
            let d = if *bound { None } else { Some(flip_distance(&ta, &tb, limit)?) };
            let mut text = String::new();
            if let Some(d) = d {
                let _ = writeln!(text, "distance {d}");
            }
            if let Some(ub) = ub {
                let _ = writeln!(text, "bound {ub}");
            }
            Ok(Report::ok(text, json!({ "distance": d, "bound": ub })))
        }
        Command::Census { n } => {
            if *n == 0 {
                return Err(Error::Validation("census needs n >= 1".into()));
            }
            let r = census(*n);
            let mut text = format!(
                "n {}\narrangements {}\nspread-out {}\nuniquely-tileable {}\n",
                r.n, r.arrangements, r.spread_out, r.uniquely_tileable
            );
            for (count, arrs) in &r.histogram {
                let _ = writeln!(text, "tilings {count}: {arrs}");
            }
            Ok(Report::ok(text, to_json(&r)))
        }
        Command::Render { input, output, overlay, dir } => {
            let t = load_tiling(&input.file)?;
            let overlay = overlay.map(|o| match o {
                OverlayArg::Graph => Overlay::Graph,
                OverlayArg::Forced => Overlay::Forced,
                OverlayArg::Depth => Overlay::Depth((*dir).into()),
            });
            let svg = render_svg(&t, &SvgOptions { overlay })?;
            match output {
                Some(path) => {
                    std::fs::write(path, &svg)
                        .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))?;
                    let text = format!("wrote {}\n", path.display());
                    Ok(Report::ok(text, json!({ "output": path.display().to_string(), "bytes": svg.len() })))
                }
                None => Ok(Report::ok(svg.clone(), json!({ "svg": svg }))),
            }
        }
    }
}

fn unique(arr: &HoleArrangement, method: Option<UniqueMethod>, limit: usize) -> Result<Report> {
    require_spread_out(arr)?;
    let by_merge = || -> Result<bool> { Ok(unique_by_merge(arr)?.unique) };
    let by_graph = || -> Result<bool> { unique_by_acyclicity(&build_tiling(arr)?) };
    let count = || -> Result<usize> { Ok(tiling::enumerate_limited(arr, limit)?.len()) };
    let (answer, json) = match method {
        Some(UniqueMethod::Merge) => {
            let u = by_merge()?;
            (u, json!({ "unique": u, "method": "merge" }))
        }
        Some(UniqueMethod::Graph) => {
            let u = by_graph()?;
            (u, json!({ "unique": u, "method": "graph" }))
        }
        Some(UniqueMethod::Enumerate) => {
            let c = count()?;
            (c == 1, json!({ "unique": c == 1, "method": "enumerate", "tilings": c }))
        }
        None => {
            // two tilings are enough to settle the enumeration answer
            let (m, g) = (by_merge()?, by_graph()?);
            let e = tiling::enumerate(arr).take(2).count() == 1;
            if m != g || m != e {
                return Err(Error::Unsupported(format!("uniqueness methods disagree: merge {m}, graph {g}, enumerate {e}")));
            }
            (m, json!({ "unique": m, "method": "all" }))
        }
    };
    let mut text = format!("unique: {}\n", if answer { "yes" } else { "no" });
    if let Some(c) = json.get("tilings") {
        let _ = writeln!(text, "tilings: {c}");
    }
    Ok(Report::decision(answer, text, json))
}
