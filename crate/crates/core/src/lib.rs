//! Fine mixed subdivisions of a side-`n` triangle.
//!
//! A fine mixed subdivision cuts `n` upward unit triangles (holes) out of the
//! triangle and tiles the rest with unit 60°/120° rhombi. This crate builds,
//! checks, enumerates and transforms such tilings:
//!
//! * [`grid`] exact integer geometry of the triangular grid
//! * [`arrangement`] hole arrangements, the spread-out condition, saturated
//!   triangles and the merge test for unique tileability
//! * [`tiling`] tilings as matchings, construction and enumeration
//! * [`regiongraph`] the directed graph on holes, rhombi and the exterior,
//!   its strong components and cycle flips
//! * [`gdflip`] GD flips and the canonical tiling without clockwise cycles
//! * [`forced`] segments present in every tiling of an arrangement
//! * [`trapezoid`] flips that move holes, and flip distances
//! * [`depth`] the depth function along a lattice direction
//! * [`io`], [`render`] and [`cli`] text formats, DOT/SVG output and the
//!   command-line front end

pub mod arrangement;
pub mod census;
pub mod cli;
pub mod depth;
pub mod error;
pub mod forced;
pub mod gdflip;
pub mod grid;
pub mod io;
pub mod regiongraph;
pub mod render;
pub mod tiling;
pub mod trapezoid;

pub use arrangement::HoleArrangement;
pub use error::{Error, Result};
pub use grid::{Dir, DownCell, GridSegment, SubTriangle, UpCell, Vertex};
pub use tiling::{Rhombus, Tiling};

/// Default cap on enumerated tilings and explored flip states.
pub const DEFAULT_LIMIT: usize = 2_000_000;

/// The cap from `TRITILE_LIMIT`, or [`DEFAULT_LIMIT`].
pub fn configured_limit() -> usize {
    std::env::var("TRITILE_LIMIT").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_LIMIT)
}
