//! Depth fields, their change under a GD flip, and the two canonical tilings.
//!
//! `cargo run --example depth_function`

use tritile::census::spread_out_unit_arrangements;
use tritile::depth::{depth_field, DepthField};
use tritile::gdflip::{apply_gd_flip, canonicalize, find_cw_gds, Target};
use tritile::grid::RayDir;
use tritile::{tiling, HoleArrangement};

fn main() -> tritile::Result<()> {
    let arr = HoleArrangement::corners_and_center(5)?;
    let t = tiling::construct(&arr).expect("tileable");
    let empty = canonicalize(&t, Target::NoCw);
    let full = canonicalize(&t, Target::NoCcw);
    println!("no clockwise GD:");
    print!("{}", depth_field(&empty, RayDir::E).to_text());
    println!("no counter-clockwise GD:");
    print!("{}", depth_field(&full, RayDir::E).to_text());

    let f = find_cw_gds(&full)[0];
    let next = apply_gd_flip(&full, &f)?;
    for dir in RayDir::ALL {
        let diff = depth_field(&full, dir).diff(&depth_field(&next, dir));
        println!("flip {f}, ray {}: {:?}", dir.name(), diff);
    }

    // over all tilings up to n = 5: do the changed values share a sign, and
    // are the two canonical tilings pointwise extremal?
    let (mut flips, mut mixed) = (0, 0);
    let (mut arrs, mut extremal) = (0, 0);
    let (mut top_is_high, mut top_is_low) = (0, 0);
    for n in 1..=5 {
        for arr in spread_out_unit_arrangements(n) {
            let all: Vec<_> = tiling::enumerate(&arr).collect();
            for t in &all {
                for f in find_cw_gds(t) {
                    let next = apply_gd_flip(t, &f)?;
                    for dir in RayDir::ALL {
                        flips += 1;
                        let diff = depth_field(t, dir).diff(&depth_field(&next, dir));
                        if diff.iter().any(|x| x.1 != diff[0].1) {
                            mixed += 1;
                        }
                    }
                }
            }
            let top = canonicalize(&all[0], Target::NoCw);
            let bottom = canonicalize(&all[0], Target::NoCcw);
            for dir in RayDir::ALL {
                arrs += 1;
                let (hi, lo) = (depth_field(&top, dir), depth_field(&bottom, dir));
                let fields: Vec<_> = all.iter().map(|t| depth_field(t, dir)).collect();
                let between = |a: &DepthField, b: &DepthField| {
                    fields.iter().all(|f| f.values.iter().zip(&a.values).zip(&b.values).all(|((x, p), q)| p <= x && x <= q))
                };
                if between(&lo, &hi) || between(&hi, &lo) {
                    extremal += 1;
                }
                top_is_high += between(&lo, &hi) as usize;
                top_is_low += between(&hi, &lo) as usize;
            }
        }
    }
    println!("flip x direction cases with mixed signs: {mixed} of {flips}");
    println!(
        "(arrangement, direction) cases where the canonical tilings bound every tiling: {extremal} of {arrs} \
         (no-cw on top {top_is_high}, no-ccw on top {top_is_low})"
    );
    Ok(())
}
