//! Building, enumerating and sampling tilings.
//!
//! `cargo run --example tilings`

use rand::SeedableRng;
use tritile::{io, tiling, HoleArrangement};

fn main() -> tritile::Result<()> {
    let arr = HoleArrangement::corners_and_center(6)?;
    let t = tiling::construct(&arr).expect("the arrangement is spread-out");
    print!("{}", io::serialize_tiling(&t));
    println!("rhombi: {}", t.rhombus_count());

    for n in 3..=7 {
        let arr = HoleArrangement::from_unit_cells(
            n,
            [tritile::UpCell::new(0, 0), tritile::UpCell::new(n - 1, 0), tritile::UpCell::new(n - 1, n - 1)]
                .into_iter()
                .chain((1..n - 2).map(|i| tritile::UpCell::new(n - 1, i))),
        )?;
        println!("n = {n}, corners plus bottom row: {} tilings", tiling::count(&arr));
    }

    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let arr = HoleArrangement::corners_and_center(3)?;
    let pick = tiling::pick_uniform(&arr, &mut rng, 1000)?.expect("has tilings");
    println!("a uniformly chosen tiling of the n = 3 corners:");
    print!("{}", io::serialize_tiling(&pick));
    Ok(())
}
