//! Uniquely tileable unit arrangements for small sizes.
//!
//! `cargo run --release --example census`

fn main() {
    for n in 1..=5 {
        let r = tritile::census::census(n);
        println!(
            "n = {n}: {:>5} arrangements, {:>4} spread-out, {:>4} uniquely tileable, histogram {:?}",
            r.arrangements, r.spread_out, r.uniquely_tileable, r.histogram
        );
    }
}
