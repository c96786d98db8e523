//! Reading and writing `holey v1` files, and what the parser rejects.
//!
//! `cargo run --example file_format`

use tritile::io;

fn main() -> tritile::Result<()> {
    let text = include_str!("data/corners3_cw.holey");
    let t = io::parse_tiling(text)?;
    let canonical = io::serialize_tiling(&t);
    print!("{canonical}");
    assert_eq!(io::parse_tiling(&canonical)?, t);

    for bad in [
        "holey v1\nn 2\nhole 0 1 1\nhole 1 0 1\n",
        "holey v1\nn 2\nhole 1 0 1\nhole 1 0 1\n",
        "holey v1\nn 3\nhole 0 0 1\n",
        "holey v1\nn 2\nhole 1 0 1\nhole 1 1 1\nrhombus 1 0 W\n",
    ] {
        println!("{}", io::parse(bad).unwrap_err());
    }
    Ok(())
}
