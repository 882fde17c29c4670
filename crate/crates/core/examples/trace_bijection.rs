//! Traces the maps on a few inputs, one rule per block.
//!
//! cargo run --example trace_bijection

use qpart::bijection::{apply_traced, Direction};
use qpart::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (8, Direction::ToCongruent, "4,3,2,1^9"),
        (8, Direction::FromCongruent, "3,1^15"),
        (6, Direction::ToCongruent, "10,2,1^6"),
        (6, Direction::FromCongruent, "5^2,3^2,1^2"),
        (4, Direction::ToDuplicate, "3,2,1^5"),
        (6, Direction::FromDuplicate, "6^3"),
    ];
    for (s, dir, lit) in cases {
        let lambda: Partition = lit.parse()?;
        let (image, steps) = apply_traced(&lambda, s, dir)?;
        println!("{}({lambda}) with s = {s}:", dir.map_name(s));
        for step in steps {
            println!("  {step}");
        }
        println!("  = {image}\n");
    }
    Ok(())
}
