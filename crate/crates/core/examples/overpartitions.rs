//! Overpartitions of small n and the three product forms.
//!
//! cargo run --example overpartitions

use qpart::overpartition::{enumerate_overpartitions, over_genfun, OverKind, ProductForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let list: Vec<String> = enumerate_overpartitions(3).map(|o| o.to_string()).collect();
    println!("overpartitions of 3 ({}): {}", list.len(), list.join("  "));
    for kind in OverKind::ALL {
        for s in [4u32, 6] {
            let a = over_genfun(kind, s, ProductForm::First, 12)?;
            let b = over_genfun(kind, s, ProductForm::Second, 12)?;
            println!("{kind:<15} s = {s}: {a}  (forms agree: {})", a == b);
        }
    }
    Ok(())
}
