//! Counts for each partition class, by enumeration and by product form.
//!
//! cargo run --example class_counts

use qpart::genfun::class_genfun;
use qpart::{count, ClassSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let classes = [
        ClassSpec::modular(4)?,
        ClassSpec::congruent(4)?,
        ClassSpec::duplicate(4)?,
        ClassSpec::congruent(6)?,
        ClassSpec::congruent_distinct(4, 4)?,
        ClassSpec::e_class(6, 3)?,
        ClassSpec::pod(),
        ClassSpec::ped(),
    ];
    let n = 14;
    for class in &classes {
        let series = class_genfun(class, n)?;
        let terms: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
        println!("{class:<26} {}", terms.join(" "));
        assert_eq!(series.coeff(n as i64), count(n as i64, class));
    }

    // Classes without a product form are counted by enumeration only.
    let v = ClassSpec::v_class(3, 2)?;
    let w = ClassSpec::w_class(3, 2)?;
    println!("{v}: {}   {w}: {}", count(12, &v), count(12, &w));
    Ok(())
}
