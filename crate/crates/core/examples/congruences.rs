//! Finite instances of the Radu-Sellers congruences for 4-duplicate
//! partitions, read off the product form.
//!
//! cargo run --release --example congruences

use qpart::verify::{run_check, Check, VerifyOptions};

fn main() {
    let report = run_check(Check::CongruenceSpot, &VerifyOptions::default());
    println!("{report}");
}
