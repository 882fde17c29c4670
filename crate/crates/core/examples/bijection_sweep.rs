//! Runs every map over its whole domain and reports anything that is not a
//! clean weight-preserving bijection.
//!
//! cargo run --release --example bijection_sweep -- [max_n]

use qpart::bijection::{sweep, Direction};

fn main() {
    let max_n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(22);
    let dirs = [
        Direction::ToCongruent,
        Direction::ToDuplicate,
        Direction::FromCongruent,
        Direction::FromDuplicate,
    ];
    for s in [4u32, 6, 8, 10, 16] {
        for dir in dirs {
            let start = std::time::Instant::now();
            let mut total = 0;
            for n in 0..=max_n {
                let findings = sweep(s, n, dir).expect("valid modulus");
                for f in findings.iter() {
                    println!("s={s} {}: n={n}: {f}", dir.map_name(s));
                }
                total += findings.len();
            }
            println!(
                "s={s} {:5} n<={max_n}: {total} findings ({:.1?})",
                dir.map_name(s),
                start.elapsed()
            );
        }
    }
}
