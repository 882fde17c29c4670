//! (n, k) tables from the recurrences, compared with the printed tables.
//!
//! cargo run --example recurrence_tables

use qpart::golden::diff_against_printed;
use qpart::recurrence::{c4_triangular_upto, c_table, d_table, m_table, AlphaSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = m_table(4, 20, 15)?;
    let c = c_table(4, 20, 15)?;
    let d = d_table(4, 14, 7)?;
    for t in [&m, &c.table, &d] {
        let diffs = diff_against_printed(t);
        println!("{} s = 4: {} cells differ from print", t.kind, diffs.len());
        for x in diffs {
            let tag = if x.known_erratum { "known erratum" } else { "unexpected" };
            println!("  ({}, {}) printed {} computed {} [{tag}]", x.n, x.k, x.printed, x.computed);
        }
    }
    println!("C_4(20, 4) = {} with layers {:?}", c.table.get(20, 4), [1, 3, 4, 5].map(|l| c.layer(l, 20, 4)));
    println!("D_4(13, 3) = {}", d.get(13, 3));
    let tri = c4_triangular_upto(24);
    println!("C_4(21) = {}, C_4(24) = {}", tri[21], tri[24]);
    println!("|A(8)| = {}", AlphaSet::new(8)?.len());
    Ok(())
}
