//! The Durfee-square expansion for duplicate partitions with markers z
//! (parts) and b (parts not divisible by s/2), and its s = 4 reduction to
//! Alladi's expansion.
//!
//! cargo run --example durfee_expansion

use qpart::expansion::{
    alladi_sides, duplicate_refined_lhs, duplicate_refined_rhs, duplicate_to_alladi, expansion_terms,
    ExpansionReading,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 30;
    for s in [4u32, 6, 8] {
        let lhs = duplicate_refined_lhs(s, order)?;
        let rhs = duplicate_refined_rhs(s, expansion_terms(s, order), order, ExpansionReading::FactoredBracket)?;
        match lhs.first_difference(&rhs) {
            None => println!("s = {s}: sides agree to q^{order}"),
            Some((n, e)) => println!(
                "s = {s}: first difference at q^{n} z^{} b^{}: product {}, expansion {}",
                e[0],
                e[1],
                lhs.coeff(n, &e),
                rhs.coeff(n, &e)
            ),
        }
    }
    println!("\ns = 6 product to q^4:\n{}", duplicate_refined_lhs(6, 4)?.render(&["z", "b"]));

    let (al, ar) = alladi_sides(order);
    let reduced = duplicate_to_alladi(&duplicate_refined_lhs(4, order)?)?;
    println!("\nAlladi sides agree: {}; s = 4 reduction matches: {}", al == ar, reduced == al);
    Ok(())
}
