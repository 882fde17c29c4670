//! Classical q-series identities checked as truncated series.
//!
//! cargo run --example identities

use num_bigint::BigInt;
use qpart::expansion::{classical_identity_sides, ClassicalIdentity, Monomial};
use qpart::series::{euler_product, pentagonal_series, theta_psi, theta_psi_product};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 40;
    println!("(q;q) = {}", euler_product(12));
    assert_eq!(euler_product(order), pentagonal_series(order));
    assert_eq!(theta_psi(-1, order), theta_psi_product(-1, order));

    for which in [ClassicalIdentity::Lebesgue, ClassicalIdentity::Gauss, ClassicalIdentity::Sylvester] {
        let (l, r) = classical_identity_sides(which, &[], order)?;
        println!("{which:?}: equal to q^{order}: {}", l == r);
    }

    let (l, _) = classical_identity_sides(ClassicalIdentity::Sylvester, &[], 6)?;
    println!("\nSylvester's product with b kept:\n{}", l.render(&["b"]));
    println!("at b = -1: {}", l.specialize(&[BigInt::from(-1)])?);

    let params = [Monomial::new(-1, 1), Monomial::new(1, 1), Monomial::new(1, 2)];
    let (l, r) = classical_identity_sides(ClassicalIdentity::RogersFine, &params, order)?;
    println!("\nRogers-Fine at alpha = {}, beta = {}, tau = {}: {}", params[0], params[1], params[2], l == r);
    let pair = [Monomial::new(1, 1), Monomial::new(1, 3)];
    let (l, r) = classical_identity_sides(ClassicalIdentity::JacobiTriple, &pair, order)?;
    println!("f({}, {}) = {}", pair[0], pair[1], l.specialize(&[])?.truncate(15));
    assert_eq!(l, r);
    Ok(())
}
