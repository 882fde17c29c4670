//! Closed-form generating functions for the partition classes.

use crate::classes::{ClassKind, ClassSpec};
use crate::error::SeriesError;
use crate::series::{pochhammer_quotient, theta_psi, FactorSpec, TruncatedSeries};

use FactorSpec as F;

/// The class's product form truncated at `order`. The coefficient of `q^n`
/// counts the members of the class among the partitions of `n`.
pub fn class_genfun(class: &ClassSpec, order: usize) -> Result<TruncatedSeries, SeriesError> {
    match class.kind() {
        ClassKind::Unrestricted => pochhammer_quotient(&[], &[F::poch(1, 1)], order),
        // (-q;q) / (q^s;q^s)
        ClassKind::Modular { s } => {
            let s = s as usize;
            pochhammer_quotient(&[F::neg_poch(1, 1)], &[F::poch(s, s)], order)
        }
        // 1 / ((q;q^2)(q^s;q^s))
        ClassKind::Congruent { s } => {
            let s = s as usize;
            pochhammer_quotient(&[], &[F::poch(1, 2), F::poch(s, s)], order)
        }
        // (-q;q) / ((-q^h;q^h)(q^h;q^h)), h = s/2
        ClassKind::Duplicate { s } => {
            let h = (s / 2) as usize;
            pochhammer_quotient(
                &[F::neg_poch(1, 1)],
                &[F::neg_poch(h, h), F::poch(h, h)],
                order,
            )
        }
        // prod (1-q^{t(2n-1)})(1-q^{tsn}) / ((1-q^{2n-1})(1-q^{sn}))
        ClassKind::CongruentDistinct { s, t } => {
            let (s, t) = (s as usize, t as usize);
            pochhammer_quotient(
                &[F::poch(t, 2 * t), F::poch(t * s, t * s)],
                &[F::poch(1, 2), F::poch(s, s)],
                order,
            )
        }
        // (q^2;q^2)(q^t;q^t)(q^{ts};q^{ts}) / ((q;q)(q^s;q^s)(q^{2t};q^{2t}))
        ClassKind::EClass { s, t } => {
            let (s, t) = (s as usize, t as usize);
            pochhammer_quotient(
                &[F::poch(2, 2), F::poch(t, t), F::poch(t * s, t * s)],
                &[F::poch(1, 1), F::poch(s, s), F::poch(2 * t, 2 * t)],
                order,
            )
        }
        ClassKind::Pod => theta_psi(-1, order).invert(),
        // (-q^2;q^2) / (q;q^2)
        ClassKind::Ped => pochhammer_quotient(&[F::neg_poch(2, 2)], &[F::poch(1, 2)], order),
        ClassKind::TwoPartDuplicate4 => Ok(two_part_duplicate4(order)),
        ClassKind::VClass { .. } | ClassKind::WClass { .. } => {
            Err(SeriesError::UnsupportedClass(class.to_string()))
        }
    }
}

// 2q^4/((1-q^2)(1-q^4)) + q^3/(1-q^2)^2
fn two_part_duplicate4(order: usize) -> TruncatedSeries {
    let one = num_bigint::BigInt::from(-1);
    let mut a = TruncatedSeries::monomial(2, 4, order);
    a.div_binomial(&one, 2);
    a.div_binomial(&one, 4);
    let mut b = TruncatedSeries::monomial(1, 3, order);
    b.div_binomial(&one, 2);
    b.div_binomial(&one, 2);
    &a + &b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::count;
    use num_bigint::BigInt;

    fn coeffs(c: &ClassSpec, order: usize) -> Vec<i64> {
        class_genfun(c, order)
            .unwrap()
            .coeffs()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn point_values() {
        assert_eq!(coeffs(&ClassSpec::modular(4).unwrap(), 8)[8], 10);
        assert_eq!(coeffs(&ClassSpec::e_class(6, 3).unwrap(), 14)[14], 13);
        assert_eq!(
            coeffs(&ClassSpec::congruent(4).unwrap(), 10),
            [1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16]
        );
        assert_eq!(
            coeffs(&ClassSpec::two_part_duplicate4(), 8),
            [0, 0, 0, 1, 2, 2, 2, 3, 4]
        );
    }

    #[test]
    fn andrews_classes_have_no_product() {
        let v = ClassSpec::v_class(3, 2).unwrap();
        assert!(matches!(
            class_genfun(&v, 5),
            Err(SeriesError::UnsupportedClass(_))
        ));
    }

    #[test]
    fn products_match_oracle() {
        let classes = [
            ClassSpec::unrestricted(),
            ClassSpec::modular(4).unwrap(),
            ClassSpec::modular(6).unwrap(),
            ClassSpec::congruent(6).unwrap(),
            ClassSpec::duplicate(4).unwrap(),
            ClassSpec::duplicate(8).unwrap(),
            ClassSpec::congruent_distinct(4, 3).unwrap(),
            ClassSpec::congruent_distinct(6, 2).unwrap(),
            ClassSpec::e_class(4, 5).unwrap(),
            ClassSpec::e_class(8, 3).unwrap(),
            ClassSpec::pod(),
            ClassSpec::ped(),
            ClassSpec::two_part_duplicate4(),
        ];
        for c in &classes {
            let g = class_genfun(c, 22).unwrap();
            for n in 0..=22 {
                assert_eq!(g.coeff(n), count(n, c), "{c} at {n}");
            }
        }
    }

    #[test]
    fn distinct_and_e_forms_agree() {
        for (s, t) in [(4, 3), (4, 5), (6, 3), (6, 5), (8, 3)] {
            let a = class_genfun(&ClassSpec::congruent_distinct(s, t).unwrap(), 100).unwrap();
            let b = class_genfun(&ClassSpec::e_class(s, t).unwrap(), 100).unwrap();
            assert_eq!(a, b, "s={s} t={t}");
        }
        assert_eq!(
            class_genfun(&ClassSpec::pod(), 5).unwrap().coeff(0),
            BigInt::from(1)
        );
    }
}
