//! Partition classes, membership predicates and brute-force counting.
//!
//! Everything here is an oracle: counts are produced by enumerating all
//! partitions of `n` and filtering. The other modules are checked against
//! these functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::ClassError;
use crate::partition::{enumerate_gap_partitions, enumerate_partitions, Partition};

/// The class families, with their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Unrestricted,
    /// Every multiplicity is 0 or 1 mod s.
    Modular { s: u32 },
    /// No part is an even nonzero residue mod s.
    Congruent { s: u32 },
    /// Repeated parts are multiples of s/2.
    Duplicate { s: u32 },
    /// Congruent(s) with every multiplicity below t.
    CongruentDistinct { s: u32, t: u32 },
    /// Congruent(s) avoiding 0 and the odd multiples of t modulo ts.
    EClass { s: u32, t: u32 },
    /// Residue side of Andrews' Göllnitz–Gordon generalization.
    VClass { k: u32, i: u32 },
    /// Difference-condition side of Andrews' Göllnitz–Gordon generalization.
    WClass { k: u32, i: u32 },
    /// Odd parts distinct.
    Pod,
    /// Even parts distinct.
    Ped,
    /// 4-duplicate partitions with exactly two parts.
    TwoPartDuplicate4,
}

/// A validated class description. Construct through the named constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassSpec(ClassKind);

fn check_modulus(s: u32) -> Result<(), ClassError> {
    if s >= 4 && s.is_multiple_of(2) {
        Ok(())
    } else {
        Err(ClassError::InvalidModulus(s))
    }
}

/// True when `r` is one of 2, 4, ..., s-2 modulo `s`.
pub(crate) fn is_even_nonzero_residue(r: u32, s: u32) -> bool {
    let m = r % s;
    m != 0 && m.is_multiple_of(2)
}

impl ClassSpec {
    pub fn unrestricted() -> Self {
        ClassSpec(ClassKind::Unrestricted)
    }

    pub fn modular(s: u32) -> Result<Self, ClassError> {
        check_modulus(s)?;
        Ok(ClassSpec(ClassKind::Modular { s }))
    }

    pub fn congruent(s: u32) -> Result<Self, ClassError> {
        check_modulus(s)?;
        Ok(ClassSpec(ClassKind::Congruent { s }))
    }

    pub fn duplicate(s: u32) -> Result<Self, ClassError> {
        check_modulus(s)?;
        Ok(ClassSpec(ClassKind::Duplicate { s }))
    }

    pub fn congruent_distinct(s: u32, t: u32) -> Result<Self, ClassError> {
        check_modulus(s)?;
        if t < 2 {
            return Err(ClassError::InvalidDistinctBound { t, min: 2 });
        }
        Ok(ClassSpec(ClassKind::CongruentDistinct { s, t }))
    }

    pub fn e_class(s: u32, t: u32) -> Result<Self, ClassError> {
        check_modulus(s)?;
        if t < 3 {
            return Err(ClassError::InvalidDistinctBound { t, min: 3 });
        }
        if is_even_nonzero_residue(t, s) {
            return Err(ClassError::ForbiddenResidue { s, t });
        }
        Ok(ClassSpec(ClassKind::EClass { s, t }))
    }

    pub fn v_class(k: u32, i: u32) -> Result<Self, ClassError> {
        if i == 0 || i > k {
            return Err(ClassError::InvalidAndrewsIndex { k, i });
        }
        Ok(ClassSpec(ClassKind::VClass { k, i }))
    }

    pub fn w_class(k: u32, i: u32) -> Result<Self, ClassError> {
        if i == 0 || i > k {
            return Err(ClassError::InvalidAndrewsIndex { k, i });
        }
        Ok(ClassSpec(ClassKind::WClass { k, i }))
    }

    pub fn pod() -> Self {
        ClassSpec(ClassKind::Pod)
    }

    pub fn ped() -> Self {
        ClassSpec(ClassKind::Ped)
    }

    pub fn two_part_duplicate4() -> Self {
        ClassSpec(ClassKind::TwoPartDuplicate4)
    }

    pub fn kind(&self) -> ClassKind {
        self.0
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            ClassKind::Unrestricted => write!(f, "unrestricted"),
            ClassKind::Modular { s } => write!(f, "{s}-modular"),
            ClassKind::Congruent { s } => write!(f, "{s}-congruent"),
            ClassKind::Duplicate { s } => write!(f, "{s}-duplicate"),
            ClassKind::CongruentDistinct { s, t } => write!(f, "{s}-congruent {t}-distinct"),
            ClassKind::EClass { s, t } => write!(f, "E(s={s}, t={t})"),
            ClassKind::VClass { k, i } => write!(f, "V(k={k}, i={i})"),
            ClassKind::WClass { k, i } => write!(f, "W(k={k}, i={i})"),
            ClassKind::Pod => write!(f, "pod"),
            ClassKind::Ped => write!(f, "ped"),
            ClassKind::TwoPartDuplicate4 => write!(f, "4-duplicate with 2 parts"),
        }
    }
}

/// Residues excluded modulo `ts` by the E-class: 0 and t(2r+1) for
/// r = 0..s/2-1.
pub fn e_class_residues(s: u32, t: u32) -> Vec<u32> {
    let modulus = t * s;
    let mut res: Vec<u32> = std::iter::once(0)
        .chain((0..s / 2).map(|r| (t * (2 * r + 1)) % modulus))
        .collect();
    res.sort_unstable();
    res.dedup();
    res
}

/// Exact truth of the class condition for `lambda`.
pub fn is_member(lambda: &Partition, class: &ClassSpec) -> bool {
    let e = lambda.entries();
    match class.0 {
        ClassKind::Unrestricted => true,
        ClassKind::Modular { s } => e.iter().all(|&(_, m)| m % s <= 1),
        ClassKind::Congruent { s } => e.iter().all(|&(p, _)| !is_even_nonzero_residue(p, s)),
        ClassKind::Duplicate { s } => e.iter().all(|&(p, m)| m == 1 || p % (s / 2) == 0),
        ClassKind::CongruentDistinct { s, t } => e
            .iter()
            .all(|&(p, m)| !is_even_nonzero_residue(p, s) && m < t),
        ClassKind::EClass { s, t } => {
            let forbidden = e_class_residues(s, t);
            e.iter().all(|&(p, _)| {
                !is_even_nonzero_residue(p, s) && !forbidden.contains(&(p % (t * s)))
            })
        }
        ClassKind::VClass { k, i } => {
            let modulus = 4 * k;
            let a = (2 * i - 1) % modulus;
            let b = (modulus - a) % modulus;
            e.iter().all(|&(p, _)| {
                let r = p % modulus;
                p % 4 != 2 && r != 0 && r != a && r != b
            })
        }
        ClassKind::WClass { k, i } => is_w_member(lambda, k, i),
        ClassKind::Pod => e.iter().all(|&(p, m)| p % 2 == 0 || m == 1),
        ClassKind::Ped => e.iter().all(|&(p, m)| p % 2 == 1 || m == 1),
        ClassKind::TwoPartDuplicate4 => {
            lambda.len() == 2 && e.iter().all(|&(p, m)| m == 1 || p % 2 == 0)
        }
    }
}

// Difference conditions apply only where index j+k-1 exists.
fn is_w_member(lambda: &Partition, k: u32, i: u32) -> bool {
    if lambda.entries().iter().any(|&(p, m)| p % 2 == 1 && m > 1) {
        return false;
    }
    let parts = lambda.parts();
    let small = parts.iter().filter(|&&p| p <= 2).count();
    if small > (i - 1) as usize {
        return false;
    }
    let span = (k - 1) as usize;
    parts.iter().enumerate().all(|(j, &pj)| match parts.get(j + span) {
        None => true,
        Some(&pk) => {
            let d = pj - pk;
            if pj % 2 == 1 {
                d >= 2
            } else {
                d > 2
            }
        }
    })
}

/// Number of partitions of `n` in the class, by exhaustive filtering.
/// Negative `n` counts as zero.
pub fn count(n: i64, class: &ClassSpec) -> BigInt {
    if n < 0 {
        return BigInt::from(0);
    }
    BigInt::from(members(n as u32, class).count())
}

/// The members of the class among the partitions of `n`, in enumeration order.
pub fn members(n: u32, class: &ClassSpec) -> impl Iterator<Item = Partition> + '_ {
    enumerate_partitions(n).filter(move |l| is_member(l, class))
}

/// Counts of `s`-duplicate partitions of `n` keyed by
/// `(total parts, parts not divisible by s/2)`.
pub fn refined_duplicate_counts(
    n: u32,
    s: u32,
) -> Result<BTreeMap<(u64, u64), BigInt>, ClassError> {
    let class = ClassSpec::duplicate(s)?;
    let half = s / 2;
    let mut out: BTreeMap<(u64, u64), BigInt> = BTreeMap::new();
    for lambda in members(n, &class) {
        let r = lambda.len();
        let l: u64 = lambda
            .entries()
            .iter()
            .filter(|&&(p, _)| p % half != 0)
            .map(|&(_, m)| u64::from(m))
            .sum();
        *out.entry((r, l)).or_default() += 1;
    }
    Ok(out)
}

/// Both sides of Alladi's weighted identity between partitions into
/// distinct parts and partitions with gaps of at least 3, as coefficient
/// vectors in `c` (index = power of c).
///
/// The second side weights each gap-3 partition by `c^len (1+c)^v`, where
/// `v` counts gaps strictly larger than 3 with a trailing sentinel part -1.
pub fn sylvester_weight_polynomials(n: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut distinct = vec![BigInt::from(0); n as usize + 1];
    for lambda in enumerate_gap_partitions(n, 1) {
        distinct[lambda.len() as usize] += 1;
    }
    let mut gapped = vec![BigInt::from(0); n as usize + 1];
    for lambda in enumerate_gap_partitions(n, 3) {
        let parts: Vec<i64> = lambda
            .parts()
            .into_iter()
            .map(i64::from)
            .chain(std::iter::once(-1))
            .collect();
        let nu = parts.windows(2).filter(|w| w[0] - w[1] > 3).count();
        let len = lambda.len() as usize;
        if gapped.len() < len + nu + 1 {
            gapped.resize(len + nu + 1, BigInt::from(0));
        }
        // c^len (1+c)^nu
        for (j, binom) in binomial_row(nu).into_iter().enumerate() {
            gapped[len + j] += binom;
        }
    }
    trim(&mut distinct);
    trim(&mut gapped);
    (distinct, gapped)
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(0); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += v;
            next[j + 1] += v;
        }
        row = next;
    }
    row
}

fn trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().is_some_and(|x| *x == BigInt::from(0)) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn constructors_validate() {
        assert!(ClassSpec::modular(3).is_err());
        assert!(ClassSpec::modular(2).is_err());
        assert!(ClassSpec::duplicate(6).is_ok());
        assert!(ClassSpec::congruent_distinct(4, 1).is_err());
        assert!(ClassSpec::e_class(6, 2).is_err());
        assert!(ClassSpec::e_class(6, 4).is_err());
        assert!(ClassSpec::e_class(6, 8).is_err());
        assert!(ClassSpec::e_class(6, 3).is_ok());
        assert!(ClassSpec::e_class(4, 4).is_ok());
        assert!(ClassSpec::v_class(3, 0).is_err());
        assert!(ClassSpec::w_class(3, 4).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&p("3,1^5"), &ClassSpec::modular(4).unwrap()));
        assert!(!is_member(&p("3,1^2"), &ClassSpec::modular(4).unwrap()));
        assert!(is_member(&p("6,1^2"), &ClassSpec::congruent(6).unwrap()));
        assert!(!is_member(&p("4,1^2"), &ClassSpec::congruent(6).unwrap()));
        assert!(is_member(&p("2^2,1"), &ClassSpec::duplicate(4).unwrap()));
        assert!(!is_member(&p("2,1^2"), &ClassSpec::duplicate(4).unwrap()));
        assert!(is_member(&p("3^3,1^3"), &ClassSpec::congruent_distinct(4, 4).unwrap()));
        assert!(!is_member(&p("3^4"), &ClassSpec::congruent_distinct(4, 4).unwrap()));
        assert!(is_member(&Partition::empty(), &ClassSpec::w_class(3, 1).unwrap()));
    }

    #[test]
    fn e_class_residue_sets() {
        assert_eq!(e_class_residues(6, 3), vec![0, 3, 9, 15]);
        assert_eq!(e_class_residues(4, 3), vec![0, 3, 9]);
    }

    #[test]
    fn w_class_conditions() {
        let w = ClassSpec::w_class(3, 2).unwrap();
        assert!(is_member(&p("6^2"), &w));
        assert!(is_member(&p("6,4,2"), &w));
        assert!(!is_member(&p("5^2,2"), &w)); // odd part repeated
        assert!(!is_member(&p("8,2,1,1"), &w));
        assert!(!is_member(&p("8,2,1"), &w)); // two parts <= 2
        assert!(!is_member(&p("6,5,4"), &w)); // 6 - 4 = 2 with 6 even
        assert!(is_member(&p("7,6,5"), &w)); // 7 - 5 = 2 with 7 odd
    }

    #[test]
    fn worked_point_counts() {
        assert_eq!(count(8, &ClassSpec::modular(4).unwrap()), n(10));
        assert_eq!(count(8, &ClassSpec::congruent(6).unwrap()), n(7));
        assert_eq!(count(6, &ClassSpec::duplicate(6).unwrap()), n(5));
        assert_eq!(count(9, &ClassSpec::congruent_distinct(4, 4).unwrap()), n(9));
        assert_eq!(count(14, &ClassSpec::e_class(6, 3).unwrap()), n(13));
        assert_eq!(count(12, &ClassSpec::v_class(3, 2).unwrap()), n(13));
        assert_eq!(count(12, &ClassSpec::w_class(3, 2).unwrap()), n(13));
        assert_eq!(count(-3, &ClassSpec::unrestricted()), n(0));
    }

    #[test]
    fn listed_member_sets() {
        let got: Vec<String> = members(8, &ClassSpec::modular(4).unwrap())
            .map(|l| l.to_string())
            .collect();
        let mut want = ["8", "7,1", "6,2", "5,3", "5,2,1", "4,3,1", "3,1^5", "4,1^4", "2^4", "1^8"]
            .map(String::from)
            .to_vec();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        want.sort();
        assert_eq!(got_sorted, want);

        let dup: Vec<String> = members(6, &ClassSpec::duplicate(6).unwrap())
            .map(|l| l.to_string())
            .collect();
        assert_eq!(dup, ["6", "5,1", "4,2", "3^2", "3,2,1"]);
    }

    #[test]
    fn duplicate_13_3_has_11_members() {
        let d4 = ClassSpec::duplicate(4).unwrap();
        let c = crate::partition::enumerate_partitions_with_length(13, 3)
            .filter(|l| is_member(l, &d4))
            .count();
        assert_eq!(c, 11);
    }

    #[test]
    fn refined_counts() {
        let zero = refined_duplicate_counts(0, 4).unwrap();
        assert_eq!(zero, BTreeMap::from([((0, 0), n(1))]));
        // (3) -> one part, odd; (2,1) -> two parts, one odd
        let three = refined_duplicate_counts(3, 4).unwrap();
        assert_eq!(three, BTreeMap::from([((1, 1), n(1)), ((2, 1), n(1))]));
        let ten: BigInt = refined_duplicate_counts(10, 4).unwrap().values().sum();
        assert_eq!(ten, n(16));
        assert!(refined_duplicate_counts(3, 5).is_err());
    }

    #[test]
    fn sylvester_small() {
        assert_eq!(sylvester_weight_polynomials(0), (vec![n(1)], vec![n(1)]));
        let (a, b) = sylvester_weight_polynomials(3);
        assert_eq!(a, vec![n(0), n(1), n(1)]);
        assert_eq!(a, b);
        for m in 0..=20 {
            let (a, b) = sylvester_weight_polynomials(m);
            assert_eq!(a, b, "n = {m}");
        }
    }
}
