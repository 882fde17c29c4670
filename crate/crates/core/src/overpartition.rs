//! Overpartitions and the product forms for their modular, congruent and
//! duplicate analogues. The products are taken as the definition of the
//! three counts; only the unrestricted case is enumerated.

use std::fmt;

use crate::error::ClassError;
use crate::partition::{enumerate_partitions, Partition};
use crate::series::{pochhammer_quotient, FactorSpec, TruncatedSeries};

/// An overpartition: a partition whose first occurrence of each part value
/// may be overlined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    /// `(part, multiplicity, overlined)`, parts decreasing.
    entries: Vec<(u32, u32, bool)>,
}

impl Overpartition {
    /// Marks the listed part values as overlined; values absent from
    /// `partition` are ignored.
    pub fn new(partition: &Partition, overlined: &[u32]) -> Self {
        Overpartition {
            entries: partition
                .entries()
                .iter()
                .map(|&(p, m)| (p, m, overlined.contains(&p)))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(u32, u32, bool)] {
        &self.entries
    }

    pub fn partition(&self) -> Partition {
        Partition::from_pairs(self.entries.iter().map(|&(p, m, _)| (p, m)))
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|&(p, m, _)| u64::from(p) * u64::from(m)).sum()
    }

    pub fn overlined(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().filter(|e| e.2).map(|e| e.0)
    }
}

/// Parts in decreasing order; an overlined first occurrence carries a
/// trailing `'`, e.g. `3',2,2,1'`.
impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("()");
        }
        let mut parts = Vec::new();
        for &(p, m, o) in &self.entries {
            for i in 0..m {
                parts.push(if o && i == 0 { format!("{p}'") } else { p.to_string() });
            }
        }
        f.write_str(&parts.join(","))
    }
}

/// Every overpartition of `n`, each exactly once.
pub fn enumerate_overpartitions(n: u32) -> impl Iterator<Item = Overpartition> {
    enumerate_partitions(n).flat_map(|lambda| {
        let values: Vec<u32> = lambda.entries().iter().map(|e| e.0).collect();
        (0u64..1 << values.len()).map(move |mask| {
            let chosen: Vec<u32> = values
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            Overpartition::new(&lambda, &chosen)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OverKind {
    OverModular,
    OverCongruent,
    OverDuplicate,
}

impl OverKind {
    pub const ALL: [OverKind; 3] = [OverKind::OverModular, OverKind::OverCongruent, OverKind::OverDuplicate];
}

impl fmt::Display for OverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OverKind::OverModular => "over-modular",
            OverKind::OverCongruent => "over-congruent",
            OverKind::OverDuplicate => "over-duplicate",
        })
    }
}

/// Which of the two displayed product forms to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductForm {
    First,
    Second,
}

/// The selected product form for the overpartition count of `kind`.
pub fn over_genfun(
    kind: OverKind,
    s: u32,
    form: ProductForm,
    order: usize,
) -> Result<TruncatedSeries, ClassError> {
    if s < 4 || s % 2 == 1 {
        return Err(ClassError::InvalidModulus(s));
    }
    let s = s as usize;
    let h = s / 2;
    let two_q = FactorSpec::new(2, 1, 1, 1);
    let poch = FactorSpec::poch;
    let neg = FactorSpec::neg_poch;
    let (num, den) = match (kind, form) {
        (OverKind::OverModular, ProductForm::First) => (vec![two_q, neg(s, s)], vec![poch(s, s)]),
        (OverKind::OverModular, ProductForm::Second) => {
            (vec![two_q, poch(2 * s, 2 * s)], vec![poch(s, s), poch(s, s)])
        }
        (OverKind::OverCongruent, ProductForm::First) => {
            (vec![neg(1, 2), neg(s, s)], vec![poch(1, 2), poch(s, s)])
        }
        (OverKind::OverCongruent, ProductForm::Second) => (
            vec![poch(2, 2), poch(2, 2), poch(2, 2), poch(2 * s, 2 * s)],
            vec![poch(1, 1), poch(1, 1), poch(4, 4), poch(s, s), poch(s, s)],
        ),
        (OverKind::OverDuplicate, ProductForm::First) => (
            vec![two_q, neg(h, h)],
            vec![FactorSpec::new(2, h, h, 1), poch(h, h)],
        ),
        (OverKind::OverDuplicate, ProductForm::Second) => (
            vec![two_q, poch(s, s)],
            vec![FactorSpec::new(2, h, h, 1), poch(h, h), poch(h, h)],
        ),
    };
    Ok(pochhammer_quotient(&num, &den, order).expect("offsets are positive"))
}

/// `(-q;q)_∞ / (q;q)_∞`.
pub fn overpartition_genfun(order: usize) -> TruncatedSeries {
    pochhammer_quotient(&[FactorSpec::neg_poch(1, 1)], &[FactorSpec::poch(1, 1)], order)
        .expect("offsets are positive")
}
