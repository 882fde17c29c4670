use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse partition token `{0}`")]
    BadToken(String),
    #[error("parts and multiplicities must be positive in `{0}`")]
    NonPositive(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("s must be an even integer >= 4, got {0}")]
    InvalidModulus(u32),
    #[error("t must be >= {min}, got {t}")]
    InvalidDistinctBound { t: u32, min: u32 },
    #[error("t = {t} is congruent to an even nonzero residue modulo s = {s}")]
    ForbiddenResidue { s: u32, t: u32 },
    #[error("need 0 < i <= k, got k = {k}, i = {i}")]
    InvalidAndrewsIndex { k: u32, i: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(String),
    #[error("factor offset and step must be >= 1")]
    NonPositiveOffset,
    #[error("no product form for class {0}")]
    UnsupportedClass(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{partition} is not in the domain class {class}")]
    PreconditionViolated { partition: Partition, class: String },
    #[error("no case covers part {part} with multiplicity {mult} (s = {s})")]
    InternalCaseGap { part: u32, mult: u32, s: u32 },
    #[error("no valid choice for part {part} with multiplicity {mult} (s = {s})")]
    NoValidChoice { part: u32, mult: u32, s: u32 },
    #[error("s must be an even integer >= 4, got {0}")]
    InvalidModulus(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("marker arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),
}
