//! The part-wise bijections between modular partitions and congruent or
//! duplicate partitions, with their inverses.
//!
//! Every map acts on one block `lambda^u` (a part with its multiplicity) at a
//! time and the block images are merged as a multiset. Each map is an
//! ordered list of guarded rules. The first rule whose guard holds produces
//! the image; a block that no rule covers is reported as
//! [`BijectionError::InternalCaseGap`] instead of being passed through.
//!
//! For `s = 2^p` the maps are `f` (to congruent) and `g` (to duplicate);
//! otherwise `h` and `w`.

use std::fmt;

use crate::classes::{is_even_nonzero_residue, is_member, ClassSpec};
use crate::error::BijectionError;
use crate::partition::Partition;

/// `m = 2^r * ell` with `ell` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoAdicSplit {
    pub r: u32,
    pub ell: u32,
}

pub fn two_adic_split(m: u32) -> TwoAdicSplit {
    assert!(m >= 1, "two_adic_split needs a positive integer");
    let r = m.trailing_zeros();
    TwoAdicSplit { r, ell: m >> r }
}

/// The bits `a_1..a_{p-1}` peeled from a multiplicity by `f^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVectorChoice {
    /// `bits[j-1]` is `a_j`.
    pub bits: Vec<bool>,
}

impl BitVectorChoice {
    /// `sum_j 2^j a_j`.
    pub fn magnitude(&self) -> u32 {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| 1u32 << (j + 1))
            .sum()
    }
}

/// Searches all `2^{p-1}` bit vectors for the one leaving the largest
/// `m = u - |W| >= 0` with `m = 0, 1 (mod s)`.
pub fn choose_bit_vector(u: u32, s: u32) -> Result<BitVectorChoice, BijectionError> {
    let p = s.trailing_zeros();
    let mut best: Option<(u32, u32)> = None; // (m, mask)
    let mut ties = 0;
    for mask in 0u32..(1 << (p - 1)) {
        let magnitude = mask << 1;
        if magnitude > u {
            continue;
        }
        let m = u - magnitude;
        if m % s > 1 {
            continue;
        }
        match best {
            Some((bm, _)) if bm > m => {}
            Some((bm, _)) if bm == m => ties += 1,
            _ => {
                best = Some((m, mask));
                ties = 0;
            }
        }
    }
    match best {
        // distinct masks give distinct magnitudes, so a tie means a bug
        Some((_, mask)) if ties == 0 => Ok(BitVectorChoice {
            bits: (0..p - 1).map(|j| mask >> j & 1 == 1).collect(),
        }),
        _ => Err(BijectionError::NoValidChoice {
            part: 0,
            mult: u,
            s,
        }),
    }
}

pub fn is_power_of_two(s: u32) -> bool {
    s.is_power_of_two()
}

/// Which of the four maps (or inverses) to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    ToCongruent,
    ToDuplicate,
    FromCongruent,
    FromDuplicate,
}

impl Direction {
    fn domain(self, s: u32) -> ClassSpec {
        let c = match self {
            Direction::ToCongruent | Direction::ToDuplicate => ClassSpec::modular(s),
            Direction::FromCongruent => ClassSpec::congruent(s),
            Direction::FromDuplicate => ClassSpec::duplicate(s),
        };
        c.expect("modulus validated before dispatch")
    }

    /// The class images must land in.
    pub fn codomain(self, s: u32) -> ClassSpec {
        let c = match self {
            Direction::ToCongruent => ClassSpec::congruent(s),
            Direction::ToDuplicate => ClassSpec::duplicate(s),
            Direction::FromCongruent | Direction::FromDuplicate => ClassSpec::modular(s),
        };
        c.expect("modulus validated before dispatch")
    }

    pub fn inverse(self) -> Direction {
        match self {
            Direction::ToCongruent => Direction::FromCongruent,
            Direction::ToDuplicate => Direction::FromDuplicate,
            Direction::FromCongruent => Direction::ToCongruent,
            Direction::FromDuplicate => Direction::ToDuplicate,
        }
    }

    /// Conventional name of the map for modulus `s`.
    pub fn map_name(self, s: u32) -> &'static str {
        let pow = is_power_of_two(s);
        match (self, pow) {
            (Direction::ToCongruent, true) => "f",
            (Direction::ToCongruent, false) => "h",
            (Direction::ToDuplicate, true) => "g",
            (Direction::ToDuplicate, false) => "w",
            (Direction::FromCongruent, true) => "f^-1",
            (Direction::FromCongruent, false) => "h^-1",
            (Direction::FromDuplicate, true) => "g^-1",
            (Direction::FromDuplicate, false) => "w^-1",
        }
    }

    fn rules(self, s: u32) -> &'static [Rule] {
        match (self, is_power_of_two(s)) {
            (Direction::ToCongruent, true) => F_RULES,
            (Direction::ToCongruent, false) => H_RULES,
            (Direction::ToDuplicate, true) => G_RULES,
            (Direction::ToDuplicate, false) => W_RULES,
            (Direction::FromCongruent, true) => F_INV_RULES,
            (Direction::FromCongruent, false) => H_INV_RULES,
            (Direction::FromDuplicate, true) => G_INV_RULES,
            (Direction::FromDuplicate, false) => W_INV_RULES,
        }
    }
}

/// One block `part^mult` of the input.
#[derive(Debug, Clone, Copy)]
struct Block {
    part: u32,
    mult: u32,
    s: u32,
}

type Image = Result<Vec<(u32, u32)>, BijectionError>;

struct Rule {
    name: &'static str,
    guard: fn(&Block) -> bool,
    image: fn(&Block) -> Image,
}

/// One rule application recorded by the traced variants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub map: &'static str,
    pub part: u32,
    pub mult: u32,
    pub rule: &'static str,
    pub image: Partition,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = Partition::from_pairs([(self.part, self.mult)]);
        let image = if self.image.is_empty() {
            "(empty)".to_string()
        } else {
            self.image.to_string()
        };
        write!(f, "{}({}) = {}    [{}]", self.map, block, image, self.rule)
    }
}

fn identity(b: &Block) -> Image {
    Ok(vec![(b.part, b.mult)])
}

fn always(_: &Block) -> bool {
    true
}

fn even_residue(b: &Block) -> bool {
    is_even_nonzero_residue(b.part, b.s)
}

// u^lambda when u = 0 (mod s)
fn swap_part_and_mult(b: &Block) -> Image {
    Ok(vec![(b.mult, b.part)])
}

// (u-1)^lambda, ell^{2^r}
fn swap_and_split(b: &Block) -> Image {
    let t = two_adic_split(b.part);
    Ok(vec![(b.mult - 1, b.part), (t.ell, 1 << t.r)])
}

// (s lambda / 2)^{2u/s}, or with u = 1 (mod s) the extra single lambda
fn scale_by_half_modulus(b: &Block) -> Image {
    let big = b.s / 2 * b.part;
    if b.mult.is_multiple_of(b.s) {
        Ok(vec![(big, 2 * b.mult / b.s)])
    } else {
        Ok(vec![(big, 2 * (b.mult - 1) / b.s), (b.part, 1)])
    }
}

const F_RULES: &[Rule] = &[
    Rule {
        name: "even residue, u = 0 (mod s): u^lambda",
        guard: |b| even_residue(b) && b.mult % b.s == 0,
        image: swap_part_and_mult,
    },
    Rule {
        name: "even residue, u = 1 (mod s): (u-1)^lambda, ell^(2^r)",
        guard: |b| even_residue(b) && b.mult % b.s == 1,
        image: swap_and_split,
    },
    Rule {
        name: "not an even residue: unchanged",
        guard: |b| !even_residue(b),
        image: identity,
    },
];

const H_RULES: &[Rule] = &[
    Rule {
        name: "even residue, u = 0 (mod s): u^lambda",
        guard: |b| even_residue(b) && b.mult % b.s == 0,
        image: swap_part_and_mult,
    },
    Rule {
        name: "even residue, u = 1 (mod s): (u-1)^lambda, ell^(2^r)",
        guard: |b| even_residue(b) && b.mult % b.s == 1,
        image: swap_and_split,
    },
    Rule {
        name: "u = 0 (mod s): (s lambda/2)^(2u/s)",
        guard: |b| !even_residue(b) && b.mult % b.s == 0,
        image: scale_by_half_modulus,
    },
    Rule {
        name: "u = 1 (mod s): (s lambda/2)^(2(u-1)/s), lambda",
        guard: |b| !even_residue(b) && b.mult % b.s == 1,
        image: scale_by_half_modulus,
    },
];

const F_INV_RULES: &[Rule] = &[
    Rule {
        name: "u = 0,1 (mod s): unchanged",
        guard: |b| b.mult % b.s <= 1,
        image: identity,
    },
    Rule {
        name: "lambda = 0 (mod s), u even: u^lambda",
        guard: |b| b.part % b.s == 0 && b.mult % 2 == 0,
        image: swap_part_and_mult,
    },
    Rule {
        name: "lambda = 0 (mod s), u odd: (u-1)^lambda, lambda",
        guard: |b| b.part % b.s == 0 && b.mult % 2 == 1,
        image: |b| Ok(vec![(b.mult - 1, b.part), (b.part, 1)]),
    },
    Rule {
        name: "peel bit vector W: lambda^m, 2^j lambda for a_j = 1",
        guard: |b| b.part % b.s != 0,
        image: |b| {
            let choice = choose_bit_vector(b.mult, b.s).map_err(|_| {
                BijectionError::NoValidChoice {
                    part: b.part,
                    mult: b.mult,
                    s: b.s,
                }
            })?;
            let m = b.mult - choice.magnitude();
            let mut out = vec![(b.part, m)];
            for (j, &a) in choice.bits.iter().enumerate() {
                if a {
                    out.push(((1 << (j + 1)) * b.part, 1));
                }
            }
            Ok(out)
        },
    },
];

const H_INV_RULES: &[Rule] = &[
    Rule {
        name: "lambda = 0 (mod s), u even: u^lambda",
        guard: |b| b.part % b.s == 0 && b.mult % 2 == 0,
        image: swap_part_and_mult,
    },
    Rule {
        name: "lambda = 0 (mod s), u odd: (u-1)^lambda, lambda",
        guard: |b| b.part % b.s == 0 && b.mult % 2 == 1,
        image: |b| Ok(vec![(b.mult - 1, b.part), (b.part, 1)]),
    },
    Rule {
        name: "lambda = 1: binary digits of u",
        guard: |b| b.part == 1,
        image: |b| {
            Ok((0..32)
                .filter(|j| b.mult >> j & 1 == 1)
                .map(|j| (1u32 << j, 1))
                .collect())
        },
    },
    Rule {
        name: "u odd, lambda = s ell/2: ell^((u-1)s/2), lambda",
        guard: |b| b.part >= 3 && b.mult % 2 == 1 && is_odd_half_multiple(b),
        image: |b| {
            let ell = b.part / (b.s / 2);
            Ok(vec![(ell, (b.mult - 1) * b.s / 2), (b.part, 1)])
        },
    },
    Rule {
        name: "u odd: (u-1) lambda, lambda",
        guard: |b| b.part >= 3 && b.mult % 2 == 1,
        image: |b| Ok(vec![((b.mult - 1) * b.part, 1), (b.part, 1)]),
    },
    Rule {
        name: "u even, lambda = s ell/2: ell^(us/2)",
        guard: |b| b.part >= 3 && is_odd_half_multiple(b),
        image: |b| {
            let ell = b.part / (b.s / 2);
            Ok(vec![(ell, b.mult * b.s / 2)])
        },
    },
    Rule {
        name: "u even: u lambda",
        guard: |b| b.part >= 3,
        image: |b| Ok(vec![(b.mult * b.part, 1)]),
    },
];

// lambda = (s/2) ell with ell odd
fn is_odd_half_multiple(b: &Block) -> bool {
    let half = b.s / 2;
    b.part.is_multiple_of(half) && (b.part / half) % 2 == 1
}

const G_RULES: &[Rule] = &[
    Rule {
        name: "multiple of s/2 or u = 1: unchanged",
        guard: |b| b.part % (b.s / 2) == 0 || b.mult == 1,
        image: identity,
    },
    Rule {
        name: "u = b0 + sum 2^(p+j) a_j: blocks to (u' lambda/2)^2 or (u' lambda/4)^4",
        guard: |b| b.mult % b.s <= 1,
        image: |b| {
            let mut out = Vec::new();
            let b0 = b.mult % b.s;
            if b0 == 1 {
                out.push((b.part, 1));
            }
            let high = b.mult - b0;
            for j in 0..32 {
                let u_prime = 1u64 << j;
                if u64::from(high) & u_prime == 0 {
                    continue;
                }
                let u_prime = u_prime as u32;
                if b.part % 2 == 1 {
                    out.push((u_prime * b.part / 2, 2));
                } else {
                    out.push((u_prime * b.part / 4, 4));
                }
            }
            Ok(out)
        },
    },
];

const G_INV_RULES: &[Rule] = &[
    Rule {
        name: "multiple of s/2 with u = 0,1 (mod s): unchanged",
        guard: |b| b.part % (b.s / 2) == 0 && b.mult % b.s <= 1,
        image: identity,
    },
    Rule {
        name: "non-multiple of s/2 with u = 1: unchanged",
        guard: |b| b.part % (b.s / 2) != 0 && b.mult == 1,
        image: identity,
    },
    Rule {
        name: "peel n in {2,4}: lambda^(u-n), (n ell/2)^(2^(r+1))",
        guard: |b| b.part % (b.s / 2) == 0,
        image: |b| {
            let t = two_adic_split(b.part);
            let n = [2u32, 4]
                .into_iter()
                .find(|&n| b.mult >= n && (b.mult - n) % b.s <= 1)
                .ok_or(BijectionError::NoValidChoice {
                    part: b.part,
                    mult: b.mult,
                    s: b.s,
                })?;
            Ok(vec![(b.part, b.mult - n), (n * t.ell / 2, 1 << (t.r + 1))])
        },
    },
];

// Applied to every block with u > 1, multiples of s/2 included. Leaving
// multiples of s/2 alone sends both 3^6 and 1^18 to 3^6 when s = 6.
const W_RULES: &[Rule] = &[
    Rule {
        name: "u = 1: unchanged",
        guard: |b| b.mult == 1,
        image: identity,
    },
    Rule {
        name: "u = 0 (mod s): (s lambda/2)^(2u/s)",
        guard: |b| b.mult % b.s == 0,
        image: scale_by_half_modulus,
    },
    Rule {
        name: "u = 1 (mod s): (s lambda/2)^(2(u-1)/s), lambda",
        guard: |b| b.mult % b.s == 1,
        image: scale_by_half_modulus,
    },
];

const W_INV_RULES: &[Rule] = &[
    Rule {
        name: "u = 1 or not a multiple of s/2: unchanged",
        guard: |b| b.mult == 1 || b.part % (b.s / 2) != 0,
        image: identity,
    },
    Rule {
        name: "u even: ell^(su/2)",
        guard: |b| b.mult % 2 == 0,
        image: |b| Ok(vec![(2 * b.part / b.s, b.s * b.mult / 2)]),
    },
    Rule {
        name: "u odd: ell^(s(u-1)/2), lambda",
        guard: always,
        image: |b| Ok(vec![(2 * b.part / b.s, b.s * (b.mult - 1) / 2), (b.part, 1)]),
    },
];

fn check_modulus(s: u32) -> Result<(), BijectionError> {
    if s >= 4 && s.is_multiple_of(2) {
        Ok(())
    } else {
        Err(BijectionError::InvalidModulus(s))
    }
}

/// Applies the map for `direction` and records one [`TraceStep`] per block.
pub fn apply_traced(
    lambda: &Partition,
    s: u32,
    direction: Direction,
) -> Result<(Partition, Vec<TraceStep>), BijectionError> {
    check_modulus(s)?;
    let domain = direction.domain(s);
    if !is_member(lambda, &domain) {
        return Err(BijectionError::PreconditionViolated {
            partition: lambda.clone(),
            class: domain.to_string(),
        });
    }
    let map = direction.map_name(s);
    let rules = direction.rules(s);
    let mut pairs = Vec::new();
    let mut trace = Vec::with_capacity(lambda.distinct_len());
    for &(part, mult) in lambda.entries() {
        let block = Block { part, mult, s };
        let rule = rules
            .iter()
            .find(|r| (r.guard)(&block))
            .ok_or(BijectionError::InternalCaseGap { part, mult, s })?;
        let image = (rule.image)(&block)?;
        trace.push(TraceStep {
            map,
            part,
            mult,
            rule: rule.name,
            image: Partition::from_pairs(image.iter().copied()),
        });
        pairs.extend(image);
    }
    Ok((Partition::from_pairs(pairs), trace))
}

pub fn apply(lambda: &Partition, s: u32, direction: Direction) -> Result<Partition, BijectionError> {
    apply_traced(lambda, s, direction).map(|(p, _)| p)
}

/// `f` when `s` is a power of two, otherwise `h`.
pub fn forward_congruent(lambda: &Partition, s: u32) -> Result<Partition, BijectionError> {
    apply(lambda, s, Direction::ToCongruent)
}

/// `f^{-1}` or `h^{-1}`.
pub fn inverse_congruent(lambda: &Partition, s: u32) -> Result<Partition, BijectionError> {
    apply(lambda, s, Direction::FromCongruent)
}

/// `g` when `s` is a power of two, otherwise `w`.
pub fn forward_duplicate(lambda: &Partition, s: u32) -> Result<Partition, BijectionError> {
    apply(lambda, s, Direction::ToDuplicate)
}

/// `g^{-1}` or `w^{-1}`.
pub fn inverse_duplicate(lambda: &Partition, s: u32) -> Result<Partition, BijectionError> {
    apply(lambda, s, Direction::FromDuplicate)
}

/// A partition on which a map misbehaved, and how.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    Error(Partition, BijectionError),
    WeightChanged(Partition, Partition),
    OutsideTarget(Partition, Partition),
    NoRoundtrip(Partition, Partition),
    Collision(Partition, Partition, Partition),
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::Error(p, e) => write!(f, "{p}: {e}"),
            Finding::WeightChanged(p, q) => write!(f, "{p} -> {q}: weight changed"),
            Finding::OutsideTarget(p, q) => write!(f, "{p} -> {q}: image outside target class"),
            Finding::NoRoundtrip(p, q) => write!(f, "{p} -> {q}: inverse does not return"),
            Finding::Collision(a, b, q) => write!(f, "{a} and {b} both map to {q}"),
        }
    }
}

/// Runs `direction` over its whole domain at weight `n` and checks weight,
/// target membership, the roundtrip through the inverse and injectivity.
pub fn sweep(s: u32, n: u32, direction: Direction) -> Result<Vec<Finding>, BijectionError> {
    check_modulus(s)?;
    let domain = direction.domain(s);
    let target = direction.codomain(s);
    let mut findings = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for lambda in crate::classes::members(n, &domain) {
        let image = match apply(&lambda, s, direction) {
            Ok(p) => p,
            Err(e) => {
                findings.push(Finding::Error(lambda, e));
                continue;
            }
        };
        if image.weight() != lambda.weight() {
            findings.push(Finding::WeightChanged(lambda.clone(), image.clone()));
        }
        if !is_member(&image, &target) {
            findings.push(Finding::OutsideTarget(lambda.clone(), image.clone()));
        } else {
            match apply(&image, s, direction.inverse()) {
                Ok(back) if back == lambda => {}
                Ok(_) | Err(_) => findings.push(Finding::NoRoundtrip(lambda.clone(), image.clone())),
            }
        }
        if let Some(prev) = seen.insert(image.clone(), lambda.clone()) {
            findings.push(Finding::Collision(prev, lambda, image));
        }
    }
    Ok(findings)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn two_adic() {
        assert_eq!(two_adic_split(12), TwoAdicSplit { r: 2, ell: 3 });
        assert_eq!(two_adic_split(7), TwoAdicSplit { r: 0, ell: 7 });
        assert_eq!(two_adic_split(10), TwoAdicSplit { r: 1, ell: 5 });
    }

    #[test]
    fn bit_vectors() {
        let c = choose_bit_vector(15, 8).unwrap();
        assert_eq!(c.bits, [true, true]);
        assert_eq!(c.magnitude(), 6);
        let c = choose_bit_vector(13, 8).unwrap();
        assert_eq!(c.bits, [false, true]);
    }

    #[test]
    fn worked_illustrations() {
        let cases = [
            (8, Direction::ToCongruent, "4,3,2,1^9", "3,1^15"),
            (8, Direction::ToCongruent, "5,4,1^9", "5,1^13"),
            (6, Direction::ToCongruent, "10,2,1^6", "5^2,3^2,1^2"),
            (4, Direction::ToCongruent, "9,1", "9,1"),
            (8, Direction::FromCongruent, "3,1^15", "4,3,2,1^9"),
            (8, Direction::FromCongruent, "5,1^13", "5,4,1^9"),
            (6, Direction::FromCongruent, "5^2,3^2,1^2", "10,2,1^6"),
            (4, Direction::ToDuplicate, "3,2,1^5", "3,2^3,1"),
            (4, Direction::ToDuplicate, "2,1^8", "4^2,2"),
            (6, Direction::ToDuplicate, "6,2^6", "6^3"),
            (4, Direction::FromDuplicate, "3,2^3,1", "3,2,1^5"),
            (4, Direction::FromDuplicate, "4^2,2", "2,1^8"),
            (6, Direction::FromDuplicate, "6^3", "6,2^6"),
        ];
        for (s, d, from, to) in cases {
            assert_eq!(apply(&p(from), s, d).unwrap(), p(to), "{d:?} s={s} {from}");
        }
    }

    #[test]
    fn preconditions_and_modulus() {
        assert!(matches!(
            forward_congruent(&p("1^2"), 4),
            Err(BijectionError::PreconditionViolated { .. })
        ));
        assert_eq!(
            forward_congruent(&p("1"), 5),
            Err(BijectionError::InvalidModulus(5))
        );
    }

    #[test]
    fn known_limit_cases_are_reported() {
        // (2^8,1^8) -> 4^6 and 6 - n is never 0 or 1 mod 8
        let img = forward_duplicate(&p("2^8,1^8"), 8).unwrap();
        assert_eq!(img, p("4^6"));
        assert_eq!(
            inverse_duplicate(&img, 8),
            Err(BijectionError::NoValidChoice { part: 4, mult: 6, s: 8 })
        );
    }

    #[test]
    fn trace_lists_each_block() {
        let (img, trace) = apply_traced(&p("4,3,2,1^9"), 8, Direction::ToCongruent).unwrap();
        assert_eq!(img, p("3,1^15"));
        assert_eq!(trace.len(), 4);
        assert_eq!(trace[0].to_string(), "f(4) = 1^4    [even residue, u = 1 (mod s): (u-1)^lambda, ell^(2^r)]");
    }

    #[test]
    fn small_sweeps_are_clean() {
        for s in [4, 6, 8, 10] {
            for n in 0..=12 {
                for d in [
                    Direction::ToCongruent,
                    Direction::ToDuplicate,
                    Direction::FromCongruent,
                    Direction::FromDuplicate,
                ] {
                    let f = sweep(s, n, d).unwrap();
                    assert!(f.is_empty(), "s={s} n={n} {d:?}: {}", f[0]);
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn modular_roundtrip(
                s in prop::sample::select(vec![4u32, 6, 8, 10, 16]),
                raw in prop::collection::vec((1u32..12, 0u32..3, 0u32..2), 0..4),
            ) {
                // multiplicities c*s + e with e in {0,1}, never zero
                let pairs = raw.into_iter().map(|(part, c, e)| {
                    let m = c * s + e;
                    (part, if m == 0 { 1 } else { m })
                });
                let lambda = Partition::from_pairs(pairs);
                prop_assume!(is_member(&lambda, &ClassSpec::modular(s).unwrap()));
                prop_assume!(lambda.weight() <= 22);
                let c = forward_congruent(&lambda, s).unwrap();
                prop_assert_eq!(c.weight(), lambda.weight());
                prop_assert_eq!(inverse_congruent(&c, s).unwrap(), lambda.clone());
                let d = forward_duplicate(&lambda, s).unwrap();
                prop_assert_eq!(d.weight(), lambda.weight());
                prop_assert_eq!(inverse_duplicate(&d, s).unwrap(), lambda);
            }
        }
    }
}
