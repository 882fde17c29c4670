//! Canonical partitions and exhaustive enumeration.
//!
//! A [`Partition`] is stored as `(part, multiplicity)` pairs with parts
//! strictly decreasing. Every constructor normalizes, so two partitions are
//! equal exactly when they have the same multiset of parts.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// An integer partition in multiplicity form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    entries: Vec<(u32, u32)>,
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition { entries: Vec::new() }
    }

    /// Builds a partition from arbitrary `(part, multiplicity)` pairs.
    ///
    /// Pairs may be unordered and may repeat a part; zero parts and zero
    /// multiplicities are dropped.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut raw: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(p, m)| p > 0 && m > 0)
            .collect();
        raw.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut entries: Vec<(u32, u32)> = Vec::with_capacity(raw.len());
        for (p, m) in raw {
            match entries.last_mut() {
                Some(last) if last.0 == p => last.1 += m,
                _ => entries.push((p, m)),
            }
        }
        Partition { entries }
    }

    /// Builds a partition from a list of parts in any order.
    pub fn from_parts<I>(parts: I) -> Self
    where
        I: IntoIterator<Item = u32>,
    {
        Self::from_pairs(parts.into_iter().map(|p| (p, 1)))
    }

    /// `(part, multiplicity)` pairs, parts strictly decreasing.
    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.entries
            .iter()
            .map(|&(p, m)| u64::from(p) * u64::from(m))
            .sum()
    }

    /// Number of parts counted with repetition.
    pub fn len(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| u64::from(m)).sum()
    }

    /// Number of distinct part values.
    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.entries
            .iter()
            .find(|&&(p, _)| p == part)
            .map_or(0, |&(_, m)| m)
    }

    /// Largest part, or `None` for the empty partition.
    pub fn largest(&self) -> Option<u32> {
        self.entries.first().map(|&(p, _)| p)
    }

    /// Parts written with repetition, weakly decreasing.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        for &(p, m) in &self.entries {
            out.extend(std::iter::repeat_n(p, m as usize));
        }
        out
    }

    /// Multiset union: multiplicities of equal parts are added.
    pub fn union(&self, other: &Partition) -> Partition {
        Self::from_pairs(self.entries.iter().chain(other.entries.iter()).copied())
    }
}

/// Renders in exponent notation: `3,2^3,1`; the empty partition renders as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("()");
        }
        for (i, &(p, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses the exponent notation `a^m,b,c^k`. Whitespace is ignored and
/// `()` or the empty string denote the empty partition.
impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(&compact);
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut pairs = Vec::new();
        for token in body.split(',') {
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => (p, m),
                None => (token, "1"),
            };
            let part: u32 = part
                .parse()
                .map_err(|_| ParseError::BadToken(token.to_string()))?;
            let mult: u32 = mult
                .parse()
                .map_err(|_| ParseError::BadToken(token.to_string()))?;
            if part == 0 || mult == 0 {
                return Err(ParseError::NonPositive(token.to_string()));
            }
            pairs.push((part, mult));
        }
        Ok(Partition::from_pairs(pairs))
    }
}

/// Lazily yields every partition of `n` in lexicographically descending
/// order of the part sequence: `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions {
        current: Some(if n == 0 {
            Partition::empty()
        } else {
            Partition { entries: vec![(n, 1)] }
        }),
    }
}

/// Iterator returned by [`enumerate_partitions`].
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Partition>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        self.current = successor(&out);
        Some(out)
    }
}

// Next partition in descending lexicographic order, or None after (1^n).
fn successor(lambda: &Partition) -> Option<Partition> {
    let mut entries = lambda.entries.clone();
    let mut rem: u32 = 0;
    if let Some(&(1, m)) = entries.last() {
        rem = m;
        entries.pop();
    }
    let (p, m) = entries.pop()?;
    if m > 1 {
        entries.push((p, m - 1));
    }
    rem += p;
    let q = p - 1;
    entries.push((q, rem / q));
    if !rem.is_multiple_of(q) {
        entries.push((rem % q, 1));
    }
    Some(Partition { entries })
}

/// All partitions of `n` with exactly `k` parts, in the same descending
/// order as [`enumerate_partitions`].
pub fn enumerate_partitions_with_length(n: u32, k: u32) -> impl Iterator<Item = Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_with_length(n, k, n, &mut stack, &mut out);
    out.into_iter()
}

fn fill_with_length(n: u32, k: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if k == 0 {
        if n == 0 {
            out.push(Partition::from_parts(stack.iter().copied()));
        }
        return;
    }
    // need n >= k (each part >= 1) and n <= k*max
    if n < k || u64::from(n) > u64::from(k) * u64::from(max) {
        return;
    }
    let hi = max.min(n - (k - 1));
    for p in (1..=hi).rev() {
        stack.push(p);
        fill_with_length(n - p, k - 1, p, stack, out);
        stack.pop();
    }
}

/// Partitions of `n` into distinct parts whose consecutive differences are
/// at least `gap` (gap 1 gives ordinary distinct-part partitions).
pub fn enumerate_gap_partitions(n: u32, gap: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_gap(n, n, gap.max(1), &mut stack, &mut out);
    out
}

fn fill_gap(n: u32, max: u32, gap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_parts(stack.iter().copied()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        stack.push(p);
        fill_gap(n - p, p.saturating_sub(gap), gap, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn zero_has_only_the_empty_partition() {
        let all: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
    }

    #[test]
    fn four_in_descending_order() {
        let all: Vec<String> = enumerate_partitions(4).map(|l| l.to_string()).collect();
        assert_eq!(all, ["4", "3,1", "2^2", "2,1^2", "1^4"]);
    }

    #[test]
    fn small_counts_and_weights() {
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            let all: Vec<_> = enumerate_partitions(n as u32).collect();
            assert_eq!(all.len(), e, "p({n})");
            assert!(all.iter().all(|l| l.weight() == n as u64));
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn with_length() {
        let got: Vec<String> = enumerate_partitions_with_length(4, 2)
            .map(|l| l.to_string())
            .collect();
        assert_eq!(got, ["3,1", "2^2"]);
        let zero: Vec<_> = enumerate_partitions_with_length(0, 0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        assert_eq!(enumerate_partitions_with_length(3, 0).count(), 0);
        assert_eq!(enumerate_partitions_with_length(0, 2).count(), 0);
        for n in 0..15u32 {
            let total: usize = (0..=n)
                .map(|k| enumerate_partitions_with_length(n, k).count())
                .sum();
            assert_eq!(total, enumerate_partitions(n).count());
        }
    }

    #[test]
    fn normalization_merges_and_sorts() {
        let l = Partition::from_pairs([(1, 3), (2, 1), (1, 2), (5, 0), (0, 4)]);
        assert_eq!(l.entries(), &[(2, 1), (1, 5)]);
        assert_eq!(l.len(), 6);
        assert_eq!(l.weight(), 7);
        assert_eq!(l.to_string(), "2,1^5");
    }

    #[test]
    fn parse_literals() {
        assert_eq!(p(" 3, 2^3 ,1 ").entries(), &[(3, 1), (2, 3), (1, 1)]);
        assert_eq!(p("1^2,1"), p("1^3"));
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("3^0".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("2^".parse::<Partition>().is_err());
    }

    #[test]
    fn gap_partitions() {
        let distinct: Vec<String> = enumerate_gap_partitions(6, 1)
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(distinct, ["6", "5,1", "4,2", "3,2,1"]);
        let gap3: Vec<String> = enumerate_gap_partitions(9, 3)
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(gap3, ["9", "8,1", "7,2", "6,3"]);
    }
}
