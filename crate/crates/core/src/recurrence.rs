//! Counts by number of parts, filled in by recurrences.
//!
//! Every table uses the convention that a cell with negative `n` or `k` is
//! zero and that the only nonzero cell with `n = 0` or `k = 0` is `(0, 0)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::ClassError;
use crate::partition::Partition;

/// Which class a [`CountTable`] counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Modular,
    Congruent,
    Duplicate,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::Modular => "modular",
            TableKind::Congruent => "congruent",
            TableKind::Duplicate => "duplicate",
        })
    }
}

/// Exact counts indexed by weight `n <= max_n` and number of parts `k <= max_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub s: u32,
    pub kind: TableKind,
    pub max_n: usize,
    pub max_k: usize,
    cells: Vec<Vec<BigInt>>,
}

impl CountTable {
    fn new(s: u32, kind: TableKind, max_n: usize, max_k: usize) -> Self {
        CountTable {
            s,
            kind,
            max_n,
            max_k,
            cells: vec![vec![BigInt::zero(); max_k + 1]; max_n + 1],
        }
    }

    /// Cell `(n, k)`, zero outside the table.
    pub fn get(&self, n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 {
            return BigInt::zero();
        }
        self.cells
            .get(n as usize)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    fn at(&self, n: i64, k: i64) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        let zero = ZERO.get_or_init(BigInt::zero);
        if n < 0 || k < 0 {
            return zero;
        }
        self.cells
            .get(n as usize)
            .and_then(|row| row.get(k as usize))
            .unwrap_or(zero)
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.cells[n]
    }

    /// Sum of row `n` over the stored columns. Equals the class count when
    /// `max_k >= n`.
    pub fn row_sum(&self, n: usize) -> BigInt {
        self.cells[n].iter().sum()
    }
}

fn check_modulus(s: u32) -> Result<(), ClassError> {
    if s >= 4 && s.is_multiple_of(2) {
        Ok(())
    } else {
        Err(ClassError::InvalidModulus(s))
    }
}

/// `M_s(n,k) = sum_{l = 0,1 (mod s), l <= k} M_s(n-k, k-l)`: strip the 1's
/// and lower every other part by one.
pub fn m_table(s: u32, max_n: usize, max_k: usize) -> Result<CountTable, ClassError> {
    check_modulus(s)?;
    let mut t = CountTable::new(s, TableKind::Modular, max_n, max_k);
    t.cells[0][0] = BigInt::from(1);
    for n in 1..=max_n as i64 {
        for k in 1..=max_k as i64 {
            let mut acc = BigInt::zero();
            for l in (0..=k).filter(|l| l % i64::from(s) <= 1) {
                acc += t.at(n - k, k - l);
            }
            t.cells[n as usize][k as usize] = acc;
        }
    }
    Ok(t)
}

/// The congruent table together with its dissection by smallest part.
#[derive(Debug, Clone)]
pub struct CongruentTables {
    pub table: CountTable,
    /// Keyed by `l` in `{1, 3, ..., s-1, s}` for "smallest part is `l`",
    /// and by `s+1` for "every part exceeds `s`".
    pub layers: BTreeMap<u32, CountTable>,
}

impl CongruentTables {
    pub fn layer(&self, l: u32, n: i64, k: i64) -> BigInt {
        self.layers.get(&l).map_or_else(BigInt::zero, |t| t.get(n, k))
    }
}

/// `{1, 3, ..., s-1, s}`.
pub fn smallest_part_set(s: u32) -> Vec<u32> {
    (1..s).step_by(2).chain(std::iter::once(s)).collect()
}

/// `C_s(n,k)` as the sum of the layers `C_s^l(n,k)`, where
/// `C_s^l(n,k) = C_s(n-l,k-1) - sum_{odd i < l} C_s^i(n-l,k-1)` and
/// `C_s^{s+1}(n,k) = C_s(n-sk,k)`.
pub fn c_table(s: u32, max_n: usize, max_k: usize) -> Result<CongruentTables, ClassError> {
    check_modulus(s)?;
    let ells = smallest_part_set(s);
    let mut table = CountTable::new(s, TableKind::Congruent, max_n, max_k);
    table.cells[0][0] = BigInt::from(1);
    let mut layers: BTreeMap<u32, CountTable> = ells
        .iter()
        .chain(std::iter::once(&(s + 1)))
        .map(|&l| (l, CountTable::new(s, TableKind::Congruent, max_n, max_k)))
        .collect();
    for n in 1..=max_n as i64 {
        for k in 1..=max_k as i64 {
            let mut total = BigInt::zero();
            for &l in &ells {
                let li = i64::from(l);
                let mut v = table.at(n - li, k - 1).clone();
                for i in (1..l).step_by(2) {
                    v -= layers[&i].at(n - li, k - 1);
                }
                total += &v;
                layers.get_mut(&l).unwrap().cells[n as usize][k as usize] = v;
            }
            let top = table.at(n - i64::from(s) * k, k).clone();
            total += &top;
            layers.get_mut(&(s + 1)).unwrap().cells[n as usize][k as usize] = top;
            table.cells[n as usize][k as usize] = total;
        }
    }
    Ok(CongruentTables { table, layers })
}

/// The partitions into distinct parts below `s/2`, with the empty one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSet {
    pub s: u32,
    pub members: Vec<Partition>,
}

impl AlphaSet {
    pub fn new(s: u32) -> Result<Self, ClassError> {
        check_modulus(s)?;
        let bound = s / 2 - 1;
        let mut members = Vec::with_capacity(1 << bound);
        for mask in 0u32..(1 << bound) {
            members.push(Partition::from_parts(
                (0..bound).filter(|j| mask >> j & 1 == 1).map(|j| j + 1),
            ));
        }
        members.sort_by_key(|a| (a.len(), a.parts()));
        Ok(AlphaSet { s, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `D_s(n,k) = D_s(n-s/2,k-1) + sum_alpha D_s(n - s(k-len a)/2 - |a|, k - len a)`.
pub fn d_table(s: u32, max_n: usize, max_k: usize) -> Result<CountTable, ClassError> {
    let alphas = AlphaSet::new(s)?;
    let half = i64::from(s / 2);
    let shapes: Vec<(i64, i64)> = alphas
        .members
        .iter()
        .map(|a| (a.len() as i64, a.weight() as i64))
        .collect();
    let mut t = CountTable::new(s, TableKind::Duplicate, max_n, max_k);
    t.cells[0][0] = BigInt::from(1);
    for n in 1..=max_n as i64 {
        for k in 1..=max_k as i64 {
            let mut acc = t.at(n - half, k - 1).clone();
            for &(len, weight) in &shapes {
                acc += t.at(n - half * (k - len) - weight, k - len);
            }
            t.cells[n as usize][k as usize] = acc;
        }
    }
    Ok(t)
}

/// The 8-duplicate recurrence exactly as displayed in the worked example,
/// whose first term reads `D_8(n-4k, k-1)` instead of `D_8(n-4, k-1)`.
/// Kept only to show that it disagrees with [`d_table`].
pub fn d8_literal_table(max_n: usize, max_k: usize) -> CountTable {
    let mut t = CountTable::new(8, TableKind::Duplicate, max_n, max_k);
    t.cells[0][0] = BigInt::from(1);
    for n in 1..=max_n as i64 {
        for k in 1..=max_k as i64 {
            let terms = [
                (n - 4 * k, k - 1),
                (n - 4 * k, k),
                (n - 4 * (k - 1) - 1, k - 1),
                (n - 4 * (k - 1) - 2, k - 1),
                (n - 4 * (k - 1) - 3, k - 1),
                (n - 4 * (k - 2) - 3, k - 2),
                (n - 4 * (k - 2) - 4, k - 2),
                (n - 4 * (k - 2) - 5, k - 2),
                (n - 4 * (k - 3) - 6, k - 3),
            ];
            let mut acc = BigInt::zero();
            for (a, b) in terms {
                acc += t.at(a, b);
            }
            t.cells[n as usize][k as usize] = acc;
        }
    }
    t
}

/// `C_4(0..=n)` from `C_4(n) = sum_{k>=1} (-1)^{T_k+1} C_4(n - T_k)`.
pub fn c4_triangular_upto(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::from(1);
    for m in 1..=n {
        let mut acc = BigInt::zero();
        let mut k = 1;
        loop {
            let t = k * (k + 1) / 2;
            if t > m {
                break;
            }
            if (t + 1) % 2 == 0 {
                acc += &c[m - t];
            } else {
                acc -= &c[m - t];
            }
            k += 1;
        }
        c[m] = acc;
    }
    c
}

pub fn c4_triangular(n: usize) -> BigInt {
    c4_triangular_upto(n).pop().expect("nonempty")
}

/// Number of 4-duplicate partitions of `n` into two parts:
/// `d(n) = d(n-4) + 2` from `n = 7` on.
pub fn d4_two_parts(n: u64) -> BigInt {
    let base = |m: u64| match m {
        0..=2 => 0u64,
        3 => 1,
        _ => 2,
    };
    if n <= 6 {
        return BigInt::from(base(n));
    }
    // n = r + 4j with r in 3..=6
    let j = (n - 3) / 4;
    let r = n - 4 * j;
    BigInt::from(base(r) + 2 * j)
}
