//! Truncated series in `q` whose coefficients are polynomials in a fixed
//! number of auxiliary markers (such as `z, b` or `b, c`).
//!
//! Marker polynomials are sparse maps from exponent vectors to integers,
//! ordered lexicographically so that iteration and printing are stable.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ExpansionError;
use crate::series::TruncatedSeries;

/// A polynomial in the markers.
pub type MarkerPoly = BTreeMap<Vec<u32>, BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSeries {
    arity: usize,
    order: usize,
    coeffs: Vec<MarkerPoly>,
}

fn add_term(poly: &mut MarkerPoly, exps: Vec<u32>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match poly.entry(exps) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl WeightedSeries {
    pub fn zero(arity: usize, order: usize) -> Self {
        WeightedSeries {
            arity,
            order,
            coeffs: vec![MarkerPoly::new(); order + 1],
        }
    }

    pub fn one(arity: usize, order: usize) -> Self {
        Self::monomial(BigInt::one(), &vec![0; arity], 0, order)
    }

    /// `c * x^exps * q^e`; zero when `e > order`.
    pub fn monomial(c: impl Into<BigInt>, exps: &[u32], e: usize, order: usize) -> Self {
        let mut s = Self::zero(exps.len(), order);
        if e <= order {
            add_term(&mut s.coeffs[e], exps.to_vec(), c.into());
        }
        s
    }

    /// A series without markers, lifted to `arity` markers.
    pub fn from_series(x: &TruncatedSeries, arity: usize) -> Self {
        let mut s = Self::zero(arity, x.order());
        for (i, c) in x.coeffs().iter().enumerate() {
            add_term(&mut s.coeffs[i], vec![0; arity], c.clone());
        }
        s
    }

    /// Builds a series from `(coefficient, marker exponents, q exponent)` terms.
    pub fn from_terms<I>(arity: usize, order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, Vec<u32>, usize)>,
    {
        let mut s = Self::zero(arity, order);
        for (c, exps, e) in terms {
            assert_eq!(exps.len(), arity, "marker arity");
            if e <= order {
                add_term(&mut s.coeffs[e], exps, c);
            }
        }
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The marker polynomial multiplying `q^n` (empty beyond the order).
    pub fn poly(&self, n: usize) -> MarkerPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, n: usize, exps: &[u32]) -> BigInt {
        self.coeffs
            .get(n)
            .and_then(|p| p.get(exps))
            .cloned()
            .unwrap_or_default()
    }

    fn check_arity(&self, other: &Self) -> Result<(), ExpansionError> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(ExpansionError::ArityMismatch(self.arity, other.arity))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExpansionError> {
        self.check_arity(other)?;
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.arity, order);
        for n in 0..=order {
            let mut p = self.coeffs[n].clone();
            for (e, c) in &other.coeffs[n] {
                add_term(&mut p, e.clone(), c.clone());
            }
            out.coeffs[n] = p;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for p in &mut out.coeffs {
            for c in p.values_mut() {
                *c = -&*c;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExpansionError> {
        self.add(&other.neg())
    }

    /// Product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self, ExpansionError> {
        self.check_arity(other)?;
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.arity, order);
        for i in 0..=order {
            if self.coeffs[i].is_empty() {
                continue;
            }
            for j in 0..=order - i {
                for (ea, ca) in &self.coeffs[i] {
                    for (eb, cb) in &other.coeffs[j] {
                        add_term(&mut out.coeffs[i + j], add_exps(ea, eb), ca * cb);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies in place by `1 + c x^marker q^e` with `e >= 1`.
    pub fn mul_binomial(&mut self, c: &BigInt, marker: &[u32], e: usize) {
        debug_assert!(e >= 1 && marker.len() == self.arity);
        if e > self.order || c.is_zero() {
            return;
        }
        for i in (e..=self.order).rev() {
            let shifted: Vec<(Vec<u32>, BigInt)> = self.coeffs[i - e]
                .iter()
                .map(|(ex, v)| (add_exps(ex, marker), v * c))
                .collect();
            for (ex, v) in shifted {
                add_term(&mut self.coeffs[i], ex, v);
            }
        }
    }

    /// Divides in place by `1 + c x^marker q^e` with `e >= 1`.
    pub fn div_binomial(&mut self, c: &BigInt, marker: &[u32], e: usize) {
        debug_assert!(e >= 1 && marker.len() == self.arity);
        if e > self.order || c.is_zero() {
            return;
        }
        for i in e..=self.order {
            let shifted: Vec<(Vec<u32>, BigInt)> = self.coeffs[i - e]
                .iter()
                .map(|(ex, v)| (add_exps(ex, marker), -(v * c)))
                .collect();
            for (ex, v) in shifted {
                add_term(&mut self.coeffs[i], ex, v);
            }
        }
    }

    /// Sets every marker to an integer, giving an ordinary series.
    pub fn specialize(&self, values: &[BigInt]) -> Result<TruncatedSeries, ExpansionError> {
        if values.len() != self.arity {
            return Err(ExpansionError::ArityMismatch(self.arity, values.len()));
        }
        let coeffs = self.coeffs.iter().map(|p| {
            p.iter()
                .map(|(ex, c)| {
                    ex.iter()
                        .zip(values)
                        .fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
                })
                .sum::<BigInt>()
        });
        Ok(TruncatedSeries::from_coeffs(coeffs, self.order))
    }

    /// Sets marker `index` to `value`, removing it from the exponent vectors.
    pub fn substitute(&self, index: usize, value: &BigInt) -> Result<Self, ExpansionError> {
        if index >= self.arity {
            return Err(ExpansionError::InvalidSpecialization(format!(
                "marker {index} of {}",
                self.arity
            )));
        }
        let mut out = Self::zero(self.arity - 1, self.order);
        for (n, p) in self.coeffs.iter().enumerate() {
            for (ex, c) in p {
                let mut rest = ex.clone();
                let k = rest.remove(index);
                add_term(&mut out.coeffs[n], rest, c * num_traits::pow(value.clone(), k as usize));
            }
        }
        Ok(out)
    }

    /// Rewrites every term `x^exps q^n` through `f`, which returns the new
    /// exponents and q-power or `None` to reject the term. Terms landing
    /// beyond `order` are dropped.
    pub fn reindex<F>(&self, arity: usize, order: usize, f: F) -> Result<Self, ExpansionError>
    where
        F: Fn(&[u32], usize) -> Option<(Vec<u32>, usize)>,
    {
        let mut out = Self::zero(arity, order);
        for (n, p) in self.coeffs.iter().enumerate() {
            for (ex, c) in p {
                let (nex, nn) = f(ex, n).ok_or_else(|| {
                    ExpansionError::InvalidSpecialization(format!("term {ex:?} q^{n}"))
                })?;
                if nex.len() != arity {
                    return Err(ExpansionError::ArityMismatch(arity, nex.len()));
                }
                if nn <= order {
                    add_term(&mut out.coeffs[nn], nex, c.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        WeightedSeries {
            arity: self.arity,
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// First `(q-power, marker exponents)` where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, Vec<u32>)> {
        let order = self.order.min(other.order);
        for n in 0..=order {
            let (a, b) = (&self.coeffs[n], &other.coeffs[n]);
            if a != b {
                let key = a
                    .iter()
                    .chain(b.iter())
                    .map(|(e, _)| e)
                    .find(|e| a.get(*e) != b.get(*e))
                    .cloned()
                    .unwrap_or_default();
                return Some((n, key));
            }
        }
        None
    }
}

/// Binary operation selector for [`ws_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

pub fn ws_arith(x: &WeightedSeries, y: &WeightedSeries, op: ArithOp) -> Result<WeightedSeries, ExpansionError> {
    match op {
        ArithOp::Add => x.add(y),
        ArithOp::Mul => x.mul(y),
    }
}

const MARKER_NAMES: [&str; 4] = ["x", "y", "u", "v"];

fn fmt_poly(p: &MarkerPoly, names: &[&str]) -> String {
    let mut out = String::new();
    for (i, (ex, c)) in p.iter().enumerate() {
        if i > 0 {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        } else if c.is_negative() {
            out.push('-');
        }
        let a = c.abs();
        let mono: Vec<String> = ex
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(j, &k)| {
                let name = names.get(j).copied().unwrap_or("?");
                if k == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{k}")
                }
            })
            .collect();
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(&mono.join(" "));
        }
    }
    out
}

impl WeightedSeries {
    /// Renders with the given marker names, one `q`-power per line.
    pub fn render(&self, names: &[&str]) -> String {
        let mut lines = Vec::new();
        for (n, p) in self.coeffs.iter().enumerate() {
            if !p.is_empty() {
                lines.push(format!("q^{n}: {}", fmt_poly(p, names)));
            }
        }
        lines.push(format!("O(q^{})", self.order + 1));
        lines.join("\n")
    }
}

impl fmt::Display for WeightedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&MARKER_NAMES))
    }
}
