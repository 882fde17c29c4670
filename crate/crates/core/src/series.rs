//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` tracks the coefficients of
//! `q^0..=q^N`. Binary operations truncate to the smaller order, so a result
//! never claims more precision than both inputs carry.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `c q^e`, which is zero when `e > order`.
    pub fn monomial(c: impl Into<BigInt>, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c.into();
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones beyond `order` are dropped.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; zero for `n` beyond the order or negative.
    pub fn coeff(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(n as usize).cloned().unwrap_or_default()
    }

    /// Drops precision to `order` (no-op when already lower).
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Exponents with nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        (0..=self.order)
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let mut out = Self::zero(self.order);
        for i in e..=self.order {
            out.coeffs[i] = self.coeffs[i - e].clone();
        }
        out
    }

    /// Substitutes `q -> q^k` (k >= 1), keeping the order.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        let mut out = Self::zero(self.order);
        for i in 0..=self.order / k {
            out.coeffs[i * k] = self.coeffs[i].clone();
        }
        out
    }

    /// Substitutes `q -> -q`.
    pub fn negate_variable(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// In-place multiplication by `(1 + c q^e)`, `e >= 1`.
    pub fn mul_binomial(&mut self, c: &BigInt, e: usize) {
        debug_assert!(e >= 1);
        if e > self.order || c.is_zero() {
            return;
        }
        for i in (e..=self.order).rev() {
            let t = &self.coeffs[i - e] * c;
            self.coeffs[i] += t;
        }
    }

    /// In-place division by `(1 + c q^e)`, `e >= 1`.
    pub fn div_binomial(&mut self, c: &BigInt, e: usize) {
        debug_assert!(e >= 1);
        if e > self.order || c.is_zero() {
            return;
        }
        for i in e..=self.order {
            let t = &self.coeffs[i - e] * c;
            self.coeffs[i] -= t;
        }
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(SeriesError::NonUnitConstantTerm(c0.to_string()));
        }
        let inv0 = c0.clone();
        let mut out = Self::zero(self.order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out.coeffs[n - k];
                }
            }
            out.coeffs[n] = -(acc * &inv0);
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.order);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// First exponent where `self` and `other` differ, up to the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order.min(other.order);
        (0..=order).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{a}q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated at the smaller order.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// One family of factors `prod_{i>=0} (1 + sign * c * q^(offset + i*step))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpec {
    pub coefficient: BigInt,
    pub offset: usize,
    pub step: usize,
    pub sign: i8,
}

impl FactorSpec {
    pub fn new(coefficient: impl Into<BigInt>, offset: usize, step: usize, sign: i8) -> Self {
        FactorSpec {
            coefficient: coefficient.into(),
            offset,
            step,
            sign,
        }
    }

    /// `(q^a; q^b)_inf`.
    pub fn poch(offset: usize, step: usize) -> Self {
        Self::new(1, offset, step, -1)
    }

    /// `(-q^a; q^b)_inf`.
    pub fn neg_poch(offset: usize, step: usize) -> Self {
        Self::new(1, offset, step, 1)
    }

    fn signed_coefficient(&self) -> BigInt {
        if self.sign < 0 {
            -&self.coefficient
        } else {
            self.coefficient.clone()
        }
    }

    fn validate(&self) -> Result<(), SeriesError> {
        if self.offset == 0 || self.step == 0 {
            Err(SeriesError::NonPositiveOffset)
        } else {
            Ok(())
        }
    }

    fn exponents(&self, order: usize) -> impl Iterator<Item = usize> {
        (self.offset..=order).step_by(self.step)
    }
}

/// Exact truncated product of all factor families. Factors whose lowest
/// exponent exceeds `order` are 1 to that order and are skipped.
pub fn pochhammer_product(factors: &[FactorSpec], order: usize) -> Result<TruncatedSeries, SeriesError> {
    pochhammer_quotient(factors, &[], order)
}

/// `prod(numerator) / prod(denominator)`, each given as factor families.
pub fn pochhammer_quotient(
    numerator: &[FactorSpec],
    denominator: &[FactorSpec],
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let mut out = TruncatedSeries::one(order);
    for f in numerator {
        f.validate()?;
        let c = f.signed_coefficient();
        for e in f.exponents(order) {
            out.mul_binomial(&c, e);
        }
    }
    for f in denominator {
        f.validate()?;
        let c = f.signed_coefficient();
        for e in f.exponents(order) {
            out.div_binomial(&c, e);
        }
    }
    Ok(out)
}

/// `(q;q)_inf` truncated at `order`.
pub fn euler_product(order: usize) -> TruncatedSeries {
    pochhammer_product(&[FactorSpec::poch(1, 1)], order).expect("valid factor")
}

/// The pentagonal-number series `1 + sum_k (-1)^k (q^{(3k^2-k)/2} + q^{(3k^2+k)/2})`,
/// built by direct summation.
pub fn pentagonal_series(order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    let mut k: usize = 1;
    while (3 * k * k - k) / 2 <= order {
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        for e in [(3 * k * k - k) / 2, (3 * k * k + k) / 2] {
            if e <= order {
                out.coeffs[e] += sign;
            }
        }
        k += 1;
    }
    out
}

/// Ramanujan's `psi(q)` (sign +1) or `psi(-q)` (sign -1) by summation over
/// triangular numbers.
pub fn theta_psi(sign: i8, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let mut k = 0usize;
    loop {
        let t = k * (k + 1) / 2;
        if t > order {
            break;
        }
        out.coeffs[t] = if sign < 0 && t % 2 == 1 {
            BigInt::from(-1)
        } else {
            BigInt::from(1)
        };
        k += 1;
    }
    out
}

/// Product form of `psi(q)` (sign +1): `(q^2;q^2)/(q;q^2)`, or of `psi(-q)`
/// (sign -1): `(q;q)(q^4;q^4)/(q^2;q^2)`.
pub fn theta_psi_product(sign: i8, order: usize) -> TruncatedSeries {
    let result = if sign < 0 {
        pochhammer_quotient(
            &[FactorSpec::poch(1, 1), FactorSpec::poch(4, 4)],
            &[FactorSpec::poch(2, 2)],
            order,
        )
    } else {
        pochhammer_quotient(&[FactorSpec::poch(2, 2)], &[FactorSpec::poch(1, 2)], order)
    };
    result.expect("valid factors")
}
