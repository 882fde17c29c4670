//! Durfee-square series expansions for duplicate partitions, Alladi's
//! two-marker expansion, and the classical identities it specializes to.
//!
//! Marker conventions: the duplicate expansions use `(z, b)` where `z`
//! counts parts and `b` counts parts not divisible by `s/2`. Alladi's
//! expansion uses `(b, c)` for odd and even parts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ExpansionError;
use crate::series::TruncatedSeries;
use crate::weighted::WeightedSeries;

const Z: [u32; 2] = [1, 0];
const B: [u32; 2] = [0, 1];
const ZB: [u32; 2] = [1, 1];
const NONE2: [u32; 2] = [0, 0];

fn one() -> BigInt {
    BigInt::one()
}

fn minus_one() -> BigInt {
    -BigInt::one()
}

fn check_modulus(s: u32) -> Result<u32, ExpansionError> {
    if s >= 4 && s.is_multiple_of(2) {
        Ok(s / 2)
    } else {
        Err(ExpansionError::InvalidSpecialization(format!(
            "s = {s} must be even and at least 4"
        )))
    }
}

/// `Π (1 + z b q^n) / ((1 + z b q^{sn/2})(1 - z q^{sn/2}))` in markers `(z, b)`.
pub fn duplicate_refined_lhs(s: u32, order: usize) -> Result<WeightedSeries, ExpansionError> {
    let h = check_modulus(s)? as usize;
    let mut out = WeightedSeries::one(2, order);
    for n in 1..=order {
        out.mul_binomial(&one(), &ZB, n);
    }
    for e in (h..=order).step_by(h) {
        out.div_binomial(&one(), &ZB, e);
        out.div_binomial(&minus_one(), &Z, e);
    }
    Ok(out)
}

/// How the bracket of the Durfee-square expansion is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpansionReading {
    /// The theorem's display: `A_k` with `k`-indexed denominators and the
    /// factor `(1 - z q^{sk/2})(1 - q^{sk/2})` multiplying the `i`-sum.
    FactoredBracket,
    /// The two cases of the proof summed separately, the second one with
    /// `(k-1)`-indexed numerators and denominators.
    ProofCases,
}

impl fmt::Display for ExpansionReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExpansionReading::FactoredBracket => "factored-bracket",
            ExpansionReading::ProofCases => "proof-cases",
        })
    }
}

/// Least `k` whose summand starts beyond `q^order`.
pub fn expansion_terms(s: u32, order: usize) -> usize {
    let h = (s / 2) as usize;
    (1..)
        .find(|&k| h * k * k > order + h - 1)
        .expect("unbounded search")
}

/// `(-zbq, ..., -zbq^{h-1}; q^h)_m (-bq, ..., -bq^{h-1}; q^h)_m / ((zq^h; q^h)_d (q^h; q^h)_d)`
fn durfee_quotient(h: usize, m: usize, d: usize, order: usize) -> WeightedSeries {
    let mut x = WeightedSeries::one(2, order);
    for j in 0..m {
        for i in 1..h {
            x.mul_binomial(&one(), &ZB, i + j * h);
            x.mul_binomial(&one(), &B, i + j * h);
        }
    }
    for j in 1..=d {
        x.div_binomial(&minus_one(), &Z, j * h);
        x.div_binomial(&minus_one(), &NONE2, j * h);
    }
    x
}

/// `1 + Σ_{k=1}^{K}` of the Durfee-square summands, in markers `(z, b)`.
pub fn duplicate_refined_rhs(
    s: u32,
    terms: usize,
    order: usize,
    reading: ExpansionReading,
) -> Result<WeightedSeries, ExpansionError> {
    let h = check_modulus(s)? as usize;
    let mut out = WeightedSeries::one(2, order);
    for k in 1..=terms {
        let base = h * k * k;
        if base > order + h - 1 {
            continue;
        }
        let kz = k as u32;
        // Σ_i b z^k q^{hk^2 - i}
        let side = WeightedSeries::from_terms(
            2,
            order,
            (1..h).map(|i| (one(), vec![kz, 1], base - i)),
        );
        let term = match reading {
            ExpansionReading::FactoredBracket => {
                let mut first = WeightedSeries::monomial(1, &[kz, 0], base, order);
                let start = h * (k - 1) + 1;
                for t in 0..h - 1 {
                    first.mul_binomial(&one(), &ZB, start + t);
                    first.mul_binomial(&one(), &B, start + t);
                }
                let mut second = side;
                second.mul_binomial(&minus_one(), &Z, h * k);
                second.mul_binomial(&minus_one(), &NONE2, h * k);
                durfee_quotient(h, k - 1, k, order).mul(&first.add(&second)?)?
            }
            ExpansionReading::ProofCases => {
                let first = WeightedSeries::monomial(1, &[kz, 0], base, order)
                    .mul(&durfee_quotient(h, k, k, order))?;
                let second = side.mul(&durfee_quotient(h, k - 1, k - 1, order))?;
                first.add(&second)?
            }
        };
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Both sides of Alladi's expansion of `(-bq;q^2)_∞ / (cq^2;q^2)_∞` in
/// markers `(b, c)`. The `c^k (-bc^{-1}q;q^2)_{k-1}(bc^{-1} + q)` block is
/// expanded as `(c + bq)(c + bq^3)...(c + bq^{2k-3})(b + cq)`.
pub fn alladi_sides(order: usize) -> (WeightedSeries, WeightedSeries) {
    let (b, c) = ([1u32, 0], [0u32, 1]);
    let mut lhs = WeightedSeries::one(2, order);
    for e in (1..=order).step_by(2) {
        lhs.mul_binomial(&one(), &b, e);
    }
    for e in (2..=order).step_by(2) {
        lhs.div_binomial(&minus_one(), &c, e);
    }

    let mut rhs = WeightedSeries::one(2, order);
    for k in 1usize.. {
        let base = 2 * k * k - 1;
        if base > order {
            break;
        }
        let mut term = WeightedSeries::from_terms(
            2,
            order,
            [(one(), vec![1, 0], base), (one(), vec![0, 1], base + 1)],
        );
        for j in 0..k - 1 {
            let factor = WeightedSeries::from_terms(
                2,
                order,
                [(one(), vec![0, 1], 0), (one(), vec![1, 0], 2 * j + 1)],
            );
            term = term.mul(&factor).expect("same arity");
            term.mul_binomial(&one(), &b, 2 * j + 1);
        }
        term.mul_binomial(&one(), &b, 4 * k - 1);
        for j in 1..=k {
            term.div_binomial(&minus_one(), &c, 2 * j);
            term.div_binomial(&minus_one(), &NONE2, 2 * j);
        }
        rhs = rhs.add(&term).expect("same arity");
    }
    (lhs, rhs)
}

/// Rewrites an `s = 4` duplicate series in `(z, b)` as a series in Alladi's
/// `(b, c)`: `z → c`, `b → b c^{-1}`, so `z^r b^l` becomes `b^l c^{r-l}`.
pub fn duplicate_to_alladi(x: &WeightedSeries) -> Result<WeightedSeries, ExpansionError> {
    if x.arity() != 2 {
        return Err(ExpansionError::ArityMismatch(2, x.arity()));
    }
    x.reindex(2, x.order(), |e, n| {
        (e[0] >= e[1]).then(|| (vec![e[1], e[0] - e[1]], n))
    })
}

/// `coefficient * q^q_power`, used to specialize identity parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coefficient: BigInt,
    pub q_power: usize,
}

impl Monomial {
    pub fn new(coefficient: impl Into<BigInt>, q_power: usize) -> Self {
        Monomial {
            coefficient: coefficient.into(),
            q_power,
        }
    }

    pub fn zero() -> Self {
        Monomial::new(0, 0)
    }

    fn series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(self.coefficient.clone(), self.q_power, order)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q_power {
            0 => write!(f, "{}", self.coefficient),
            1 => write!(f, "{}q", self.coefficient),
            p => write!(f, "{}q^{p}", self.coefficient),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalIdentity {
    Lebesgue,
    Gauss,
    Sylvester,
    RogersFine,
    JacobiTriple,
}

impl ClassicalIdentity {
    pub const ALL: [ClassicalIdentity; 5] = [
        ClassicalIdentity::Lebesgue,
        ClassicalIdentity::Gauss,
        ClassicalIdentity::Sylvester,
        ClassicalIdentity::RogersFine,
        ClassicalIdentity::JacobiTriple,
    ];

    /// Number of monomial parameters the identity takes.
    pub fn arity(self) -> usize {
        match self {
            ClassicalIdentity::RogersFine => 3,
            ClassicalIdentity::JacobiTriple => 2,
            _ => 0,
        }
    }
}

fn invalid(msg: impl Into<String>) -> ExpansionError {
    ExpansionError::InvalidSpecialization(msg.into())
}

/// Both sides of a classical identity. Lebesgue and Sylvester keep `b` as
/// their single marker; the rest are plain series lifted to arity 0.
pub fn classical_identity_sides(
    which: ClassicalIdentity,
    params: &[Monomial],
    order: usize,
) -> Result<(WeightedSeries, WeightedSeries), ExpansionError> {
    if params.len() != which.arity() {
        return Err(invalid(format!(
            "{which:?} takes {} parameters, got {}",
            which.arity(),
            params.len()
        )));
    }
    match which {
        ClassicalIdentity::Lebesgue => Ok(lebesgue(order)),
        ClassicalIdentity::Gauss => {
            let (l, r) = gauss(order);
            Ok((WeightedSeries::from_series(&l, 0), WeightedSeries::from_series(&r, 0)))
        }
        ClassicalIdentity::Sylvester => Ok(sylvester(order)),
        ClassicalIdentity::RogersFine => {
            let (l, r) = rogers_fine(&params[0], &params[1], &params[2], order)?;
            Ok((WeightedSeries::from_series(&l, 0), WeightedSeries::from_series(&r, 0)))
        }
        ClassicalIdentity::JacobiTriple => {
            let (l, r) = jacobi_triple(&params[0], &params[1], order)?;
            Ok((WeightedSeries::from_series(&l, 0), WeightedSeries::from_series(&r, 0)))
        }
    }
}

fn lebesgue(order: usize) -> (WeightedSeries, WeightedSeries) {
    let b = [1u32];
    let mut lhs = WeightedSeries::zero(1, order);
    // (-bq;q)_n / (q;q)_n, built incrementally
    let mut ratio = WeightedSeries::one(1, order);
    for n in 0usize.. {
        let t = n * (n + 1) / 2;
        if t > order {
            break;
        }
        if n > 0 {
            ratio.mul_binomial(&one(), &b, n);
            ratio.div_binomial(&minus_one(), &[0], n);
        }
        let term = WeightedSeries::monomial(1, &[0], t, order).mul(&ratio).expect("arity");
        lhs = lhs.add(&term).expect("arity");
    }
    let mut rhs = WeightedSeries::one(1, order);
    for m in 1..=order {
        if 2 * m <= order {
            rhs.mul_binomial(&one(), &b, 2 * m);
        }
        if 2 * m - 1 <= order {
            rhs.div_binomial(&minus_one(), &[0], 2 * m - 1);
        }
    }
    (lhs, rhs)
}

fn gauss(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let mut lhs = TruncatedSeries::zero(order);
    for n in 0usize.. {
        let t = n * (n + 1) / 2;
        if t > order {
            break;
        }
        lhs = &lhs + &TruncatedSeries::monomial(1, t, order);
    }
    let mut rhs = TruncatedSeries::one(order);
    for m in 1..=order {
        rhs.mul_binomial(&minus_one(), 2 * m);
        rhs.div_binomial(&minus_one(), 2 * m - 1);
    }
    (lhs, rhs)
}

fn sylvester(order: usize) -> (WeightedSeries, WeightedSeries) {
    let b = [1u32];
    let mut lhs = WeightedSeries::one(1, order);
    for n in 1..=order {
        lhs.mul_binomial(&one(), &b, n);
    }
    let mut rhs = WeightedSeries::one(1, order);
    for k in 1usize.. {
        let e = (3 * k * k - k) / 2;
        if e > order {
            break;
        }
        let mut term = WeightedSeries::monomial(1, &[k as u32], e, order);
        for j in 1..k {
            term.mul_binomial(&one(), &b, j);
        }
        term.mul_binomial(&one(), &b, 2 * k);
        for j in 1..=k {
            term.div_binomial(&minus_one(), &[0], j);
        }
        rhs = rhs.add(&term).expect("arity");
    }
    (lhs, rhs)
}

/// Fine's function `Σ (αq;q)_n/(βq;q)_n τ^n` against the Rogers–Fine
/// expansion. The factor `(ατq/β;q)_n β^n` is evaluated as
/// `Π_{j<n} (β - ατ q^{j+1})`, so `β = 0` is allowed.
fn rogers_fine(
    alpha: &Monomial,
    beta: &Monomial,
    tau: &Monomial,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries), ExpansionError> {
    if tau.q_power == 0 && !tau.coefficient.is_zero() {
        return Err(invalid(format!("tau = {tau} needs a positive power of q")));
    }
    let (ca, ea) = (&alpha.coefficient, alpha.q_power);
    let (cb, eb) = (&beta.coefficient, beta.q_power);
    let (ct, et) = (&tau.coefficient, tau.q_power);
    let cat = ca * ct;

    let mut lhs = TruncatedSeries::zero(order);
    let mut term = TruncatedSeries::one(order);
    for n in 0..=order {
        if n > 0 {
            term.mul_binomial(&-ca, ea + n);
            term.div_binomial(&-cb, eb + n);
            term = term.scale(ct).shift(et);
        }
        if term.coeffs().iter().all(Zero::is_zero) {
            break;
        }
        lhs = &lhs + &term;
    }

    let mut rhs = TruncatedSeries::zero(order);
    for n in 0usize.. {
        if n * n > order {
            break;
        }
        let mut t = TruncatedSeries::monomial(num_traits::pow(ct.clone(), n), n * n + n * et, order);
        for j in 1..=n {
            t.mul_binomial(&-ca, ea + j);
            t.div_binomial(&-cb, eb + j);
        }
        for j in 0..n {
            let f = &beta.series(order) - &TruncatedSeries::monomial(cat.clone(), ea + et + j + 1, order);
            t = &t * &f;
        }
        t.mul_binomial(&-&cat, ea + et + 2 * n + 1);
        for j in 0..=n {
            t.div_binomial(&-ct, et + j);
        }
        rhs = &rhs + &t;
    }
    Ok((lhs, rhs))
}

/// `f(a, b) = Σ_{n ∈ Z} a^{n(n+1)/2} b^{n(n-1)/2}` against
/// `(-a;ab)_∞ (-b;ab)_∞ (ab;ab)_∞`.
fn jacobi_triple(
    a: &Monomial,
    b: &Monomial,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries), ExpansionError> {
    if a.q_power == 0 || b.q_power == 0 {
        return Err(invalid(format!("a = {a}, b = {b} need positive powers of q")));
    }
    let (ca, ea) = (&a.coefficient, a.q_power as i64);
    let (cb, eb) = (&b.coefficient, b.q_power as i64);
    let mut lhs = TruncatedSeries::zero(order);
    let bound = (order as f64).sqrt() as i64 + 2;
    for n in -bound..=bound {
        let (pa, pb) = (n * (n + 1) / 2, n * (n - 1) / 2);
        let e = ea * pa + eb * pb;
        if e as usize > order {
            continue;
        }
        let c = num_traits::pow(ca.clone(), pa as usize) * num_traits::pow(cb.clone(), pb as usize);
        lhs = &lhs + &TruncatedSeries::monomial(c, e as usize, order);
    }

    let step = (ea + eb) as usize;
    let cab = ca * cb;
    let mut rhs = TruncatedSeries::one(order);
    for j in 0..=order / step {
        let pj = num_traits::pow(cab.clone(), j);
        rhs.mul_binomial(&(ca * &pj), ea as usize + j * step);
        rhs.mul_binomial(&(cb * &pj), eb as usize + j * step);
        if j >= 1 {
            rhs.mul_binomial(&-pj, j * step);
        }
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::refined_duplicate_counts;
    use crate::series::{pentagonal_series, theta_psi};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn lhs_small_coefficients() {
        let lhs = duplicate_refined_lhs(4, 10).unwrap();
        assert_eq!(lhs.coeff(3, &[1, 1]), big(1));
        assert_eq!(lhs.coeff(3, &[2, 1]), big(1));
        let counts = lhs.specialize(&[big(1), big(1)]).unwrap();
        let want = [1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16];
        assert_eq!(counts.coeffs(), &want.map(BigInt::from)[..]);
        assert_eq!(duplicate_refined_lhs(6, 0).unwrap(), WeightedSeries::one(2, 0));
        assert!(duplicate_refined_lhs(5, 3).is_err());
    }

    #[test]
    fn lhs_matches_enumeration() {
        for s in [4u32, 6] {
            let lhs = duplicate_refined_lhs(s, 20).unwrap();
            for n in 0..=20u32 {
                let counts = refined_duplicate_counts(n, s).unwrap();
                let poly = lhs.poly(n as usize);
                assert_eq!(poly.len(), counts.len(), "s={s} n={n}");
                for ((r, l), c) in counts {
                    assert_eq!(lhs.coeff(n as usize, &[r as u32, l as u32]), c);
                }
            }
        }
    }

    #[test]
    fn term_count_bound() {
        assert_eq!(expansion_terms(4, 30), 4);
        assert_eq!(expansion_terms(6, 30), 4);
        assert_eq!(expansion_terms(8, 30), 3);
    }

    #[test]
    fn readings_agree_with_each_other() {
        for s in [4u32, 6, 8] {
            let k = expansion_terms(s, 24);
            let a = duplicate_refined_rhs(s, k, 24, ExpansionReading::FactoredBracket).unwrap();
            let b = duplicate_refined_rhs(s, k, 24, ExpansionReading::ProofCases).unwrap();
            assert_eq!(a, b, "s={s}");
        }
    }

    #[test]
    fn expansion_holds_for_four() {
        let lhs = duplicate_refined_lhs(4, 30).unwrap();
        let rhs = duplicate_refined_rhs(4, expansion_terms(4, 30), 30, ExpansionReading::FactoredBracket)
            .unwrap();
        assert_eq!(lhs.first_difference(&rhs), None);
    }

    #[test]
    fn expansion_misses_six_at_three() {
        // (2,1) is 6-duplicate but the k = 1 summand only reaches (2) and (1)
        let lhs = duplicate_refined_lhs(6, 30).unwrap();
        let rhs = duplicate_refined_rhs(6, expansion_terms(6, 30), 30, ExpansionReading::ProofCases)
            .unwrap();
        assert_eq!(lhs.first_difference(&rhs), Some((3, vec![2, 2])));
    }

    #[test]
    fn alladi_sides_agree_and_reduce() {
        let (lhs, rhs) = alladi_sides(30);
        assert_eq!(lhs.first_difference(&rhs), None);
        let dl = duplicate_to_alladi(&duplicate_refined_lhs(4, 30).unwrap()).unwrap();
        assert_eq!(dl, lhs);
        let dr = duplicate_refined_rhs(4, expansion_terms(4, 30), 30, ExpansionReading::FactoredBracket)
            .unwrap();
        assert_eq!(duplicate_to_alladi(&dr).unwrap(), rhs);
    }

    #[test]
    fn alladi_without_even_parts() {
        let (lhs, rhs) = alladi_sides(40);
        let (l0, r0) = (lhs.substitute(1, &big(0)).unwrap(), rhs.substitute(1, &big(0)).unwrap());
        assert_eq!(l0, r0);
        // the c = 0 expansion written out directly
        let mut direct = WeightedSeries::one(1, 40);
        for k in 1usize.. {
            let e = 3 * k * k - 2 * k;
            if e > 40 {
                break;
            }
            let mut t = WeightedSeries::monomial(1, &[k as u32], e, 40);
            for j in 0..k - 1 {
                t.mul_binomial(&big(1), &[1], 2 * j + 1);
            }
            t.mul_binomial(&big(1), &[1], 4 * k - 1);
            for j in 1..=k {
                t.div_binomial(&big(-1), &[0], 2 * j);
            }
            direct = direct.add(&t).unwrap();
        }
        assert_eq!(direct, r0);
        // b → bq, then q^2 → q
        let folded = r0
            .reindex(1, 20, |e, n| {
                let m = n + e[0] as usize;
                m.is_multiple_of(2).then(|| (e.to_vec(), m / 2))
            })
            .unwrap();
        let (syl, _) = classical_identity_sides(ClassicalIdentity::Sylvester, &[], 20).unwrap();
        assert_eq!(folded, syl);
    }

    #[test]
    fn alladi_odd_free_is_partitions_in_q2() {
        let (lhs, _) = alladi_sides(20);
        let s = lhs.specialize(&[big(0), big(1)]).unwrap();
        let p = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for n in 0..=20 {
            let want = if n % 2 == 0 { big(p[n / 2]) } else { big(0) };
            assert_eq!(s.coeff(n as i64), want);
        }
    }

    #[test]
    fn lebesgue_and_gauss() {
        let (l, r) = classical_identity_sides(ClassicalIdentity::Lebesgue, &[], 40).unwrap();
        assert_eq!(l, r);
        let at_minus_one = l.specialize(&[big(-1)]).unwrap();
        let (g, gp) = classical_identity_sides(ClassicalIdentity::Gauss, &[], 100).unwrap();
        assert_eq!(g, gp);
        assert_eq!(at_minus_one, g.specialize(&[]).unwrap().truncate(40));
        assert_eq!(g.specialize(&[]).unwrap(), theta_psi(1, 100));
    }

    #[test]
    fn sylvester_gives_pentagonal() {
        let (l, r) = classical_identity_sides(ClassicalIdentity::Sylvester, &[], 40).unwrap();
        assert_eq!(l, r);
        assert_eq!(r.specialize(&[big(-1)]).unwrap(), pentagonal_series(40));
    }

    #[test]
    fn rogers_fine_specializations() {
        let cases = [
            [Monomial::zero(), Monomial::zero(), Monomial::new(1, 1)],
            [Monomial::new(1, 0), Monomial::zero(), Monomial::new(1, 1)],
            [Monomial::new(-1, 1), Monomial::new(1, 1), Monomial::new(1, 2)],
            [Monomial::new(2, 0), Monomial::new(-3, 1), Monomial::new(-1, 1)],
            [Monomial::new(1, 2), Monomial::new(2, 0), Monomial::new(3, 1)],
        ];
        for p in &cases {
            let (l, r) = classical_identity_sides(ClassicalIdentity::RogersFine, p, 30).unwrap();
            assert_eq!(l.first_difference(&r), None, "{p:?}");
        }
        let (l, _) = classical_identity_sides(ClassicalIdentity::RogersFine, &cases[0], 10).unwrap();
        assert_eq!(l.specialize(&[]).unwrap(), TruncatedSeries::from_coeffs(vec![1; 11], 10));
        let bad = [Monomial::zero(), Monomial::zero(), Monomial::new(1, 0)];
        assert!(matches!(
            classical_identity_sides(ClassicalIdentity::RogersFine, &bad, 10),
            Err(ExpansionError::InvalidSpecialization(_))
        ));
    }

    #[test]
    fn jacobi_specializations() {
        let cases = [(1, 1, 1, 3), (-1, 1, -1, 3), (-1, 1, -1, 2), (2, 1, 1, 1), (1, 2, -3, 5)];
        for (ca, ea, cb, eb) in cases {
            let p = [Monomial::new(ca, ea), Monomial::new(cb, eb)];
            let (l, r) = classical_identity_sides(ClassicalIdentity::JacobiTriple, &p, 60).unwrap();
            assert_eq!(l.first_difference(&r), None, "{p:?}");
        }
        let p = [Monomial::new(1, 1), Monomial::new(1, 3)];
        let (l, _) = classical_identity_sides(ClassicalIdentity::JacobiTriple, &p, 60).unwrap();
        assert_eq!(l.specialize(&[]).unwrap(), theta_psi(1, 60));
        let p = [Monomial::new(-1, 1), Monomial::new(-1, 2)];
        let (l, _) = classical_identity_sides(ClassicalIdentity::JacobiTriple, &p, 60).unwrap();
        assert_eq!(l.specialize(&[]).unwrap(), pentagonal_series(60));
        assert!(classical_identity_sides(ClassicalIdentity::JacobiTriple, &[Monomial::new(1, 0), Monomial::new(1, 1)], 5).is_err());
        assert!(classical_identity_sides(ClassicalIdentity::Gauss, &[Monomial::zero()], 5).is_err());
    }
}
