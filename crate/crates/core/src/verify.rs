//! Named end-to-end checks, each comparing two or more independent
//! computations and reporting the first disagreement.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::classes::{count, members, refined_duplicate_counts, sylvester_weight_polynomials, ClassSpec};
use crate::expansion::{
    alladi_sides, classical_identity_sides, duplicate_refined_lhs, duplicate_refined_rhs,
    duplicate_to_alladi, expansion_terms, ClassicalIdentity, ExpansionReading, Monomial,
};
use crate::genfun::class_genfun;
use crate::golden::ANDREWS_COLUMNS;
use crate::overpartition::{enumerate_overpartitions, over_genfun, overpartition_genfun, OverKind, ProductForm};
use crate::partition::Partition;
use crate::recurrence::{c_table, d_table, m_table};
use crate::series::{euler_product, pentagonal_series, TruncatedSeries};
use crate::weighted::WeightedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Gauss,
    Pentagonal,
    Lebesgue,
    Sylvester,
    RogersFine,
    Jacobi,
    Alladi,
    GeneralizedExpansion,
    OverForms,
    Merca,
    AndrewsVw,
    Equinumerosity,
    CongruenceSpot,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Gauss,
        Check::Pentagonal,
        Check::Lebesgue,
        Check::Sylvester,
        Check::RogersFine,
        Check::Jacobi,
        Check::Alladi,
        Check::GeneralizedExpansion,
        Check::OverForms,
        Check::Merca,
        Check::AndrewsVw,
        Check::Equinumerosity,
        Check::CongruenceSpot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Gauss => "gauss",
            Check::Pentagonal => "pentagonal",
            Check::Lebesgue => "lebesgue",
            Check::Sylvester => "sylvester",
            Check::RogersFine => "rogers-fine",
            Check::Jacobi => "jacobi",
            Check::Alladi => "alladi",
            Check::GeneralizedExpansion => "generalized-expansion",
            Check::OverForms => "over-forms",
            Check::Merca => "merca",
            Check::AndrewsVw => "andrews-vw",
            Check::Equinumerosity => "equinumerosity",
            Check::CongruenceSpot => "congruence-spot",
        }
    }

    /// Truncation order (or largest `n`) used when none is given.
    pub fn default_order(self) -> usize {
        match self {
            Check::Gauss | Check::Pentagonal => 200,
            Check::Lebesgue | Check::Sylvester => 40,
            Check::RogersFine | Check::Jacobi => 50,
            Check::Alladi | Check::GeneralizedExpansion => 30,
            Check::OverForms => 60,
            Check::Merca => 50,
            Check::AndrewsVw | Check::Equinumerosity => 30,
            Check::CongruenceSpot => 700,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Order or largest `n`; the check's default when `None`.
    pub order: Option<usize>,
    /// Moduli for the checks that take them; each check has a default set.
    pub moduli: Vec<u32>,
    /// Reading of the Durfee-square bracket; both when `None`.
    pub reading: Option<ExpansionReading>,
}

/// Outcome of one check: a line per comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: Check,
    pub passed: bool,
    pub lines: Vec<String>,
}

impl CheckReport {
    fn new(check: Check) -> Self {
        CheckReport { check, passed: true, lines: Vec::new() }
    }

    fn record(&mut self, ok: bool, line: String) {
        self.passed &= ok;
        self.lines.push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }

    fn series(&mut self, label: &str, a: &TruncatedSeries, b: &TruncatedSeries) {
        match a.first_difference(b) {
            None => self.record(true, format!("{label} to q^{}", a.order().min(b.order()))),
            Some(n) => self.record(
                false,
                format!("{label}: first difference at q^{n}: {} vs {}", a.coeff(n as i64), b.coeff(n as i64)),
            ),
        }
    }

    fn weighted(&mut self, label: &str, a: &WeightedSeries, b: &WeightedSeries, names: &[&str]) {
        match a.first_difference(b) {
            None => self.record(true, format!("{label} to q^{}", a.order().min(b.order()))),
            Some((n, ex)) => {
                let mono: Vec<String> = ex
                    .iter()
                    .zip(names)
                    .map(|(k, name)| format!("{name}^{k}"))
                    .collect();
                self.record(
                    false,
                    format!(
                        "{label}: first difference at q^{n} {}: {} vs {}",
                        mono.join(" "),
                        a.coeff(n, &ex),
                        b.coeff(n, &ex)
                    ),
                )
            }
        }
    }

    fn values(&mut self, label: &str, values: &[(&str, BigInt)]) {
        let ok = values.windows(2).all(|w| w[0].1 == w[1].1);
        let shown: Vec<String> = values.iter().map(|(k, v)| format!("{k} {v}")).collect();
        self.record(ok, format!("{label}: {}", shown.join(", ")));
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        write!(f, "{}: {}", self.check, if self.passed { "PASS" } else { "FAIL" })
    }
}

/// Parameter sets for the Rogers–Fine check as `(α, β, τ)`.
pub fn rogers_fine_specializations() -> Vec<[Monomial; 3]> {
    vec![
        [Monomial::zero(), Monomial::zero(), Monomial::new(1, 1)],
        [Monomial::new(1, 0), Monomial::zero(), Monomial::new(1, 1)],
        [Monomial::new(-1, 1), Monomial::new(1, 1), Monomial::new(1, 2)],
        [Monomial::new(2, 0), Monomial::new(-3, 1), Monomial::new(-1, 1)],
    ]
}

/// Parameter pairs `(a, b)` for the triple product check.
pub fn jacobi_specializations() -> Vec<[Monomial; 2]> {
    vec![
        [Monomial::new(1, 1), Monomial::new(1, 3)],
        [Monomial::new(-1, 1), Monomial::new(-1, 2)],
        [Monomial::new(-1, 1), Monomial::new(-1, 3)],
        [Monomial::new(2, 1), Monomial::new(1, 1)],
    ]
}

/// `(n, modulus)` pairs for the finite instances of the Radu–Sellers
/// congruences for 4-duplicate partitions.
pub const RADU_SELLERS_SPOTS: [(usize, u32); 6] = [(8, 5), (143, 5), (107, 5), (242, 5), (260, 7), (647, 25)];

fn moduli_or(opts: &VerifyOptions, default: &[u32]) -> Vec<u32> {
    if opts.moduli.is_empty() {
        default.to_vec()
    } else {
        opts.moduli.clone()
    }
}

fn class(c: Result<ClassSpec, crate::error::ClassError>) -> ClassSpec {
    c.expect("fixed valid parameters")
}

pub fn run_check(check: Check, opts: &VerifyOptions) -> CheckReport {
    let order = opts.order.unwrap_or_else(|| check.default_order());
    let mut r = CheckReport::new(check);
    let sides = |which, params: &[Monomial], n| {
        classical_identity_sides(which, params, n).expect("fixed valid parameters")
    };
    match check {
        Check::Gauss => {
            let (l, rr) = sides(ClassicalIdentity::Gauss, &[], order);
            r.weighted("sum of q^{T_n} = (q^2;q^2)/(q;q^2)", &l, &rr, &[]);
        }
        Check::Pentagonal => {
            r.series("(q;q) = pentagonal sum", &euler_product(order), &pentagonal_series(order));
        }
        Check::Lebesgue => {
            let (l, rr) = sides(ClassicalIdentity::Lebesgue, &[], order);
            r.weighted("Lebesgue, b symbolic", &l, &rr, &["b"]);
            let (g, _) = sides(ClassicalIdentity::Gauss, &[], order);
            let at = l.specialize(&[BigInt::from(-1)]).expect("arity 1");
            r.series("Lebesgue at b = -1 gives Gauss", &at, &g.specialize(&[]).expect("arity 0"));
        }
        Check::Sylvester => {
            let (l, rr) = sides(ClassicalIdentity::Sylvester, &[], order);
            r.weighted("Sylvester, b symbolic", &l, &rr, &["b"]);
            let at = rr.specialize(&[BigInt::from(-1)]).expect("arity 1");
            r.series("Sylvester at b = -1 gives the pentagonal sum", &at, &pentagonal_series(order));
        }
        Check::RogersFine => {
            for p in rogers_fine_specializations() {
                let (l, rr) = sides(ClassicalIdentity::RogersFine, &p, order);
                r.weighted(&format!("Rogers-Fine at ({}, {}, {})", p[0], p[1], p[2]), &l, &rr, &[]);
            }
        }
        Check::Jacobi => {
            for p in jacobi_specializations() {
                let (l, rr) = sides(ClassicalIdentity::JacobiTriple, &p, order);
                r.weighted(&format!("triple product at ({}, {})", p[0], p[1]), &l, &rr, &[]);
            }
        }
        Check::Alladi => {
            let (l, rr) = alladi_sides(order);
            r.weighted("Alladi expansion in (b, c)", &l, &rr, &["b", "c"]);
            let n_max = order.min(20) as u32;
            let bad = (0..=n_max).find(|&n| {
                let (a, b) = sylvester_weight_polynomials(n);
                a != b
            });
            r.record(
                bad.is_none(),
                match bad {
                    None => format!("distinct vs gap-3 weight polynomials for n <= {n_max}"),
                    Some(n) => format!("distinct vs gap-3 weight polynomials differ at n = {n}"),
                },
            );
        }
        Check::GeneralizedExpansion => generalized(&mut r, order, opts),
        Check::OverForms => {
            for kind in OverKind::ALL {
                for s in moduli_or(opts, &[4, 6, 8]) {
                    let (a, b) = match (
                        over_genfun(kind, s, ProductForm::First, order),
                        over_genfun(kind, s, ProductForm::Second, order),
                    ) {
                        (Ok(a), Ok(b)) => (a, b),
                        (Err(e), _) | (_, Err(e)) => {
                            r.record(false, format!("{kind} s = {s}: {e}"));
                            continue;
                        }
                    };
                    r.series(&format!("{kind} s = {s}, two product forms"), &a, &b);
                }
            }
            let g = overpartition_genfun(20);
            let counts: Vec<usize> = (0..=20).map(|n| enumerate_overpartitions(n).count()).collect();
            let enumerated = TruncatedSeries::from_coeffs(counts.iter().map(|&c| c as u64), 20);
            r.series("overpartitions enumerated vs (-q;q)/(q;q)", &enumerated, &g);
        }
        Check::Merca => {
            let c4 = class_genfun(&class(ClassSpec::congruent(4)), order).expect("product form");
            let mut bad = None;
            for n in 0..=order {
                let ped = count(n as i64, &ClassSpec::ped());
                let mut sum = BigInt::zero();
                for k in 0usize.. {
                    let t = k * (k + 1);
                    if t > n {
                        break;
                    }
                    sum += c4.coeff((n - t) as i64);
                }
                if ped != sum {
                    bad = Some((n, ped, sum));
                    break;
                }
            }
            r.record(
                bad.is_none(),
                match bad {
                    None => format!("ped(n) = sum_k C_4(n - 2T_k) for n <= {order}"),
                    Some((n, a, b)) => format!("ped({n}) = {a} but the sum is {b}"),
                },
            );
        }
        Check::AndrewsVw => andrews(&mut r, order as u32),
        Check::Equinumerosity => {
            let n_max = order;
            for s in moduli_or(opts, &[4, 6, 8, 10, 12]) {
                equinumerosity(&mut r, s, n_max);
            }
        }
        Check::CongruenceSpot => {
            let d4 = class_genfun(&class(ClassSpec::duplicate(4)), order).expect("product form");
            for (n, m) in RADU_SELLERS_SPOTS {
                if n > order {
                    r.record(false, format!("D_4({n}) is beyond order {order}"));
                    continue;
                }
                let v = d4.coeff(n as i64);
                let rem = &v % BigInt::from(m);
                r.record(rem.is_zero(), format!("D_4({n}) = {v} = {rem} mod {m}"));
            }
        }
    }
    r
}

fn generalized(r: &mut CheckReport, order: usize, opts: &VerifyOptions) {
    let readings = match opts.reading {
        Some(x) => vec![x],
        None => vec![ExpansionReading::FactoredBracket, ExpansionReading::ProofCases],
    };
    let moduli = moduli_or(opts, &[4, 6, 8]);
    for &s in &moduli {
        let lhs = match duplicate_refined_lhs(s, order) {
            Ok(x) => x,
            Err(e) => {
                r.record(false, format!("s = {s}: {e}"));
                continue;
            }
        };
        for &reading in &readings {
            let rhs = duplicate_refined_rhs(s, expansion_terms(s, order), order, reading).expect("valid s");
            r.weighted(&format!("s = {s}, {reading}"), &lhs, &rhs, &["z", "b"]);
        }
        if s == 4 || s == 6 {
            let top = order.min(20);
            let bad = (0..=top).find(|&n| {
                let counts = refined_duplicate_counts(n as u32, s).expect("valid s");
                let poly = lhs.poly(n);
                poly.len() != counts.len()
                    || counts
                        .iter()
                        .any(|(&(rr, l), c)| lhs.coeff(n, &[rr as u32, l as u32]) != *c)
            });
            r.record(
                bad.is_none(),
                match bad {
                    None => format!("s = {s}, product vs refined enumeration for n <= {top}"),
                    Some(n) => format!("s = {s}, product vs refined enumeration differ at n = {n}"),
                },
            );
        }
    }
    if moduli.contains(&4) {
        let (al, ar) = alladi_sides(order);
        let lhs = duplicate_refined_lhs(4, order).expect("valid s");
        let mapped = duplicate_to_alladi(&lhs).expect("arity 2");
        r.weighted("s = 4 product under z -> c, b -> b/c vs Alladi", &mapped, &al, &["b", "c"]);
        for &reading in &readings {
            let rhs = duplicate_refined_rhs(4, expansion_terms(4, order), order, reading).expect("valid s");
            match duplicate_to_alladi(&rhs) {
                Ok(m) => r.weighted(&format!("s = 4 {reading} expansion vs Alladi"), &m, &ar, &["b", "c"]),
                Err(e) => r.record(false, format!("s = 4 {reading} expansion: {e}")),
            }
        }
    }
}

fn andrews(r: &mut CheckReport, n_max: u32) {
    for t in [3u32, 5] {
        let c = class(ClassSpec::congruent_distinct(4, t));
        let v = class(ClassSpec::v_class(t, t.div_ceil(2)));
        let w = class(ClassSpec::w_class(t, t.div_ceil(2)));
        let product = class_genfun(&c, n_max as usize).expect("product form");
        let bad = (0..=n_max).find(|&n| {
            let p = product.coeff(i64::from(n));
            p != count(i64::from(n), &v) || p != count(i64::from(n), &w)
        });
        r.record(
            bad.is_none(),
            match bad {
                None => format!("t = {t}: product = V = W for n <= {n_max}"),
                Some(n) => format!(
                    "t = {t}, n = {n}: product {}, V {}, W {}",
                    product.coeff(i64::from(n)),
                    count(i64::from(n), &v),
                    count(i64::from(n), &w)
                ),
            },
        );
    }
    let classes = [
        class(ClassSpec::congruent_distinct(4, 3)),
        class(ClassSpec::v_class(3, 2)),
        class(ClassSpec::w_class(3, 2)),
    ];
    for (col, cls) in ANDREWS_COLUMNS.iter().zip(classes) {
        let printed: BTreeSet<Partition> = col.iter().map(|s| s.parse().expect("fixture")).collect();
        let computed: BTreeSet<Partition> = members(12, &cls).collect();
        r.record(
            printed == computed && printed.len() == col.len(),
            format!("n = 12, {cls}: {} printed, {} enumerated", col.len(), computed.len()),
        );
    }
}

fn equinumerosity(r: &mut CheckReport, s: u32, n_max: usize) {
    let specs = [
        ("M", class(ClassSpec::modular(s))),
        ("C", class(ClassSpec::congruent(s))),
        ("D", class(ClassSpec::duplicate(s))),
    ];
    let series: Vec<TruncatedSeries> = specs
        .iter()
        .map(|(_, c)| class_genfun(c, n_max).expect("product form"))
        .collect();
    let m = m_table(s, n_max, n_max).expect("valid s");
    let c = c_table(s, n_max, n_max).expect("valid s").table;
    let d = d_table(s, n_max, n_max).expect("valid s");
    for n in 0..=n_max {
        let mut values: Vec<(&str, BigInt)> = Vec::new();
        for (label, cls) in &specs {
            values.push((label, count(n as i64, cls)));
        }
        for s in &series {
            values.push(("gf", s.coeff(n as i64)));
        }
        for t in [&m, &c, &d] {
            values.push(("rec", t.row_sum(n)));
        }
        if values.windows(2).any(|w| w[0].1 != w[1].1) {
            r.values(&format!("s = {s}, n = {n}"), &values);
            return;
        }
    }
    r.record(true, format!("s = {s}: M = C = D by enumeration, products and recurrences for n <= {n_max}"));
}
