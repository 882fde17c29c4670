//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact (tolerance zero). Runtime budgets are part of
//! each criterion and pinned below. Criteria listed in `KNOWN_FAILING` are
//! run in full and print FAIL; the test requires that they still fail, so
//! a change in their status is noticed.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use qpart::bijection::{forward_congruent, forward_duplicate, inverse_congruent, inverse_duplicate, sweep, Direction};
use qpart::classes::{members, refined_duplicate_counts, sylvester_weight_polynomials};
use qpart::expansion::{
    alladi_sides, classical_identity_sides, duplicate_refined_lhs, duplicate_refined_rhs, duplicate_to_alladi,
    expansion_terms, ClassicalIdentity, ExpansionReading, Monomial,
};
use qpart::genfun::class_genfun;
use qpart::golden::{
    diff_against_printed, ANDREWS_COLUMNS, BIJECTION_ERRATA, BIJECTION_TABLES, C4_VALUES, QUARANTINED_FINDINGS,
};
use qpart::overpartition::{enumerate_overpartitions, over_genfun, overpartition_genfun, OverKind, ProductForm};
use qpart::partition::enumerate_partitions_with_length;
use qpart::recurrence::{c4_triangular_upto, c_table, d4_two_parts, d_table, m_table, CountTable};
use qpart::series::{euler_product, pentagonal_series, TruncatedSeries};
use qpart::{count, is_member, ClassSpec, Partition};

/// The generalized Durfee-square expansion does not hold for s = 6, 8.
const KNOWN_FAILING: &[u32] = &[5];

const BUDGETS: [Duration; 10] = [
    Duration::from_secs(1),
    Duration::from_secs(10),
    Duration::from_secs(60),
    Duration::from_secs(120),
    Duration::from_secs(60),
    Duration::from_secs(60),
    Duration::from_secs(60),
    Duration::from_secs(30),
    Duration::from_secs(30),
    Duration::from_secs(30),
];

/// Failure messages collected while a criterion runs.
#[derive(Default)]
struct Log {
    failures: Vec<String>,
}

impl Log {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        self.check(got == want, || format!("{label}: got {got:?}, want {want:?}"));
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn p(s: &str) -> Partition {
    s.parse().expect("fixture literal")
}

fn class(c: Result<ClassSpec, qpart::ClassError>) -> ClassSpec {
    c.expect("valid parameters")
}

fn oracle_with_length(n: u32, k: u32, c: &ClassSpec) -> BigInt {
    BigInt::from(enumerate_partitions_with_length(n, k).filter(|l| is_member(l, c)).count())
}

fn criterion_1(log: &mut Log) {
    let m4 = class(ClassSpec::modular(4));
    let c4 = class(ClassSpec::congruent(4));
    let d4 = class(ClassSpec::duplicate(4));
    log.eq("M_4(8)", count(8, &m4), big(10));
    log.eq("C_6(8)", count(8, &class(ClassSpec::congruent(6))), big(7));
    log.eq("D_6(6)", count(6, &class(ClassSpec::duplicate(6))), big(5));
    log.eq("C_4^4(9)", count(9, &class(ClassSpec::congruent_distinct(4, 4))), big(9));
    log.eq("E_6^3(14)", count(14, &class(ClassSpec::e_class(6, 3))), big(13));

    let m = m_table(4, 20, 8).unwrap();
    log.eq("M_4(20,8)", m.get(20, 8), big(13));
    log.eq("M_4(20,8) oracle", oracle_with_length(20, 8, &m4), big(13));
    let c = c_table(4, 20, 4).unwrap();
    log.eq("C_4(20,4)", c.table.get(20, 4), big(23));
    let layers: Vec<BigInt> = [1, 3, 4, 5].iter().map(|&l| c.layer(l, 20, 4)).collect();
    log.eq("C_4(20,4) layers", layers, vec![big(14), big(6), big(2), big(1)]);
    log.eq("C_4(20,4) oracle", oracle_with_length(20, 4, &c4), big(23));
    let d = d_table(4, 13, 3).unwrap();
    log.eq("D_4(13,3)", d.get(13, 3), big(11));
    log.eq("D_4(13,3) oracle", oracle_with_length(13, 3, &d4), big(11));

    let tri = c4_triangular_upto(24);
    log.eq("C_4(21)", tri[21].clone(), big(196));
    log.eq("C_4(24)", tri[24].clone(), big(350));

    let two: Vec<BigInt> = (3..=8).map(d4_two_parts).collect();
    let want: Vec<BigInt> = [1, 2, 2, 2, 3, 4].map(big).to_vec();
    log.eq("D_4(n,2), n = 3..8", two, want.clone());
    let oracle: Vec<BigInt> = (3..=8).map(|n| oracle_with_length(n, 2, &d4)).collect();
    log.eq("D_4(n,2) oracle", oracle, want);
}

fn table_matches_oracle(log: &mut Log, t: &CountTable, c: &ClassSpec) {
    for d in diff_against_printed(t) {
        log.check(d.known_erratum, || format!("{} ({}, {}): printed {}, computed {}", t.kind, d.n, d.k, d.printed, d.computed));
        let oracle = oracle_with_length(d.n as u32, d.k as u32, c);
        log.eq(&format!("{} ({}, {}) erratum vs enumeration", t.kind, d.n, d.k), d.computed, oracle);
    }
}

fn criterion_2(log: &mut Log) {
    let c4 = class(ClassSpec::congruent(4));
    let gf = class_genfun(&c4, 24).unwrap();
    let tri = c4_triangular_upto(24);
    for n in 0..=24usize {
        let want = big(C4_VALUES[n]);
        log.eq(&format!("C_4({n}) product"), gf.coeff(n as i64), want.clone());
        log.eq(&format!("C_4({n}) triangular"), tri[n].clone(), want.clone());
        log.eq(&format!("C_4({n}) enumeration"), count(n as i64, &c4), want);
    }
    table_matches_oracle(log, &m_table(4, 20, 15).unwrap(), &class(ClassSpec::modular(4)));
    table_matches_oracle(log, &c_table(4, 20, 15).unwrap().table, &c4);
    table_matches_oracle(log, &d_table(4, 14, 7).unwrap(), &class(ClassSpec::duplicate(4)));
    // the worked dissection M_4(20,8) = M_4(12,8) + M_4(12,7) + M_4(12,4) + M_4(12,3)
    let m = m_table(4, 20, 15).unwrap();
    let parts: Vec<BigInt> = [8, 7, 4, 3].iter().map(|&k| m.get(12, k)).collect();
    log.eq("M_4(20,8) dissection", parts, [1, 2, 3, 7].map(big).to_vec());
}

fn criterion_3(log: &mut Log) {
    let n_max = 30usize;
    for s in [4u32, 6, 8, 10, 12] {
        let specs = [class(ClassSpec::modular(s)), class(ClassSpec::congruent(s)), class(ClassSpec::duplicate(s))];
        let series: Vec<TruncatedSeries> = specs.iter().map(|c| class_genfun(c, n_max).unwrap()).collect();
        let tables = [
            m_table(s, n_max, n_max).unwrap(),
            c_table(s, n_max, n_max).unwrap().table,
            d_table(s, n_max, n_max).unwrap(),
        ];
        for n in 0..=n_max {
            let mut values = Vec::new();
            for c in &specs {
                values.push(count(n as i64, c));
            }
            for g in &series {
                values.push(g.coeff(n as i64));
            }
            for t in &tables {
                values.push(t.row_sum(n));
            }
            log.check(values.windows(2).all(|w| w[0] == w[1]), || {
                format!("s = {s}, n = {n}: oracle M C D, product M C D, recurrence M C D = {values:?}")
            });
        }
    }
}

fn criterion_4(log: &mut Log) {
    let mut found: Vec<(u32, String, u32, String)> = Vec::new();
    for s in [4u32, 6, 8, 10, 16] {
        for dir in [Direction::ToCongruent, Direction::ToDuplicate, Direction::FromCongruent, Direction::FromDuplicate] {
            for n in 0..=22 {
                for f in sweep(s, n, dir).unwrap() {
                    found.push((s, dir.map_name(s).to_string(), n, f.to_string()));
                }
            }
        }
    }
    let quarantined: Vec<(u32, String, u32, String)> = QUARANTINED_FINDINGS
        .iter()
        .map(|&(s, m, n, f)| (s, m.to_string(), n, f.to_string()))
        .collect();
    for f in &found {
        log.check(quarantined.contains(f), || format!("unquarantined finding {f:?}"));
    }
    for q in &quarantined {
        log.check(found.contains(q), || format!("quarantined finding no longer occurs {q:?}"));
    }

    for &(s, n, rows) in BIJECTION_TABLES {
        let modular = class(ClassSpec::modular(s));
        let listed: BTreeSet<Partition> = rows.iter().map(|r| p(r.0)).collect();
        // the printed correspondences are a selection, not all of M_s(n)
        let domain: BTreeSet<Partition> = members(n, &modular).collect();
        let stray: Vec<String> = listed.difference(&domain).map(|l| l.to_string()).collect();
        log.check(stray.is_empty(), || format!("s = {s}, n = {n}: printed rows outside M_s(n): {stray:?}"));
        for &(m, dup, cong) in rows {
            let lambda = p(m);
            let dup_want = BIJECTION_ERRATA
                .iter()
                .find(|e| e.0 == s && e.1 == n && e.2 == m && e.3 == dup)
                .map_or(dup, |e| e.4);
            log.eq(&format!("s = {s} duplicate image of {m}"), forward_duplicate(&lambda, s).ok(), Some(p(dup_want)));
            log.eq(&format!("s = {s} congruent image of {m}"), forward_congruent(&lambda, s).ok(), Some(p(cong)));
            log.eq(&format!("s = {s} inverse of {dup_want}"), inverse_duplicate(&p(dup_want), s).ok(), Some(lambda.clone()));
            log.eq(&format!("s = {s} inverse of {cong}"), inverse_congruent(&p(cong), s).ok(), Some(lambda));
        }
    }
}

fn criterion_5(log: &mut Log) {
    let order = 30;
    for s in [4u32, 6, 8] {
        let lhs = duplicate_refined_lhs(s, order).unwrap();
        for reading in [ExpansionReading::FactoredBracket, ExpansionReading::ProofCases] {
            let rhs = duplicate_refined_rhs(s, expansion_terms(s, order), order, reading).unwrap();
            if let Some((n, e)) = lhs.first_difference(&rhs) {
                log.failures.push(format!(
                    "s = {s}, {reading}: q^{n} z^{} b^{}: product {}, expansion {}",
                    e[0],
                    e[1],
                    lhs.coeff(n, &e),
                    rhs.coeff(n, &e)
                ));
            }
        }
        if s <= 6 {
            for n in 0..=20u32 {
                let counts = refined_duplicate_counts(n, s).unwrap();
                let got: BTreeMap<(u64, u64), BigInt> = lhs
                    .poly(n as usize)
                    .into_iter()
                    .map(|(e, c)| ((u64::from(e[0]), u64::from(e[1])), c))
                    .collect();
                log.eq(&format!("s = {s}, n = {n} refined counts"), got, counts);
            }
        }
    }
    let (al, ar) = alladi_sides(order);
    log.check(al == ar, || "Alladi sides differ".into());
    let lhs4 = duplicate_to_alladi(&duplicate_refined_lhs(4, order).unwrap()).unwrap();
    log.check(lhs4 == al, || "s = 4 product does not reduce to Alladi".into());
    let rhs4 = duplicate_refined_rhs(4, expansion_terms(4, order), order, ExpansionReading::FactoredBracket).unwrap();
    log.check(duplicate_to_alladi(&rhs4).ok() == Some(ar), || "s = 4 expansion does not reduce to Alladi".into());
}

fn criterion_6(log: &mut Log) {
    let sides = |w, prm: &[Monomial], n| classical_identity_sides(w, prm, n).unwrap();
    let (g, gp) = sides(ClassicalIdentity::Gauss, &[], 200);
    log.check(g == gp, || "Gauss to q^200".into());
    log.check(euler_product(200) == pentagonal_series(200), || "pentagonal to q^200".into());

    let minus_one = [BigInt::from(-1)];
    let (l, r) = sides(ClassicalIdentity::Lebesgue, &[], 40);
    log.check(l == r, || "Lebesgue to q^40".into());
    log.check(l.specialize(&minus_one).unwrap() == g.specialize(&[]).unwrap().truncate(40), || {
        "Lebesgue at b = -1 is not Gauss".into()
    });
    let (l, r) = sides(ClassicalIdentity::Sylvester, &[], 40);
    log.check(l == r, || "Sylvester to q^40".into());
    let at = r.specialize(&minus_one).unwrap();
    log.check(at == pentagonal_series(40), || "Sylvester at b = -1 is not pentagonal".into());
    let support: Vec<usize> = at.support();
    let pent: Vec<usize> = (0i64..10)
        .flat_map(|k| [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2])
        .filter(|&e| e <= 40)
        .map(|e| e as usize)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    log.eq("Sylvester b = -1 support", support, pent);

    let rf = [
        [Monomial::zero(), Monomial::zero(), Monomial::new(1, 1)],
        [Monomial::new(1, 0), Monomial::zero(), Monomial::new(1, 1)],
        [Monomial::new(-1, 1), Monomial::new(1, 1), Monomial::new(1, 2)],
        [Monomial::new(2, 0), Monomial::new(-3, 1), Monomial::new(-1, 1)],
    ];
    for prm in &rf {
        let (l, r) = sides(ClassicalIdentity::RogersFine, prm, 50);
        log.check(l == r, || format!("Rogers-Fine at {prm:?}"));
    }
    let (l, _) = sides(ClassicalIdentity::RogersFine, &rf[0], 50);
    log.check(l.specialize(&[]).unwrap() == TruncatedSeries::from_coeffs(vec![1; 51], 50), || {
        "F(0, 0, q) is not sum q^n".into()
    });
    let jt = [
        [Monomial::new(1, 1), Monomial::new(1, 3)],
        [Monomial::new(-1, 1), Monomial::new(-1, 2)],
        [Monomial::new(-1, 1), Monomial::new(-1, 3)],
        [Monomial::new(2, 1), Monomial::new(1, 1)],
    ];
    for prm in &jt {
        let (l, r) = sides(ClassicalIdentity::JacobiTriple, prm, 50);
        log.check(l == r, || format!("triple product at {prm:?}"));
    }
    for n in 0..=20 {
        let (a, b) = sylvester_weight_polynomials(n);
        log.eq(&format!("Alladi weight polynomials, n = {n}"), a, b);
    }
}

fn criterion_7(log: &mut Log) {
    for t in [3u32, 5] {
        let c = class(ClassSpec::congruent_distinct(4, t));
        let v = class(ClassSpec::v_class(t, t.div_ceil(2)));
        let w = class(ClassSpec::w_class(t, t.div_ceil(2)));
        let product = class_genfun(&c, 30).unwrap();
        for n in 0..=30i64 {
            let vals = [product.coeff(n), count(n, &v), count(n, &w)];
            log.check(vals[0] == vals[1] && vals[1] == vals[2], || format!("t = {t}, n = {n}: product, V, W = {vals:?}"));
        }
    }
    let classes = [
        class(ClassSpec::congruent_distinct(4, 3)),
        class(ClassSpec::v_class(3, 2)),
        class(ClassSpec::w_class(3, 2)),
    ];
    for (col, c) in ANDREWS_COLUMNS.iter().zip(classes) {
        log.eq(&format!("{c} column length"), col.len(), 13);
        let printed: BTreeSet<Partition> = col.iter().map(|s| p(s)).collect();
        let computed: BTreeSet<Partition> = members(12, &c).collect();
        log.eq(&format!("{c} members of 12"), printed, computed);
    }
}

fn criterion_8(log: &mut Log) {
    let d4 = class_genfun(&class(ClassSpec::duplicate(4)), 700).unwrap();
    let spots: [(i64, u32); 6] = [
        (8, 5),
        (135 + 8, 5),
        (107, 5),
        (135 + 107, 5),
        (260, 7),
        (647, 25),
    ];
    for (n, m) in spots {
        let v = d4.coeff(n);
        log.check((&v % BigInt::from(m)).is_zero(), || format!("D_4({n}) = {v} not 0 mod {m}"));
    }
}

fn criterion_9(log: &mut Log) {
    let c4 = class_genfun(&class(ClassSpec::congruent(4)), 50).unwrap();
    for n in 0..=50i64 {
        let ped = count(n, &ClassSpec::ped());
        let mut sum = BigInt::zero();
        let mut k = 0;
        while k * (k + 1) <= n {
            sum += c4.coeff(n - k * (k + 1));
            k += 1;
        }
        log.eq(&format!("ped({n})"), ped, sum);
    }
}

fn criterion_10(log: &mut Log) {
    for kind in OverKind::ALL {
        for s in [4u32, 6, 8] {
            let a = over_genfun(kind, s, ProductForm::First, 60).unwrap();
            let b = over_genfun(kind, s, ProductForm::Second, 60).unwrap();
            log.check(a == b, || format!("{kind} s = {s}: forms differ at q^{:?}", a.first_difference(&b)));
        }
    }
    let g = overpartition_genfun(20);
    for n in 0..=20u32 {
        log.eq(&format!("overpartitions of {n}"), big(enumerate_overpartitions(n).count() as u64), g.coeff(i64::from(n)));
    }
}

fn main() {
    let criteria: [fn(&mut Log); 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut unexpected = Vec::new();
    for (i, run) in criteria.iter().enumerate() {
        let id = i as u32 + 1;
        let mut log = Log::default();
        let start = Instant::now();
        run(&mut log);
        let elapsed = start.elapsed();
        log.check(elapsed <= BUDGETS[i], || format!("took {elapsed:.2?}, budget {:?}", BUDGETS[i]));
        let pass = log.failures.is_empty();
        println!("criterion {id}: {} ({elapsed:.2?})", if pass { "PASS" } else { "FAIL" });
        for f in log.failures.iter().take(8) {
            println!("    {f}");
        }
        if log.failures.len() > 8 {
            println!("    ... {} more", log.failures.len() - 8);
        }
        if pass == KNOWN_FAILING.contains(&id) {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected status: {unexpected:?}");
        std::process::exit(1);
    }
}
