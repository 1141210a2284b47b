//! Exit criteria. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; the process fails if any does.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use qchar::monomial::a_factorization;
use qchar::render::parse_monomial;
use qchar::{
    depth_of, enumerate_window, fm_generate, fold_qcharacter, kr_qcharacter, string_decompose, verify_ki,
    CartanDatum, KrDescriptor, KrMode, Monomial, QCharacter, RootContent, Weight,
};

const NODES: std::ops::RangeInclusive<i64> = -2..=2;
const KS: std::ops::RangeInclusive<u32> = 1..=3;
const WINDOWS: std::ops::RangeInclusive<i64> = 0..=3;

fn grid() -> impl Iterator<Item = (i64, u32, i64)> {
    NODES.flat_map(|i| KS.flat_map(move |k| WINDOWS.map(move |n| (i, k, n))))
}

fn m(s: &str) -> Monomial {
    parse_monomial(s).unwrap()
}

/// Collects failure messages for one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
}

impl Check {
    fn ensure(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn within(&mut self, t: Instant, limit: Duration, what: impl FnOnce() -> String) {
        let e = t.elapsed();
        self.ensure(e < limit, || format!("{} took {e:?}, limit {limit:?}", what()));
    }
}

/// Number of semistandard fillings of a `rows x cols` rectangle with
/// entries in `1..=letters`, by the hook-content formula.
fn hook_content(rows: i64, cols: i64, letters: i64) -> u128 {
    let (mut num, mut den) = (1u128, 1u128);
    for r in 0..rows {
        for c in 0..cols {
            num *= (letters + c - r) as u128;
            den *= ((cols - c - 1) + (rows - r - 1) + 1) as u128;
        }
    }
    assert_eq!(num % den, 0);
    num / den
}

fn criterion_1() -> Check {
    let mut ck = Check::default();
    for (i, k, n) in grid() {
        let t = Instant::now();
        let chi = kr_qcharacter(KrDescriptor::new(i, k), KrMode::Window(n)).unwrap();
        let expected = Monomial::from_factors((1..=k as i64).map(|b| (i, 2 * (b - 1), 1)));
        let doms = chi.dominant_monomials();
        ck.ensure(doms.len() == 1 && doms.get(&expected) == Some(&1), || {
            format!("(i={i},k={k},n={n}): dominant monomials {doms:?}")
        });
        ck.within(t, Duration::from_secs(1), || format!("(i={i},k={k},n={n})"));
    }
    ck
}

fn criterion_2() -> Check {
    let mut ck = Check::default();
    ck.ensure(hook_content(2, 1, 4) == 6 && hook_content(2, 2, 4) == 20, || "oracle sanity".into());
    for (i, k, n) in grid() {
        let t = Instant::now();
        let got = enumerate_window(KrDescriptor::new(i, k), n).len() as u128;
        let want = hook_content(n + 1, k as i64, 2 * n + 2);
        ck.ensure(got == want, || format!("(i={i},k={k},n={n}): {got} tableaux, oracle {want}"));
        ck.within(t, Duration::from_secs(1), || format!("(i={i},k={k},n={n})"));
    }
    ck
}

fn criterion_3() -> Check {
    let mut ck = Check::default();
    let d = CartanDatum::Infinite;
    for r in -10..=10 {
        for s in -10..=10 {
            let lhs = qchar::tableaux::box_monomial(r + 1, s);
            let rhs = qchar::tableaux::box_monomial(r, s).div(&d.a_monomial(r, s + r).unwrap());
            ck.ensure(lhs == rhs, || format!("r={r}, s={s}: {lhs} vs {rhs}"));
        }
    }
    ck
}

const FOLD_DEPTH: i64 = 6;

fn criterion_4() -> Check {
    let mut ck = Check::default();
    for (i, k, n) in grid().filter(|&(_, _, n)| n >= 1) {
        let desc = KrDescriptor::new(i, k);
        let chi = kr_qcharacter(desc, KrMode::Depth(FOLD_DEPTH)).unwrap();
        let f = fold_qcharacter(&chi, n).unwrap();
        let d = f.cartan();
        let top = desc.highest_monomial().fold(n);
        let first = (d.canonical(i), 2 * k as i64 - 1);
        for mono in f.terms().keys().filter(|&x| *x != top) {
            match a_factorization(mono, &top, &d) {
                Some(fac) => ck.ensure(fac.get(&first).is_some_and(|&c| c >= 1) && !mono.is_dominant(), || {
                    format!("(i={i},k={k},n={n}): {mono} factors as {fac:?}")
                }),
                None => ck.failures.push(format!("(i={i},k={k},n={n}): {mono} has no A-factorization")),
            }
        }
    }
    ck
}

fn criterion_5() -> Check {
    let mut ck = Check::default();
    let limit = Duration::from_secs(10);
    for (i, k, n) in grid() {
        let chi = kr_qcharacter(KrDescriptor::new(i, k), KrMode::Window(n)).unwrap();
        for node in chi.cartan().nodes().unwrap() {
            let t = Instant::now();
            let v = verify_ki(&chi, node, None).unwrap();
            ck.ensure(!v.is_fail(), || format!("window (i={i},k={k},n={n}) node {node}: {v:?}"));
            ck.within(t, limit, || format!("window (i={i},k={k},n={n}) node {node}"));
        }
    }
    for (i, k, n) in grid().filter(|&(_, _, n)| (1..=3).contains(&n)) {
        let chi = kr_qcharacter(KrDescriptor::new(i, k), KrMode::Depth(FOLD_DEPTH)).unwrap();
        let f = fold_qcharacter(&chi, n).unwrap();
        let frontier = FOLD_DEPTH - 2 * k as i64;
        for node in 0..=n {
            let t = Instant::now();
            let v = verify_ki(&f, node, Some(frontier)).unwrap();
            ck.ensure(!v.is_fail(), || format!("folded (i={i},k={k},n={n}) node {node}: {}", v.label()));
            ck.within(t, limit, || format!("folded (i={i},k={k},n={n}) node {node}"));
        }
    }
    ck
}

fn criterion_6() -> Check {
    let mut ck = Check::default();
    let chi = kr_qcharacter(KrDescriptor::new(0, 1), KrMode::Depth(4)).unwrap();
    let f = fold_qcharacter(&chi, 3).unwrap();
    let printed = [
        ("Y[0,0]", 1),
        ("Y[0,2]^-1 Y[1,1] Y[3,1]", 1),
        ("Y[3,3]^-1 Y[1,1] Y[2,2]", 1),
        ("Y[1,3]^-1 Y[2,2] Y[3,1]", 1),
        ("Y[2,4]^-1 Y[1,1] Y[1,3]", 1),
        ("Y[1,3]^-1 Y[2,2] Y[3,3]^-1 Y[0,2]", 1),
        ("Y[2,4]^-1 Y[3,1] Y[3,3]", 1),
        ("Y[1,1] Y[1,5]^-1 Y[0,4]", 1),
        ("Y[0,4]^-1 Y[2,2]^2", 1),
        ("Y[2,2] Y[2,4]^-1 Y[0,2]", 2),
        ("Y[3,5]^-1 Y[3,1] Y[0,4]", 1),
    ];
    for (s, c) in printed {
        let mono = m(s);
        let got = f.coeff(&mono);
        ck.ensure(got == c, || format!("{mono}: multiplicity {got}, printed {c}"));
    }
    let lambda: RootContent = (0..=3).map(|j| (j, 1)).collect();
    let top = f.highest().unwrap().clone();
    let in_lambda: BTreeMap<Monomial, i64> = f
        .terms()
        .iter()
        .filter(|(x, _)| qchar::monomial::root_content_of(x, &top, &f.cartan()).as_ref() == Some(&lambda))
        .map(|(x, &c)| (x.clone(), c))
        .collect();
    let expected: BTreeMap<Monomial, i64> =
        [("Y[1,1] Y[1,5]^-1 Y[0,4]", 1), ("Y[2,2] Y[2,4]^-1 Y[0,2]", 2), ("Y[3,5]^-1 Y[3,1] Y[0,4]", 1)]
            .into_iter()
            .map(|(s, c)| (m(s), c))
            .collect();
    ck.ensure(in_lambda == expected, || format!("weight space L0 - a0 - a1 - a2 - a3 holds {in_lambda:?}"));
    let mult = f.weight_multiplicities().unwrap().get(&lambda).copied().unwrap_or(0);
    ck.ensure(mult == 4, || format!("weight multiplicity {mult}, expected 4"));
    ck
}

fn criterion_7() -> Check {
    let mut ck = Check::default();
    for n in [1i64, 2, 3, 4] {
        let (times, want) = if n % 2 == 1 { (1, n + 1) } else { (2, 2 * n + 2 + (n + 1) * (n + 2) / 2) };
        let depth = times * (n + 1);
        for k in [1u32, 2] {
            for i in [0i64, 1] {
                let t = Instant::now();
                let chi = kr_qcharacter(KrDescriptor::new(i, k), KrMode::Depth(depth)).unwrap();
                let f = fold_qcharacter(&chi, n).unwrap();
                let key: RootContent = (0..=n).map(|j| (j, times)).collect();
                let got = f.weight_multiplicities().unwrap().get(&key).copied().unwrap_or(0);
                ck.ensure(got == want, || {
                    format!("n={n} k={k} i={i}: multiplicity at {k}L{} - {times}(a0+..+a{n}) is {got}, expected {want}", i.rem_euclid(n + 1))
                });
                ck.within(t, Duration::from_secs(60), || format!("n={n} k={k}"));
            }
        }
    }
    ck
}

fn criterion_8() -> Check {
    let mut ck = Check::default();
    for (i, k, n) in grid() {
        let desc = KrDescriptor::new(i, k);
        let kr = kr_qcharacter(desc, KrMode::Window(n)).unwrap();
        let full = (n + 1) * (n + 1) * k as i64;
        match fm_generate(&kr.cartan(), &desc.highest_monomial(), full) {
            Ok(g) => ck.ensure(g.terms() == kr.terms(), || {
                format!("(i={i},k={k},n={n}): {} generated vs {} tableau terms", g.len(), kr.len())
            }),
            Err(e) => ck.failures.push(format!("(i={i},k={k},n={n}): {e}")),
        }
    }
    ck
}

fn criterion_9() -> Check {
    let mut ck = Check::default();
    let t = Instant::now();
    let top = m("Y[0,0] Y[2,4]");
    let d = CartanDatum::Infinite;
    let a = |i, s| d.a_monomial(i, s).unwrap();
    let target = top.div(&a(0, 1)).div(&a(-1, 2)).div(&a(-2, 3));
    let w = fm_generate(&CartanDatum::window(-3, 5).unwrap(), &top, 8).unwrap();
    ck.ensure(w.coeff(&target) >= 1, || format!("window generation lacks {target}"));

    let full = fm_generate(&d, &top, 8).unwrap();
    let folded = fold_qcharacter(&full, 3).unwrap();
    let doms = folded.dominant_monomials();
    let expected: BTreeMap<Monomial, i64> =
        [("Y[0,0] Y[2,4]", 1), ("Y[2,2]", 1), ("Y[1,1] Y[1,3]", 1)].into_iter().map(|(s, c)| (m(s), c)).collect();
    ck.ensure(doms == expected, || {
        let shown: Vec<String> = doms.iter().map(|(x, c)| format!("{x}:{c}")).collect();
        format!("folded dominant monomials are {{{}}}", shown.join(", "))
    });
    ck.within(t, Duration::from_secs(60), || "instance".into());
    ck
}

fn criterion_10() -> Check {
    let mut ck = Check::default();
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });

    let strings = prop::collection::vec(-10i64..=10, 0..=8);
    let r = runner.run(&strings, |shifts| {
        let mut part = BTreeMap::new();
        for s in shifts {
            *part.entry(s).or_insert(0) += 1;
        }
        let out = string_decompose(&part);
        let mut union = BTreeMap::new();
        for q in &out {
            for s in q.shifts() {
                *union.entry(s).or_insert(0) += 1;
            }
        }
        prop_assert_eq!(union, part);
        for (x, p) in out.iter().enumerate() {
            for q in &out[x + 1..] {
                prop_assert!(p.in_general_position(q), "{:?} {:?}", p, q);
            }
        }
        Ok(())
    });
    ck.ensure(r.is_ok(), || format!("string decomposition: {r:?}"));

    let factor = (-6i64..=6, -8i64..=8, -3i64..=3);
    let monos = (prop::collection::vec(factor.clone(), 0..6), prop::collection::vec(factor, 0..6), 1i64..=4);
    let r = runner.run(&monos, |(f1, f2, n)| {
        let (m1, m2) = (Monomial::from_factors(f1), Monomial::from_factors(f2));
        prop_assert_eq!(m1.mul(&m2).fold(n), m1.fold(n).mul(&m2.fold(n)));
        prop_assert_eq!(m1.fold(n).weight(), m1.weight().fold(n));
        Ok(())
    });
    ck.ensure(r.is_ok(), || format!("fold laws: {r:?}"));

    let d = CartanDatum::Infinite;
    for (i, k) in NODES.flat_map(|i| KS.map(move |k| (i, k))) {
        let desc = KrDescriptor::new(i, k);
        let chi = kr_qcharacter(desc, KrMode::Depth(5)).unwrap();
        let top = desc.highest_monomial();
        for mono in chi.terms().keys() {
            let Some(fac) = a_factorization(mono, &top, &d) else {
                ck.failures.push(format!("{mono} has no A-factorization"));
                continue;
            };
            let mut w = Weight::zero();
            for (&(j, _), &c) in &fac {
                w = w.plus(&d.simple_root(j).unwrap(), c);
            }
            let count: i64 = fac.values().sum();
            ck.ensure(top.weight().plus(&mono.weight(), -1) == w && Some(count) == depth_of(mono, &top, &d), || {
                format!("(i={i},k={k}): weight/depth mismatch at {mono}")
            });
        }
    }

    for (i, k, n) in grid() {
        let desc = KrDescriptor::new(i, k);
        let window = kr_qcharacter(desc, KrMode::Window(n)).unwrap();
        for depth in 0..=n {
            let deep = kr_qcharacter(desc, KrMode::Depth(depth)).unwrap();
            let mut killed = QCharacter::new(window.cartan());
            for (x, &c) in deep.terms() {
                killed.add_term(x.restrict(i - n, i + n), c).unwrap();
            }
            let cut = window.truncate(depth).unwrap();
            ck.ensure(killed.terms() == cut.terms(), || format!("(i={i},k={k},n={n},D={depth}): truncations differ"));
        }
    }
    ck
}

type Criterion = (u32, &'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "highest-monomial law on the window grid", criterion_1),
        (2, "window tableau counts match the hook-content oracle", criterion_2),
        (3, "box increment identity", criterion_3),
        (4, "folded monomials lie below the first A-inverse", criterion_4),
        (5, "ring membership of window and folded characters", criterion_5),
        (6, "sl4 toroidal fundamental character, first terms", criterion_6),
        (7, "toroidal weight multiplicities at the null-root weights", criterion_7),
        (8, "generated characters equal tableau characters", criterion_8),
        (9, "positivity instance Y[0,0] Y[2,4]", criterion_9),
        (10, "property suites", criterion_10),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let t = Instant::now();
        let ck = run();
        let took = t.elapsed();
        if ck.failures.is_empty() {
            println!("PASS criterion {id:>2}: {name} ({took:.2?})");
        } else {
            println!("FAIL criterion {id:>2}: {name} ({took:.2?})");
            for f in ck.failures.iter().take(8) {
                println!("    {f}");
            }
            if ck.failures.len() > 8 {
                println!("    ... {} more", ck.failures.len() - 8);
            }
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
