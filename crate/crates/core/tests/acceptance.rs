//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;

use qtsym::cli::{run_suite, ArithMode, Report, Suite, SuiteConfig};
use qtsym::coeff::{q_binomial, q_integer, QPolynomial, QRational, QTRational};
use qtsym::operators::{
    c_composition, eigenvalue_d_u0, enk_target, modified_schur, multiplier_q0k,
    multiplier_q0k_plethystic, specialize, Engine,
};
use qtsym::oracles::{check_hook_products, check_constant_term};
use qtsym::parking::{check_catalan, enumerate_paths, rank, statistics, ParkingFunction};
use qtsym::symfunc::{compositions, elementary, partitions, schur, Composition, Partition, SymFunc};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(suite: Suite, tweak: impl FnOnce(&mut SuiteConfig)) -> Result<Report, String> {
    let mut cfg = SuiteConfig::new(suite);
    tweak(&mut cfg);
    let report = run_suite(&cfg).map_err(|e| format!("{suite:?}: {e}"))?;
    if let Some(r) = report.records.iter().find(|r| !r.equal) {
        return Err(format!("{} [{}]: {} != {}", r.identity, r.params, r.lhs, r.rhs));
    }
    ensure(!report.records.is_empty(), || format!("{suite:?} produced no records"))?;
    Ok(report)
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.1?}, limit {limit:?}"))
}

fn catalan() -> Outcome {
    let start = Instant::now();
    let report = run(Suite::Catalan324, |_| {})?;
    within(start, Duration::from_secs(10), "Catalan suite")?;
    ensure(report.records.len() == 8, || format!("{} records", report.records.len()))?;
    let spot = check_catalan(1, 2, 3).map_err(|e| e.to_string())?;
    ensure(spot.lhs == QPolynomial::from_ints(0, &[1, 0, 1]), || format!("(1,2,3) gave {}", spot.lhs))?;
    // closed form computed here, independently of the library's own
    for (k, m, n) in [(1, 2, 3), (2, 2, 3), (1, 4, 3)] {
        let formula = q_integer(k)
            .unwrap()
            .mul(&q_binomial(k * n + k * m - 1, k * n))
            .exact_quotient(&q_integer(k * m).unwrap())
            .unwrap();
        let c = check_catalan(k, m, n).map_err(|e| e.to_string())?;
        ensure(c.lhs == formula, || format!("({k},{m},{n}): {} vs {formula}", c.lhs))?;
    }
    Ok("8 rectangles, (1,2,3) -> 1 + q^2".into())
}

fn commutator() -> Outcome {
    let start = Instant::now();
    let report = run(Suite::Commutator, |_| {})?;
    within(start, Duration::from_secs(60), "commutator suite")?;
    ensure(report.records.len() == 256, || format!("{} records", report.records.len()))?;
    Ok("256 (a,b,c,d,F) cases".into())
}

fn corollaries() -> Outcome {
    let report = run(Suite::QCorollaries, |_| {})?;
    let enk = report.records.iter().filter(|r| r.identity == "q-sign-enk").count();
    ensure(enk > 0, || "no sign/enk records".into())?;
    run(Suite::QCorollaries, |c| {
        c.mode = ArithMode::Probe;
        c.seed = Some(5);
    })?;
    // the direct t = 1/q engine agrees with general (q,t) then specialize
    let qt = Engine::<QTRational>::default();
    let q = Engine::<QRational>::default();
    for (km, kn) in [(2, 3), (3, 2), (2, 2), (2, 4), (3, 3), (1, 4)] {
        for f in [SymFunc::<QTRational>::one(), elementary(1)] {
            let general: SymFunc<QRational> = specialize(&qt.q(km, kn, &f).unwrap()).unwrap();
            let direct = q.q(km, kn, &specialize(&f).unwrap()).unwrap();
            ensure(general == direct, || format!("Q_({km},{kn}) differs between engines"))?;
        }
    }
    Ok(format!("{} records, {enk} enk targets, probe agrees", report.records.len()))
}

fn positivity() -> Outcome {
    let report = run(Suite::Positivity, |_| {})?;
    let target = enk_target(2, 3, 1).map_err(|e| e.to_string())?;
    let expected: BTreeMap<Partition, QPolynomial> = [
        (part(&[1, 1, 1]), QPolynomial::from_ints(0, &[1, 0, 1])),
        (part(&[2, 1]), QPolynomial::from_ints(1, &[1])),
    ]
    .into_iter()
    .collect();
    ensure(target.schur == expected, || format!("enk_target(2,3,1) = {:?}", target.schur))?;
    Ok(format!("{} records", report.records.len()))
}

fn modified() -> Outcome {
    let report = run(Suite::ModifiedSchur, |_| {})?;
    let one = part(&[1]);
    let ev = eigenvalue_d_u0::<QRational>(&one, 1).map_err(|e| e.to_string())?;
    let expected = QRational::q().add(&QRational::one().shift(-1)).sub(&QRational::one());
    ensure(ev == expected, || format!("eigenvalue {ev}"))?;
    let eng = Engine::<QRational>::default();
    let ms = modified_schur::<QRational>(&one).unwrap();
    ensure(eng.d_uv(1, 0, &ms).unwrap() == ms.scale(&expected), || "D_(1,0) on s_1[X/(1-q)]".into())?;
    Ok(format!("{} records, eigenvalue q + q^-1 - 1", report.records.len()))
}

fn section_four() -> Outcome {
    let rv = run(Suite::RvOracle, |_| {})?;
    let hooks = run(Suite::Identity425, |_| {})?;
    for size in 0..=4 {
        for mu in partitions(size) {
            let r = check_constant_term::<QTRational>(&mu).map_err(|e| e.to_string())?;
            ensure(r.holds(), || format!("constant term at {mu}"))?;
        }
    }
    let at = |p: &[u32]| check_hook_products::<QTRational>(&part(p), &part(p)).unwrap().lhs;
    ensure(at(&[1]) == QTRational::from_int(-1), || format!("(1): {}", at(&[1])))?;
    let minus_one_q = QTRational::from_int(-1).sub(&QTRational::q());
    ensure(at(&[2]) == minus_one_q, || format!("(2): {}", at(&[2])))?;
    Ok(format!("{} raising records, {} hook pairs", rv.records.len(), hooks.records.len()))
}

fn hook_identities() -> Outcome {
    type F = SymFunc<QTRational>;
    let eng = Engine::<QTRational>::default();
    let after = |d: i64, p: &Composition| eng.c_a(d, &c_composition(&eng, p).unwrap()).unwrap();
    for k in 1..=5i64 {
        let mut sum = F::zero();
        for p in compositions(k as u32) {
            sum.add_assign(&c_composition(&eng, &p).unwrap());
        }
        ensure(sum == elementary(k), || format!("sum of C_p 1 at k={k}"))?;
        let hook = multiplier_q0k::<QTRational>(k).unwrap();
        ensure(hook == multiplier_q0k_plethystic(k).unwrap(), || format!("multiplier hook at k={k}"))?;
        for a in 1..=k {
            let mut lhs = F::zero();
            for d in a..=k {
                for p in compositions((k - d) as u32) {
                    lhs.add_assign(&after(d, &p));
                }
            }
            let c = QTRational::from_int(-1).try_div(&QTRational::q()).unwrap().pow(a as i32 - 1).unwrap();
            let rhs = schur::<QTRational>(&Partition::hook(a as u32, (k - a) as u32)).scale(&c);
            ensure(lhs == rhs, || format!("hook formula k={k} a={a}"))?;
        }
        let mut weighted = F::zero();
        for d in 1..=k {
            let mut t_int = QTRational::zero();
            for j in 0..d {
                t_int = t_int.add(&QTRational::monomial(1, 0, -j));
            }
            for p in compositions((k - d) as u32) {
                weighted.add_assign(&after(d, &p).scale(&t_int));
            }
        }
        let sign = QTRational::from_int(if k % 2 == 0 { 1 } else { -1 });
        ensure(hook.scale(&sign) == weighted, || format!("multiplier by C_d C_p at k={k}"))?;
    }
    let qt_inv = QTRational::monomial(1, -1, -1);
    let k2 = schur::<QTRational>(&part(&[1, 1])).sub(&schur(&part(&[2])).scale(&qt_inv));
    ensure(multiplier_q0k::<QTRational>(2).unwrap() == k2, || "multiplier at k=2".into())?;
    Ok("k <= 5".into())
}

fn conjecture_sums() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for suite in [Suite::Shuffle322, Suite::Shuffle323, Suite::Shuffle316, Suite::Touch37] {
        total += run(suite, |_| {})?.records.len();
    }
    for k in [2, 3] {
        for suite in [Suite::Shuffle322, Suite::Shuffle323] {
            total += run(suite, |c| {
                c.k = Some(k);
                c.m = Some(1);
                c.n = Some(1);
            })?
            .records
            .len();
        }
    }
    within(start, Duration::from_secs(600), "conjecture sums")?;
    Ok(format!("{total} conjecture checks, none failed"))
}

/// The (6,9) parking function named by its car ranks.
fn worked_example() -> Outcome {
    let (k, m, n) = (3, 2, 3);
    let ranks: [i64; 9] = [9, 0, 6, 13, 2, 8, 14, 15, 12];
    let mut sorted = ranks.to_vec();
    sorted.sort();
    let mut found = Vec::new();
    for path in enumerate_paths(k, m, n).map_err(|e| e.to_string())? {
        let row_ranks: Vec<i64> = path
            .columns()
            .iter()
            .enumerate()
            .map(|(y, &x)| rank(k, m, n, x, y as i64))
            .collect();
        let mut rs = row_ranks.clone();
        rs.sort();
        if rs != sorted {
            continue;
        }
        let cars: Vec<u32> = row_ranks
            .iter()
            .map(|r| ranks.iter().position(|x| x == r).unwrap() as u32 + 1)
            .collect();
        if let Some(pf) = ParkingFunction::new(path, cars) {
            found.push(pf);
        }
    }
    ensure(found.len() == 1, || format!("{} parking functions match the ranks", found.len()))?;
    ensure(found[0].path().columns() == [0, 0, 0, 1, 1, 2, 4, 4, 4], || format!("path {}", found[0].path().word()))?;
    ensure(found[0].cars() == [2, 3, 9, 1, 8, 4, 5, 6, 7], || format!("cars {:?}", found[0].cars()))?;
    let s = statistics(&found[0]);
    ensure(s.area == 5 && s.tdinv == 9 && s.dinv == 5, || {
        format!("area={} tdinv={} dinv={}", s.area, s.tdinv, s.dinv)
    })?;
    ensure(s.word == [8, 7, 4, 9, 1, 6, 3, 5, 2], || format!("word {:?}", s.word))?;
    Ok("area=5 tdinv=9 dinv=5 word=(8,7,4,9,1,6,3,5,2)".into())
}

fn property_suites() -> Outcome {
    replay(partition(0, 8), 64, basis_round_trip)?;
    for n in 0..=8 {
        character_orthogonality(n).map_err(|e| e.to_string())?;
    }
    replay((partition(0, 6), partition(0, 6)), 64, |(l, m)| hall_orthonormal_schur(l, m))?;
    replay((symfunc(3), symfunc(3), alphabet()), 32, |(f, g, a)| plethysm_homomorphism(f, g, a))?;
    replay(prop::collection::vec(0u32..=2, 1..=4), 64, straightening_matches_alternant)?;
    for (m, n) in coprime_rectangles(12) {
        cyclic_lemma_count(m, n).map_err(|e| e.to_string())?;
    }
    for k in 1..=3 {
        for (m, n) in coprime_rectangles(8) {
            if k * (m + n) <= 8 {
                area_coarea_constant(k, m, n).map_err(|e| e.to_string())?;
            }
        }
    }
    Ok("bases, Hall, plethysm, straightening, cyclic lemma, area+coarea".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Catalan identity", catalan),
        ("commutator theorem", commutator),
        ("Q versus D corollaries", corollaries),
        ("positivity", positivity),
        ("modified Schur eigen-operators", modified),
        ("raising operator suite", section_four),
        ("creation operator hook identities", hook_identities),
        ("conjectured shuffle sums", conjecture_sums),
        ("worked (6,9) example", worked_example),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail} [{took:.2?}]", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {e} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
