use std::collections::BTreeMap;
use std::time::Instant;

use num_integer::Integer;

use crate::coeff::{probe, qt_integer_q, Coefficient, CoefficientMode, Probe, QRational, QTRational};
use crate::operators::{
    action_on_modified_schur, apply_r_v, c_composition, commutator_check, compositional_operator,
    eigenvalue_d_u0, enk_target, expand_modified, modified_schur, raising_plethystic, specialize,
    substituted_form, Engine,
};
use crate::oracles::{self, MultivariatePolynomial, OracleError};
use crate::par;
use crate::parking::{check_catalan, touch_filtered_sum, weighted_sum, Mode, Rectangle};
use crate::plethysm::{pleth_eval_plain, principal_specialization, Alphabet};
use crate::symfunc::{
    compositions, display_in, elementary, partitions, qsym_extract_schur, schur, to_fundamental,
    Basis, Partition, QSymVector, SymFunc,
};

use super::{ArithMode, CliError, Record, Report, Suite, SuiteConfig};

/// The rectangles of the parking-function suites.
const SHUFFLE_TRIPLES: [(i64, i64, i64); 5] = [(1, 2, 3), (1, 3, 2), (1, 3, 4), (2, 1, 2), (2, 2, 1)];
const CATALAN_TRIPLES: [(i64, i64, i64); 8] = [
    (1, 2, 3),
    (1, 3, 2),
    (1, 3, 4),
    (1, 3, 5),
    (1, 4, 3),
    (2, 1, 2),
    (2, 2, 1),
    (2, 2, 3),
];

pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, CliError> {
    let suites: Vec<Suite> = if cfg.suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![cfg.suite]
    };
    let mut records = Vec::new();
    for s in suites {
        records.extend(run_one(cfg, s)?);
    }
    Ok(Report::new(cfg.clone(), records))
}

fn run_one(cfg: &SuiteConfig, suite: Suite) -> Result<Vec<Record>, CliError> {
    let probe = cfg.mode == ArithMode::Probe;
    match suite {
        Suite::Commutator if probe => commutator::<Probe>(cfg),
        Suite::Commutator => commutator::<QRational>(cfg),
        Suite::QCorollaries if probe => q_corollaries::<Probe>(cfg),
        Suite::QCorollaries => q_corollaries::<QRational>(cfg),
        Suite::ModifiedSchur if probe => modified_schur_suite::<Probe>(cfg),
        Suite::ModifiedSchur => modified_schur_suite::<QRational>(cfg),
        Suite::Positivity => positivity(cfg),
        Suite::Catalan324 => catalan(cfg),
        Suite::Shuffle322 => shuffle(cfg, Shuffle::Area),
        Suite::Shuffle323 => shuffle(cfg, Shuffle::Return),
        Suite::Shuffle316 => shuffle(cfg, Shuffle::Coarea),
        Suite::Touch37 => touch(cfg),
        Suite::RvOracle => rv_oracle(cfg),
        Suite::Identity425 => hook_products(cfg),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

struct Check {
    identity: &'static str,
    params: String,
    lhs: String,
    rhs: String,
    equal: bool,
    note: Option<String>,
}

impl Check {
    fn new(identity: &'static str, params: impl Into<String>, lhs: String, rhs: String, equal: bool) -> Self {
        Self {
            identity,
            params: params.into(),
            lhs,
            rhs,
            equal,
            note: None,
        }
    }

    fn of<T: PartialEq>(identity: &'static str, params: impl Into<String>, lhs: &T, rhs: &T, show: impl Fn(&T) -> String) -> Self {
        Self::new(identity, params, show(lhs), show(rhs), lhs == rhs)
    }
}

/// Evaluate `f` on every item, in parallel, keeping item order. In probe
/// mode each worker fixes the seeded evaluation point first.
fn run_items<C: Coefficient, T: Sync>(
    cfg: &SuiteConfig,
    list: &[T],
    f: impl Fn(&T) -> Result<Vec<Check>, CliError> + Sync + Send,
) -> Result<Vec<Record>, CliError> {
    let mode = C::MODE;
    let results: Vec<Result<Vec<Record>, CliError>> = par::map(list, |item| {
        let _guard = (mode == CoefficientMode::Probe).then(|| probe::enter(cfg.seed.unwrap_or(0), true));
        let start = Instant::now();
        let checks = f(item)?;
        let ms = start.elapsed().as_millis() as u64;
        Ok(checks
            .into_iter()
            .map(|c| Record {
                identity: c.identity.to_string(),
                params: c.params,
                lhs: c.lhs,
                rhs: c.rhs,
                equal: c.equal,
                mode: mode.to_string(),
                elapsed_ms: cfg.timings.then_some(ms),
                note: c.note,
            })
            .collect::<Vec<_>>())
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// The configured `(k, m, n)`: exactly the given triple when all three are
/// set, otherwise `defaults` filtered by whichever are set.
fn triples(cfg: &SuiteConfig, defaults: &[(i64, i64, i64)]) -> Vec<(i64, i64, i64)> {
    if let (Some(k), Some(m), Some(n)) = (cfg.k, cfg.m, cfg.n) {
        return vec![(k, m, n)];
    }
    defaults
        .iter()
        .copied()
        .filter(|&(k, m, n)| {
            cfg.k.is_none_or(|x| x == k) && cfg.m.is_none_or(|x| x == m) && cfg.n.is_none_or(|x| x == n)
        })
        .collect()
}

fn check_coprime(m: i64, n: i64) -> Result<(), CliError> {
    if m < 1 || n < 1 || m.gcd(&n) != 1 {
        return Err(CliError::Usage(format!("({m},{n}) must be a coprime pair of positive integers")));
    }
    Ok(())
}

/// `1` or `s` followed by single-digit parts.
fn named_input<C: Coefficient>(name: &str) -> SymFunc<C> {
    match name.strip_prefix('s') {
        Some(parts) => schur(&Partition::new(
            parts.bytes().map(|b| (b - b'0') as u32).collect(),
        )),
        None => SymFunc::one(),
    }
}

fn input_degree(name: &str) -> u32 {
    name.strip_prefix('s')
        .map_or(0, |p| p.bytes().map(|b| (b - b'0') as u32).sum())
}

fn sign(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn qpow<C: Coefficient>(e: i64) -> Result<C, CliError> {
    Ok(C::from_qt(&QTRational::monomial(1, e, 0))?)
}

fn qint<C: Coefficient>(s: i64) -> Result<C, CliError> {
    Ok(C::from_qt(&qt_integer_q(s)?)?)
}

fn schur_str<C: Coefficient>(f: &SymFunc<C>) -> String {
    display_in(f, Basis::Schur)
}

fn combo_str<C: Coefficient>(m: &BTreeMap<Partition, C>) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .rev()
        .map(|(p, c)| {
            if c.is_one() {
                format!("s{p}")
            } else {
                format!("({c})*s{p}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Schur form when the expansion is symmetric, fundamental form otherwise.
fn qsym_str(v: &QSymVector<QTRational>) -> String {
    if let Ok(m) = qsym_extract_schur(v) {
        return combo_str(&m);
    }
    v.terms()
        .map(|(a, c)| format!("({c})*F{a}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn poly_str<C: Coefficient>(p: &MultivariatePolynomial<C>) -> String {
    p.to_string()
}

fn commutator<C: Coefficient>(cfg: &SuiteConfig) -> Result<Vec<Record>, CliError> {
    let max = cfg.max_degree.unwrap_or(2);
    let mut list = Vec::new();
    for a in 1..=2 {
        for b in 0..=3 {
            for c in 1..=2 {
                for d in 0..=3 {
                    if cfg.m.is_some_and(|m| m != a + c) || cfg.n.is_some_and(|n| n != b + d) {
                        continue;
                    }
                    for f in ["1", "s1", "s2", "s11"] {
                        if input_degree(f) <= max {
                            list.push((a, b, c, d, f));
                        }
                    }
                }
            }
        }
    }
    let engine = Engine::<C>::new(cfg.caps.degree);
    run_items::<C, _>(cfg, &list, |&(a, b, c, d, f)| {
        let cmp = commutator_check(&engine, (a, b), (c, d), &named_input::<C>(f))?;
        Ok(vec![Check::of(
            "commutator-d",
            format!("a={a} b={b} c={c} d={d} F={f}"),
            &cmp.lhs,
            &cmp.rhs,
            schur_str,
        )])
    })
}

fn q_corollaries<C: Coefficient>(cfg: &SuiteConfig) -> Result<Vec<Record>, CliError> {
    let max = cfg.max_degree.unwrap_or(1);
    let mut defaults = Vec::new();
    for m in 1..=6i64 {
        for n in 1..=6i64 {
            if m + n > 7 || m.gcd(&n) != 1 {
                continue;
            }
            for k in 1..=3 {
                if k * (m + n) <= 10 {
                    defaults.push((k, m, n));
                }
            }
        }
    }
    let mut list = Vec::new();
    for (k, m, n) in triples(cfg, &defaults) {
        check_coprime(m, n)?;
        for f in ["1", "s1", "s2"] {
            if input_degree(f) <= max {
                list.push((k, m, n, f));
            }
        }
    }
    let eng = Engine::<C>::new(cfg.caps.degree);
    let qt = Engine::<QTRational>::new(cfg.caps.degree);
    run_items::<C, _>(cfg, &list, |&(k, m, n, f)| {
        let (km, kn) = (k * m, k * n);
        let input = named_input::<QTRational>(f);
        // exact: general (q,t) then specialize; probe: directly at t = 1/q
        let qf: SymFunc<C> = if C::MODE == CoefficientMode::ExactTInverse {
            specialize(&qt.q(km, kn, &input)?)?
        } else {
            eng.q(km, kn, &specialize(&input)?)?
        };
        let df = eng.d_uv(km, kn, &specialize(&input)?)?;
        let params = format!("k={k} m={m} n={n} F={f}");
        let ratio = qint::<C>(k)?.try_div(&qint::<C>(km)?)?;
        let mut out = Vec::new();
        if k == 1 {
            let c = qpow::<C>((n + 1) * (m - 1) / 2)?.try_div(&qint::<C>(m)?)?;
            out.push(Check::of("q-equals-d", params.clone(), &qf, &df.scale(&c), schur_str));
        }
        let e = ((km - 1) * (kn + 1) - (k - 1)) / 2;
        let rhs = df.scale(&qpow::<C>(e)?.mul(&ratio));
        out.push(Check::of("q-equals-d-scaled", params.clone(), &qf, &rhs, schur_str));
        let norm = ((km - 1) * (kn - 1) + (k - 1)) / 2;
        let lhs = qf.scale(&qpow::<C>(norm)?);
        let rhs = df.scale(&qpow::<C>((km - 1) * kn)?.mul(&ratio));
        out.push(Check::of("q-equals-d-normalized", params.clone(), &lhs, &rhs, schur_str));
        if f == "1" {
            let signed = qf.scale(&C::from_int(sign(kn)));
            let params = format!("k={k} m={m} n={n} F=(-1)^{kn}");
            let lhs = signed.scale(&qpow::<C>(norm)?);
            let rhs = enk_target(m, n, k)?.to_symfunc::<C>()?;
            out.push(Check::of("q-sign-enk", params.clone(), &lhs, &rhs, schur_str));
            if k == 1 {
                let lhs = signed.scale(&qpow::<C>((m - 1) * (n - 1) / 2)?);
                let e_n: SymFunc<C> = elementary(n);
                let rhs = pleth_eval_plain(&e_n, &Alphabet::scaled_x(qt_integer_q(m)?))?
                    .scale(&C::one().try_div(&qint::<C>(m)?)?);
                out.push(Check::of("q-sign-e-plethysm", params, &lhs, &rhs, schur_str));
            }
        }
        Ok(out)
    })
}

enum PositivityItem {
    Rectangle(i64, i64, i64),
    Principal(Partition, i64),
}

fn positivity(cfg: &SuiteConfig) -> Result<Vec<Record>, CliError> {
    let mut defaults = Vec::new();
    for k in 1..=6i64 {
        for m in 1..=6i64 {
            for n in 1..=6i64 {
                if k * m <= 6 && k * n <= 6 && m.gcd(&n) == 1 {
                    defaults.push((k, m, n));
                }
            }
        }
    }
    let mut list: Vec<PositivityItem> = Vec::new();
    for (k, m, n) in triples(cfg, &defaults) {
        check_coprime(m, n)?;
        list.push(PositivityItem::Rectangle(k, m, n));
    }
    let max = cfg.max_degree.unwrap_or(6);
    for size in 0..=max {
        for lambda in partitions(size) {
            for m in 1..=5 {
                if cfg.m.is_some_and(|x| x != m) || lambda.len() as i64 > m {
                    continue;
                }
                list.push(PositivityItem::Principal(lambda.clone(), m));
            }
        }
    }
    run_items::<QRational, _>(cfg, &list, |item| match item {
        PositivityItem::Rectangle(k, m, n) => {
            let (k, m, n) = (*k, *m, *n);
            let kq = crate::coeff::q_integer(k)?;
            let kmq = crate::coeff::q_integer(k * m)?;
            let mut out = Vec::new();
            for lambda in partitions((k * n) as u32) {
                let s: SymFunc<QRational> = schur(&lambda);
                let ps = principal_specialization(&s, k * m)?;
                let poly = ps
                    .as_polynomial()
                    .cloned()
                    .ok_or_else(|| CliError::Failure(format!("s{lambda}[[{}]_q] is not a polynomial", k * m)))?;
                let (_, rem) = kq.mul(&poly).div_rem(&kmq)?;
                out.push(Check::new(
                    "enk-divisibility",
                    format!("k={k} m={m} n={n} lambda={lambda}"),
                    rem.to_string(),
                    "0".into(),
                    rem.is_zero(),
                ));
            }
            let params = format!("k={k} m={m} n={n}");
            out.push(match enk_target(m, n, k) {
                Ok(t) => Check::new(
                    "enk-schur-positive",
                    params,
                    combo_str(&t.schur.iter().map(|(l, c)| (l.clone(), QRational::from_poly(c.clone()))).collect()),
                    "Schur coefficients in N[q]".into(),
                    t.nonnegative(),
                ),
                Err(e) => Check::new("enk-schur-positive", params, e.to_string(), "Schur coefficients in N[q]".into(), false),
            });
            Ok(out)
        }
        PositivityItem::Principal(lambda, m) => {
            let s: SymFunc<QRational> = schur(lambda);
            let ps = principal_specialization(&s, *m)?;
            let (text, ok) = match ps.as_polynomial() {
                Some(p) => {
                    let r = p.unimodality_report();
                    (p.to_string(), r.nonnegative && r.palindromic && r.unimodal)
                }
                None => (ps.to_string(), false),
            };
            Ok(vec![Check::new(
                "principal-unimodal",
                format!("lambda={lambda} m={m}"),
                text,
                "palindromic, unimodal, nonnegative".into(),
                ok,
            )])
        }
    })
}

fn catalan(cfg: &SuiteConfig) -> Result<Vec<Record>, CliError> {
    let list = triples(cfg, &CATALAN_TRIPLES);
    run_items::<QRational, _>(cfg, &list, |&(k, m, n)| {
        Rectangle::new(k, m, n)?.check_cap(cfg.caps.paths)?;
        let cmp = check_catalan(k, m, n)?;
        Ok(vec![Check::of(
            "catalan-ret",
            format!("k={k} m={m} n={n}"),
            &cmp.lhs,
            &cmp.rhs,
            |p| p.to_string(),
        )])
    })
}

#[derive(Clone, Copy)]
enum Shuffle {
    Area,
    Return,
    Coarea,
}

fn shuffle(cfg: &SuiteConfig, which: Shuffle) -> Result<Vec<Record>, CliError> {
    let list = triples(cfg, &SHUFFLE_TRIPLES);
    let eng = Engine::<QTRational>::new(cfg.caps.degree);
    run_items::<QTRational, _>(cfg, &list, |&(k, m, n)| {
        check_coprime(m, n)?;
        Rectangle::new(k, m, n)?.check_cap(cfg.caps.paths)?;
        let (identity, operator_side, mode) = match which {
            Shuffle::Area => {
                let op = compositional_operator(&elementary::<QTRational>(k), m, n, k as u32)?;
                let start = SymFunc::constant(QTRational::from_int(sign(k * (n + 1))));
                ("shuffle-area", op.apply(&eng, &start)?, Mode::Area)
            }
            Shuffle::Return => {
                let start = SymFunc::constant(QTRational::from_int(sign(k * n)));
                ("shuffle-return", eng.q(k * m, k * n, &start)?, Mode::Return)
            }
            Shuffle::Coarea => (
                "shuffle-coarea",
                enk_target(m, n, k)?.to_symfunc::<QTRational>()?,
                Mode::Coarea,
            ),
        };
        let sum = weighted_sum(k, m, n, mode, cfg.caps.paths)?;
        let lhs = to_fundamental(&operator_side);
        Ok(vec![Check::new(
            identity,
            format!("k={k} m={m} n={n}"),
            schur_str(&operator_side),
            qsym_str(&sum),
            lhs == sum,
        )])
    })
}

fn touch(cfg: &SuiteConfig) -> Result<Vec<Record>, CliError> {
    let mut list = Vec::new();
    for (k, m, n) in triples(cfg, &SHUFFLE_TRIPLES) {
        check_coprime(m, n)?;
        Rectangle::new(k, m, n)?.check_cap(cfg.caps.paths)?;
        for p in compositions(k as u32) {
            list.push((k, m, n, p));
        }
    }
    let eng = Engine::<QTRational>::new(cfg.caps.degree);
    run_items::<QTRational, _>(cfg, &list, |(k, m, n, p)| {
        let (k, m, n) = (*k, *m, *n);
        let f = c_composition(&eng, p)?;
        let op = compositional_operator(&f, m, n, k as u32)?;
        let operator_side = op.apply(&eng, &SymFunc::constant(QTRational::from_int(sign(k * (n + 1)))))?;
        let sum = touch_filtered_sum(k, m, n, p, cfg.caps.paths)?;
        let mut check = Check::new(
            "shuffle-touch",
            format!("k={k} m={m} n={n} touch={p}"),
            schur_str(&operator_side),
            qsym_str(&sum),
            to_fundamental(&operator_side) == sum,
        );
        check.note = Some("parking functions weighted by t^area q^dinv, not t^area q^area".into());
        Ok(vec![check])
    })
}

enum RvItem {
    Raising { n: usize, v: i64, mu: Partition },
    PartialFraction { f: Vec<i64>, v: i64, n: usize },
}

fn rv_oracle(cfg: &SuiteConfig) -> Result<Vec<Record>, CliError> {
    let max = cfg.max_degree.unwrap_or(4);
    let mut list = Vec::new();
    for n in 1..=4usize {
        if cfg.n.is_some_and(|x| x != n as i64) {
            continue;
        }
        for v in 0..=3 {
            for size in 0..=max {
                for mu in partitions(size).into_iter().filter(|mu| mu.len() <= n) {
                    list.push(RvItem::Raising { n, v, mu });
                }
            }
        }
    }
    let polys: [&[i64]; 4] = [&[1], &[0, 1], &[2, -1, 0, 3], &[1, 1, 1, 1]];
    for n in 1..=3usize {
        for v in 0..=3 {
            for f in polys {
                list.push(RvItem::PartialFraction { f: f.to_vec(), v, n });
            }
        }
    }
    type C = QTRational;
    run_items::<C, _>(cfg, &list, |item| match item {
        RvItem::Raising { n, v, mu } => {
            let (n, v) = (*n, *v);
            let params = format!("n={n} v={v} mu={mu}");
            let image = apply_r_v::<C>(v, mu, n)?;
            let mut module_side = MultivariatePolynomial::zero(n);
            for (lambda, c) in &image {
                module_side = module_side.add(&oracles::schur_bialternant::<C>(lambda, n)?.scale(c));
            }
            let input = oracles::schur_bialternant::<C>(mu, n)?;
            let check = match oracles::rv_vandermonde(v as u32, &input, n) {
                Ok(oracle) => Check::of("raising-vandermonde", params.clone(), &module_side, &oracle, poly_str),
                Err(e @ OracleError::Disagreement(_)) | Err(e @ OracleError::NotDivisible(..)) => {
                    Check::new("raising-vandermonde", params.clone(), poly_str(&module_side), e.to_string(), false)
                }
                Err(e) => return Err(e.into()),
            };
            let pleth = raising_plethystic::<C>(&schur(mu), v, n)?;
            Ok(vec![
                check,
                Check::of("raising-plethystic", params, &pleth, &image, combo_str),
            ])
        }
        RvItem::PartialFraction { f, v, n } => {
            let coeffs: Vec<C> = f.iter().map(|&x| C::from_int(x)).collect();
            let r = oracles::check_partial_fractions(&coeffs, *v, *n)?;
            Ok(vec![Check::of(
                "partial-fractions",
                format!("F={f:?} v={v} n={n}"),
                &r.lhs,
                &r.rhs,
                poly_str,
            )])
        }
    })
}

enum ModifiedItem {
    Eigen(Partition, i64),
    Action(Partition, i64, i64),
    Substituted(Partition, i64, i64),
    ConstantTerm(Partition),
}

fn modified_schur_suite<C: Coefficient>(cfg: &SuiteConfig) -> Result<Vec<Record>, CliError> {
    let max = cfg.max_degree.unwrap_or(6);
    let mut list = Vec::new();
    for size in 0..=max.min(4) {
        for mu in partitions(size) {
            for u in 1..=3 {
                list.push(ModifiedItem::Eigen(mu.clone(), u));
            }
            list.push(ModifiedItem::ConstantTerm(mu));
        }
    }
    for size in 0..max {
        for mu in partitions(size) {
            for v in 1..=(max - size) as i64 {
                for u in 1..=2 {
                    list.push(ModifiedItem::Action(mu.clone(), u, v));
                }
            }
        }
    }
    for size in 0..=2 {
        for mu in partitions(size) {
            for u in 1..=2 {
                for v in 1..=2 {
                    list.push(ModifiedItem::Substituted(mu.clone(), u, v));
                }
            }
        }
    }
    let eng = Engine::<C>::new(cfg.caps.degree);
    run_items::<C, _>(cfg, &list, |item| match item {
        ModifiedItem::Eigen(mu, u) => {
            let ms = modified_schur::<C>(mu)?;
            let lhs = eng.d_uv(*u, 0, &ms)?;
            let rhs = ms.scale(&eigenvalue_d_u0::<C>(mu, *u)?);
            Ok(vec![Check::of("d-u0-eigenvalue", format!("mu={mu} u={u}"), &lhs, &rhs, schur_str)])
        }
        ModifiedItem::Action(mu, u, v) => {
            let ms = modified_schur::<C>(mu)?;
            let lhs = eng.d_uv(*u, *v, &ms)?;
            let rhs = expand_modified(&action_on_modified_schur::<C>(mu, *u, *v)?)?;
            Ok(vec![Check::of(
                "d-uv-modified-schur",
                format!("mu={mu} u={u} v={v}"),
                &lhs,
                &rhs,
                schur_str,
            )])
        }
        ModifiedItem::Substituted(mu, u, v) => {
            let (lhs, rhs) = substituted_form::<C>(mu, *u, *v)?;
            Ok(vec![Check::of(
                "u-fold-substitution",
                format!("mu={mu} u={u} v={v}"),
                &lhs,
                &rhs,
                combo_str,
            )])
        }
        ModifiedItem::ConstantTerm(mu) => {
            let r = oracles::check_constant_term::<C>(mu)?;
            Ok(vec![Check::of(
                "constant-term-eigenvalue",
                format!("mu={mu} n={}", mu.size() + 2),
                &r.lhs,
                &r.rhs,
                poly_str,
            )])
        }
    })
}

fn hook_products(cfg: &SuiteConfig) -> Result<Vec<Record>, CliError> {
    let max = cfg.max_degree.unwrap_or(4);
    let mut list = Vec::new();
    for size in 1..=max {
        for lambda in partitions(size) {
            for mu in partitions(size) {
                list.push((lambda.clone(), mu));
            }
        }
    }
    run_items::<QTRational, _>(cfg, &list, |(lambda, mu)| {
        let r = oracles::check_hook_products::<QTRational>(lambda, mu)?;
        Ok(vec![Check::of(
            "hook-scalar-products",
            format!("lambda={lambda} mu={mu}"),
            &r.lhs,
            &r.rhs,
            |c| c.to_string(),
        )])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_filters() {
        let mut cfg = SuiteConfig::new(Suite::Shuffle322);
        assert_eq!(triples(&cfg, &SHUFFLE_TRIPLES).len(), 5);
        cfg.k = Some(2);
        assert_eq!(triples(&cfg, &SHUFFLE_TRIPLES), vec![(2, 1, 2), (2, 2, 1)]);
        cfg.m = Some(5);
        cfg.n = Some(7);
        assert_eq!(triples(&cfg, &SHUFFLE_TRIPLES), vec![(2, 5, 7)]);
    }

    #[test]
    fn inputs_by_name() {
        assert_eq!(named_input::<QTRational>("1"), SymFunc::one());
        assert_eq!(named_input::<QTRational>("s21"), schur(&Partition::new(vec![2, 1])));
        assert_eq!(input_degree("s11"), 2);
    }

    #[test]
    fn schur_rendering() {
        let mut m = BTreeMap::new();
        m.insert(Partition::new(vec![1, 1]), QTRational::one());
        m.insert(Partition::new(vec![2]), QTRational::q());
        assert_eq!(combo_str(&m), "(q)*s[2] + s[1,1]");
        assert_eq!(combo_str::<QTRational>(&BTreeMap::new()), "0");
    }
}
