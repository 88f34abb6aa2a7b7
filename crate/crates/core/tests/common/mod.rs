//! Property checks shared by the property tests and the acceptance run.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::select;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use qtsym::coeff::{q_binomial, QPolynomial, QRational, QTPolynomial, QTRational, Rational};
use qtsym::oracles::{alternant, expand_in_variables, schur_bialternant, MultivariatePolynomial};
use qtsym::parking::{enumerate_parking_functions, enumerate_paths, statistics};
use qtsym::plethysm::{pleth_eval_plain, Alphabet};
use qtsym::symfunc::{
    character, partitions, schur, skew_schur, straighten, to_fundamental, Basis, Partition,
    SymFunc,
};

pub type F = SymFunc<QTRational>;

pub fn partition(min: u32, max: u32) -> impl Strategy<Value = Partition> {
    (min..=max).prop_flat_map(|n| select(partitions(n)))
}

pub fn partition_of(n: u32) -> impl Strategy<Value = Partition> {
    select(partitions(n))
}

/// Small `(q, t)` rational functions that stay finite at `t = 1/q`.
pub fn qt_rational() -> impl Strategy<Value = QTRational> {
    let dens = vec![(0, 0, 0), (1, 1, 0), (1, 0, 1), (-1, 2, 0), (0, 1, 0)];
    (prop::collection::vec(-3i64..=3, 4), select(dens)).prop_map(|(c, (sign, a, b))| {
        let num = QTRational::from_int(c[0])
            .add(&QTRational::monomial(c[1], 1, 0))
            .add(&QTRational::monomial(c[2], 0, 1))
            .add(&QTRational::monomial(c[3], 1, 1));
        // denominator 1, 1 - q, 1 - t, 1 + q^2 or q
        let den = match (sign, a, b) {
            (0, 0, 0) => QTRational::one(),
            (0, a, b) => QTRational::monomial(1, a, b),
            (s, a, b) => QTRational::one().sub(&QTRational::monomial(s, a, b)),
        };
        num.try_div(&den).unwrap()
    })
}

pub fn q_polynomial() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| QPolynomial::from_ints(0, &c))
}

/// Integer combinations of Schur functions of degree at most `max`.
pub fn symfunc(max: u32) -> impl Strategy<Value = F> {
    prop::collection::vec((partition(0, max), -3i64..=3), 1..4).prop_map(|terms| {
        let mut f = F::zero();
        for (lambda, c) in terms {
            f.add_assign(&schur::<QTRational>(&lambda).scale(&QTRational::from_int(c)));
        }
        f
    })
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn binomial(a: i64, b: i64) -> Rational {
    let mut r = rat(1);
    for i in 0..b {
        r = r * rat(a - i) / rat(i + 1);
    }
    r
}

pub fn q_binomial_symmetry(a: i64, b: i64) -> Result<(), TestCaseError> {
    let g = q_binomial(a, b);
    prop_assert_eq!(&g, &q_binomial(a, a - b));
    prop_assert_eq!(g.at_one(), binomial(a, b));
    Ok(())
}

pub fn exact_quotients(f: QPolynomial, g: QPolynomial) -> Result<(), TestCaseError> {
    prop_assume!(!g.is_zero());
    prop_assert_eq!(f.mul(&g).exact_quotient(&g).unwrap(), f.clone());
    let (fq, gq) = (QTPolynomial::from_q(&f), QTPolynomial::from_q_as_t(&g));
    prop_assert_eq!(fq.mul(&gq).exact_quotient(&gq).unwrap(), fq);
    Ok(())
}

pub fn specialization_is_homomorphism(x: QTRational, y: QTRational) -> Result<(), TestCaseError> {
    let (sx, sy) = (x.specialize_t_to_qinv().unwrap(), y.specialize_t_to_qinv().unwrap());
    prop_assert_eq!(x.add(&y).specialize_t_to_qinv().unwrap(), sx.add(&sy));
    prop_assert_eq!(x.mul(&y).specialize_t_to_qinv().unwrap(), sx.mul(&sy));
    Ok(())
}

/// Structural equality agrees with agreement at 20 rational points.
pub fn equality_matches_evaluation(x: QTRational, y: QTRational) -> Result<(), TestCaseError> {
    let mut all_agree = true;
    let mut tried = 0;
    for i in 0..40i64 {
        let q = Rational::new(BigInt::from(i + 2), BigInt::from(2 * i + 3));
        let t = Rational::new(BigInt::from(3 * i + 5), BigInt::from(i + 7));
        if let (Some(a), Some(b)) = (x.eval(&q, &t), y.eval(&q, &t)) {
            all_agree &= a == b;
            tried += 1;
        }
        if tried == 20 {
            break;
        }
    }
    prop_assert_eq!(tried, 20);
    prop_assert_eq!(x == y, all_agree);
    // a rearranged but equal expression
    let z = x.add(&y);
    prop_assert_eq!(z.sub(&y), x);
    Ok(())
}

/// `Σ_λ χ^λ_ρ χ^λ_τ = z_ρ δ_ρτ` for all `|ρ| = |τ| = n`.
pub fn character_orthogonality(n: u32) -> Result<(), TestCaseError> {
    let ps = partitions(n);
    for rho in &ps {
        for tau in &ps {
            let s: i64 = ps.iter().map(|l| character(l, rho) * character(l, tau)).sum();
            let expected = if rho == tau { rho.z() } else { BigInt::from(0) };
            prop_assert_eq!(BigInt::from(s), expected, "rho={} tau={}", rho, tau);
        }
    }
    Ok(())
}

pub fn basis_round_trip(lambda: Partition) -> Result<(), TestCaseError> {
    for basis in Basis::ALL {
        let f: F = qtsym::symfunc::from_basis(basis, [(lambda.clone(), QTRational::one())]);
        let back = qtsym::symfunc::to_basis(&f, basis);
        prop_assert_eq!(back.len(), 1, "{:?} {}", basis, lambda);
        prop_assert!(back[&lambda].is_one());
        for target in Basis::ALL {
            let there = qtsym::symfunc::convert(f.clone().into_terms(), Basis::Power, target);
            let again: F = qtsym::symfunc::from_basis(target, there);
            prop_assert_eq!(&again, &f);
        }
    }
    Ok(())
}

/// Hall inner product of Schur functions is the identity matrix.
pub fn hall_orthonormal_schur(lambda: Partition, mu: Partition) -> Result<(), TestCaseError> {
    let v = schur::<QTRational>(&lambda).hall_inner(&schur(&mu));
    let expected = if lambda == mu { QTRational::one() } else { QTRational::zero() };
    prop_assert_eq!(v, expected);
    Ok(())
}

/// `<s_(λ/ν), s_μ> = <s_ν s_μ, s_λ>`.
pub fn skew_is_adjoint(lambda: Partition, nu: Partition, mu: Partition) -> Result<(), TestCaseError> {
    let l = skew_schur::<QTRational>(&lambda, &nu).hall_inner(&schur(&mu));
    let r = schur::<QTRational>(&nu).mul(&schur(&mu)).hall_inner(&schur(&lambda));
    prop_assert_eq!(l, r);
    Ok(())
}

/// `s_α` by straightening against `a_(α+δ)/a_δ` in `ℓ(α)` variables.
pub fn straightening_matches_alternant(alpha: Vec<u32>) -> Result<(), TestCaseError> {
    let n = alpha.len();
    let shifted: Vec<u32> = alpha.iter().enumerate().map(|(i, &a)| a + (n - 1 - i) as u32).collect();
    let det = alternant::<QTRational>(&shifted).div_vandermonde().unwrap();
    let as_i64: Vec<i64> = alpha.iter().map(|&a| a as i64).collect();
    let expected = match straighten(&as_i64) {
        None => MultivariatePolynomial::zero(n),
        Some((sign, lambda)) => schur_bialternant::<QTRational>(&lambda, n)
            .unwrap()
            .scale(&QTRational::from_int(sign)),
    };
    prop_assert_eq!(det, expected);
    Ok(())
}

/// `M_α(x_1, …, x_n)`.
fn quasi_monomial(alpha: &[u32], n: usize) -> MultivariatePolynomial<QTRational> {
    let mut out = MultivariatePolynomial::zero(n);
    let l = alpha.len();
    if l > n {
        return out;
    }
    // increasing index sequences of length l
    let mut idx: Vec<usize> = (0..l).collect();
    loop {
        let mut e = vec![0; n];
        for (j, &i) in idx.iter().enumerate() {
            e[i] = alpha[j];
        }
        out.add_term(e, QTRational::one());
        let mut j = l;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if idx[j] < n - l + j {
                idx[j] += 1;
                for r in j + 1..l {
                    idx[r] = idx[r - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Fundamental expansion of `s_λ` evaluated in 3 variables.
pub fn fundamental_expansion_in_three_variables(lambda: Partition) -> Result<(), TestCaseError> {
    let s: F = schur(&lambda);
    let mut quasi = MultivariatePolynomial::zero(3);
    for (alpha, c) in to_fundamental(&s).to_monomial_basis() {
        quasi = quasi.add(&quasi_monomial(alpha.parts(), 3).scale(&c));
    }
    prop_assert_eq!(quasi, expand_in_variables(&s, 3).unwrap());
    Ok(())
}

/// `m_λ(x_1, …, x_n)` is the sum over distinct rearrangements.
pub fn monomial_expansion(lambda: Partition, n: usize) -> Result<(), TestCaseError> {
    let m: F = qtsym::symfunc::from_basis(Basis::Monomial, [(lambda.clone(), QTRational::one())]);
    let mut expected = MultivariatePolynomial::zero(n);
    if lambda.len() <= n {
        let mut e: Vec<u32> = (0..n).map(|i| lambda.part(i)).collect();
        e.sort();
        // all distinct permutations in lexicographic order
        loop {
            expected.add_term(e.clone(), QTRational::one());
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| e[i] < e[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| e[j] > e[i]).unwrap();
            e.swap(i, j);
            e[i + 1..].reverse();
        }
    }
    prop_assert_eq!(expand_in_variables(&m, n).unwrap(), expected);
    Ok(())
}

pub fn alphabet() -> impl Strategy<Value = Alphabet> {
    let q = QTRational::q();
    let t = QTRational::t();
    let one = QTRational::one();
    select(vec![
        Alphabet::scaled_x(one.sub(&q)),
        Alphabet::scaled_x(q.clone()).add(&Alphabet::scalar(t.clone(), 0)),
        Alphabet::scaled_x(one.neg()).add(&Alphabet::scalar(one.clone(), 0)),
        Alphabet::scaled_x(t.sub(&q)),
    ])
}

pub fn plethysm_homomorphism(f: F, g: F, a: Alphabet) -> Result<(), TestCaseError> {
    let fg = pleth_eval_plain(&f.mul(&g), &a).unwrap();
    let sep = pleth_eval_plain(&f, &a).unwrap().mul(&pleth_eval_plain(&g, &a).unwrap());
    prop_assert_eq!(&fg, &sep);
    let sum = pleth_eval_plain(&f.add(&g), &a).unwrap();
    prop_assert_eq!(sum, pleth_eval_plain(&f, &a).unwrap().add(&pleth_eval_plain(&g, &a).unwrap()));
    prop_assert_eq!(pleth_eval_plain(&f, &Alphabet::x()).unwrap(), f);
    Ok(())
}

/// `s_λ[[m]_q]` against `s_λ(1, q, …, q^(m-1))` in `m` variables.
pub fn principal_specialization_matches_monomials(lambda: Partition, m: usize) -> Result<(), TestCaseError> {
    let s: SymFunc<QRational> = schur(&lambda);
    let value = qtsym::plethysm::principal_specialization(&s, m as i64).unwrap();
    let mut expected = QRational::zero();
    for (e, c) in expand_in_variables(&s, m).unwrap().terms() {
        let power: i64 = e.iter().enumerate().map(|(i, &x)| i as i64 * x as i64).sum();
        expected = expected.add(&c.shift(power));
    }
    prop_assert_eq!(value, expected);
    Ok(())
}

/// Rational Dyck paths in an `m × n` box, `gcd(m, n) = 1`, number
/// `C(m+n, n)/(m+n)`.
pub fn cyclic_lemma_count(m: i64, n: i64) -> Result<(), TestCaseError> {
    let paths = enumerate_paths(1, m, n).unwrap();
    prop_assert_eq!(rat(paths.len() as i64), binomial(m + n, n) / rat(m + n), "({},{})", m, n);
    Ok(())
}

/// `m^(n-1)` parking functions on a coprime `m × n` box.
pub fn parking_function_count(m: i64, n: i64) -> Result<(), TestCaseError> {
    let total: usize = enumerate_paths(1, m, n)
        .unwrap()
        .iter()
        .map(|p| enumerate_parking_functions(p).len())
        .sum();
    prop_assert_eq!(total as u64, (m as u64).pow(n as u32 - 1), "({},{})", m, n);
    Ok(())
}

/// `area + coarea` is constant on a rectangle; also `area ≥ ret - 1`,
/// the word is a permutation and all ranks differ.
pub fn area_coarea_constant(k: i64, m: i64, n: i64) -> Result<(), TestCaseError> {
    let (km, kn) = (k * m, k * n);
    let total = ((km - 1) * (kn - 1) + k - 1) / 2;
    for path in enumerate_paths(k, m, n).unwrap() {
        for pf in enumerate_parking_functions(&path) {
            let s = statistics(&pf);
            prop_assert_eq!(s.area + s.coarea, total, "{} {:?}", path.word(), pf.cars());
            prop_assert!(s.area >= s.ret - 1);
            let mut w = s.word.clone();
            w.sort();
            prop_assert_eq!(w, (1..=kn as u32).collect::<Vec<_>>());
            let mut r = s.ranks.clone();
            r.sort();
            r.dedup();
            prop_assert_eq!(r.len(), kn as usize);
            if km == kn {
                prop_assert_eq!(s.dinv, s.tdinv);
            }
        }
    }
    Ok(())
}

/// `2·LHS = 2·RHS` of the exponent bookkeeping identity.
pub fn commutator_exponents(a: i64, b: i64, c: i64, d: i64) -> Result<(), TestCaseError> {
    let lhs = (a - 1) * (b + 1) + (c - 1) * (d + 1) + 2 * b * c + 2;
    let rhs = (a + c - 1) * (b + d + 1) + (b * c - a * d + 1);
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn coprime_rectangles(max_sum: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for m in 1..max_sum {
        for n in 1..=max_sum - m {
            if num_integer::Integer::gcd(&m, &n) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

/// Run `test` on `cases` deterministic draws from `strategy`.
pub fn replay<S: Strategy>(
    strategy: S,
    cases: u32,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn schur_map(f: &F) -> BTreeMap<Partition, QTRational> {
    qtsym::symfunc::to_basis(f, Basis::Schur)
}
