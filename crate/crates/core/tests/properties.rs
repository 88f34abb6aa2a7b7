mod common;

use common::*;
use proptest::prelude::*;

use qtsym::coeff::{probe, Coefficient, Probe, QTRational};
use qtsym::oracles::{rv_vandermonde, schur_bialternant};
use qtsym::operators::{admissible_splits, Engine};
use qtsym::parking::{weighted_sum, Mode};
use qtsym::symfunc::{elementary, partitions, qsym_extract_schur, schur, SymFunc};

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn q_binomials_are_symmetric(a in 0i64..12, b in 0i64..12) {
        prop_assume!(b <= a);
        q_binomial_symmetry(a, b)?;
    }

    #[test]
    fn exact_quotient_inverts_product(f in q_polynomial(), g in q_polynomial()) {
        exact_quotients(f, g)?;
    }

    #[test]
    fn t_to_inverse_q_is_a_ring_map(x in qt_rational(), y in qt_rational()) {
        specialization_is_homomorphism(x, y)?;
    }

    #[test]
    fn equality_agrees_with_evaluation(x in qt_rational(), y in qt_rational()) {
        equality_matches_evaluation(x, y)?;
    }

    #[test]
    fn bases_round_trip(lambda in partition(0, 8)) {
        basis_round_trip(lambda)?;
    }

    #[test]
    fn schur_functions_are_orthonormal(n in 0u32..=6, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let ps = partitions(n);
        hall_orthonormal_schur(i.get(&ps).clone(), j.get(&ps).clone())?;
    }

    #[test]
    fn skew_schur_is_adjoint_to_multiplication(
        (lambda, nu, mu) in (0u32..=3, 0u32..=3).prop_flat_map(|(a, b)| (partition_of(a + b), partition_of(a), partition_of(b)))
    ) {
        skew_is_adjoint(lambda, nu, mu)?;
    }

    #[test]
    fn straightening_agrees_with_alternants(alpha in prop::collection::vec(0u32..=2, 1..=4)) {
        straightening_matches_alternant(alpha)?;
    }

    #[test]
    fn fundamental_expansion_is_schur(lambda in partition(0, 5)) {
        fundamental_expansion_in_three_variables(lambda)?;
    }

    #[test]
    fn monomials_expand_to_orbit_sums(lambda in partition(0, 5), n in 1usize..=4) {
        monomial_expansion(lambda, n)?;
    }

    #[test]
    fn plethysm_is_a_ring_map(f in symfunc(3), g in symfunc(3), a in alphabet()) {
        plethysm_homomorphism(f, g, a)?;
    }

    #[test]
    fn principal_specialization_by_monomials(lambda in partition(0, 5), m in 1usize..=4) {
        principal_specialization_matches_monomials(lambda, m)?;
    }

    #[test]
    fn exponent_bookkeeping(a in -40i64..40, b in -40i64..40, c in -40i64..40, d in -40i64..40) {
        commutator_exponents(a, b, c, d)?;
    }

    #[test]
    fn raising_keeps_symmetry(mu in partition(0, 3), v in 0u32..=3, n in 1usize..=4) {
        prop_assume!(mu.len() <= n);
        let input = schur_bialternant::<QTRational>(&mu, n).unwrap();
        prop_assert!(rv_vandermonde(v, &input, n).unwrap().is_symmetric());
    }
}

#[test]
fn characters_are_orthogonal() {
    for n in 0..=8 {
        character_orthogonality(n).unwrap();
    }
}

#[test]
fn principal_specializations_are_unimodal() {
    use qtsym::coeff::QRational;
    for size in 0..=6 {
        for lambda in partitions(size) {
            for m in 1..=5 {
                let s: SymFunc<QRational> = schur(&lambda);
                let v = qtsym::plethysm::principal_specialization(&s, m).unwrap();
                let r = v.as_polynomial().unwrap().unimodality_report();
                assert!(r.nonnegative && r.palindromic && r.unimodal, "{lambda} m={m}");
            }
        }
    }
}

#[test]
fn cyclic_lemma_counts() {
    for (m, n) in coprime_rectangles(12) {
        cyclic_lemma_count(m, n).unwrap();
    }
}

#[test]
fn parking_function_counts() {
    for (m, n) in coprime_rectangles(9) {
        parking_function_count(m, n).unwrap();
    }
}

#[test]
fn area_plus_coarea_is_constant() {
    for k in 1..=4 {
        for (m, n) in coprime_rectangles(8) {
            if k * (m + n) <= 9 {
                area_coarea_constant(k, m, n).unwrap();
            }
        }
    }
}

#[test]
fn weighted_sums_are_symmetric() {
    for (k, m, n) in [(1, 2, 3), (1, 3, 2), (1, 3, 4), (2, 1, 2), (2, 2, 1)] {
        for mode in [Mode::Area, Mode::Return, Mode::Coarea] {
            let v = weighted_sum(k, m, n, mode, 14).unwrap();
            assert!(qsym_extract_schur(&v).is_ok(), "({k},{m},{n}) {mode:?}");
        }
    }
}

fn splits_agree<C: Coefficient>(max_size: u32) {
    let eng = Engine::<C>::default();
    for (m, n) in coprime_rectangles(6) {
        for k in 2..=4 {
            if k * m * k * n > 24 {
                continue;
            }
            let splits = admissible_splits(k, m, n).unwrap();
            for size in 0..=max_size {
                for mu in partitions(size) {
                    let f: SymFunc<C> = schur(&mu);
                    let first = eng.commutator_q(splits[0], &f).unwrap();
                    for s in &splits[1..] {
                        assert_eq!(eng.commutator_q(*s, &f).unwrap(), first, "k={k} ({m},{n}) {s:?} mu={mu}");
                    }
                    assert_eq!(eng.q(k * m, k * n, &f).unwrap(), first);
                }
            }
        }
    }
}

/// Every closest lattice point gives the same `Q_(km,kn)`.
#[test]
fn non_coprime_splits_agree() {
    splits_agree::<QTRational>(1);
    for seed in [11, 12] {
        let _g = probe::enter(seed, false);
        splits_agree::<Probe>(2);
    }
}

fn collinear_commute<C: Coefficient>(inputs: &[SymFunc<C>], cap: u32) {
    let eng = Engine::<C>::new(cap);
    for (m, n) in coprime_rectangles(5) {
        for f in inputs {
            if f.max_degree() as i64 + 3 * n > cap as i64 {
                continue;
            }
            let kh = eng.q(m, n, &eng.q(2 * m, 2 * n, f).unwrap()).unwrap();
            let hk = eng.q(2 * m, 2 * n, &eng.q(m, n, f).unwrap()).unwrap();
            assert_eq!(kh, hk, "({m},{n}) F={f:?}");
        }
    }
}

/// `[Q_(km,kn), Q_(hm,hn)] F = 0`; exact on `F = 1`, probed on `e_1, e_2`.
#[test]
fn collinear_operators_commute() {
    collinear_commute::<QTRational>(&[SymFunc::one()], 12);
    for seed in [21, 22] {
        let _g = probe::enter(seed, false);
        collinear_commute::<Probe>(&[SymFunc::one(), elementary(1), elementary(2)], 14);
    }
}

#[test]
fn equal_sides_have_constant_dinv_correction() {
    for k in 1..=4 {
        area_coarea_constant(k, 1, 1).unwrap();
    }
}
