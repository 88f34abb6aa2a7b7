use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::coeff::{q_binomial, q_integer, QPolynomial, QTPolynomial, QTRational};
use crate::operators::Comparison;
use crate::symfunc::{Composition, QSymVector};

use super::stats::statistics;
use super::{enumerate_parking_functions, enumerate_paths, ParkingError, ParkingFunction, PFStats, Rectangle, RationalDyckPath};

/// Weights attached to a parking function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `t^area q^dinv`
    Area,
    /// `t^(area - ret + 1) [ret]_t q^dinv`
    Return,
    /// `q^(coarea + dinv) [ret]_q`
    Coarea,
}

impl Mode {
    /// `(q exponent, t exponent)` monomials, with multiplicity.
    fn monomials(self, s: &PFStats) -> Vec<(i64, i64)> {
        match self {
            Mode::Area => vec![(s.dinv, s.area)],
            Mode::Return => (0..s.ret).map(|j| (s.dinv, s.area - s.ret + 1 + j)).collect(),
            Mode::Coarea => (0..s.ret).map(|j| (s.coarea + s.dinv + j, 0)).collect(),
        }
    }
}

type Tally = BTreeMap<Composition, BTreeMap<(i64, i64), i64>>;

fn tally_path(path: &RationalDyckPath, mode: Mode, touch: Option<&Composition>) -> Tally {
    let mut out = Tally::new();
    for pf in enumerate_parking_functions(path) {
        let s = statistics(&pf);
        if touch.is_some_and(|p| *p != s.touch) {
            continue;
        }
        let slot = out.entry(s.pides.clone()).or_default();
        for mono in mode.monomials(&s) {
            *slot.entry(mono).or_insert(0) += 1;
        }
    }
    out
}

fn collect(rect: Rectangle, mode: Mode, touch: Option<&Composition>, cap: i64) -> Result<QSymVector<QTRational>, ParkingError> {
    rect.check_cap(cap)?;
    let paths = enumerate_paths(rect.k, rect.m, rect.n)?;
    let parts = crate::par::map(&paths, |p| tally_path(p, mode, touch));
    let mut total = Tally::new();
    for part in parts {
        for (alpha, monos) in part {
            let slot = total.entry(alpha).or_default();
            for (mono, c) in monos {
                *slot.entry(mono).or_insert(0) += c;
            }
        }
    }
    Ok(QSymVector::from_terms(total.into_iter().map(|(alpha, monos)| {
        let poly = QTPolynomial::from_terms(
            monos
                .into_iter()
                .map(|(e, c)| (e, BigRational::from_integer(c.into()))),
        );
        (alpha, QTRational::from_poly(poly))
    })))
}

/// `Σ_PF weight(PF) F_(pides(PF))` over the `km × kn` rectangle.
pub fn weighted_sum(k: i64, m: i64, n: i64, mode: Mode, cap: i64) -> Result<QSymVector<QTRational>, ParkingError> {
    collect(Rectangle::new(k, m, n)?, mode, None, cap)
}

/// The `t^area q^dinv` sum restricted to parking functions whose diagonal
/// touches form the composition `p` of `k`.
pub fn touch_filtered_sum(
    k: i64,
    m: i64,
    n: i64,
    p: &Composition,
    cap: i64,
) -> Result<QSymVector<QTRational>, ParkingError> {
    if p.size() as i64 != k {
        return Err(ParkingError::BadComposition(p.to_string()));
    }
    collect(Rectangle::new(k, m, n)?, Mode::Area, Some(p), cap)
}

/// The labeling whose car ranks increase with the car number, the one
/// contributing `F_(1^(kn))`.
pub fn increasing_labeling(path: &RationalDyckPath) -> ParkingFunction {
    let r = path.rect();
    let mut rows: Vec<usize> = (0..path.columns().len()).collect();
    rows.sort_by_key(|&y| super::stats::rank(r.k, r.m, r.n, path.columns()[y], y as i64));
    let mut cars = vec![0u32; rows.len()];
    for (i, y) in rows.into_iter().enumerate() {
        cars[y] = i as u32 + 1;
    }
    ParkingFunction::new(path.clone(), cars).expect("rank increases up each column")
}

/// `Σ_D [ret(D)]_q q^(coarea(D) + dinv(D))`, with `dinv(D)` from
/// [`increasing_labeling`].
pub fn catalan_side(k: i64, m: i64, n: i64) -> Result<QPolynomial, ParkingError> {
    let mut acc = QPolynomial::zero();
    for path in enumerate_paths(k, m, n)? {
        let s = statistics(&increasing_labeling(&path));
        let ret = q_integer(s.ret).expect("ret ≥ 1");
        acc = acc.add(&ret.shift(s.coarea + s.dinv));
    }
    Ok(acc)
}

/// `Σ_D [ret]_q q^(coarea + dinv)` against `([k]_q/[km]_q) [kn+km-1 choose kn]_q`.
pub fn check_catalan(k: i64, m: i64, n: i64) -> Result<Comparison<QPolynomial>, ParkingError> {
    let lhs = catalan_side(k, m, n)?;
    let num = q_integer(k)
        .expect("k ≥ 1")
        .mul(&q_binomial(k * n + k * m - 1, k * n));
    let kmq = q_integer(k * m).expect("km ≥ 1");
    Ok(match num.exact_quotient(&kmq) {
        Ok(rhs) => Comparison { lhs, rhs },
        // compare cleared of the denominator
        Err(_) => Comparison {
            lhs: lhs.mul(&kmq),
            rhs: num,
        },
    })
}
