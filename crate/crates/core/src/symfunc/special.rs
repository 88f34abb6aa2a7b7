use std::collections::HashMap;

use crate::coeff::{Coefficient, QTPolynomial, QTRational, Rational};

use super::basis::homogeneous;
use super::partition::Partition;
use super::sf::SymFunc;

/// Skew Schur function `s_(λ/ν)` by the Jacobi-Trudi determinant.
pub fn skew_schur<C: Coefficient>(lambda: &Partition, nu: &Partition) -> SymFunc<C> {
    if !lambda.contains(nu) {
        return SymFunc::zero();
    }
    let n = lambda.len();
    let entry = |i: usize, j: usize| -> i64 {
        lambda.part(i) as i64 - nu.part(j) as i64 - i as i64 + j as i64
    };
    let mut hs: HashMap<i64, SymFunc<C>> = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            let k = entry(i, j);
            hs.entry(k).or_insert_with(|| {
                if k == 0 {
                    SymFunc::one()
                } else {
                    homogeneous(k)
                }
            });
        }
    }
    determinant(n, &|i, j| hs[&entry(i, j)].clone())
}

/// Laplace expansion along rows, memoised on the set of used columns.
fn determinant<C: Coefficient>(
    n: usize,
    entry: &dyn Fn(usize, usize) -> SymFunc<C>,
) -> SymFunc<C> {
    // minors[mask] = det of rows (n - popcount(mask))..n on columns in mask
    let mut minors: HashMap<u32, SymFunc<C>> = HashMap::new();
    minors.insert(0, SymFunc::one());
    for size in 1..=n {
        let row = n - size;
        let masks: Vec<u32> = (0..1u32 << n).filter(|m| m.count_ones() as usize == size).collect();
        for mask in masks {
            let mut acc = SymFunc::zero();
            let mut sign_pos = 0;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let rest = mask & !(1 << col);
                let minor = &minors[&rest];
                if !minor.is_zero() {
                    let e = entry(row, col);
                    if !e.is_zero() {
                        let term = e.mul(minor);
                        acc = if sign_pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                    }
                }
                sign_pos += 1;
            }
            minors.insert(mask, acc);
        }
    }
    minors.remove(&((1u32 << n) - 1)).unwrap()
}

/// Straighten `s_α` for an integer vector `α`: returns `(sign, λ)` with
/// `s_α = sign * s_λ`, or `None` when `s_α = 0`.
pub fn straighten(alpha: &[i64]) -> Option<(i64, Partition)> {
    let len = alpha.len();
    let mut beta: Vec<i64> = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| a + (len - 1 - i) as i64)
        .collect();
    if beta.iter().any(|&b| b < 0) {
        return None;
    }
    // Sort decreasing, counting transpositions.
    let mut sign = 1;
    for i in 0..len {
        for j in 0..len - 1 - i {
            if beta[j] < beta[j + 1] {
                beta.swap(j, j + 1);
                sign = -sign;
            } else if beta[j] == beta[j + 1] {
                return None;
            }
        }
    }
    if beta.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (len - 1 - i) as i64) as u32)
        .collect();
    Some((sign, Partition::new(parts)))
}

/// `B_μ(q, t) = Σ_(cells) t^(row) q^(column)`.
pub fn biexponent_qt(mu: &Partition) -> QTRational {
    QTRational::from_poly(QTPolynomial::from_terms(
        mu.cells()
            .map(|(i, j)| ((j as i64, i as i64), Rational::from_integer(1.into()))),
    ))
}

/// `B_μ` evaluated at given field values of `q` and `t`.
pub fn biexponent<C: Coefficient>(mu: &Partition, q: &C, t: &C) -> C {
    let mut acc = C::zero();
    let mut tp = C::one();
    for &row in mu.parts() {
        let mut qp = C::one();
        for _ in 0..row {
            acc = acc.add(&tp.mul(&qp));
            qp = qp.mul(q);
        }
        tp = tp.mul(t);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::basis::schur;

    type F = SymFunc<QTRational>;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn straightening() {
        assert_eq!(straighten(&[1, 2]), None);
        assert_eq!(straighten(&[0, 2]), Some((-1, p(&[1, 1]))));
        assert_eq!(straighten(&[2, 1]), Some((1, p(&[2, 1]))));
        assert_eq!(straighten(&[1, 3, 0]), Some((-1, p(&[2, 2]))));
        assert_eq!(straighten(&[-2, 1]), None);
    }

    #[test]
    fn jacobi_trudi_matches_characters() {
        for n in 1..=5 {
            for lambda in crate::symfunc::partitions(n) {
                let jt: F = skew_schur(&lambda, &Partition::empty());
                assert_eq!(jt, schur(&lambda), "{lambda}");
            }
        }
        // s_(2,1)/(1) = s_2 + s_11 = h_1^2
        let sk: F = skew_schur(&p(&[2, 1]), &p(&[1]));
        assert_eq!(sk, F::p(p(&[1, 1])));
        let none: F = skew_schur(&p(&[2]), &p(&[1, 1]));
        assert!(none.is_zero());
    }

    #[test]
    fn biexponents() {
        let b = biexponent_qt(&p(&[2, 1]));
        assert_eq!(b, "1 + q + t".parse().unwrap());
        let v: QTRational = biexponent(&p(&[2, 1]), &QTRational::q(), &QTRational::t());
        assert_eq!(v, b);
    }
}
