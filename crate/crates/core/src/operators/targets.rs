use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Signed;

use crate::coeff::{q_integer, qt_integer_q, Coefficient, QPolynomial, QRational, QTRational};
use crate::plethysm::principal_specialization;
use crate::symfunc::{partitions, schur, Partition, SymFunc};

use super::{c_of, qt_pow_q, Engine, OpError};

/// Two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Comparison<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `([k]_q/[km]_q) e_(kn)[X[km]_q]` in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnkTarget {
    pub schur: BTreeMap<Partition, QPolynomial>,
}

impl EnkTarget {
    pub fn to_symfunc<C: Coefficient>(&self) -> Result<SymFunc<C>, OpError> {
        let mut acc = SymFunc::zero();
        for (lambda, c) in &self.schur {
            acc.add_assign(&schur::<C>(lambda).scale(&c_of(&QTRational::from(c.clone()))?));
        }
        Ok(acc)
    }

    /// Whether every coefficient lies in `N[q]`.
    pub fn nonnegative(&self) -> bool {
        self.schur
            .values()
            .all(|p| p.is_polynomial() && p.coeffs().iter().all(|c| !c.is_negative()))
    }
}

/// `Σ_(λ ⊢ kn) s_(λ') ([k]_q s_λ[[km]_q] / [km]_q)`, failing if a quotient is
/// not exact.
pub fn enk_target(m: i64, n: i64, k: i64) -> Result<EnkTarget, OpError> {
    if m < 1 || n < 0 || k < 1 || m.gcd(&n) != 1 {
        return Err(OpError::NotCoprime { m, n });
    }
    let kq = q_integer(k)?;
    let kmq = q_integer(k * m)?;
    let mut out = BTreeMap::new();
    for lambda in partitions((k * n) as u32) {
        let s: SymFunc<QRational> = schur(&lambda);
        let ps = principal_specialization(&s, k * m)?;
        let ps = ps
            .as_polynomial()
            .cloned()
            .ok_or_else(|| OpError::Assertion(format!("s_{lambda}[[{}]_q] is not a polynomial", k * m)))?;
        let quotient = kq.mul(&ps).exact_quotient(&kmq)?;
        if !quotient.is_zero() {
            out.insert(lambda.conjugate(), quotient);
        }
    }
    Ok(EnkTarget { schur: out })
}

/// `(1/M)[D_(c,d), D_(a,b)] F` against
/// `q^(1+bc) ([a]_q [c]_q/[a+c]_q) ((1 - q^(da-bc))/(1-q)) D_(a+c,b+d) F`.
pub fn commutator_check<C: Coefficient>(
    engine: &Engine<C>,
    (a, b): (i64, i64),
    (c, d): (i64, i64),
    f: &SymFunc<C>,
) -> Result<Comparison<SymFunc<C>>, OpError> {
    if a < 1 || c < 1 {
        return Err(OpError::Invalid(format!("a = {a}, c = {c} must be positive")));
    }
    let lhs = engine.commutator_d((a, b), (c, d), f)?;
    let one = QTRational::one();
    let coeff = qt_pow_q(1 + b * c)
        .mul(&qt_integer_q(a)?)
        .mul(&qt_integer_q(c)?)
        .try_div(&qt_integer_q(a + c)?)?
        .mul(&one.sub(&qt_pow_q(d * a - b * c)).try_div(&one.sub(&QTRational::q()))?);
    let rhs = engine.d_uv(a + c, b + d, f)?.scale(&c_of(&coeff)?);
    Ok(Comparison { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn enk_examples() {
        let t = enk_target(2, 1, 1).unwrap();
        assert_eq!(t.schur, [(part(&[1]), QPolynomial::one())].into());
        let t = enk_target(2, 3, 1).unwrap();
        assert_eq!(
            t.schur,
            [
                (part(&[1, 1, 1]), QPolynomial::from_ints(0, &[1, 0, 1])),
                (part(&[2, 1]), QPolynomial::from_ints(1, &[1])),
            ]
            .into()
        );
        assert!(t.nonnegative());
        assert!(enk_target(2, 2, 1).is_err());
    }

    #[test]
    fn commutator_examples() {
        let e = Engine::<QRational>::default();
        let one = SymFunc::<QRational>::one();
        let r = commutator_check(&e, (1, 1), (1, 2), &one).unwrap();
        assert!(r.holds());
        let d23 = e.d_uv(2, 3, &one).unwrap();
        let c = QRational::from_qt(&"q^2/(1 + q)".parse().unwrap()).unwrap();
        assert_eq!(r.rhs, d23.scale(&c));
        let r = commutator_check(&e, (1, 1), (2, 2), &one).unwrap();
        assert!(r.lhs.is_zero() && r.holds());
    }
}
