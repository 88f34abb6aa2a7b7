use std::collections::BTreeMap;

use crate::coeff::{Coefficient, Rational};

use super::partition::Partition;

/// A symmetric function, stored in the power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymFunc<C> {
    terms: BTreeMap<Partition, C>,
}

impl<C: Coefficient> Default for SymFunc<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> SymFunc<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    /// `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        Self::monomial(lambda, C::one())
    }

    /// `c p_λ`.
    pub fn monomial(lambda: Partition, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        Self { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut f = Self::zero();
        for (p, c) in it {
            f.add_term(p, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, C> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree present (0 for zero).
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop every term of degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() <= d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.union(b), c.mul(d));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a.mul(c))).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, a)| (p.clone(), a.scale(c))))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Apply a linear map given on power-sum basis elements.
    pub fn map_linear<E>(
        &self,
        mut f: impl FnMut(&Partition) -> Result<SymFunc<C>, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            let img = f(p)?;
            for (q, d) in img.terms {
                out.add_term(q, d.mul(c));
            }
        }
        Ok(out)
    }

    /// Map coefficients into another field.
    pub fn map_coeffs<D: Coefficient, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
    ) -> Result<SymFunc<D>, E> {
        let mut out = SymFunc::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Hall inner product, `<p_λ, p_μ> = z_λ δ`.
    pub fn hall_inner(&self, other: &Self) -> C {
        let mut acc = C::zero();
        for (p, c) in &self.terms {
            if let Some(d) = other.terms.get(p) {
                acc = acc.add(&c.mul(d).scale(&Rational::from_integer(p.z())));
            }
        }
        acc
    }

    /// `ω`, which sends `p_λ` to `(-1)^(|λ| - ℓ(λ)) p_λ`.
    pub fn omega(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| {
                    let odd = (p.size() as usize - p.len()) % 2 == 1;
                    (p.clone(), if odd { c.neg() } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Adjoint of multiplication by `p_k` under the Hall product: `k ∂/∂p_k`.
    pub fn p_perp(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            let m = p.multiplicity(k);
            if m > 0 {
                let r = Rational::from_integer((m as i64 * k as i64).into());
                out.add_term(p.remove_part(k).unwrap(), c.scale(&r));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::QTRational;

    type F = SymFunc<QTRational>;

    fn p(v: &[u32]) -> F {
        F::p(Partition::new(v.to_vec()))
    }

    #[test]
    fn ring_operations() {
        let a = p(&[1]).add(&p(&[2]));
        let sq = a.mul(&a);
        let expect = p(&[1, 1]).add(&p(&[2, 1]).scale_rational(&Rational::from_integer(2.into()))).add(&p(&[2, 2]));
        assert_eq!(sq, expect);
        assert!(a.sub(&a).is_zero());
        assert_eq!(sq.degrees(), vec![2, 3, 4]);
        assert_eq!(p(&[2, 1]).hall_inner(&p(&[2, 1])), QTRational::from_int(2));
        assert_eq!(p(&[2, 1]).omega(), p(&[2, 1]).neg());
        assert_eq!(p(&[2, 2]).p_perp(2), p(&[2]).scale_rational(&Rational::from_integer(4.into())));
    }
}
