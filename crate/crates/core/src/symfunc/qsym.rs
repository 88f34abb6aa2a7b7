//! Quasisymmetric expansions in Gessel's fundamental basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use crate::coeff::{Coefficient, Rational};

use super::basis::{to_basis, Basis};
use super::partition::{Composition, Partition};
use super::sf::SymFunc;
use super::SymError;

/// Largest degree accepted by [`qsym_extract_schur`].
pub const MAX_QSYM_DEGREE: u32 = 14;

/// `Σ c_α F_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymVector<C> {
    terms: BTreeMap<Composition, C>,
}

impl<C: Coefficient> Default for QSymVector<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> QSymVector<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, alpha: Composition, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
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

    pub fn from_terms(it: impl IntoIterator<Item = (Composition, C)>) -> Self {
        let mut v = Self::zero();
        for (a, c) in it {
            v.add_term(a, c);
        }
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Composition) -> C {
        self.terms.get(a).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.neg());
        }
        out
    }

    /// Coefficients in the monomial quasisymmetric basis:
    /// `F_α = Σ_(β refines α) M_β`.
    pub fn to_monomial_basis(&self) -> BTreeMap<Composition, C> {
        let mut out: BTreeMap<Composition, C> = BTreeMap::new();
        for (alpha, c) in &self.terms {
            let n = alpha.size();
            let mask = alpha.descent_mask();
            let free = !mask & ((1u32 << n.saturating_sub(1)) - 1);
            // every superset of the descent set
            let mut sub = free;
            loop {
                let beta = Composition::from_mask(n, mask | sub);
                let e = out.entry(beta).or_insert_with(C::zero);
                *e = e.add(c);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

type DescentCounts = HashMap<u32, u64>;

type Memo = HashMap<(Partition, Option<u32>), Arc<DescentCounts>>;

/// `s_λ = Σ_T F_(Des T)` over standard Young tableaux of shape `λ`, where
/// `i` is a descent when `i + 1` lies in a strictly lower row.
pub fn schur_to_fundamental(lambda: &Partition) -> BTreeMap<Composition, u64> {
    let n = lambda.size();
    finish_cached(lambda)
        .iter()
        .map(|(mask, c)| (Composition::from_mask(n, *mask), *c))
        .collect()
}

static FUND: LazyLock<RwLock<HashMap<Partition, Arc<DescentCounts>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn finish_cached(lambda: &Partition) -> Arc<DescentCounts> {
    if let Some(v) = FUND.read().unwrap().get(lambda) {
        return v.clone();
    }
    let mut local = Memo::new();
    let v = finish_local(&Partition::empty(), lambda, None, &mut local);
    FUND.write().unwrap().insert(lambda.clone(), v.clone());
    v
}

fn finish_local(
    shape: &Partition,
    target: &Partition,
    last: Option<u32>,
    memo: &mut Memo,
) -> Arc<DescentCounts> {
    let key = (shape.clone(), last);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut out = DescentCounts::new();
    if shape == target {
        out.insert(0, 1);
    } else {
        for row in 0..target.len() {
            let cur = shape.part(row);
            if cur >= target.part(row) || (row > 0 && cur >= shape.part(row - 1)) {
                continue;
            }
            let mut next = shape.parts().to_vec();
            if row < next.len() {
                next[row] += 1;
            } else {
                next.push(1);
            }
            let next = Partition::new(next);
            // entry shape.size() + 1 goes in `row`; a descent at shape.size()
            // is bit shape.size() - 1
            let bit = match last {
                Some(l) if row as u32 > l => 1u32 << (shape.size() - 1),
                _ => 0,
            };
            let sub = finish_local(&next, target, Some(row as u32), memo);
            for (mask, cnt) in sub.iter() {
                *out.entry(mask | bit).or_insert(0) += cnt;
            }
        }
    }
    let v = Arc::new(out);
    memo.insert(key, v.clone());
    v
}

/// Expand a symmetric function in fundamentals.
pub fn to_fundamental<C: Coefficient>(f: &SymFunc<C>) -> QSymVector<C> {
    let mut out = QSymVector::zero();
    for (lambda, c) in to_basis(f, Basis::Schur) {
        for (alpha, k) in schur_to_fundamental(&lambda) {
            out.add_term(alpha, c.scale(&Rational::from_integer(k.into())));
        }
    }
    out
}

/// Recover Schur coefficients from a `F`-expansion, or report that the input
/// is not symmetric with two rearranged compositions whose monomial
/// coefficients differ.
pub fn qsym_extract_schur<C: Coefficient>(
    v: &QSymVector<C>,
) -> Result<BTreeMap<Partition, C>, SymError> {
    if let Some(d) = v.terms().map(|(a, _)| a.size()).max() {
        if d > MAX_QSYM_DEGREE {
            return Err(SymError::DegreeTooLarge {
                degree: d,
                max: MAX_QSYM_DEGREE,
            });
        }
    }
    let mut residual = v.clone();
    let mut out = BTreeMap::new();
    loop {
        // The largest partition-shaped composition present; lex order on
        // partitions of one size extends dominance, and s_λ contains F_λ once
        // and otherwise only F_μ with μ below λ.
        let next = residual
            .terms()
            .filter(|(a, _)| a.is_partition())
            .map(|(a, c)| (a.sorted(), c.clone()))
            .max_by(|x, y| x.0.cmp(&y.0));
        let Some((lambda, c)) = next else { break };
        for (alpha, k) in schur_to_fundamental(&lambda) {
            residual.add_term(alpha, c.scale(&Rational::from_integer(k.into())).neg());
        }
        out.insert(lambda, c);
    }
    if residual.is_zero() {
        return Ok(out);
    }
    let m = residual.to_monomial_basis();
    for (beta, c) in &m {
        let sorted = Composition::new(beta.sorted().parts().to_vec());
        let other = m.get(&sorted).cloned().unwrap_or_else(C::zero);
        if *c != other {
            return Err(SymError::NotSymmetric {
                first: beta.clone(),
                second: sorted,
            });
        }
    }
    // A symmetric nonzero residual would have a partition-shaped F term.
    unreachable!("nonzero residual with symmetric monomial expansion")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::QTRational;
    use crate::symfunc::basis::schur;
    use crate::symfunc::partitions;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn fundamental_expansions() {
        let s21 = schur_to_fundamental(&Partition::new(vec![2, 1]));
        assert_eq!(s21, [(comp(&[1, 2]), 1), (comp(&[2, 1]), 1)].into());
        let s3 = schur_to_fundamental(&Partition::row(3));
        assert_eq!(s3, [(comp(&[3]), 1)].into());
        let s111 = schur_to_fundamental(&Partition::new(vec![1, 1, 1]));
        assert_eq!(s111, [(comp(&[1, 1, 1]), 1)].into());
        // number of SYT via the hook length formula
        let s32: u64 = schur_to_fundamental(&Partition::new(vec![3, 2])).values().sum();
        assert_eq!(s32, 5);
    }

    #[test]
    fn extraction_round_trip() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                let f: SymFunc<QTRational> = schur(&lambda);
                let back = qsym_extract_schur(&to_fundamental(&f)).unwrap();
                assert_eq!(back, [(lambda.clone(), QTRational::one())].into());
            }
        }
    }

    #[test]
    fn non_symmetric_witness() {
        let v = QSymVector::from_terms([(comp(&[1, 2]), QTRational::one())]);
        match qsym_extract_schur(&v) {
            Err(SymError::NotSymmetric { first, second }) => {
                assert_eq!(first.sorted(), second.sorted());
                assert_ne!(first, second);
            }
            other => panic!("{other:?}"),
        }
        let big = QSymVector::from_terms([(comp(&[15]), QTRational::one())]);
        assert!(matches!(qsym_extract_schur(&big), Err(SymError::DegreeTooLarge { .. })));
    }
}
