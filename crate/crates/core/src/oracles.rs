//! Brute-force checks in finitely many variables.
//!
//! Nothing here calls into the operator or parking code. Symmetric functions
//! enter only as inputs, through their power-sum expansion.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{CoeffError, Coefficient, QTRational};
use crate::plethysm::{omega_series, pleth_eval, pleth_eval_plain, Alphabet, PlethError};
use crate::symfunc::{homogeneous, skew_schur, Partition, SymFunc};

pub const MAX_VARIABLES: usize = 6;
pub const MAX_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("division by x{0} - x{1} is not exact")]
    NotDivisible(usize, usize),
    #[error("the two evaluation routes disagree: {0}")]
    Disagreement(String),
    #[error("oracle scope is n <= {MAX_VARIABLES} and degree <= {MAX_DEGREE}, got n = {n}, degree {degree}")]
    Scope { n: usize, degree: u32 },
    #[error("variable count mismatch: {0} vs {1}")]
    Arity(usize, usize),
    #[error("v = {0} must be nonnegative")]
    NegativeShift(i64),
    #[error(transparent)]
    Pleth(#[from] PlethError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// A polynomial in `x_1, …, x_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultivariatePolynomial<C> {
    n: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coefficient> MultivariatePolynomial<C> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    /// `c x^e`.
    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `x_i`, zero based.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: C) {
        debug_assert_eq!(exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c.mul(d));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), d.mul(c));
        }
        out
    }

    /// `x_i^v · self`.
    pub fn mul_var_power(&self, i: usize, v: u32) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[i] += v;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `x_i ↦ c x_i`.
    pub fn scale_variable(&self, i: usize, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), d.mul(&power(c, e[i])));
        }
        out
    }

    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Invariance under adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_variables(i - 1, i) == *self)
    }

    /// Exact quotient by `x_a - x_b`, by long division in `x_a`.
    pub fn div_linear(&self, a: usize, b: usize) -> Result<Self, OracleError> {
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        let top = rem.terms.keys().map(|e| e[a]).max().unwrap_or(0);
        for d in (1..=top).rev() {
            let lead: Vec<(Vec<u32>, C)> = rem
                .terms
                .iter()
                .filter(|(e, _)| e[a] == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            for (e, c) in lead {
                let mut lower = e.clone();
                lower[a] -= 1;
                quot.add_term(lower.clone(), c.clone());
                rem.add_term(e, c.neg());
                let mut shifted = lower;
                shifted[b] += 1;
                rem.add_term(shifted, c);
            }
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(OracleError::NotDivisible(a + 1, b + 1))
        }
    }

    /// Exact quotient by `Δ = Π_(i<j) (x_i - x_j)`.
    pub fn div_vandermonde(&self) -> Result<Self, OracleError> {
        let mut p = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                p = p.div_linear(i, j)?;
            }
        }
        Ok(p)
    }
}

impl<C: Coefficient> fmt::Display for MultivariatePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{k}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for MultivariatePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}] {self}", self.n)
    }
}

fn power<C: Coefficient>(c: &C, e: u32) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc.mul(c);
    }
    acc
}

fn q_power<C: Coefficient>(e: i64) -> Result<C, OracleError> {
    let q = power(&C::q(), e.unsigned_abs() as u32);
    if e >= 0 {
        Ok(q)
    } else {
        Ok(C::one().try_div(&q)?)
    }
}

fn check_scope(n: usize, degree: u32) -> Result<(), OracleError> {
    if n == 0 || n > MAX_VARIABLES || degree > MAX_DEGREE {
        return Err(OracleError::Scope { n, degree });
    }
    Ok(())
}

/// Permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, even: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((cur.clone(), even));
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            // removing position i is i transpositions away from the front
            go(rest, cur, even ^ (i % 2 == 1), out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), true, &mut out);
    out
}

/// `Π_(i<j) (x_i - x_j)`, skipping the variable `skip`.
fn vandermonde_skipping<C: Coefficient>(n: usize, skip: Option<usize>) -> MultivariatePolynomial<C> {
    let mut p = MultivariatePolynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            if Some(i) == skip || Some(j) == skip {
                continue;
            }
            let f = MultivariatePolynomial::variable(n, i).sub(&MultivariatePolynomial::variable(n, j));
            p = p.mul(&f);
        }
    }
    p
}

pub fn vandermonde<C: Coefficient>(n: usize) -> MultivariatePolynomial<C> {
    vandermonde_skipping(n, None)
}

/// `det(x_i^(α_j))`.
pub fn alternant<C: Coefficient>(alpha: &[u32]) -> MultivariatePolynomial<C> {
    let n = alpha.len();
    let mut p = MultivariatePolynomial::zero(n);
    for (sigma, even) in permutations(n) {
        let mut e = vec![0; n];
        for (j, &i) in sigma.iter().enumerate() {
            e[i] = alpha[j];
        }
        p.add_term(e, if even { C::one() } else { C::one().neg() });
    }
    p
}

/// `s_λ(x_1, …, x_n) = a_(λ+δ) / a_δ`.
pub fn schur_bialternant<C: Coefficient>(
    lambda: &Partition,
    n: usize,
) -> Result<MultivariatePolynomial<C>, OracleError> {
    check_scope(n, lambda.size())?;
    if lambda.len() > n {
        return Ok(MultivariatePolynomial::zero(n));
    }
    let alpha: Vec<u32> = (0..n)
        .map(|i| lambda.part(i) + (n - 1 - i) as u32)
        .collect();
    alternant(&alpha).div_vandermonde()
}

/// `F[x_1 + … + x_n]`.
pub fn expand_in_variables<C: Coefficient>(
    f: &SymFunc<C>,
    n: usize,
) -> Result<MultivariatePolynomial<C>, OracleError> {
    check_scope(n, f.max_degree())?;
    let top = f.max_degree() as usize;
    let power_sums: Vec<MultivariatePolynomial<C>> = (0..=top)
        .map(|k| {
            let mut p = MultivariatePolynomial::zero(n);
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = k as u32;
                p.add_term(e, C::one());
            }
            p
        })
        .collect();
    let mut out = MultivariatePolynomial::zero(n);
    for (lambda, c) in f.terms() {
        let mut term = MultivariatePolynomial::constant(n, c.clone());
        for &k in lambda.parts() {
            term = term.mul(&power_sums[k as usize]);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Both sides of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> OracleReport<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Σ_i A_i(x;q) G_i` with `A_i = Π_(j≠i) (q x_i - x_j)/(x_i - x_j)`,
/// computed over the common denominator `Δ`.
fn sum_against_a<C: Coefficient>(
    n: usize,
    g: impl Fn(usize) -> MultivariatePolynomial<C>,
) -> Result<MultivariatePolynomial<C>, OracleError> {
    let q = C::q();
    let mut num = MultivariatePolynomial::zero(n);
    for i in 0..n {
        let mut term = g(i);
        for j in (0..n).filter(|&j| j != i) {
            let f = MultivariatePolynomial::variable(n, i)
                .scale(&q)
                .sub(&MultivariatePolynomial::variable(n, j));
            term = term.mul(&f);
        }
        // Δ / Π_(j≠i)(x_i - x_j) = (-1)^i Δ without x_i
        let mut rest = vandermonde_skipping(n, Some(i));
        if i % 2 == 1 {
            rest = rest.neg();
        }
        num = num.add(&term.mul(&rest));
    }
    num.div_vandermonde()
}

/// `(1/Δ) Σ_i T_(x_i) x_i^v Δ P`, checked against the `A_i` form.
pub fn rv_vandermonde<C: Coefficient>(
    v: u32,
    p: &MultivariatePolynomial<C>,
    n: usize,
) -> Result<MultivariatePolynomial<C>, OracleError> {
    if p.n() != n {
        return Err(OracleError::Arity(p.n(), n));
    }
    if !p.is_symmetric() {
        return Err(OracleError::NotSymmetric);
    }
    let q = C::q();
    let delta_p = vandermonde::<C>(n).mul(p);
    let mut literal = MultivariatePolynomial::zero(n);
    for i in 0..n {
        literal = literal.add(&delta_p.mul_var_power(i, v).scale_variable(i, &q));
    }
    let literal = literal.div_vandermonde()?;
    let qv = power(&q, v);
    let via_a = sum_against_a(n, |i| p.scale_variable(i, &q).mul_var_power(i, v).scale(&qv))?;
    if literal != via_a {
        return Err(OracleError::Disagreement(format!("{literal} vs {via_a}")));
    }
    Ok(literal)
}

/// `F(1/z) Ω[(q-1) z X_n]|_(z^v)` through plethysm against the partial
/// fraction form. `f[s]` is the coefficient of `x^s` in `F`.
pub fn check_partial_fractions<C: Coefficient>(
    f: &[C],
    v: i64,
    n: usize,
) -> Result<OracleReport<MultivariatePolynomial<C>>, OracleError> {
    if v < 0 {
        return Err(OracleError::NegativeShift(v));
    }
    let qm1 = QTRational::q().sub(&QTRational::one());
    let alphabet = Alphabet::scaled_x(qm1);
    let mut lhs_sym = SymFunc::zero();
    for (s, fs) in f.iter().enumerate() {
        let h = homogeneous::<C>(v + s as i64);
        lhs_sym.add_assign(&pleth_eval_plain(&h, &alphabet)?.scale(fs));
    }
    let lhs = expand_in_variables(&lhs_sym, n)?;

    let q = C::q();
    let q_n = q_power::<C>(-(n as i64))?;
    let mut rhs = MultivariatePolynomial::zero(n);
    if v == 0 {
        if let Some(f0) = f.first() {
            rhs = MultivariatePolynomial::constant(n, f0.mul(&q_n));
        }
    }
    let sum = sum_against_a(n, |i| {
        // (q x_i)^v F(q x_i)
        let mut g = MultivariatePolynomial::zero(n);
        for (s, fs) in f.iter().enumerate() {
            let e = v as u32 + s as u32;
            let mut exps = vec![0; n];
            exps[i] = e;
            g.add_term(exps, fs.mul(&power(&q, e)));
        }
        g
    })?;
    let factor = q.sub(&C::one()).mul(&q_n);
    rhs = rhs.add(&sum.scale(&factor));
    Ok(OracleReport { lhs, rhs })
}

/// `B_μ(q, 1/q) = Σ_cells q^(col - row)`.
fn biexponent_t_inverse<C: Coefficient>(mu: &Partition) -> Result<C, OracleError> {
    let mut acc = C::zero();
    for (row, &len) in mu.parts().iter().enumerate() {
        for col in 0..len {
            acc = acc.add(&q_power(col as i64 - row as i64)?);
        }
    }
    Ok(acc)
}

/// `s_μ[X_n - (1-q)/z] Ω[(1 - 1/q) z X_n]|_(z^0)` against
/// `(1 - (1-1/q)(1-q) B_μ(q,1/q)) s_μ`, with `n = |μ| + 2`.
pub fn check_constant_term<C: Coefficient>(
    mu: &Partition,
) -> Result<OracleReport<MultivariatePolynomial<C>>, OracleError> {
    let n = mu.size() as usize + 2;
    let q = QTRational::q();
    let one = QTRational::one();
    let qinv = one.try_div(&q)?;
    let s_mu = crate::symfunc::schur::<C>(mu);
    let shifted = pleth_eval(&s_mu, &Alphabet::x().add(&Alphabet::scalar(q.sub(&one), -1)))?;
    let kernel = omega_series::<C>(&Alphabet::z_x(one.sub(&qinv), 1), mu.size() + 1)?;
    let lhs = expand_in_variables(&shifted.product_coefficient(&kernel, 0)?, n)?;

    let qc = C::q();
    let qc_inv = C::one().try_div(&qc)?;
    let b = biexponent_t_inverse::<C>(mu)?;
    let eig = C::one().sub(&C::one().sub(&qc_inv).mul(&C::one().sub(&qc)).mul(&b));
    let rhs = schur_bialternant::<C>(mu, n)?.scale(&eig);
    Ok(OracleReport { lhs, rhs })
}

/// `(a+1, 1^(k-a-1))`.
fn hook(arm_row: u32, k: u32) -> Partition {
    let mut parts = vec![arm_row];
    parts.extend(std::iter::repeat_n(1, (k - arm_row) as usize));
    Partition::new(parts)
}

/// `Σ_(k≥1) (-1)^k Σ_(a,b<k) (-q)^a (-1/q)^b ⟨s_(μ/(a+1,1^(k-a-1))), s_(λ/(k-b,1^b))⟩`
/// against `-χ(λ=μ) B_μ(q, 1/q)`.
///
/// The `b` weight comes from `s_(k-b,1^b)[1 - 1/q] = (-1/q)^b (1 - 1/q)`.
pub fn check_hook_products<C: Coefficient>(
    lambda: &Partition,
    mu: &Partition,
) -> Result<OracleReport<C>, OracleError> {
    let mut lhs = C::zero();
    let top = lambda.size().min(mu.size());
    let minus_q = C::q().neg();
    let minus_q_inv = C::one().try_div(&minus_q)?;
    for k in 1..=top {
        let mut inner = C::zero();
        for a in 0..k {
            let left = skew_schur::<C>(mu, &hook(a + 1, k));
            if left.is_zero() {
                continue;
            }
            for b in 0..k {
                let right = skew_schur::<C>(lambda, &hook(k - b, k));
                let ip = left.hall_inner(&right);
                if !ip.is_zero() {
                    let w = power(&minus_q, a).mul(&power(&minus_q_inv, b));
                    inner = inner.add(&ip.mul(&w));
                }
            }
        }
        lhs = if k % 2 == 1 { lhs.sub(&inner) } else { lhs.add(&inner) };
    }
    let rhs = if lambda == mu {
        biexponent_t_inverse::<C>(mu)?.neg()
    } else {
        C::zero()
    };
    Ok(OracleReport { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::QTRational;
    use crate::symfunc::{elementary, schur};

    type P = MultivariatePolynomial<QTRational>;
    type C = QTRational;

    fn qt(s: &str) -> C {
        s.parse().unwrap()
    }

    fn mono(e: &[u32], c: C) -> P {
        P::monomial(e.to_vec(), c)
    }

    #[test]
    fn expansions() {
        let e2 = expand_in_variables(&elementary::<C>(2), 2).unwrap();
        assert_eq!(e2, mono(&[1, 1], C::one()));
        let p2 = expand_in_variables(&SymFunc::<C>::p(Partition::row(2)), 2).unwrap();
        assert_eq!(p2, mono(&[2, 0], C::one()).add(&mono(&[0, 2], C::one())));
        let s21 = expand_in_variables(&schur::<C>(&Partition::new(vec![2, 1])), 2).unwrap();
        assert_eq!(s21, mono(&[2, 1], C::one()).add(&mono(&[1, 2], C::one())));
        assert_eq!(s21, schur_bialternant(&Partition::new(vec![2, 1]), 2).unwrap());
        assert!(schur_bialternant::<C>(&Partition::new(vec![1, 1, 1]), 2).unwrap().is_zero());
    }

    #[test]
    fn division() {
        let x = P::variable(2, 0);
        let y = P::variable(2, 1);
        let p = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p.div_linear(0, 1).unwrap(), x.add(&y));
        assert!(x.div_linear(0, 1).is_err());
        assert_eq!(permutations(3).iter().filter(|(_, e)| *e).count(), 3);
        assert_eq!(alternant::<C>(&[1, 0]), x.sub(&y));
    }

    #[test]
    fn rv_examples() {
        let one = P::one(2);
        let out = rv_vandermonde(1, &one, 2).unwrap();
        let q2 = qt("q^2");
        assert_eq!(out, P::variable(2, 0).add(&P::variable(2, 1)).scale(&q2));
        // v = 0 on s_μ scales by Σ_i q^(μ_i + n - i)
        let mu = Partition::new(vec![1]);
        let s = schur_bialternant::<C>(&mu, 2).unwrap();
        let out = rv_vandermonde(0, &s, 2).unwrap();
        assert_eq!(out, s.scale(&qt("q^2 + 1")));
        assert_eq!(
            rv_vandermonde(0, &P::variable(2, 0), 2),
            Err(OracleError::NotSymmetric)
        );
    }

    #[test]
    fn partial_fraction_examples() {
        let r = check_partial_fractions(&[C::one()], 0, 3).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs, P::one(3));
        assert!(check_partial_fractions(&[C::zero(), C::one()], 1, 2).unwrap().holds());
        assert!(check_partial_fractions(&[qt("2"), qt("q"), C::zero(), qt("-1")], 3, 2).unwrap().holds());
    }

    #[test]
    fn constant_term_small() {
        for mu in [Partition::empty(), Partition::row(1), Partition::row(2)] {
            assert!(check_constant_term::<C>(&mu).unwrap().holds(), "{mu}");
        }
    }

    #[test]
    fn hook_product_spots() {
        let r = check_hook_products::<C>(&Partition::row(1), &Partition::row(1)).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (qt("-1"), qt("-1")));
        let r = check_hook_products::<C>(&Partition::row(2), &Partition::row(2)).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs, qt("-1 - q"));
        let r = check_hook_products::<C>(&Partition::row(2), &Partition::row(1)).unwrap();
        assert!(r.holds() && r.lhs.is_zero());
        let r = check_hook_products::<C>(&Partition::new(vec![1, 1]), &Partition::new(vec![1, 1])).unwrap();
        assert_eq!(r.lhs, qt("-1 - q^-1"));
        assert!(check_hook_products::<C>(&Partition::new(vec![1, 1]), &Partition::row(2)).unwrap().holds());
    }
}
