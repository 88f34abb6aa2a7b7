//! Bivariate Laurent polynomials in `q, t`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::qpoly::pow_rational;
use super::{CoeffError, QPolynomial, Rational};

/// `Σ c_(i,j) q^i t^j`, stored sparse and ordered lexicographically in `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QTPolynomial {
    terms: BTreeMap<(i64, i64), Rational>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, qe: i64, te: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, te), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn from_terms(it: impl IntoIterator<Item = ((i64, i64), Rational)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn from_q(p: &QPolynomial) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    /// Embed a `q`-polynomial as a polynomial in `t`.
    pub fn from_q_as_t(p: &QPolynomial) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((0, e), c.clone())))
    }

    fn add_term(&mut self, k: (i64, i64), c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, qe: i64, te: i64) -> Rational {
        self.terms.get(&(qe, te)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<((i64, i64), &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    /// Leading term in the lexicographic order.
    pub fn leading(&self) -> Option<((i64, i64), &Rational)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// Componentwise minimum exponents.
    pub fn min_exponents(&self) -> (i64, i64) {
        let qmin = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let tmin = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (qmin, tmin)
    }

    pub fn max_exponents(&self) -> (i64, i64) {
        let qmax = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let tmax = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        (qmax, tmax)
    }

    pub fn depends_on_t(&self) -> bool {
        self.terms.keys().any(|k| k.1 != 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (k, c) in &small.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            for (&(d, e), f) in &other.terms {
                out.add_term((a + d, b + e), c * f);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect(),
        }
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + a, j + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `q -> q^k, t -> t^k`.
    pub fn adams(&self, k: u32) -> Self {
        let k = k as i64;
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i * k, j * k), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, q: &Rational, t: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * pow_signed(q, i)? * pow_signed(t, j)?;
        }
        Some(acc)
    }

    /// `t -> 1/q`.
    pub fn specialize_t_to_qinv(&self) -> QPolynomial {
        let mut acc: BTreeMap<i64, Rational> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            *acc.entry(i - j).or_insert_with(Rational::zero) += c;
        }
        let Some(lo) = acc.keys().next().copied() else {
            return QPolynomial::zero();
        };
        let hi = *acc.keys().next_back().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in acc {
            v[(e - lo) as usize] = c;
        }
        QPolynomial::from_coeffs(lo, v)
    }

    /// View as a polynomial in `t` over `Q[q, 1/q]`: returns the lowest `t`
    /// exponent and the coefficient list from there upward.
    pub(crate) fn to_t_univariate(&self) -> (i64, Vec<QPolynomial>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let (_, tmin) = self.min_exponents();
        let (_, tmax) = self.max_exponents();
        let mut rows: Vec<BTreeMap<i64, Rational>> = vec![BTreeMap::new(); (tmax - tmin + 1) as usize];
        for (&(i, j), c) in &self.terms {
            rows[(j - tmin) as usize].insert(i, c.clone());
        }
        let polys = rows
            .into_iter()
            .map(|r| {
                let Some(lo) = r.keys().next().copied() else {
                    return QPolynomial::zero();
                };
                let hi = *r.keys().next_back().unwrap();
                let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
                for (e, c) in r {
                    v[(e - lo) as usize] = c;
                }
                QPolynomial::from_coeffs(lo, v)
            })
            .collect();
        (tmin, polys)
    }

    pub(crate) fn from_t_univariate(tshift: i64, polys: &[QPolynomial]) -> Self {
        let mut out = Self::zero();
        for (j, p) in polys.iter().enumerate() {
            for (i, c) in p.terms() {
                out.add_term((i, tshift + j as i64), c.clone());
            }
        }
        out
    }

    /// Exact division in `Q[q^±1, t^±1]`.
    pub fn exact_quotient(&self, divisor: &Self) -> Result<Self, CoeffError> {
        if divisor.is_zero() {
            return Err(CoeffError::DivisionByZero("zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(((a, b), c)) = divisor.as_monomial() {
            return Ok(self.shift(-a, -b).scale(&(Rational::one() / c)));
        }
        let (ns, n) = self.to_t_univariate();
        let (ds, d) = divisor.to_t_univariate();
        let not_div = || CoeffError::NotDivisible {
            remainder: format!("({self}) / ({divisor})"),
        };
        match upoly_div_exact(&n, &d) {
            Some(qs) => Ok(Self::from_t_univariate(ns - ds, &qs)),
            None => Err(not_div()),
        }
    }

    /// Gcd up to units (monomials and constants) of two polynomials.
    /// The result has no monomial factor and leading coefficient 1.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let (_, a) = self.to_t_univariate();
        let (_, b) = other.to_t_univariate();
        let g = upoly_gcd(a, b);
        Self::from_t_univariate(0, &g).normalize_unit()
    }

    /// Remove monomial factor and make the leading coefficient 1.
    pub(crate) fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (a, b) = self.min_exponents();
        let lc = self.leading().unwrap().1.clone();
        self.shift(-a, -b).scale(&(Rational::one() / lc))
    }
}

fn pow_signed(x: &Rational, e: i64) -> Option<Rational> {
    if e >= 0 {
        Some(pow_rational(x, e as u32))
    } else if x.is_zero() {
        None
    } else {
        Some(pow_rational(&(Rational::one() / x), (-e) as u32))
    }
}

// Univariate polynomials in t over Q[q, 1/q], as coefficient vectors.

fn upoly_trim(mut a: Vec<QPolynomial>) -> Vec<QPolynomial> {
    while a.last().is_some_and(QPolynomial::is_zero) {
        a.pop();
    }
    a
}

fn upoly_content(a: &[QPolynomial]) -> QPolynomial {
    let mut g = QPolynomial::zero();
    for c in a {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.gcd(c) } else { g.gcd(c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn upoly_primitive(a: &[QPolynomial]) -> Vec<QPolynomial> {
    let c = upoly_content(a);
    if c.is_zero() {
        return Vec::new();
    }
    // Also strip the common q-power, which is a unit.
    let shift = a
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.low_degree())
        .min()
        .unwrap_or(0);
    a.iter()
        .map(|p| p.exact_quotient(&c).expect("content divides").shift(-shift))
        .collect()
}

fn upoly_prem(a: &[QPolynomial], b: &[QPolynomial]) -> Vec<QPolynomial> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (j, bc) in b.iter().enumerate() {
            let idx = dr - db + j;
            r[idx] = r[idx].sub(&lr.mul(bc));
        }
        r = upoly_trim(r);
    }
    r
}

fn upoly_gcd(a: Vec<QPolynomial>, b: Vec<QPolynomial>) -> Vec<QPolynomial> {
    let c = upoly_content(&a).gcd(&upoly_content(&b));
    let mut a = upoly_primitive(&upoly_trim(a));
    let mut b = upoly_primitive(&upoly_trim(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = upoly_prem(&a, &b);
        a = b;
        b = upoly_primitive(&r);
    }
    a.iter().map(|p| p.mul(&c)).collect()
}

fn upoly_div_exact(n: &[QPolynomial], d: &[QPolynomial]) -> Option<Vec<QPolynomial>> {
    let mut r = n.to_vec();
    let dd = d.len() - 1;
    if r.len() < d.len() {
        return None;
    }
    let mut quot = vec![QPolynomial::zero(); r.len() - dd];
    for i in (0..quot.len()).rev() {
        let lead = &r[i + dd];
        if lead.is_zero() {
            continue;
        }
        let c = lead.exact_quotient(&d[dd]).ok()?;
        for (j, dc) in d.iter().enumerate() {
            r[i + j] = r[i + j].sub(&c.mul(dc));
        }
        quot[i] = c;
    }
    r.iter().all(QPolynomial::is_zero).then_some(quot)
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::render::write_qt_terms(f, self)
    }
}
