//! Univariate Laurent polynomials in `q` with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CoeffError, Rational};

/// A Laurent polynomial `Σ c_i q^(offset + i)`.
///
/// The coefficient vector never has zero entries at either end, so two equal
/// polynomials are structurally equal. The zero polynomial has an empty vector
/// and offset 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    offset: i64,
    coeffs: Vec<Rational>,
}

/// Shape of a coefficient sequence, as used by the positivity arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct UnimodalityReport {
    pub nonnegative: bool,
    pub unimodal: bool,
    pub palindromic: bool,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// `c q^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(offset: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = Self { offset, coeffs };
        p.trim();
        p
    }

    pub fn from_ints(offset: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            offset,
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.offset == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn low_degree(&self) -> i64 {
        self.offset
    }

    /// Highest exponent present; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> Rational {
        let i = e - self.offset;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// True if no negative powers of `q` occur.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.offset >= 0
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = self.degree().unwrap().max(other.degree().unwrap());
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(self.offset + other.offset, coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            offset: self.offset + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Substitute `q -> q^k` for `k >= 1`.
    pub fn adams(&self, k: u32) -> Self {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let k = k as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(self.offset * k as i64, coeffs)
    }

    /// Substitute `q -> 1/q`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(-self.degree().unwrap(), coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // Horner on the dense part, then the offset power.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.offset >= 0 {
            acc * pow_rational(x, self.offset as u32)
        } else {
            acc / pow_rational(x, (-self.offset) as u32)
        }
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn at_one(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rational::one() / lc))
    }

    /// Split off the power of `q`: returns `(e, p)` with `self = q^e p`, `p(0) != 0`.
    pub fn split_monomial(&self) -> (i64, Self) {
        (
            self.offset,
            Self {
                offset: 0,
                coeffs: self.coeffs.clone(),
            },
        )
    }

    /// Polynomial long division for genuine polynomials. Returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), CoeffError> {
        if divisor.is_zero() {
            return Err(CoeffError::DivisionByZero("zero polynomial".into()));
        }
        let (ds, d) = divisor.split_monomial();
        let (ns, n) = self.split_monomial();
        // Work on q-free parts; monomial shifts are units in the Laurent ring.
        let mut rem = n.coeffs.clone();
        let dl = d.coeffs.len();
        if rem.len() < dl {
            return Ok((Self::zero(), self.clone()));
        }
        let lc = d.leading_coeff();
        let mut quot = vec![Rational::zero(); rem.len() - dl + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dl - 1] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dl - 1);
        Ok((
            Self::from_coeffs(ns - ds, quot),
            Self::from_coeffs(ns, rem),
        ))
    }

    /// Exact division in the Laurent ring `Q[q, 1/q]`.
    pub fn exact_quotient(&self, divisor: &Self) -> Result<Self, CoeffError> {
        let (quot, rem) = self.div_rem(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(CoeffError::NotDivisible {
                remainder: rem.to_string(),
            })
        }
    }

    /// Monic gcd of the `q`-free parts (monomials are units).
    pub fn gcd(&self, other: &Self) -> Self {
        let (_, mut a) = self.split_monomial();
        let (_, mut b) = other.split_monomial();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            let (_, r) = r.split_monomial();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn unimodality_report(&self) -> UnimodalityReport {
        let c = &self.coeffs;
        let nonnegative = c.iter().all(|x| !x.is_negative());
        let palindromic = c.iter().eq(c.iter().rev());
        let mut unimodal = true;
        let mut descending = false;
        for w in c.windows(2) {
            if w[1] < w[0] {
                descending = true;
            } else if w[1] > w[0] && descending {
                unimodal = false;
                break;
            }
        }
        UnimodalityReport {
            nonnegative,
            unimodal,
            palindromic,
        }
    }

    /// Integer coefficient list when every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

pub(crate) fn pow_rational(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

/// `[s]_q = 1 + q + ... + q^(s-1)`; zero for `s = 0`.
pub fn q_integer(s: i64) -> Result<QPolynomial, CoeffError> {
    if s < 0 {
        return Err(CoeffError::NegativeArgument(s));
    }
    Ok(QPolynomial::from_coeffs(0, vec![Rational::one(); s as usize]))
}

/// Gaussian binomial via the Pascal recursion; zero outside `0 <= b <= a`.
pub fn q_binomial(a: i64, b: i64) -> QPolynomial {
    if b < 0 || a < 0 || b > a {
        return QPolynomial::zero();
    }
    let (a, b) = (a as usize, b as usize);
    // row[j] = [i choose j]_q
    let mut row = vec![QPolynomial::one()];
    for i in 1..=a {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i.min(b) {
            // [i, j] = [i-1, j-1] + q^j [i-1, j]
            let left = if j > 0 { row[j - 1].clone() } else { QPolynomial::zero() };
            let right = row.get(j).map(|p| p.shift(j as i64)).unwrap_or_default();
            next.push(left.add(&right));
        }
        row = next;
    }
    row[b].clone()
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, Rational)> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        super::render::write_terms(
            f,
            terms.iter().map(|(e, c)| (c, super::render::Monomial::q(*e))),
        )
    }
}
