//! Rational functions in `q, t`.

use std::fmt;

use num_traits::{One, Zero};

use super::{CoeffError, QPolynomial, QRational, QTPolynomial, Rational};

/// `num / den` in lowest terms.
///
/// The denominator is a genuine polynomial with no monomial factor and
/// leading coefficient 1 in the lexicographic order, so equal functions have
/// equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: QTPolynomial,
    den: QTPolynomial,
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QTRational {
    pub fn zero() -> Self {
        Self {
            num: QTPolynomial::zero(),
            den: QTPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QTPolynomial::one())
    }

    pub fn q() -> Self {
        Self::from_poly(QTPolynomial::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QTPolynomial::t())
    }

    pub fn from_poly(num: QTPolynomial) -> Self {
        Self {
            num,
            den: QTPolynomial::one(),
        }
    }

    pub fn from_rational(c: &Rational) -> Self {
        Self::from_poly(QTPolynomial::constant(c.clone()))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(&Rational::from_integer(c.into()))
    }

    /// `c q^a t^b`.
    pub fn monomial(c: i64, a: i64, b: i64) -> Self {
        Self::from_poly(QTPolynomial::monomial(Rational::from_integer(c.into()), a, b))
    }

    pub fn new(num: QTPolynomial, den: QTPolynomial) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero(format!("({num}) / 0")));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QTPolynomial, den: QTPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(((a, b), c)) = den.as_monomial() {
            return Self::from_poly(num.shift(-a, -b).scale(&(Rational::one() / c)));
        }
        if let Ok(quot) = num.exact_quotient(&den) {
            return Self::from_poly(quot);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_quotient(&g).expect("gcd divides"),
                den.exact_quotient(&g).expect("gcd divides"),
            )
        };
        let (a, b) = den.min_exponents();
        let lc = den.leading().unwrap().1.clone();
        let inv = Rational::one() / lc;
        Self {
            num: num.shift(-a, -b).scale(&inv),
            den: den.shift(-a, -b).scale(&inv),
        }
    }

    pub fn numerator(&self) -> &QTPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QTPolynomial {
        &self.den
    }

    pub fn as_polynomial(&self) -> Option<&QTPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_polynomial().and_then(QTPolynomial::as_constant)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CoeffError> {
        if other.is_zero() {
            return Err(CoeffError::DivisionByZero(format!("({self}) / 0")));
        }
        Ok(Self::reduce(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn pow(&self, e: i32) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// `q -> q^k, t -> t^k`; lowest terms are preserved by this substitution.
    pub fn adams(&self, k: u32) -> Self {
        if k == 1 {
            return self.clone();
        }
        Self {
            num: self.num.adams(k),
            den: self.den.adams(k),
        }
    }

    pub fn eval(&self, q: &Rational, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(q, t)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q, t)? / d)
    }

    pub fn specialize_t_to_qinv(&self) -> Result<QRational, CoeffError> {
        let den = self.den.specialize_t_to_qinv();
        if den.is_zero() {
            return Err(CoeffError::Specialization(format!(
                "denominator of ({self}) vanishes at t = 1/q"
            )));
        }
        QRational::new(self.num.specialize_t_to_qinv(), den)
    }

    /// Plethystic exponential of a scalar: `Π (1 - m)^(-c_m)` over the
    /// monomials of an integral Laurent polynomial.
    pub fn omega(&self) -> Result<Self, CoeffError> {
        let p = self
            .as_polynomial()
            .ok_or_else(|| CoeffError::OmegaUnsupported(self.to_string()))?;
        let mut acc = Self::one();
        for (&(i, j), c) in p.terms() {
            if !c.is_integer() {
                return Err(CoeffError::OmegaUnsupported(self.to_string()));
            }
            let n: i32 = c
                .to_integer()
                .try_into()
                .map_err(|_| CoeffError::OmegaUnsupported(self.to_string()))?;
            if i == 0 && j == 0 {
                if n > 0 {
                    return Err(CoeffError::OmegaPole(self.to_string()));
                }
                return Ok(Self::zero());
            }
            let factor = Self::from_poly(QTPolynomial::one().sub(&QTPolynomial::monomial(
                Rational::one(),
                i,
                j,
            )));
            acc = acc.mul(&factor.pow(-n)?);
        }
        Ok(acc)
    }
}

/// `[s]_q` as an element of `Q(q, t)`.
pub fn qt_integer_q(s: i64) -> Result<QTRational, CoeffError> {
    Ok(QTRational::from_poly(QTPolynomial::from_q(&super::q_integer(s)?)))
}

/// `[s]_t`.
pub fn qt_integer_t(s: i64) -> Result<QTRational, CoeffError> {
    Ok(QTRational::from_poly(QTPolynomial::from_q_as_t(&super::q_integer(s)?)))
}

impl From<QPolynomial> for QTRational {
    fn from(p: QPolynomial) -> Self {
        Self::from_poly(QTPolynomial::from_q(&p))
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &QTPolynomial| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
