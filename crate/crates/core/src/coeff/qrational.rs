//! Rational functions in `q` alone, used for the `t = 1/q` specialization.

use std::fmt;

use num_traits::{One, Zero};

use super::{CoeffError, QPolynomial, Rational};

/// `num / den` in lowest terms with `den(0) != 0` and `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QPolynomial,
    den: QPolynomial,
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QRational {
    pub fn zero() -> Self {
        Self::from_poly(QPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPolynomial::one())
    }

    pub fn q() -> Self {
        Self::from_poly(QPolynomial::q())
    }

    pub fn from_poly(num: QPolynomial) -> Self {
        Self {
            num,
            den: QPolynomial::one(),
        }
    }

    pub fn from_rational(c: &Rational) -> Self {
        Self::from_poly(QPolynomial::constant(c.clone()))
    }

    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero(format!("({num}) / 0")));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPolynomial, den: QPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (s, den) = den.split_monomial();
        let num = num.shift(-s);
        if den.is_monomial() {
            let c = den.leading_coeff();
            return Self::from_poly(num.scale(&(Rational::one() / c)));
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
        let inv = Rational::one() / den.leading_coeff();
        Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn as_polynomial(&self) -> Option<&QPolynomial> {
        self.den.is_one().then_some(&self.num)
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

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            num: self.num.shift(e),
            den: self.den.clone(),
        }
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

    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        if q.is_zero() && self.num.low_degree() < 0 {
            return None;
        }
        let d = self.den.eval(q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q) / d)
    }

    /// `q -> q^k`.
    pub fn adams(&self, k: u32) -> Self {
        Self {
            num: self.num.adams(k),
            den: self.den.adams(k),
        }
    }
}

impl From<QPolynomial> for QRational {
    fn from(p: QPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &QPolynomial| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let num = QPolynomial::from_ints(0, &[1, 0, -1]);
        let den = QPolynomial::from_ints(2, &[2, -2]);
        let r = QRational::new(num, den).unwrap();
        assert_eq!(r, QRational::from_poly(QPolynomial::from_ints(-2, &[1, 1]).scale(&Rational::new(1.into(), 2.into()))));
        let a = QRational::new(QPolynomial::one(), QPolynomial::from_ints(0, &[1, 1])).unwrap();
        assert_eq!(a.to_string(), "1/(1 + q)");
        assert_eq!(a.add(&a).sub(&a), a);
        assert!(a.try_div(&QRational::zero()).is_err());
    }
}
