//! Exact coefficient arithmetic: `Q(q,t)`, its `t = 1/q` specialization, and
//! a modular probe field sharing the same interface.

mod probe_impl;
pub mod probe;
mod qpoly;
mod qrational;
mod qtpoly;
mod qtrational;
mod render;

use std::fmt;
use std::hash::Hash;

pub use probe::Probe;
pub use qpoly::{q_binomial, q_integer, QPolynomial, UnimodalityReport};
pub use qrational::QRational;
pub use qtpoly::QTPolynomial;
pub use qtrational::{qt_integer_q, qt_integer_t, QTRational};
pub use render::parse_qt;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("q-integer of negative argument {0}")]
    NegativeArgument(i64),
    #[error("not exactly divisible: {remainder}")]
    NotDivisible { remainder: String },
    #[error("plethystic exponential of {0} has a pole")]
    OmegaPole(String),
    #[error("plethystic exponential of {0} needs integer Laurent coefficients")]
    OmegaUnsupported(String),
    #[error("specialization failed: {0}")]
    Specialization(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Which coefficient field a computation ran in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum CoefficientMode {
    #[serde(rename = "exact-qt")]
    ExactQT,
    #[serde(rename = "exact-t=1/q")]
    ExactTInverse,
    #[serde(rename = "probe")]
    Probe,
}

impl fmt::Display for CoefficientMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ExactQT => "exact-qt",
            Self::ExactTInverse => "exact-t=1/q",
            Self::Probe => "probe",
        })
    }
}

/// A field containing `Q` and images of `q` and `t`.
///
/// Symbolic scalars (alphabets, multipliers) are built in `Q(q,t)` and mapped
/// in with [`Coefficient::from_qt`].
pub trait Coefficient:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const MODE: CoefficientMode;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_div(&self, other: &Self) -> Result<Self, CoeffError>;
    fn scale(&self, c: &Rational) -> Self;
    fn from_rational(c: &Rational) -> Self;
    fn from_qt(x: &QTRational) -> Result<Self, CoeffError>;

    /// Whether `t` is identified with `1/q` in this field.
    fn t_is_q_inverse() -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn q() -> Self {
        Self::from_qt(&QTRational::q()).expect("q embeds")
    }

    fn t() -> Self {
        Self::from_qt(&QTRational::t()).expect("t embeds")
    }
}

impl Coefficient for QTRational {
    const MODE: CoefficientMode = CoefficientMode::ExactQT;

    fn zero() -> Self {
        QTRational::zero()
    }
    fn one() -> Self {
        QTRational::one()
    }
    fn is_zero(&self) -> bool {
        QTRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        QTRational::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QTRational::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QTRational::mul(self, o)
    }
    fn neg(&self) -> Self {
        QTRational::neg(self)
    }
    fn try_div(&self, o: &Self) -> Result<Self, CoeffError> {
        QTRational::try_div(self, o)
    }
    fn scale(&self, c: &Rational) -> Self {
        QTRational::scale(self, c)
    }
    fn from_rational(c: &Rational) -> Self {
        QTRational::from_rational(c)
    }
    fn from_qt(x: &QTRational) -> Result<Self, CoeffError> {
        Ok(x.clone())
    }
    fn t_is_q_inverse() -> bool {
        false
    }
}

impl Coefficient for QRational {
    const MODE: CoefficientMode = CoefficientMode::ExactTInverse;

    fn zero() -> Self {
        QRational::zero()
    }
    fn one() -> Self {
        QRational::one()
    }
    fn is_zero(&self) -> bool {
        QRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        QRational::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QRational::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QRational::mul(self, o)
    }
    fn neg(&self) -> Self {
        QRational::neg(self)
    }
    fn try_div(&self, o: &Self) -> Result<Self, CoeffError> {
        QRational::try_div(self, o)
    }
    fn scale(&self, c: &Rational) -> Self {
        QRational::scale(self, c)
    }
    fn from_rational(c: &Rational) -> Self {
        QRational::from_rational(c)
    }
    fn from_qt(x: &QTRational) -> Result<Self, CoeffError> {
        x.specialize_t_to_qinv()
    }
    fn t_is_q_inverse() -> bool {
        true
    }
}

/// `t -> 1/q` on a rational function.
pub fn specialize_t_to_qinv(x: &QTRational) -> Result<QRational, CoeffError> {
    x.specialize_t_to_qinv()
}

/// Exact quotient of Laurent polynomials in `q`.
pub fn exact_quotient(a: &QPolynomial, b: &QPolynomial) -> Result<QPolynomial, CoeffError> {
    a.exact_quotient(b)
}
