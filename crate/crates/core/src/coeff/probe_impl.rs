use super::probe::{point_is_t_inverse, Probe};
use super::{CoeffError, Coefficient, CoefficientMode, QTRational, Rational};

impl Coefficient for Probe {
    const MODE: CoefficientMode = CoefficientMode::Probe;

    fn zero() -> Self {
        Probe::zero()
    }
    fn one() -> Self {
        Probe::one()
    }
    fn is_zero(&self) -> bool {
        Probe::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Probe::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Probe::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Probe::mul(self, o)
    }
    fn neg(&self) -> Self {
        Probe::neg(self)
    }
    fn try_div(&self, o: &Self) -> Result<Self, CoeffError> {
        Probe::try_div(self, o)
    }
    fn scale(&self, c: &Rational) -> Self {
        self.mul(&Probe::from_rational(c))
    }
    fn from_rational(c: &Rational) -> Self {
        Probe::from_rational(c)
    }
    fn from_qt(x: &QTRational) -> Result<Self, CoeffError> {
        Probe::from_qt(x)
    }
    fn t_is_q_inverse() -> bool {
        point_is_t_inverse()
    }
}
