//! Probabilistic coefficients: values in `Z/p` at a random point `(q, t)`.
//!
//! Two expressions that agree exactly agree at every point. A disagreement at
//! some point proves inequality; agreement at a seeded random point is strong
//! evidence of equality.

use std::cell::Cell;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CoeffError, QTPolynomial, QTRational, Rational};

/// The Mersenne prime `2^61 - 1`.
pub const PRIME: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug)]
struct Point {
    q: u64,
    t: u64,
    t_is_q_inverse: bool,
}

thread_local! {
    static POINT: Cell<Option<Point>> = const { Cell::new(None) };
}

/// Restores the previous point on drop.
pub struct ProbeGuard {
    prev: Option<Point>,
}

impl Drop for ProbeGuard {
    fn drop(&mut self) {
        POINT.with(|p| p.set(self.prev));
    }
}

/// Fix the evaluation point for this thread. With `t_is_q_inverse`, `t` is
/// set to `1/q` so the `t = 1/q` operators are available.
pub fn enter(seed: u64, t_is_q_inverse: bool) -> ProbeGuard {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = rng.gen_range(2..PRIME);
    let t = if t_is_q_inverse {
        inv(q)
    } else {
        rng.gen_range(2..PRIME)
    };
    let prev = POINT.with(|p| p.replace(Some(Point { q, t, t_is_q_inverse })));
    ProbeGuard { prev }
}

fn point() -> Point {
    POINT
        .with(|p| p.get())
        .expect("probe coefficients used outside probe::enter")
}

pub(crate) fn point_is_t_inverse() -> bool {
    POINT.with(|p| p.get()).is_some_and(|p| p.t_is_q_inverse)
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    powmod(a, PRIME - 2)
}

fn reduce_bigint(n: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    n.mod_floor(&p).to_u64().unwrap()
}

/// An element of `Z/p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Probe(u64);

impl Probe {
    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn zero() -> Self {
        Self(0)
    }

    pub fn one() -> Self {
        Self(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self((self.0 + o.0) % PRIME)
    }

    pub fn neg(&self) -> Self {
        Self((PRIME - self.0) % PRIME)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self(mulmod(self.0, o.0))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, CoeffError> {
        if o.0 == 0 {
            return Err(CoeffError::DivisionByZero("probe value vanishes".into()));
        }
        Ok(Self(mulmod(self.0, inv(o.0))))
    }

    pub fn from_rational(c: &Rational) -> Self {
        let d = reduce_bigint(c.denom());
        assert!(d != 0, "denominator divisible by the probe prime");
        Self(mulmod(reduce_bigint(c.numer()), inv(d)))
    }

    fn pow_signed(base: u64, e: i64) -> u64 {
        if e >= 0 {
            powmod(base, e as u64)
        } else {
            powmod(inv(base), e.unsigned_abs())
        }
    }

    pub fn eval_poly(p: &QTPolynomial) -> Self {
        let pt = point();
        let mut acc = Self::zero();
        for (&(i, j), c) in p.terms() {
            let m = mulmod(Self::pow_signed(pt.q, i), Self::pow_signed(pt.t, j));
            acc = acc.add(&Self(m).mul(&Self::from_rational(c)));
        }
        acc
    }

    pub fn from_qt(x: &QTRational) -> Result<Self, CoeffError> {
        let d = Self::eval_poly(x.denominator());
        if d.is_zero() {
            return Err(CoeffError::Specialization(format!(
                "denominator of ({x}) vanishes at the probe point"
            )));
        }
        Self::eval_poly(x.numerator()).try_div(&d)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Probe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod 2^61-1)", self.0)
    }
}

/// Residue of a rational number, for comparing exact results with probes.
pub fn residue(c: &Rational) -> Option<u64> {
    let d = reduce_bigint(c.denom());
    (d != 0).then(|| Probe::from_rational(c).0)
}
