//! The operators `D_k`, `D_(u,v)`, `C_a`, `R_v`, the `Q_(m,n)` recursion and
//! the compositional construction built from them.

mod compositional;
mod raising;
mod split;
mod targets;

use std::collections::HashMap;
use std::sync::RwLock;

use num_integer::Integer;

use crate::coeff::{qt_integer_q, qt_integer_t, CoeffError, Coefficient, QTRational};
use crate::plethysm::{pleth_eval, pleth_eval_plain, Alphabet, PlethError};
use crate::symfunc::{elementary, homogeneous, schur, Partition, SymError, SymFunc};

pub use compositional::{c_composition, compositional_operator, solve_in_multipliers, ComposedOperator};
pub use raising::{
    action_on_modified_schur, apply_r_v, eigenvalue_d_u0, expand_modified, modified_schur,
    raising_plethystic, substituted_form,
};
pub use split::{admissible_splits, split, split_noncoprime, SplitResult};
pub use targets::{commutator_check, enk_target, Comparison, EnkTarget};

pub const DEFAULT_DEGREE_CAP: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: i64, cap: u32 },
    #[error("({m},{n}) is a base case with no split")]
    BaseCase { m: i64, n: i64 },
    #[error("({m},{n}) is not coprime")]
    NotCoprime { m: i64, n: i64 },
    #[error("invalid parameter: {0}")]
    Invalid(String),
    #[error("D_(u,v) is defined only with t = 1/q")]
    NeedsTInverse,
    #[error("expected a homogeneous symmetric function of degree {0}")]
    NotHomogeneous(u32),
    #[error("{0}")]
    Assertion(String),
    #[error(transparent)]
    Pleth(#[from] PlethError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// The operators the engine knows how to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorHandle {
    Dk(i64),
    Duv(i64, i64),
    Q(i64, i64),
    Q0k(i64),
    Ca(i64),
}

pub(crate) fn qt_pow_q(e: i64) -> QTRational {
    QTRational::monomial(1, e, 0)
}

pub(crate) fn c_of<C: Coefficient>(x: &QTRational) -> Result<C, OpError> {
    Ok(C::from_qt(x)?)
}

/// `M = (1 - t)(1 - q)`.
pub fn m_constant() -> QTRational {
    let one = QTRational::one();
    one.sub(&QTRational::t()).mul(&one.sub(&QTRational::q()))
}

/// `Σ_r G_r K_(v - r)` where `G_r` is the `z^(-r)` part of `F[X + s/z]` and
/// `K` gives the kernel coefficients.
fn shifted_product<C: Coefficient>(
    f: &SymFunc<C>,
    shift: &QTRational,
    v: i64,
    mut kernel: impl FnMut(i64) -> Result<SymFunc<C>, OpError>,
) -> Result<SymFunc<C>, OpError> {
    let mut acc = SymFunc::zero();
    if f.is_zero() {
        return Ok(acc);
    }
    let shifted = pleth_eval(f, &Alphabet::x().add(&Alphabet::scalar(shift.clone(), -1)))?;
    for (e, g) in shifted.terms() {
        let r = v - e;
        if r < 0 {
            continue;
        }
        let k = kernel(r)?;
        if !k.is_zero() {
            acc.add_assign(&g.mul(&k));
        }
    }
    Ok(acc)
}

/// `Σ_r (-1)^r e_r[c X]`, coefficient extraction of `Ω[-z c X]`.
fn signed_elementary<C: Coefficient>(r: i64, c: &QTRational) -> Result<SymFunc<C>, OpError> {
    let e: SymFunc<C> = elementary(r);
    let e = if c.is_one() {
        e
    } else {
        pleth_eval_plain(&e, &Alphabet::scaled_x(c.clone()))?
    };
    Ok(if r % 2 == 0 { e } else { e.neg() })
}

/// `(-1)^k Σ_(a=1..k) (-qt)^(1-a) s_(a,1^(k-a))`.
pub fn multiplier_q0k<C: Coefficient>(k: i64) -> Result<SymFunc<C>, OpError> {
    if k < 1 {
        return Err(OpError::Invalid(format!("Q_(0,{k}) needs k ≥ 1")));
    }
    let mqt = QTRational::q().mul(&QTRational::t()).neg();
    let mut acc = SymFunc::zero();
    for a in 1..=k {
        let mut parts = vec![a as u32];
        parts.extend(std::iter::repeat_n(1, (k - a) as usize));
        let c = mqt.pow(1 - a as i32)?;
        acc.add_assign(&schur::<C>(&Partition::new(parts)).scale(&c_of(&c)?));
    }
    Ok(if k % 2 == 0 { acc } else { acc.neg() })
}

/// `qt/(qt - 1) h_k[X(1/qt - 1)]` by direct plethysm.
pub fn multiplier_q0k_plethystic<C: Coefficient>(k: i64) -> Result<SymFunc<C>, OpError> {
    let qt = QTRational::q().mul(&QTRational::t());
    let one = QTRational::one();
    let alpha = qt.inv()?.sub(&one);
    let pre = qt.try_div(&qt.sub(&one))?;
    let h: SymFunc<C> = homogeneous(k);
    Ok(pleth_eval_plain(&h, &Alphabet::scaled_x(alpha))?.scale(&c_of(&pre)?))
}

type Memo<C> = HashMap<(i64, i64, SymFunc<C>), SymFunc<C>>;

/// Applies operators under a degree cap and memoises `Q_(m,n)` results.
pub struct Engine<C> {
    cap: u32,
    memo: RwLock<Memo<C>>,
}

impl<C: Coefficient> Default for Engine<C> {
    fn default() -> Self {
        Self::new(DEFAULT_DEGREE_CAP)
    }
}

impl<C: Coefficient> Engine<C> {
    pub fn new(cap: u32) -> Self {
        Self {
            cap,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn check_degree(&self, f: &SymFunc<C>, v: i64) -> Result<(), OpError> {
        let d = f.max_degree() as i64 + v;
        if !f.is_zero() && d > self.cap as i64 {
            return Err(OpError::DegreeCap { degree: d, cap: self.cap });
        }
        Ok(())
    }

    pub fn apply(&self, op: OperatorHandle, f: &SymFunc<C>) -> Result<SymFunc<C>, OpError> {
        match op {
            OperatorHandle::Dk(k) => self.d_k(k, f),
            OperatorHandle::Duv(u, v) => self.d_uv(u, v, f),
            OperatorHandle::Q(m, n) => self.q(m, n, f),
            OperatorHandle::Q0k(k) => Ok(f.mul(&multiplier_q0k(k)?)),
            OperatorHandle::Ca(a) => self.c_a(a, f),
        }
    }

    /// `D_k F = F[X + M/z] Ω[-zX] |_(z^k)`.
    pub fn d_k(&self, k: i64, f: &SymFunc<C>) -> Result<SymFunc<C>, OpError> {
        self.check_degree(f, k)?;
        let one = QTRational::one();
        shifted_product(f, &m_constant(), k, |r| signed_elementary(r, &one))
    }

    /// `D_(u,v) F = F[X + M[u]_q/z] Ω[-z[u]_t X] |_(z^v)`, only where `t = 1/q`.
    pub fn d_uv(&self, u: i64, v: i64, f: &SymFunc<C>) -> Result<SymFunc<C>, OpError> {
        if !C::t_is_q_inverse() {
            return Err(OpError::NeedsTInverse);
        }
        if u < 1 {
            return Err(OpError::Invalid(format!("D_({u},{v}) needs u ≥ 1")));
        }
        self.check_degree(f, v)?;
        let shift = m_constant().mul(&qt_integer_q(u)?);
        let ut = qt_integer_t(u)?;
        shifted_product(f, &shift, v, |r| signed_elementary(r, &ut))
    }

    /// `C_a F = (-1/q)^(a-1) F[X - (1 - 1/q)/z] Ω[zX] |_(z^a)`.
    pub fn c_a(&self, a: i64, f: &SymFunc<C>) -> Result<SymFunc<C>, OpError> {
        if a < 1 {
            return Err(OpError::Invalid(format!("C_{a} needs a ≥ 1")));
        }
        self.check_degree(f, a)?;
        let shift = qt_pow_q(-1).sub(&QTRational::one());
        let out = shifted_product(f, &shift, a, |r| Ok(homogeneous(r)))?;
        let pre = qt_pow_q(-1).neg().pow(a as i32 - 1)?;
        Ok(out.scale(&c_of(&pre)?))
    }

    /// `Q_(m,n) F` through the split recursion, with `Q_(1,k) = D_k` and
    /// `Q_(0,k)` acting by multiplication.
    pub fn q(&self, m: i64, n: i64, f: &SymFunc<C>) -> Result<SymFunc<C>, OpError> {
        if m < 0 || n < 0 || (m, n) == (0, 0) {
            return Err(OpError::Invalid(format!("Q_({m},{n}) is not defined")));
        }
        if m == 0 {
            return Ok(f.mul(&multiplier_q0k(n)?));
        }
        if m == 1 {
            return self.d_k(n, f);
        }
        let key = (m, n, f.clone());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let g = m.gcd(&n);
        let s = if g == 1 {
            split(m, n)?
        } else if n == 0 {
            return Err(OpError::Invalid(format!("Q_({m},0) has no split")));
        } else {
            split_noncoprime(g, m / g, n / g)?
        };
        let out = self.commutator_q(s, f)?;
        self.memo.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// `(1/M)[Q_(c,d), Q_(a,b)] F` for a given split.
    pub fn commutator_q(&self, s: SplitResult, f: &SymFunc<C>) -> Result<SymFunc<C>, OpError> {
        let (a, b) = s.ab;
        let (c, d) = s.cd;
        let left = self.q(c, d, &self.q(a, b, f)?)?;
        let right = self.q(a, b, &self.q(c, d, f)?)?;
        let inv_m = c_of::<C>(&m_constant().inv()?)?;
        Ok(left.sub(&right).scale(&inv_m))
    }

    /// `(1/M)[D_(c,d), D_(a,b)] F`.
    pub fn commutator_d(
        &self,
        (a, b): (i64, i64),
        (c, d): (i64, i64),
        f: &SymFunc<C>,
    ) -> Result<SymFunc<C>, OpError> {
        let left = self.d_uv(c, d, &self.d_uv(a, b, f)?)?;
        let right = self.d_uv(a, b, &self.d_uv(c, d, f)?)?;
        let inv_m = c_of::<C>(&m_constant().inv()?)?;
        Ok(left.sub(&right).scale(&inv_m))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }
}

/// Coefficientwise `t -> 1/q`.
pub fn specialize<C: Coefficient>(f: &SymFunc<QTRational>) -> Result<SymFunc<C>, OpError> {
    f.map_coeffs(|c| C::from_qt(c)).map_err(OpError::from)
}
