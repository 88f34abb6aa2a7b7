//! Plethystic substitution into alphabets `a(z) + b(z) X`, and plethystic
//! exponentials as truncated series in the auxiliary variable `z`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::coeff::{CoeffError, Coefficient, QTRational, Rational};
use crate::symfunc::{homogeneous, Partition, SymError, SymFunc};

/// Largest `|z|` exponent allowed in any intermediate result.
pub const Z_GUARD: i64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlethError {
    #[error("z^{v} lies outside the exact window (known through z^{hi})")]
    WindowOutsideExact { v: i64, hi: i64 },
    #[error("z exponent {0} exceeds the guard")]
    ZGuard(i64),
    #[error("unsupported alphabet: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// A Laurent polynomial in `z` with coefficients in `Q(q,t)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZLaurent {
    terms: BTreeMap<i64, QTRational>,
}

impl ZLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c z^e`.
    pub fn monomial(c: QTRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn constant(c: QTRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let v = terms.remove(e).unwrap_or_default().add(c);
            if !v.is_zero() {
                terms.insert(*e, v);
            }
        }
        Self { terms }
    }

    pub fn scale(&self, c: &QTRational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (*e, a.mul(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &QTRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }
}

/// The alphabet `a(z) + b(z) X`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Alphabet {
    pub scalar: ZLaurent,
    pub x: ZLaurent,
}

impl Alphabet {
    /// `X`.
    pub fn x() -> Self {
        Self::scaled_x(QTRational::one())
    }

    /// `c X`.
    pub fn scaled_x(c: QTRational) -> Self {
        Self {
            scalar: ZLaurent::zero(),
            x: ZLaurent::constant(c),
        }
    }

    /// `c z^e X`.
    pub fn z_x(c: QTRational, e: i64) -> Self {
        Self {
            scalar: ZLaurent::zero(),
            x: ZLaurent::monomial(c, e),
        }
    }

    /// The scalar alphabet `c z^e`.
    pub fn scalar(c: QTRational, e: i64) -> Self {
        Self {
            scalar: ZLaurent::monomial(c, e),
            x: ZLaurent::zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            scalar: self.scalar.add(&other.scalar),
            x: self.x.add(&other.x),
        }
    }

    pub fn depends_on_z(&self) -> bool {
        self.scalar
            .terms()
            .chain(self.x.terms())
            .any(|(e, _)| *e != 0)
    }

    /// `p_k[A] = a(z^k)^(k) + b(z^k)^(k) p_k`, where `^(k)` raises `q, t` to
    /// their `k`-th powers. Terms are `(z exponent, coefficient, carries p_k)`.
    fn power_image(&self, k: u32) -> Vec<(i64, QTRational, bool)> {
        let mut out = Vec::new();
        for (e, c) in self.scalar.terms() {
            out.push((e * k as i64, c.adams(k), false));
        }
        for (e, c) in self.x.terms() {
            out.push((e * k as i64, c.adams(k), true));
        }
        out
    }
}

/// A Laurent series in `z` with symmetric function coefficients.
///
/// When `hi` is `None` the series is a Laurent polynomial and exact at every
/// power. Otherwise coefficients are exact through `z^hi` and unknown above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries<C> {
    terms: BTreeMap<i64, SymFunc<C>>,
    hi: Option<i64>,
}

impl<C: Coefficient> ZSeries<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
            hi: None,
        }
    }

    pub fn constant(f: SymFunc<C>) -> Self {
        let mut s = Self::zero();
        s.add_at(0, &f);
        s
    }

    fn add_at(&mut self, e: i64, f: &SymFunc<C>) {
        if f.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        entry.add_assign(f);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn exact_through(&self) -> Option<i64> {
        self.hi
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &SymFunc<C>)> {
        self.terms.iter()
    }

    /// Lowest power that can be nonzero.
    fn lo(&self) -> Option<i64> {
        self.terms
            .keys()
            .next()
            .copied()
            .or(self.hi.map(|h| h + 1))
    }

    fn truncate(mut self, hi: Option<i64>) -> Self {
        if let Some(h) = hi {
            self.terms.retain(|e, _| *e <= h);
        }
        self.hi = hi;
        self
    }

    fn product_window(&self, other: &Self) -> Option<i64> {
        let cand = |a: &Self, b: &Self| match (a.hi, b.lo()) {
            (Some(h), Some(l)) => Some(h + l),
            (Some(h), None) => Some(h),
            _ => None,
        };
        match (cand(self, other), cand(other, self)) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let hi = self.product_window(other);
        let mut out = Self::zero();
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                if hi.is_some_and(|h| a + b > h) {
                    continue;
                }
                out.add_at(a + b, &f.mul(g));
            }
        }
        out.truncate(hi)
    }

    pub fn add(&self, other: &Self) -> Self {
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = self.clone();
        for (e, f) in &other.terms {
            out.add_at(*e, f);
        }
        out.truncate(hi)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, f)| (*e, f.scale(c)))
                .filter(|(_, f)| !f.is_zero())
                .collect(),
            hi: self.hi,
        }
    }

    /// Coefficient of `z^v`.
    pub fn coefficient(&self, v: i64) -> Result<SymFunc<C>, PlethError> {
        if let Some(hi) = self.hi {
            if v > hi {
                return Err(PlethError::WindowOutsideExact { v, hi });
            }
        }
        Ok(self.terms.get(&v).cloned().unwrap_or_default())
    }

    /// Coefficient of `z^v` in `self * other`, without forming the product.
    pub fn product_coefficient(&self, other: &Self, v: i64) -> Result<SymFunc<C>, PlethError> {
        if let Some(hi) = self.product_window(other) {
            if v > hi {
                return Err(PlethError::WindowOutsideExact { v, hi });
            }
        }
        let mut acc = SymFunc::zero();
        for (a, f) in &self.terms {
            if let Some(g) = other.terms.get(&(v - a)) {
                acc.add_assign(&f.mul(g));
            }
        }
        Ok(acc)
    }
}

/// `z_coefficient(S, v)`.
pub fn z_coefficient<C: Coefficient>(s: &ZSeries<C>, v: i64) -> Result<SymFunc<C>, PlethError> {
    s.coefficient(v)
}

type Expansion<C> = BTreeMap<(i64, Partition), C>;
/// `(z exponent, coefficient, p_k index)` terms of `p_k[A]`.
type Factor<C> = (i64, C, Option<u32>);

/// Images `p_λ[A]`, memoised on prefixes of `λ`.
struct PowerImages<C> {
    factors: HashMap<u32, Vec<Factor<C>>>,
    memo: HashMap<Partition, Arc<Expansion<C>>>,
    alphabet: Alphabet,
}

impl<C: Coefficient> PowerImages<C> {
    fn new(alphabet: &Alphabet) -> Self {
        Self {
            factors: HashMap::new(),
            memo: HashMap::new(),
            alphabet: alphabet.clone(),
        }
    }

    fn factor(&mut self, k: u32) -> Result<&[Factor<C>], PlethError> {
        if !self.factors.contains_key(&k) {
            let mut v = Vec::new();
            for (e, c, with_p) in self.alphabet.power_image(k) {
                if e.abs() > Z_GUARD {
                    return Err(PlethError::ZGuard(e));
                }
                v.push((e, C::from_qt(&c)?, with_p.then_some(k)));
            }
            self.factors.insert(k, v);
        }
        Ok(&self.factors[&k])
    }

    fn image(&mut self, lambda: &Partition) -> Result<Arc<Expansion<C>>, PlethError> {
        if let Some(v) = self.memo.get(lambda) {
            return Ok(v.clone());
        }
        let out = if lambda.is_empty() {
            let mut e = Expansion::new();
            e.insert((0, Partition::empty()), C::one());
            e
        } else {
            let parts = lambda.parts();
            let last = *parts.last().unwrap();
            let prefix = Partition::new(parts[..parts.len() - 1].to_vec());
            let base = self.image(&prefix)?;
            let factor = self.factor(last)?.to_vec();
            let mut e = Expansion::new();
            for ((z, mu), c) in base.iter() {
                for (fz, fc, fp) in &factor {
                    let nz = z + fz;
                    if nz.abs() > Z_GUARD {
                        return Err(PlethError::ZGuard(nz));
                    }
                    let nu = match fp {
                        Some(k) => mu.union(&Partition::row(*k)),
                        None => mu.clone(),
                    };
                    let v = c.mul(fc);
                    let slot = e.entry((nz, nu)).or_insert_with(C::zero);
                    *slot = slot.add(&v);
                }
            }
            e.retain(|_, c| !c.is_zero());
            e
        };
        let out = Arc::new(out);
        self.memo.insert(lambda.clone(), out.clone());
        Ok(out)
    }
}

fn collect<C: Coefficient>(
    images: &mut PowerImages<C>,
    f: &SymFunc<C>,
    hi: Option<i64>,
) -> Result<ZSeries<C>, PlethError> {
    let mut by_z: BTreeMap<i64, SymFunc<C>> = BTreeMap::new();
    for (lambda, c) in f.terms() {
        let img = images.image(lambda)?;
        for ((z, mu), d) in img.iter() {
            if hi.is_some_and(|h| *z > h) {
                continue;
            }
            by_z.entry(*z).or_default().add_term(mu.clone(), d.mul(c));
        }
    }
    by_z.retain(|_, f| !f.is_zero());
    Ok(ZSeries { terms: by_z, hi })
}

/// `F[A]` as a Laurent polynomial in `z`.
pub fn pleth_eval<C: Coefficient>(f: &SymFunc<C>, a: &Alphabet) -> Result<ZSeries<C>, PlethError> {
    collect(&mut PowerImages::new(a), f, None)
}

/// `F[A]` for an alphabet without `z`.
pub fn pleth_eval_plain<C: Coefficient>(f: &SymFunc<C>, a: &Alphabet) -> Result<SymFunc<C>, PlethError> {
    if a.depends_on_z() {
        return Err(PlethError::Unsupported("alphabet depends on z".into()));
    }
    pleth_eval(f, a)?.coefficient(0)
}

/// `p_k[A]`.
pub fn pleth_power<C: Coefficient>(k: u32, a: &Alphabet) -> Result<ZSeries<C>, PlethError> {
    pleth_eval(&SymFunc::p(Partition::row(k)), a)
}

/// `F[[m]_q]`, the principal specialization at `m` letters.
pub fn principal_specialization<C: Coefficient>(f: &SymFunc<C>, m: i64) -> Result<C, PlethError> {
    let a = Alphabet::scalar(crate::coeff::qt_integer_q(m)?, 0);
    let s = pleth_eval_plain(f, &a)?;
    Ok(s.coeff(&Partition::empty()))
}

/// `Ω[A] = Σ_n h_n[A]` truncated so coefficients are exact through the
/// returned window.
///
/// The `X` part must carry only positive powers of `z`; the window is then
/// through `z^((degree_bound + 1) j - 1)` with `j` its lowest power. Scalar
/// terms may sit at `z^0` (closed form) or at positive powers. An alphabet
/// with no `X` part is expanded through `z^degree_bound`.
pub fn omega_series<C: Coefficient>(a: &Alphabet, degree_bound: u32) -> Result<ZSeries<C>, PlethError> {
    if a.scalar.terms().chain(a.x.terms()).any(|(e, _)| *e < 0) {
        return Err(PlethError::Unsupported(
            "Ω needs nonnegative powers of z".into(),
        ));
    }
    if a.x.terms().any(|(e, _)| *e == 0) {
        return Err(PlethError::Unsupported(
            "Ω needs the X part to carry positive powers of z".into(),
        ));
    }
    let hi = match a.x.min_exp() {
        Some(j) => (degree_bound as i64 + 1) * j - 1,
        None => degree_bound as i64,
    };
    if hi > Z_GUARD {
        return Err(PlethError::ZGuard(hi));
    }
    let constant = a.scalar.terms.get(&0).cloned().unwrap_or_default();
    let c0 = C::from_qt(&constant.omega()?)?;
    let mut out = ZSeries {
        terms: BTreeMap::new(),
        hi: Some(hi),
    };
    out.add_at(0, &SymFunc::constant(c0));

    let mut rest = a.clone();
    rest.scalar.terms.remove(&0);
    for part in [
        Alphabet {
            scalar: ZLaurent::zero(),
            x: rest.x.clone(),
        },
        Alphabet {
            scalar: rest.scalar.clone(),
            x: ZLaurent::zero(),
        },
    ] {
        let Some(j) = part.x.min_exp().or(part.scalar.min_exp()) else {
            continue;
        };
        let mut images = PowerImages::new(&part);
        let mut sum = ZSeries {
            terms: BTreeMap::new(),
            hi: Some(hi),
        };
        for n in 0..=(hi / j) {
            let hn: SymFunc<C> = homogeneous(n);
            sum = sum.add(&collect(&mut images, &hn, Some(hi))?);
        }
        out = out.mul(&sum);
    }
    Ok(out)
}

/// `Σ_λ p_λ[A] / z_λ` restricted to `|λ| <= degree_bound`, for comparison
/// with [`omega_series`].
pub fn omega_by_power_sums<C: Coefficient>(
    a: &Alphabet,
    degree_bound: u32,
    hi: i64,
) -> Result<ZSeries<C>, PlethError> {
    let mut f = SymFunc::zero();
    for n in 0..=degree_bound {
        for lambda in crate::symfunc::partitions(n) {
            let z = Rational::from_integer(lambda.z());
            f.add_term(lambda, C::from_rational(&(Rational::from_integer(1.into()) / z)));
        }
    }
    collect(&mut PowerImages::new(a), &f, Some(hi))
}
