use std::collections::BTreeMap;

use crate::coeff::{Coefficient, QTRational};
use crate::plethysm::{pleth_eval_plain, Alphabet};
use crate::symfunc::{biexponent, homogeneous, schur, straighten, to_basis, Basis, Partition, SymFunc};

use super::{c_of, qt_pow_q, shifted_product, OpError};

type SchurCombination<C> = BTreeMap<Partition, C>;

fn add_into<C: Coefficient>(out: &mut SchurCombination<C>, lambda: Partition, c: C) {
    let e = out.entry(lambda).or_insert_with(C::zero);
    *e = e.add(&c);
}

fn padded(mu: &Partition, len: usize) -> Vec<i64> {
    (0..len).map(|i| mu.part(i) as i64).collect()
}

/// `R_v s_μ[X_n] = Σ_i q^(v + μ_i + n - i) s_(μ + v e_i)`, straightened.
pub fn apply_r_v<C: Coefficient>(
    v: i64,
    mu: &Partition,
    n: usize,
) -> Result<SchurCombination<C>, OpError> {
    if n < mu.len() || v < 0 {
        return Err(OpError::Invalid(format!("R_{v} on {mu} in {n} variables")));
    }
    let mut out = SchurCombination::new();
    let base = padded(mu, n);
    for i in 0..n {
        let mut alpha = base.clone();
        alpha[i] += v;
        if let Some((sign, lambda)) = straighten(&alpha) {
            let e = v + base[i] + (n - 1 - i) as i64;
            let c: C = c_of(&qt_pow_q(e))?;
            add_into(&mut out, lambda, if sign < 0 { c.neg() } else { c });
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// `χ(v=0) P/(1-q) + q^(n+v)/(q-1) P[X_n - (1-q)/z] Ω[(1-1/q) z X_n] |_(z^v)`,
/// computed in `Λ` and restricted to `n` variables.
pub fn raising_plethystic<C: Coefficient>(
    p: &SymFunc<C>,
    v: i64,
    n: usize,
) -> Result<SchurCombination<C>, OpError> {
    let one = QTRational::one();
    let q = QTRational::q();
    let shift = q.sub(&one);
    let alpha = one.sub(&qt_pow_q(-1));
    let mut acc = shifted_product(p, &shift, v, |r| {
        let h: SymFunc<C> = homogeneous(r);
        Ok(pleth_eval_plain(&h, &Alphabet::scaled_x(alpha.clone()))?)
    })?;
    acc = acc.scale(&c_of(&qt_pow_q(n as i64 + v).try_div(&q.sub(&one))?)?);
    if v == 0 {
        acc.add_assign(&p.scale(&c_of(&one.try_div(&one.sub(&q))?)?));
    }
    let mut out = to_basis(&acc, Basis::Schur);
    out.retain(|l, _| l.len() <= n);
    Ok(out)
}

/// Both sides of the `u`-fold identity
/// `q^(uv) s_μ[X - (1-q^u)/z] Ω[(1-q^(-u)) zX] |_(z^v)
///   = (q^u - 1) Σ_(i ≤ |μ|+v) q^(u(p_i + v - i)) s_(p + v e_i)`.
pub fn substituted_form<C: Coefficient>(
    mu: &Partition,
    u: i64,
    v: i64,
) -> Result<(SchurCombination<C>, SchurCombination<C>), OpError> {
    if u < 1 || v < 1 {
        return Err(OpError::Invalid(format!("u = {u}, v = {v} must be positive")));
    }
    let one = QTRational::one();
    let qu = qt_pow_q(u);
    let alpha = one.sub(&qt_pow_q(-u));
    let s: SymFunc<C> = schur(mu);
    let lhs = shifted_product(&s, &qu.sub(&one), v, |r| {
        let h: SymFunc<C> = homogeneous(r);
        Ok(pleth_eval_plain(&h, &Alphabet::scaled_x(alpha.clone()))?)
    })?
    .scale(&c_of(&qt_pow_q(u * v))?);

    let len = mu.size() as usize + v as usize;
    let p = padded(mu, len);
    let pre = qu.sub(&one);
    let mut rhs = SchurCombination::new();
    for i in 0..len {
        let mut alpha = p.clone();
        alpha[i] += v;
        if let Some((sign, lambda)) = straighten(&alpha) {
            let c = pre.mul(&qt_pow_q(u * (p[i] + v - (i as i64 + 1))));
            let c: C = c_of(&c)?;
            add_into(&mut rhs, lambda, if sign < 0 { c.neg() } else { c });
        }
    }
    rhs.retain(|_, c| !c.is_zero());
    Ok((to_basis(&lhs, Basis::Schur), rhs))
}

/// `s_λ[X/(1-q)]`.
pub fn modified_schur<C: Coefficient>(lambda: &Partition) -> Result<SymFunc<C>, OpError> {
    let a = QTRational::one().try_div(&QTRational::one().sub(&QTRational::q()))?;
    let s: SymFunc<C> = schur(lambda);
    Ok(pleth_eval_plain(&s, &Alphabet::scaled_x(a))?)
}

/// `Σ c_λ s_λ[X/(1-q)]`.
pub fn expand_modified<C: Coefficient>(combo: &SchurCombination<C>) -> Result<SymFunc<C>, OpError> {
    let mut acc = SymFunc::zero();
    for (lambda, c) in combo {
        acc.add_assign(&modified_schur::<C>(lambda)?.scale(c));
    }
    Ok(acc)
}

/// Coefficients of `D_(u,v) s_μ[X/(1-q)]` on the basis `s_λ[X/(1-q)]`:
/// `(q^u - 1) Σ_(i ≤ |μ|+v) q^(u p_i + v - u i) s_(p + v e_i)`.
pub fn action_on_modified_schur<C: Coefficient>(
    mu: &Partition,
    u: i64,
    v: i64,
) -> Result<SchurCombination<C>, OpError> {
    if u < 1 || v < 1 {
        return Err(OpError::Invalid(format!(
            "u = {u}, v = {v} must be positive; v = 0 is the eigenvalue case"
        )));
    }
    let len = mu.size() as usize + v as usize;
    let p = padded(mu, len);
    let pre = qt_pow_q(u).sub(&QTRational::one());
    let mut out = SchurCombination::new();
    for i in 0..len {
        let mut alpha = p.clone();
        alpha[i] += v;
        if let Some((sign, lambda)) = straighten(&alpha) {
            let c = pre.mul(&qt_pow_q(u * p[i] + v - u * (i as i64 + 1)));
            let c: C = c_of(&c)?;
            add_into(&mut out, lambda, if sign < 0 { c.neg() } else { c });
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// `1 - (1 - q^(-u))(1 - q^u) B_μ(q^u, q^(-u))`.
pub fn eigenvalue_d_u0<C: Coefficient>(mu: &Partition, u: i64) -> Result<C, OpError> {
    if u < 1 {
        return Err(OpError::Invalid(format!("u = {u} must be positive")));
    }
    let one = QTRational::one();
    let b = biexponent(mu, &qt_pow_q(u), &qt_pow_q(-u));
    let x = one.sub(&one.sub(&qt_pow_q(-u)).mul(&one.sub(&qt_pow_q(u))).mul(&b));
    c_of(&x)
}
