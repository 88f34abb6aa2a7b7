use crate::coeff::Coefficient;
use crate::symfunc::{partitions, Composition, Partition, SymFunc};

use super::{multiplier_q0k, Engine, OpError};

/// `Σ_λ c_λ Q_(λ_1 m, λ_1 n) ⋯ Q_(λ_ℓ m, λ_ℓ n)`, rightmost factor first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposedOperator<C> {
    pub m: i64,
    pub n: i64,
    pub terms: Vec<(Partition, C)>,
}

impl<C: Coefficient> ComposedOperator<C> {
    pub fn apply(&self, engine: &Engine<C>, f: &SymFunc<C>) -> Result<SymFunc<C>, OpError> {
        let mut acc = SymFunc::zero();
        for (lambda, c) in &self.terms {
            let mut g = f.clone();
            for &part in lambda.parts().iter().rev() {
                let part = part as i64;
                g = engine.q(part * self.m, part * self.n, &g)?;
            }
            acc.add_assign(&g.scale(c));
        }
        Ok(acc)
    }
}

/// Coefficients `c_λ` with `F = Σ_λ c_λ Π_i Q_(0,λ_i)` for `F` homogeneous of
/// degree `k`.
pub fn solve_in_multipliers<C: Coefficient>(
    f: &SymFunc<C>,
    k: u32,
) -> Result<Vec<(Partition, C)>, OpError> {
    if !f.is_zero() && (!f.is_homogeneous() || f.max_degree() != k) {
        return Err(OpError::NotHomogeneous(k));
    }
    let basis: Vec<Partition> = partitions(k);
    let rows: Vec<Partition> = partitions(k);
    let dim = basis.len();
    let mut products = Vec::with_capacity(dim);
    for lambda in &basis {
        let mut g = SymFunc::one();
        for &part in lambda.parts() {
            g = g.mul(&multiplier_q0k(part as i64)?);
        }
        products.push(g);
    }
    // augmented matrix, rows indexed by power sums
    let mut a: Vec<Vec<C>> = rows
        .iter()
        .map(|rho| {
            let mut row: Vec<C> = products.iter().map(|g| g.coeff(rho)).collect();
            row.push(f.coeff(rho));
            row
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| OpError::Assertion(format!("multiplier products singular in degree {k}")))?;
        a.swap(col, pivot);
        let inv = C::one().try_div(&a[col][col])?;
        for x in a[col].iter_mut() {
            *x = x.mul(&inv);
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = x.sub(&factor.mul(p));
                }
            }
        }
    }
    Ok(basis
        .into_iter()
        .zip(a)
        .map(|(lambda, row)| (lambda, row[dim].clone()))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// `F_(km,kn)` for `F` homogeneous of degree `k`.
pub fn compositional_operator<C: Coefficient>(
    f: &SymFunc<C>,
    m: i64,
    n: i64,
    k: u32,
) -> Result<ComposedOperator<C>, OpError> {
    Ok(ComposedOperator {
        m,
        n,
        terms: solve_in_multipliers(f, k)?,
    })
}

/// `C_(p_1) ⋯ C_(p_ℓ) 1`.
pub fn c_composition<C: Coefficient>(
    engine: &Engine<C>,
    p: &Composition,
) -> Result<SymFunc<C>, OpError> {
    let mut g = SymFunc::one();
    for &part in p.parts().iter().rev() {
        g = engine.c_a(part as i64, &g)?;
    }
    Ok(g)
}
