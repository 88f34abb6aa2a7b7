use num_integer::Integer;

use super::OpError;

/// `(m, n) = (a, b) + (c, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SplitResult {
    pub ab: (i64, i64),
    pub cd: (i64, i64),
}

impl SplitResult {
    pub fn determinant(&self) -> i64 {
        self.ab.0 * self.cd.1 - self.ab.1 * self.cd.0
    }
}

/// `Split(m, n)` for coprime `m ≥ 2`: `(a, b)` is the lattice point closest to
/// and strictly below the segment, i.e. `a n - b m = 1` with `1 ≤ a < m`.
pub fn split(m: i64, n: i64) -> Result<SplitResult, OpError> {
    if m <= 1 || n < 0 {
        return Err(OpError::BaseCase { m, n });
    }
    if m.gcd(&n) != 1 {
        return Err(OpError::NotCoprime { m, n });
    }
    let a = (1..m)
        .find(|a| (a * n - 1).rem_euclid(m) == 0)
        .expect("coprime pair has an inverse");
    let b = (a * n - 1) / m;
    Ok(SplitResult {
        ab: (a, b),
        cd: (m - a, n - b),
    })
}

/// The split point of the primitive vector `(m, n)`, with `(1, n - 1)` for
/// `m = 1`.
fn primitive_point(m: i64, n: i64) -> Result<(i64, i64), OpError> {
    if m == 1 {
        if n < 1 {
            return Err(OpError::BaseCase { m, n });
        }
        return Ok((1, n - 1));
    }
    Ok(split(m, n)?.ab)
}

/// The fixed choice for `(km, kn)`: `(a, b)` from the primitive split and
/// `(c', d') = ((k-1)a + kc, (k-1)b + kd)`, which has determinant `k`.
pub fn split_noncoprime(k: i64, m: i64, n: i64) -> Result<SplitResult, OpError> {
    if k < 2 {
        return Err(OpError::Invalid(format!("k = {k} needs k ≥ 2")));
    }
    if m < 1 || m.gcd(&n) != 1 {
        return Err(OpError::NotCoprime { m, n });
    }
    let (a, b) = primitive_point(m, n)?;
    Ok(SplitResult {
        ab: (a, b),
        cd: (k * m - a, k * n - b),
    })
}

/// Every lattice point strictly below and closest to the segment to
/// `(km, kn)`, as splits.
pub fn admissible_splits(k: i64, m: i64, n: i64) -> Result<Vec<SplitResult>, OpError> {
    let (a0, b0) = primitive_point(m, n)?;
    Ok((0..k)
        .map(|j| {
            let ab = (a0 + j * m, b0 + j * n);
            SplitResult {
                ab,
                cd: (k * m - ab.0, k * n - ab.1),
            }
        })
        .collect())
}
