use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// An integer partition, parts weakly decreasing and positive.
///
/// Ordered first by size, then lexicographically by parts.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Partition `(n)`.
    pub fn row(n: u32) -> Self {
        Self::new(vec![n])
    }

    /// Hook `(a, 1^b)`.
    pub fn hook(a: u32, b: u32) -> Self {
        let mut v = vec![a];
        v.extend(std::iter::repeat_n(1, b as usize));
        Self::new(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let w = self.part(0);
        Self(
            (0..w)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// `z_λ = Π i^(m_i) m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut m = 0u32;
            while i < self.0.len() && self.0[i] == p {
                m += 1;
                i += 1;
                acc *= BigInt::from(p) * BigInt::from(m);
            }
        }
        acc
    }

    /// Union of parts, i.e. the index of `p_λ p_μ`.
    pub fn union(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] >= other.0[j]) {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        Self(v)
    }

    /// Remove one occurrence of part `k`.
    pub fn remove_part(&self, k: u32) -> Option<Self> {
        let pos = self.0.iter().position(|&p| p == k)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Self(v))
    }

    /// Multiplicity of part `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells `(row, column)`, 0-based, in English reading order.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i as u32, j)))
    }

    /// Arm and leg of a cell.
    pub fn arm_leg(&self, row: u32, col: u32) -> (u32, u32) {
        let arm = self.part(row as usize) - col - 1;
        let leg = self.0[row as usize + 1..]
            .iter()
            .filter(|&&p| p > col)
            .count() as u32;
        (arm, leg)
    }

    /// Dominance order `self ⊵ other` (same size assumed).
    pub fn dominates(&self, other: &Self) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn n_of(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = parse_list(s)?;
        let p = Self(parts.clone());
        if Self::new(parts) != p {
            return Err(format!("not a partition: {s}"));
        }
        Ok(p)
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("{s}: {e}")))
        .collect()
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most `len` parts.
pub fn partitions_with_length(n: u32, len: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.len() <= len).collect()
}

/// A composition: a sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Composition of `n` whose partial sums are the given set (subset of `1..n`).
    pub fn from_descents(n: u32, descents: &[u32]) -> Self {
        let mut d = descents.to_vec();
        d.sort_unstable();
        d.dedup();
        let mut parts = Vec::with_capacity(d.len() + 1);
        let mut prev = 0;
        for x in d {
            debug_assert!(x > 0 && x < n);
            parts.push(x - prev);
            prev = x;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Self(parts)
    }

    /// Partial sums, excluding the total.
    pub fn descents(&self) -> Vec<u32> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn descent_mask(&self) -> u32 {
        self.descents().iter().fold(0, |m, &d| m | (1 << (d - 1)))
    }

    pub fn from_mask(n: u32, mask: u32) -> Self {
        let d: Vec<u32> = (1..n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        Self::from_descents(n, &d)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Composition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = parse_list(s)?;
        if parts.contains(&0) {
            return Err(format!("zero part in composition {s}"));
        }
        Ok(Self(parts))
    }
}

/// All compositions of `n`, lexicographic.
pub fn compositions(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    let mut out: Vec<Composition> = (0..1u32 << (n - 1)).map(|m| Composition::from_mask(n, m)).collect();
    out.sort();
    out
}
