//! Rational `(km, kn)` Dyck paths, parking functions and their statistics.

mod export;
mod stats;
mod sums;

use std::fmt;

use num_integer::Integer;

use crate::symfunc::SymError;

pub use export::{write_stats_csv, CSV_COLUMNS};
pub use stats::{dyck_dinv, rank, statistics, PFStats};
pub use sums::{
    catalan_side, check_catalan, increasing_labeling, touch_filtered_sum, weighted_sum, Mode,
};

pub const DEFAULT_SIZE_CAP: i64 = 14;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParkingError {
    #[error("({m},{n}) is not a coprime pair of positive integers")]
    NotCoprime { m: i64, n: i64 },
    #[error("k = {0} must be positive")]
    BadK(i64),
    #[error("rectangle {km}x{kn} exceeds the cap km + kn <= {cap}")]
    Cap { km: i64, kn: i64, cap: i64 },
    #[error("composition {0} does not sum to k")]
    BadComposition(String),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// The `km × kn` rectangle with `(m, n)` coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rectangle {
    pub k: i64,
    pub m: i64,
    pub n: i64,
}

impl Rectangle {
    pub fn new(k: i64, m: i64, n: i64) -> Result<Self, ParkingError> {
        if k < 1 {
            return Err(ParkingError::BadK(k));
        }
        if m < 1 || n < 1 || m.gcd(&n) != 1 {
            return Err(ParkingError::NotCoprime { m, n });
        }
        Ok(Self { k, m, n })
    }

    pub fn km(&self) -> i64 {
        self.k * self.m
    }

    pub fn kn(&self) -> i64 {
        self.k * self.n
    }

    pub fn check_cap(&self, cap: i64) -> Result<(), ParkingError> {
        if self.km() + self.kn() > cap {
            return Err(ParkingError::Cap {
                km: self.km(),
                kn: self.kn(),
                cap,
            });
        }
        Ok(())
    }
}

/// A lattice path from `(0,0)` to `(km, kn)` weakly above the diagonal,
/// stored as the `x` coordinate of its north step in each row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalDyckPath {
    rect: Rectangle,
    columns: Vec<i64>,
}

impl RationalDyckPath {
    /// Validates weak monotonicity and `n x_y ≤ m y`.
    pub fn from_columns(rect: Rectangle, columns: Vec<i64>) -> Option<Self> {
        if columns.len() as i64 != rect.kn() {
            return None;
        }
        let mut prev = 0;
        for (y, &x) in columns.iter().enumerate() {
            if x < prev || x > rect.km() || rect.n * x > rect.m * y as i64 {
                return None;
            }
            prev = x;
        }
        Some(Self { rect, columns })
    }

    pub fn rect(&self) -> Rectangle {
        self.rect
    }

    pub fn columns(&self) -> &[i64] {
        &self.columns
    }

    /// Step word over `N`, `E`.
    pub fn word(&self) -> String {
        let mut s = String::new();
        let mut x = 0;
        for &c in &self.columns {
            while x < c {
                s.push('E');
                x += 1;
            }
            s.push('N');
        }
        while x < self.rect.km() {
            s.push('E');
            x += 1;
        }
        s
    }

    /// Column heights, left to right, counting only columns with north steps.
    pub fn column_heights(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let mut last = None;
        for &c in &self.columns {
            if last == Some(c) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
                last = Some(c);
            }
        }
        out
    }

    /// `λ(path)`: cells left of the path, rows read from the top.
    pub fn lambda(&self) -> crate::symfunc::Partition {
        crate::symfunc::Partition::new(self.columns.iter().rev().map(|&x| x as u32).collect())
    }

    /// Indices `i ∈ 1..=k` with the path through `(im, in)`.
    pub fn touches(&self) -> Vec<i64> {
        let r = self.rect;
        (1..=r.k)
            .filter(|&i| i == r.k || self.columns[(i * r.n) as usize] == i * r.m)
            .collect()
    }
}

impl fmt::Display for RationalDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// All paths, in lexicographic order of their column vectors.
pub fn enumerate_paths(k: i64, m: i64, n: i64) -> Result<Vec<RationalDyckPath>, ParkingError> {
    let rect = Rectangle::new(k, m, n)?;
    let mut out = Vec::new();
    let mut cols = Vec::with_capacity(rect.kn() as usize);
    fn go(rect: Rectangle, cols: &mut Vec<i64>, out: &mut Vec<RationalDyckPath>) {
        let y = cols.len() as i64;
        if y == rect.kn() {
            out.push(RationalDyckPath {
                rect,
                columns: cols.clone(),
            });
            return;
        }
        let lo = cols.last().copied().unwrap_or(0);
        let hi = (rect.m * y).div_euclid(rect.n);
        for x in lo..=hi {
            cols.push(x);
            go(rect, cols, out);
            cols.pop();
        }
    }
    go(rect, &mut cols, &mut out);
    Ok(out)
}

/// A path with cars `1..=kn` on its north steps, increasing up each column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParkingFunction {
    path: RationalDyckPath,
    cars: Vec<u32>,
}

impl ParkingFunction {
    /// `cars[y]` is the car in row `y`.
    pub fn new(path: RationalDyckPath, cars: Vec<u32>) -> Option<Self> {
        let kn = path.rect.kn() as usize;
        if cars.len() != kn {
            return None;
        }
        let mut seen = vec![false; kn + 1];
        for &c in &cars {
            if c == 0 || c as usize > kn || seen[c as usize] {
                return None;
            }
            seen[c as usize] = true;
        }
        let cols = &path.columns;
        if (1..kn).any(|y| cols[y] == cols[y - 1] && cars[y] < cars[y - 1]) {
            return None;
        }
        Some(Self { path, cars })
    }

    pub fn path(&self) -> &RationalDyckPath {
        &self.path
    }

    pub fn cars(&self) -> &[u32] {
        &self.cars
    }
}

/// Every column-increasing labeling of a path.
pub fn enumerate_parking_functions(path: &RationalDyckPath) -> Vec<ParkingFunction> {
    let heights = path.column_heights();
    let kn = path.rect.kn() as u32;
    let mut out = Vec::new();
    let mut cars = Vec::with_capacity(kn as usize);
    fn go(
        heights: &[usize],
        free: &[u32],
        cars: &mut Vec<u32>,
        path: &RationalDyckPath,
        out: &mut Vec<ParkingFunction>,
    ) {
        let Some((&h, rest)) = heights.split_first() else {
            out.push(ParkingFunction {
                path: path.clone(),
                cars: cars.clone(),
            });
            return;
        };
        // choose h of the free labels, in increasing order
        let avail = free;
        let mut pick = Vec::with_capacity(h);
        fn choose(
            avail: &[u32],
            start: usize,
            h: usize,
            pick: &mut Vec<u32>,
            f: &mut dyn FnMut(&[u32]),
        ) {
            if pick.len() == h {
                f(pick);
                return;
            }
            for i in start..avail.len() {
                if avail.len() - i < h - pick.len() {
                    break;
                }
                pick.push(avail[i]);
                choose(avail, i + 1, h, pick, f);
                pick.pop();
            }
        }
        choose(avail, 0, h, &mut pick, &mut |chosen| {
            let rest_free: Vec<u32> =
                avail.iter().copied().filter(|c| !chosen.contains(c)).collect();
            let before = cars.len();
            cars.extend_from_slice(chosen);
            go(rest, &rest_free, cars, path, out);
            cars.truncate(before);
        });
    }
    let free: Vec<u32> = (1..=kn).collect();
    go(&heights, &free, &mut cars, path, &mut out);
    out
}
