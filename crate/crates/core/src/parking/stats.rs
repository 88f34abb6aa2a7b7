use std::cmp::Ordering;

use crate::symfunc::{Composition, Partition};

use super::{ParkingFunction, RationalDyckPath};

/// Statistics of a parking function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PFStats {
    pub area: i64,
    pub coarea: i64,
    pub tdinv: i64,
    pub dinv: i64,
    pub ret: i64,
    /// Cars from highest to lowest rank.
    pub word: Vec<u32>,
    pub pides: Composition,
    pub touch: Composition,
    /// `rank` of each car, indexed by car minus one.
    pub ranks: Vec<i64>,
}

/// `rank(x, y) = km y - kn x + ⌊x/m⌋`.
pub fn rank(k: i64, m: i64, n: i64, x: i64, y: i64) -> i64 {
    k * m * y - k * n * x + x.div_euclid(m)
}

/// `a/b` against `m/n` with `0/0 = 0` and `x/0 = ∞`.
fn cmp_ratio(a: i64, b: i64, m: i64, n: i64) -> Ordering {
    if b == 0 {
        return if a == 0 { 0.cmp(&m) } else { Ordering::Greater };
    }
    (a * n).cmp(&(m * b))
}

fn area(path: &RationalDyckPath) -> i64 {
    let r = path.rect();
    path.columns()
        .iter()
        .enumerate()
        .map(|(y, &x)| (r.m * y as i64).div_euclid(r.n) - x)
        .sum()
}

/// Number of cells in `λ(path)` that correct `tdinv` into `dinv`, with its
/// sign.
fn dinv_correction(lambda: &Partition, m: i64, n: i64) -> i64 {
    let mut count = 0;
    for (row, col) in lambda.cells() {
        let (arm, leg) = lambda.arm_leg(row, col);
        let (arm, leg) = (arm as i64, leg as i64);
        let first = cmp_ratio(arm, leg, m, n);
        let second = cmp_ratio(arm + 1, leg + 1, m, n);
        let hit = match m.cmp(&n) {
            Ordering::Less => first != Ordering::Greater && second == Ordering::Greater,
            Ordering::Greater => first == Ordering::Greater && second != Ordering::Greater,
            Ordering::Equal => false,
        };
        if hit {
            count += 1;
        }
    }
    match m.cmp(&n) {
        Ordering::Less => -count,
        _ => count,
    }
}

pub fn statistics(pf: &ParkingFunction) -> PFStats {
    let path = pf.path();
    let r = path.rect();
    let (k, m, n) = (r.k, r.m, r.n);
    let km = r.km();
    let kn = r.kn() as usize;
    let mut ranks = vec![0i64; kn];
    for (y, (&x, &car)) in path.columns().iter().zip(pf.cars()).enumerate() {
        ranks[car as usize - 1] = rank(k, m, n, x, y as i64);
    }
    let mut tdinv = 0;
    for i in 0..kn {
        for j in i + 1..kn {
            if ranks[i] < ranks[j] && ranks[j] < ranks[i] + km {
                tdinv += 1;
            }
        }
    }
    let dinv = tdinv + dinv_correction(&path.lambda(), m, n);
    let mut word: Vec<u32> = (1..=kn as u32).collect();
    word.sort_by_key(|&c| std::cmp::Reverse(ranks[c as usize - 1]));
    let descents: Vec<u32> = (1..kn as u32)
        .filter(|&i| ranks[i as usize] > ranks[i as usize - 1])
        .collect();
    let touches = path.touches();
    let mut touch = Vec::with_capacity(touches.len());
    let mut prev = 0;
    for &i in &touches {
        touch.push((i - prev) as u32);
        prev = i;
    }
    let coarea: i64 = path.columns().iter().sum();
    PFStats {
        area: area(path),
        coarea,
        tdinv,
        dinv,
        ret: touches[0],
        word,
        pides: Composition::from_descents(kn as u32, &descents),
        touch: Composition::new(touch),
        ranks,
    }
}

/// Cells `c` of `λ(path)` with `arm/(leg+1) ≤ m/n < (arm+1)/leg`.
pub fn dyck_dinv(path: &RationalDyckPath) -> i64 {
    let r = path.rect();
    let lambda = path.lambda();
    lambda
        .cells()
        .filter(|&(row, col)| {
            let (arm, leg) = lambda.arm_leg(row, col);
            let (arm, leg) = (arm as i64, leg as i64);
            cmp_ratio(arm, leg + 1, r.m, r.n) != Ordering::Greater
                && cmp_ratio(arm + 1, leg, r.m, r.n) == Ordering::Greater
        })
        .count() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::{enumerate_parking_functions, enumerate_paths, Rectangle};

    #[test]
    fn small_statistics() {
        let paths = enumerate_paths(1, 2, 3).unwrap();
        assert_eq!(dyck_dinv(&paths[0]), 0);
        assert_eq!(dyck_dinv(&paths[1]), 1);
        let corner = &paths[0];
        let pf = &enumerate_parking_functions(corner)[0];
        let s = statistics(pf);
        assert_eq!((s.area, s.coarea, s.ret), (1, 0, 1));
        assert_eq!(s.ranks, [0, 2, 4]);
        assert_eq!(s.word, [3, 2, 1]);
    }

    #[test]
    fn ratio_conventions() {
        assert_eq!(cmp_ratio(0, 0, 2, 3), Ordering::Less);
        assert_eq!(cmp_ratio(1, 0, 2, 3), Ordering::Greater);
        assert_eq!(cmp_ratio(2, 3, 2, 3), Ordering::Equal);
    }

    #[test]
    fn square_has_no_correction() {
        let rect = Rectangle::new(3, 1, 1).unwrap();
        let path = super::super::RationalDyckPath::from_columns(rect, vec![0, 0, 1]).unwrap();
        assert_eq!(dinv_correction(&path.lambda(), 1, 1), 0);
    }
}
