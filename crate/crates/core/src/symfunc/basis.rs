//! Change of basis between power sums and the Schur, elementary, homogeneous
//! and monomial bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{Coefficient, Rational};

use super::character::table;
use super::partition::{partitions, Partition};
use super::sf::SymFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Power,
    Schur,
    Elementary,
    Homogeneous,
    Monomial,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Power,
        Basis::Schur,
        Basis::Elementary,
        Basis::Homogeneous,
        Basis::Monomial,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Power => "p",
            Basis::Schur => "s",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::Monomial => "m",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "p" | "power" => Basis::Power,
            "s" | "schur" => Basis::Schur,
            "e" | "elementary" => Basis::Elementary,
            "h" | "homogeneous" => Basis::Homogeneous,
            "m" | "monomial" => Basis::Monomial,
            _ => return Err(format!("unknown basis {s}")),
        })
    }
}

/// Sparse rational matrix indexed by partitions of one degree.
/// `forward[λ]` is `B_λ` in power sums; `backward[ρ]` is `p_ρ` in `B`.
struct Transition {
    forward: Vec<Vec<(usize, Rational)>>,
    backward: Vec<Vec<(usize, Rational)>>,
}

type TransitionCache = RwLock<HashMap<(Basis, u32), Arc<Transition>>>;

static TRANSITIONS: LazyLock<TransitionCache> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn sparse(rows: Vec<Vec<Rational>>) -> Vec<Vec<(usize, Rational)>> {
    rows.into_iter()
        .map(|r| {
            r.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
        .collect()
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible transition");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = Rational::one() / &a[col][col];
        for j in 0..n {
            a[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let x = &f * &a[col][j];
                a[r][j] -= x;
                let y = &f * &inv[col][j];
                inv[r][j] -= y;
            }
        }
    }
    inv
}

type RatSym = BTreeMap<Partition, Rational>;

fn rat_mul(a: &RatSym, b: &RatSym) -> RatSym {
    let mut out = RatSym::new();
    for (p, c) in a {
        for (q, d) in b {
            *out.entry(p.union(q)).or_insert_with(Rational::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `h_n` (or `e_n` with signs) in power sums.
fn complete_or_elementary(n: u32, signed: bool) -> RatSym {
    partitions(n)
        .into_iter()
        .map(|rho| {
            let mut c = Rational::one() / Rational::from_integer(rho.z());
            if signed && (n as usize - rho.len()) % 2 == 1 {
                c = -c;
            }
            (rho, c)
        })
        .collect()
}

fn multiplicative_rows(n: u32, signed: bool) -> Vec<Vec<Rational>> {
    let parts = partitions(n);
    let idx: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut singles: HashMap<u32, RatSym> = HashMap::new();
    parts
        .iter()
        .map(|lambda| {
            let mut acc: RatSym = [(Partition::empty(), Rational::one())].into();
            for &k in lambda.parts() {
                let f = singles
                    .entry(k)
                    .or_insert_with(|| complete_or_elementary(k, signed));
                acc = rat_mul(&acc, f);
            }
            let mut row = vec![Rational::zero(); parts.len()];
            for (rho, c) in acc {
                row[idx[&rho]] = c;
            }
            row
        })
        .collect()
}

fn compute(basis: Basis, n: u32) -> Transition {
    let parts = partitions(n);
    let len = parts.len();
    let (fwd, bwd): (Vec<Vec<Rational>>, Vec<Vec<Rational>>) = match basis {
        Basis::Power => {
            let id: Vec<Vec<Rational>> = (0..len)
                .map(|i| {
                    (0..len)
                        .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                        .collect()
                })
                .collect();
            (id.clone(), id)
        }
        Basis::Schur => {
            let t = table(n);
            let z: Vec<Rational> = parts.iter().map(|p| Rational::from_integer(p.z())).collect();
            let fwd = (0..len)
                .map(|l| (0..len).map(|r| Rational::from_integer(t.row(l)[r].into()) / &z[r]).collect())
                .collect();
            let bwd = (0..len)
                .map(|r| (0..len).map(|l| Rational::from_integer(t.row(l)[r].into())).collect())
                .collect();
            (fwd, bwd)
        }
        Basis::Homogeneous | Basis::Elementary => {
            let fwd = multiplicative_rows(n, basis == Basis::Elementary);
            let bwd = invert(&fwd);
            (fwd, bwd)
        }
        Basis::Monomial => {
            // m is dual to h: m_λ = Σ_ρ (H^-1)[ρ][λ] / z_ρ p_ρ.
            let h = transition(Basis::Homogeneous, n);
            let z: Vec<Rational> = parts.iter().map(|p| Rational::from_integer(p.z())).collect();
            let mut fwd = vec![vec![Rational::zero(); len]; len];
            for (rho, row) in h.backward.iter().enumerate() {
                for (lambda, c) in row {
                    fwd[*lambda][rho] = c / &z[rho];
                }
            }
            let mut bwd = vec![vec![Rational::zero(); len]; len];
            for (lambda, row) in h.forward.iter().enumerate() {
                for (rho, c) in row {
                    bwd[*rho][lambda] = c * &z[*rho];
                }
            }
            (fwd, bwd)
        }
    };
    Transition {
        forward: sparse(fwd),
        backward: sparse(bwd),
    }
}

fn transition(basis: Basis, n: u32) -> Arc<Transition> {
    if let Some(t) = TRANSITIONS.read().unwrap().get(&(basis, n)) {
        return t.clone();
    }
    let t = Arc::new(compute(basis, n));
    TRANSITIONS
        .write()
        .unwrap()
        .entry((basis, n))
        .or_insert(t)
        .clone()
}

/// `B_λ` expanded in power sums.
pub fn basis_element<C: Coefficient>(basis: Basis, lambda: &Partition) -> SymFunc<C> {
    if basis == Basis::Power {
        return SymFunc::p(lambda.clone());
    }
    let n = lambda.size();
    let tr = transition(basis, n);
    let parts = partitions(n);
    let i = table(n).index_of(lambda);
    SymFunc::from_terms(
        tr.forward[i]
            .iter()
            .map(|(j, c)| (parts[*j].clone(), C::from_rational(c))),
    )
}

/// Build from coefficients in basis `B`.
pub fn from_basis<C: Coefficient>(
    basis: Basis,
    coeffs: impl IntoIterator<Item = (Partition, C)>,
) -> SymFunc<C> {
    let mut out = SymFunc::zero();
    for (lambda, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let b: SymFunc<C> = basis_element(basis, &lambda);
        out.add_assign(&b.scale(&c));
    }
    out
}

/// Coefficients in basis `B`, zero entries dropped.
pub fn to_basis<C: Coefficient>(f: &SymFunc<C>, basis: Basis) -> BTreeMap<Partition, C> {
    if basis == Basis::Power {
        return f.clone().into_terms();
    }
    let mut out: BTreeMap<Partition, C> = BTreeMap::new();
    for d in f.degrees() {
        let tr = transition(basis, d);
        let parts = partitions(d);
        let t = table(d);
        let mut acc: Vec<C> = vec![C::zero(); parts.len()];
        for (rho, c) in f.terms().filter(|(p, _)| p.size() == d) {
            for (l, x) in &tr.backward[t.index_of(rho)] {
                acc[*l] = acc[*l].add(&c.scale(x));
            }
        }
        for (l, c) in acc.into_iter().enumerate() {
            if !c.is_zero() {
                out.insert(parts[l].clone(), c);
            }
        }
    }
    out
}

pub fn convert<C: Coefficient>(
    coeffs: impl IntoIterator<Item = (Partition, C)>,
    from: Basis,
    to: Basis,
) -> BTreeMap<Partition, C> {
    to_basis(&from_basis(from, coeffs), to)
}

/// `s_λ`.
pub fn schur<C: Coefficient>(lambda: &Partition) -> SymFunc<C> {
    basis_element(Basis::Schur, lambda)
}

/// `e_k`; zero for negative `k`.
pub fn elementary<C: Coefficient>(k: i64) -> SymFunc<C> {
    if k < 0 {
        return SymFunc::zero();
    }
    basis_element(Basis::Elementary, &Partition::row(k as u32))
}

/// `h_k`; zero for negative `k`.
pub fn homogeneous<C: Coefficient>(k: i64) -> SymFunc<C> {
    if k < 0 {
        return SymFunc::zero();
    }
    basis_element(Basis::Homogeneous, &Partition::row(k as u32))
}

/// Render `f` in basis `B`, terms in decreasing lex order within each degree.
pub fn display_in<C: Coefficient>(f: &SymFunc<C>, basis: Basis) -> String {
    let coeffs = to_basis(f, basis);
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (p, c)) in coeffs.iter().rev().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if c.is_one() {
            out.push_str(&format!("{}{}", basis.symbol(), p));
        } else {
            out.push_str(&format!("({c})*{}{}", basis.symbol(), p));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::QTRational;

    type F = SymFunc<QTRational>;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn r(n: i64, d: i64) -> QTRational {
        QTRational::from_rational(&Rational::new(n.into(), d.into()))
    }

    #[test]
    fn known_expansions() {
        let s21: F = schur(&part(&[2, 1]));
        let expect = F::monomial(part(&[1, 1, 1]), r(1, 3)).add(&F::monomial(part(&[3]), r(-1, 3)));
        assert_eq!(s21, expect);
        let e2: F = elementary(2);
        let m11 = basis_element::<QTRational>(Basis::Monomial, &part(&[1, 1]));
        assert_eq!(e2, m11);
        let h2: F = homogeneous(2);
        assert_eq!(to_basis(&h2, Basis::Monomial).len(), 2);
        assert_eq!(to_basis(&h2, Basis::Schur), [(part(&[2]), QTRational::one())].into());
    }

    #[test]
    fn round_trips_through_every_basis() {
        for n in 0..=6 {
            for lambda in partitions(n) {
                for &b in &Basis::ALL {
                    let f: F = basis_element(b, &lambda);
                    let back = to_basis(&f, b);
                    assert_eq!(back, [(lambda.clone(), QTRational::one())].into(), "{b} {lambda}");
                }
            }
        }
    }

    #[test]
    fn hall_duality() {
        for n in 1..=5u32 {
            for a in partitions(n) {
                for b in partitions(n) {
                    let h: F = basis_element(Basis::Homogeneous, &a);
                    let m: F = basis_element(Basis::Monomial, &b);
                    let s1: F = schur(&a);
                    let s2: F = schur(&b);
                    let delta = if a == b { QTRational::one() } else { QTRational::zero() };
                    assert_eq!(h.hall_inner(&m), delta);
                    assert_eq!(s1.hall_inner(&s2), delta);
                }
            }
        }
    }

    #[test]
    fn omega_swaps_e_and_h() {
        for n in 1..=5 {
            let e: F = elementary(n);
            let h: F = homogeneous(n);
            assert_eq!(e.omega(), h);
        }
        let s: F = schur(&part(&[3, 1]));
        assert_eq!(s.omega(), schur(&part(&[2, 1, 1])));
    }

    #[test]
    fn display_schur() {
        let s: F = schur::<QTRational>(&part(&[2, 1])).add(&schur(&part(&[1, 1, 1])).scale(&"q + t".parse().unwrap()));
        assert_eq!(display_in(&s, Basis::Schur), "s[2,1] + (t + q)*s[1,1,1]");
    }
}
