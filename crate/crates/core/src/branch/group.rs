//! Compact groups built from tori and the classical families, described by
//! their weight coordinates.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::rational::{self, Q};

/// Root datum of one simple-or-abelian block, on its own coordinates.
/// A coordinate map of order two.
pub type Reflection = Box<dyn Fn(&mut [i64]) + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simple {
    /// `r` free coordinates, no roots.
    Torus(usize),
    /// `e_i − e_j` on `n` coordinates (`U(n)` and `SU(n)`).
    A(usize),
    /// `±e_i ± e_j, ±2e_i` on `n` coordinates.
    C(usize),
    /// `±e_i ± e_j` on `k ≥ 2` coordinates.
    D(usize),
}

impl Simple {
    pub fn width(self) -> usize {
        match self {
            Simple::Torus(r) | Simple::A(r) | Simple::C(r) | Simple::D(r) => r,
        }
    }

    pub fn positive_roots(self) -> Vec<Weight> {
        let n = self.width();
        let e = |i: usize| Weight::unit(n, i);
        let mut out = Vec::new();
        if matches!(self, Simple::Torus(_)) {
            return out;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                out.push(&e(i) - &e(j));
                if !matches!(self, Simple::A(_)) {
                    out.push(&e(i) + &e(j));
                }
            }
            if matches!(self, Simple::C(_)) {
                out.push(e(i).scale(2));
            }
        }
        out
    }

    pub fn two_delta(self) -> Weight {
        self.positive_roots()
            .iter()
            .fold(Weight::zero(self.width()), |a, b| &a + b)
    }

    /// The dominant element of the Weyl orbit.
    pub fn dominant_rep(self, w: &Weight) -> Weight {
        let mut v = w.coords().to_vec();
        match self {
            Simple::Torus(_) => {}
            Simple::A(_) => v.sort_unstable_by(|a, b| b.cmp(a)),
            Simple::C(_) => {
                v.iter_mut().for_each(|c| *c = c.abs());
                v.sort_unstable_by(|a, b| b.cmp(a));
            }
            Simple::D(_) => {
                let negatives = v.iter().filter(|&&c| c < 0).count();
                let has_zero = v.contains(&0);
                v.iter_mut().for_each(|c| *c = c.abs());
                v.sort_unstable_by(|a, b| b.cmp(a));
                if !has_zero && negatives % 2 == 1 {
                    let last = v.len() - 1;
                    v[last] = -v[last];
                }
            }
        }
        Weight::new(v)
    }

    pub fn is_dominant(self, w: &Weight) -> bool {
        w.rank() == self.width() && &self.dominant_rep(w) == w
    }

    /// `λ − μ` is a nonnegative integer combination of simple roots.
    pub fn dominates(self, lambda: &Weight, mu: &Weight) -> bool {
        let d: Vec<i64> = (lambda - mu).into_coords();
        let n = d.len();
        let s: Vec<i64> = d
            .iter()
            .scan(0i64, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        match self {
            Simple::Torus(_) => d.iter().all(|&x| x == 0),
            Simple::A(_) => s[..n.saturating_sub(1)].iter().all(|&x| x >= 0) && s.last().is_none_or(|&x| x == 0),
            Simple::C(_) => {
                s[..n - 1].iter().all(|&x| x >= 0) && s[n - 1] >= 0 && s[n - 1] % 2 == 0
            }
            Simple::D(k) => {
                if s[..k - 2].iter().any(|&x| x < 0) {
                    return false;
                }
                let (a, b) = (s[k - 2] - d[k - 1], s[k - 2] + d[k - 1]);
                a >= 0 && b >= 0 && a % 2 == 0 && b % 2 == 0
            }
        }
    }

    /// Generators of the Weyl group as maps on coordinates (simple reflections).
    pub fn simple_reflections(self) -> Vec<Reflection> {
        let n = self.width();
        let mut out: Vec<Reflection> = Vec::new();
        if matches!(self, Simple::Torus(_)) {
            return out;
        }
        for i in 0..n.saturating_sub(1) {
            out.push(Box::new(move |v: &mut [i64]| v.swap(i, i + 1)));
        }
        match self {
            Simple::C(_) => out.push(Box::new(move |v: &mut [i64]| v[n - 1] = -v[n - 1])),
            Simple::D(_) => out.push(Box::new(move |v: &mut [i64]| {
                let (a, b) = (v[n - 2], v[n - 1]);
                v[n - 2] = -b;
                v[n - 1] = -a;
            })),
            _ => {}
        }
        out
    }

    /// The Weyl orbit, sorted.
    pub fn orbit(self, w: &Weight) -> Vec<Weight> {
        let refl = self.simple_reflections();
        let mut seen = std::collections::BTreeSet::from([w.clone()]);
        let mut stack = vec![w.clone()];
        while let Some(v) = stack.pop() {
            for r in &refl {
                let mut c = v.clone().into_coords();
                r(&mut c);
                let c = Weight::new(c);
                if seen.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Weyl dimension formula `Π (λ+δ, α)/(δ, α)`.
    pub fn weyl_dimension(self, hw: &Weight) -> Q {
        let two_delta = self.two_delta();
        let shifted = &hw.scale(2) + &two_delta;
        self.positive_roots().iter().fold(rational::one(), |acc, a| {
            acc * rational::frac(shifted.dot(a), two_delta.dot(a))
        })
    }

    /// Cache key for characters of this block.
    pub fn key(self) -> String {
        match self {
            Simple::Torus(r) => format!("T({r})"),
            Simple::A(n) => format!("U({n})"),
            Simple::C(n) => format!("Sp({n})"),
            Simple::D(k) => format!("SO({})", 2 * k),
        }
    }
}

/// One factor of a product group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    Torus(usize),
    Unitary(usize),
    /// `SU(N)` on `N` coordinates; weights are taken modulo `(1, ..., 1)`.
    SpecialUnitary(usize),
    Symplectic(usize),
    /// `SO(2k)` on `k` coordinates.
    EvenOrthogonal(usize),
}

impl Factor {
    pub fn simple(self) -> Simple {
        match self {
            Factor::Torus(r) => Simple::Torus(r),
            Factor::Unitary(n) | Factor::SpecialUnitary(n) => Simple::A(n),
            Factor::Symplectic(n) => Simple::C(n),
            Factor::EvenOrthogonal(1) => Simple::Torus(1),
            Factor::EvenOrthogonal(k) => Simple::D(k),
        }
    }

    pub fn width(self) -> usize {
        self.simple().width()
    }

    /// Validate a highest weight and bring it to canonical form (`SU`: last coordinate 0).
    pub fn canonical_hw(self, hw: &Weight) -> Result<Weight> {
        hw.check_rank(self.width())?;
        let hw = match self {
            Factor::SpecialUnitary(_) => {
                let last = *hw.coords().last().unwrap_or(&0);
                Weight::new(hw.coords().iter().map(|c| c - last).collect())
            }
            _ => hw.clone(),
        };
        if self.simple().is_dominant(&hw) {
            Ok(hw)
        } else {
            Err(Error::NotDominant {
                weight: hw.coords().to_vec(),
                what: self.to_string(),
            })
        }
    }

    /// `(λ̃, λ̃) + (λ, 2δ)` with `λ̃` the sum-zero projection for `SU`, else `λ̃ = λ`.
    pub fn casimir(self, hw: &Weight) -> Q {
        let s = self.simple();
        let mut c = rational::q(hw.norm2() + hw.dot(&s.two_delta()));
        if let Factor::SpecialUnitary(n) = self {
            let sum: i64 = hw.coords().iter().sum();
            c -= rational::frac(sum * sum, n as i64);
        }
        c
    }

    /// Generators of the monoid of dominant weights; `None` for factors with
    /// infinitely many irreducibles of bounded Casimir.
    pub fn monoid_generators(self) -> Option<Vec<Weight>> {
        let ones = |i: usize, w: usize| Weight::new((0..w).map(|j| i64::from(j < i)).collect());
        match self {
            Factor::Torus(_) | Factor::Unitary(_) | Factor::EvenOrthogonal(1) => None,
            Factor::SpecialUnitary(n) => Some((1..n).map(|i| ones(i, n)).collect()),
            Factor::Symplectic(n) => Some((1..=n).map(|i| ones(i, n)).collect()),
            Factor::EvenOrthogonal(k) => {
                let mut g: Vec<Weight> = (1..k).map(|i| ones(i, k)).collect();
                g.push(ones(k, k));
                let mut spin_minus = ones(k, k).into_coords();
                spin_minus[k - 1] = -1;
                g.push(Weight::new(spin_minus));
                Some(g)
            }
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Torus(r) => write!(f, "T({r})"),
            Factor::Unitary(n) => write!(f, "U({n})"),
            Factor::SpecialUnitary(n) => write!(f, "SU({n})"),
            Factor::Symplectic(n) => write!(f, "Sp({n})"),
            Factor::EvenOrthogonal(m) => write!(f, "SO({})", 2 * m),
        }
    }
}

impl FromStr for Factor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::GroupSyntax(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(err)?;
        let arg = s[open..].strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(err)?;
        let n: usize = arg.trim().parse().map_err(|_| err())?;
        if n == 0 {
            return Err(err());
        }
        match &s[..open] {
            "T" => Ok(Factor::Torus(n)),
            "U" => Ok(Factor::Unitary(n)),
            "SU" if n >= 2 => Ok(Factor::SpecialUnitary(n)),
            "Sp" => Ok(Factor::Symplectic(n)),
            "SO" if n.is_multiple_of(2) => Ok(Factor::EvenOrthogonal(n / 2)),
            _ => Err(err()),
        }
    }
}

/// A product of factors on concatenated coordinates, e.g. `Sp(1)xSO(4)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupDesc {
    factors: Vec<Factor>,
}

impl GroupDesc {
    pub fn new(factors: Vec<Factor>) -> Self {
        GroupDesc { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn width(&self) -> usize {
        self.factors.iter().map(|f| f.width()).sum()
    }

    /// Split a weight into per-factor blocks.
    pub fn split(&self, w: &Weight) -> Result<Vec<Weight>> {
        w.check_rank(self.width())?;
        let mut out = Vec::with_capacity(self.factors.len());
        let mut at = 0;
        for f in &self.factors {
            out.push(Weight::from(&w.coords()[at..at + f.width()]));
            at += f.width();
        }
        Ok(out)
    }

    pub fn canonical_hw(&self, hw: &Weight) -> Result<Weight> {
        let parts = self.split(hw)?;
        let mut out = Vec::with_capacity(hw.rank());
        for (f, p) in self.factors.iter().zip(parts) {
            out.extend(f.canonical_hw(&p)?.into_coords());
        }
        Ok(Weight::new(out))
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.split(w).is_ok_and(|parts| {
            self.factors
                .iter()
                .zip(parts)
                .all(|(f, p)| f.simple().is_dominant(&p))
        })
    }

    /// `2δ` of the whole group (concatenated).
    pub fn two_delta(&self) -> Weight {
        Weight::new(
            self.factors
                .iter()
                .flat_map(|f| f.simple().two_delta().into_coords())
                .collect(),
        )
    }

    pub fn casimir(&self, hw: &Weight) -> Result<Q> {
        let parts = self.split(hw)?;
        Ok(self
            .factors
            .iter()
            .zip(parts)
            .fold(Q::zero(), |acc, (f, p)| acc + f.casimir(&p)))
    }

    pub fn weyl_dimension(&self, hw: &Weight) -> Result<Q> {
        let parts = self.split(hw)?;
        Ok(self
            .factors
            .iter()
            .zip(parts)
            .fold(rational::one(), |acc, (f, p)| acc * f.simple().weyl_dimension(&p)))
    }

    /// Monoid generators of dominant weights, each padded into the full coordinates.
    pub fn monoid_generators(&self) -> Result<Vec<Weight>> {
        let width = self.width();
        let mut out = Vec::new();
        let mut at = 0;
        for f in &self.factors {
            let gens = f
                .monoid_generators()
                .ok_or_else(|| Error::Unsupported(format!("{f} has infinitely many irreducibles below a Casimir cutoff")))?;
            for g in gens {
                let mut v = vec![0; width];
                v[at..at + f.width()].copy_from_slice(g.coords());
                out.push(Weight::new(v));
            }
            at += f.width();
        }
        Ok(out)
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupDesc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(['x', '×', '*'])
            .map(str::parse)
            .collect::<Result<Vec<Factor>>>()?;
        if factors.is_empty() {
            return Err(Error::GroupSyntax(s.to_string()));
        }
        Ok(GroupDesc { factors })
    }
}

impl Serialize for GroupDesc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupDesc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn parse_and_display() {
        let g: GroupDesc = "Sp(1)xSO(4)".parse().unwrap();
        assert_eq!(g.factors(), &[Factor::Symplectic(1), Factor::EvenOrthogonal(2)]);
        assert_eq!(g.width(), 3);
        assert_eq!(g.to_string(), "Sp(1)xSO(4)");
        assert!("SO(5)".parse::<GroupDesc>().is_err());
        assert!("SU(1)".parse::<GroupDesc>().is_err());
        assert!("E(6)".parse::<GroupDesc>().is_err());
    }

    #[test]
    fn casimir_examples() {
        let su2 = Factor::SpecialUnitary(2);
        assert_eq!(su2.casimir(&w([0, 0])), q(0));
        assert_eq!(su2.casimir(&w([1, 0])), frac(3, 2));
        for l2 in 0..8i64 {
            // spin l = l2/2 has highest weight (2l, 0)
            assert_eq!(su2.casimir(&w([l2, 0])), frac(l2 * (l2 + 2), 2));
        }
    }

    #[test]
    fn dominance_order_against_brute_force() {
        // compare the closed forms with explicit nonnegative combinations of simple roots
        let cases = [Simple::A(3), Simple::C(2), Simple::D(2), Simple::D(3)];
        for s in cases {
            let n = s.width();
            let simple: Vec<Weight> = match s {
                Simple::A(_) => (0..n - 1).map(|i| &Weight::unit(n, i) - &Weight::unit(n, i + 1)).collect(),
                Simple::C(_) => {
                    let mut v: Vec<Weight> = (0..n - 1).map(|i| &Weight::unit(n, i) - &Weight::unit(n, i + 1)).collect();
                    v.push(Weight::unit(n, n - 1).scale(2));
                    v
                }
                Simple::D(_) => {
                    let mut v: Vec<Weight> = (0..n - 1).map(|i| &Weight::unit(n, i) - &Weight::unit(n, i + 1)).collect();
                    v.push(&Weight::unit(n, n - 2) + &Weight::unit(n, n - 1));
                    v
                }
                Simple::Torus(_) => unreachable!(),
            };
            let mut reachable = std::collections::BTreeSet::new();
            let r = simple.len() as u32;
            for code in 0..5u32.pow(r) {
                let mut c = code;
                let mut v = Weight::zero(n);
                for a in &simple {
                    v = &v + &a.scale((c % 5) as i64);
                    c /= 5;
                }
                reachable.insert(v);
            }
            for d in reachable.iter().filter(|d| d.coords().iter().all(|x| x.abs() <= 2)) {
                assert!(s.dominates(d, &Weight::zero(n)), "{s:?} {d:?}");
            }
            // and some non-members
            let mut bad = vec![0; n];
            bad[0] = -1;
            bad[n - 1] = 1;
            assert!(!s.dominates(&Weight::new(bad), &Weight::zero(n)));
        }
    }

    #[test]
    fn orbits_have_weyl_group_orders() {
        assert_eq!(Simple::A(3).orbit(&w([2, 1, 0])).len(), 6);
        assert_eq!(Simple::C(2).orbit(&w([2, 1])).len(), 8);
        assert_eq!(Simple::D(3).orbit(&w([3, 2, 1])).len(), 24);
        assert_eq!(Simple::D(2).orbit(&w([1, 0])).len(), 4);
        for v in Simple::D(3).orbit(&w([2, 1, -1])) {
            assert_eq!(Simple::D(3).dominant_rep(&v), w([2, 1, -1]));
        }
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(Simple::A(6).weyl_dimension(&w([2, 1, 1, 1, 1, 0])), q(35));
        assert_eq!(Simple::A(3).weyl_dimension(&w([2, 1, 0])), q(8));
        assert_eq!(Simple::C(1).weyl_dimension(&w([1])), q(2));
        assert_eq!(Simple::D(2).weyl_dimension(&w([1, 0])), q(4));
        assert_eq!(Simple::C(2).weyl_dimension(&w([1, 1])), q(5));
    }

    #[test]
    fn generators() {
        let so4 = Factor::EvenOrthogonal(2).monoid_generators().unwrap();
        assert_eq!(so4, vec![w([1, 0]), w([1, 1]), w([1, -1])]);
        assert!(Factor::Unitary(2).monoid_generators().is_none());
        let g: GroupDesc = "SU(3)".parse().unwrap();
        assert_eq!(g.monoid_generators().unwrap(), vec![w([1, 0, 0]), w([1, 1, 0])]);
    }
}
