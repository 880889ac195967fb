//! Root systems embedded in `Z^n`: the classical realizations, disjoint
//! unions on coordinate blocks, positive systems, `2δ` and Weyl groups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{SignedPermutation, Weight, WeylSubgroup};

/// The classical families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
    C,
    D,
    BC,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::BC => "BC",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            "BC" => Ok(Kind::BC),
            _ => Err(Error::LabelSyntax(s.to_string())),
        }
    }
}

/// `true` iff the first nonzero coordinate is positive.
pub fn is_positive(v: &Weight) -> bool {
    v.coords().iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

/// A finite set of roots in `Z^rank` with the lexicographic positive system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    rank: usize,
    roots: BTreeSet<Weight>,
    positive: Vec<Weight>,
    label: String,
}

impl RootSystem {
    /// Wrap an arbitrary root set; nothing is validated here (see [`RootSystem::validate`]).
    pub fn from_roots(rank: usize, roots: impl IntoIterator<Item = Weight>, label: &str) -> Result<Self> {
        let roots: BTreeSet<Weight> = roots.into_iter().collect();
        for r in &roots {
            r.check_rank(rank)?;
        }
        let positive = roots.iter().filter(|r| is_positive(r)).cloned().collect();
        Ok(RootSystem {
            rank,
            roots,
            positive,
            label: label.to_string(),
        })
    }

    pub fn empty(rank: usize) -> Self {
        RootSystem {
            rank,
            roots: BTreeSet::new(),
            positive: Vec::new(),
            label: "0".to_string(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &BTreeSet<Weight> {
        &self.roots
    }

    pub fn positive(&self) -> &[Weight] {
        &self.positive
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &Weight) -> bool {
        self.roots.contains(v)
    }

    /// Union with a system in the same ambient lattice (intended for orthogonal blocks).
    pub fn union(&self, other: &RootSystem) -> Result<RootSystem> {
        other.roots.iter().try_for_each(|r| r.check_rank(self.rank))?;
        let label = match (self.is_empty(), other.is_empty()) {
            (true, _) => other.label.clone(),
            (_, true) => self.label.clone(),
            _ => format!("{}+{}", self.label, other.label),
        };
        RootSystem::from_roots(self.rank, self.roots.iter().chain(&other.roots).cloned(), &label)
    }

    /// Checks reflection closure and strong integrality against the basis of `Z^ambient`.
    pub fn validate(&self, ambient: usize) -> Validation {
        let mut violations = Vec::new();
        if ambient != self.rank {
            violations.push(format!("ambient rank {ambient} differs from root rank {}", self.rank));
            return Validation { violations };
        }
        for a in &self.roots {
            let a2 = a.norm2();
            if a2 == 0 {
                violations.push(format!("zero vector ({a}) is not a root"));
                continue;
            }
            for (i, &c) in a.coords().iter().enumerate() {
                if (2 * c) % a2 != 0 {
                    violations.push(format!("strong integrality: 2(e{},{a})/({a},{a}) is not an integer", i + 1));
                }
            }
            for b in &self.roots {
                let num = 2 * b.dot(a);
                // the coefficient 2(β,α)/(α,α) may be fractional while the image is integral
                let image = a.scale(num).div_exact(a2).map(|shift| &*b - &shift);
                match image {
                    Some(img) if self.roots.contains(&img) => {}
                    _ => violations.push(format!("reflection closure: s_({a}) ({b}) is not a root")),
                }
            }
        }
        Validation { violations }
    }

    /// `2δ = Σ_{α ∈ Φ⁺} α`, kept doubled so it stays integral.
    pub fn two_delta(&self) -> Weight {
        self.positive
            .iter()
            .fold(Weight::zero(self.rank), |acc, a| &acc + a)
    }

    /// `true` iff `2(λ,α)/(α,α)` is a nonnegative integer for every positive root.
    pub fn is_dominant_integral(&self, lambda: &Weight) -> bool {
        lambda.rank() == self.rank
            && self.positive.iter().all(|a| {
                let num = 2 * lambda.dot(a);
                num >= 0 && num % a.norm2() == 0
            })
    }

    pub fn check_dominant_integral(&self, lambda: &Weight) -> Result<()> {
        lambda.check_rank(self.rank)?;
        if self.is_dominant_integral(lambda) {
            Ok(())
        } else {
            Err(Error::NotDominant {
                weight: lambda.coords().to_vec(),
                what: self.label.clone(),
            })
        }
    }

    /// The reflections along positive roots, as lattice maps.
    pub fn reflections(&self) -> Result<Vec<SignedPermutation>> {
        let mut out: Vec<SignedPermutation> = Vec::new();
        for a in &self.positive {
            let r = SignedPermutation::reflection(a)?;
            if !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(out)
    }

    pub fn weyl_group(&self) -> Result<WeylGroup> {
        let group = WeylSubgroup::generated(self.rank, self.reflections()?)?;
        let signs = group.elements().iter().map(|w| w.determinant()).collect();
        Ok(WeylGroup { group, signs })
    }

    /// `(−1)^{#{α ∈ Φ⁺ indivisible : wα < 0}}`, the length-parity form of the sign character.
    pub fn sign_by_inversions(&self, w: &SignedPermutation) -> i64 {
        let count = self
            .positive
            .iter()
            .filter(|a| {
                // skip 2β when β is also a root: only indivisible roots count
                a.div_exact(2).is_none_or(|h| !self.roots.contains(&h))
            })
            .filter(|a| !is_positive(&w.apply(a)))
            .count();
        if count % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Parse `A2`, `C1+D2`, `BC3`, `D2@1`. Factors without an offset are placed
    /// on the next free coordinates; `ambient` defaults to the last used coordinate.
    pub fn parse_label(label: &str, ambient: Option<usize>) -> Result<RootSystem> {
        let mut factors = Vec::new();
        let mut next = 0usize;
        for part in label.split('+') {
            let part = part.trim();
            let (body, offset) = match part.split_once('@') {
                Some((b, o)) => (
                    b,
                    Some(o.trim().parse::<usize>().map_err(|_| Error::LabelSyntax(label.to_string()))?),
                ),
                None => (part, None),
            };
            let split = body
                .find(|c: char| c.is_ascii_digit())
                .ok_or_else(|| Error::LabelSyntax(label.to_string()))?;
            let kind: Kind = body[..split].parse().map_err(|_| Error::LabelSyntax(label.to_string()))?;
            let n: usize = body[split..].parse().map_err(|_| Error::LabelSyntax(label.to_string()))?;
            if n == 0 {
                return Err(Error::LabelSyntax(label.to_string()));
            }
            // A_n lives on n+1 coordinates
            let size = if kind == Kind::A { n + 1 } else { n };
            let offset = offset.unwrap_or(next);
            next = offset + size;
            factors.push((kind, size, offset));
        }
        let used = factors.iter().map(|&(_, s, o)| s + o).max().unwrap_or(0);
        let ambient = ambient.unwrap_or(used);
        let mut sys = RootSystem::empty(ambient);
        for (kind, size, offset) in factors {
            sys = sys.union(&standard_system(kind, size, offset, ambient)?)?;
        }
        Ok(sys)
    }
}

/// Result of [`RootSystem::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub violations: Vec<String>,
}

impl Validation {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `W_Φ` with the sign of each element, `sgn(w) = det(w)`.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub group: WeylSubgroup,
    pub signs: Vec<i64>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignedPermutation, i64)> {
        self.group.elements().iter().zip(self.signs.iter().copied())
    }
}

/// The classical realization on coordinates `offset..offset+n` of `Z^ambient`.
///
/// `A` gives `A_{n−1} = {e_i − e_j}` on `n` coordinates.
pub fn standard_system(kind: Kind, n: usize, offset: usize, ambient: usize) -> Result<RootSystem> {
    if n == 0 || offset + n > ambient {
        return Err(Error::AmbientTooSmall {
            offset,
            size: n,
            ambient,
        });
    }
    let e = |i: usize| Weight::unit(ambient, offset + i);
    let mut roots = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = &e(i) - &e(j);
            roots.push(d.clone());
            roots.push(-&d);
            if kind != Kind::A {
                let s = &e(i) + &e(j);
                roots.push(s.clone());
                roots.push(-&s);
            }
        }
        if matches!(kind, Kind::B | Kind::BC) {
            roots.push(e(i));
            roots.push(-&e(i));
        }
        if matches!(kind, Kind::C | Kind::BC) {
            roots.push(e(i).scale(2));
            roots.push(e(i).scale(-2));
        }
    }
    let label = if kind == Kind::A {
        format!("A{}@{offset}", n - 1)
    } else {
        format!("{kind}{n}@{offset}")
    };
    RootSystem::from_roots(ambient, roots, &label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn standard_examples() {
        let a = standard_system(Kind::A, 2, 0, 2).unwrap();
        assert_eq!(a.roots(), &BTreeSet::from([w([1, -1]), w([-1, 1])]));
        let c = standard_system(Kind::C, 1, 0, 1).unwrap();
        assert_eq!(c.roots(), &BTreeSet::from([w([2]), w([-2])]));
        let d = standard_system(Kind::D, 2, 1, 3).unwrap();
        assert_eq!(
            d.roots(),
            &BTreeSet::from([w([0, 1, -1]), w([0, -1, 1]), w([0, 1, 1]), w([0, -1, -1])])
        );
        assert!(matches!(
            standard_system(Kind::D, 2, 2, 3),
            Err(Error::AmbientTooSmall { .. })
        ));
    }

    #[test]
    fn validate_examples() {
        let bc2 = standard_system(Kind::BC, 2, 0, 2).unwrap();
        assert!(bc2.validate(2).ok());
        let bad = RootSystem::from_roots(1, [w([1]), w([-1]), w([3]), w([-3])], "bad").unwrap();
        let v = bad.validate(1);
        assert!(!v.ok());
        // closure holds; the failure is integrality of ±3e1
        assert!(v.violations.iter().all(|s| s.starts_with("strong integrality")));
        let single = RootSystem::from_roots(2, [w([1, 1]), w([-1, -1])], "A1'").unwrap();
        assert!(single.validate(2).ok());
    }

    #[test]
    fn all_standard_systems_validate() {
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D, Kind::BC] {
            for n in 1..=4 {
                let s = standard_system(kind, n, 0, n).unwrap();
                assert!(s.validate(n).ok(), "{kind}{n}: {:?}", s.validate(n));
                let pos = s.positive().len();
                assert_eq!(2 * pos, s.roots().len());
            }
        }
    }

    #[test]
    fn delta_examples() {
        let a1 = standard_system(Kind::A, 2, 0, 2).unwrap();
        assert_eq!(a1.two_delta(), w([1, -1]));
        assert_eq!(RootSystem::empty(3).two_delta(), w([0, 0, 0]));
        let c2 = standard_system(Kind::C, 2, 0, 2).unwrap();
        assert_eq!(c2.two_delta(), w([4, 2]));
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn weyl_orders() {
        for n in 1..=4usize {
            let order = |k| standard_system(k, n, 0, n).unwrap().weyl_group().unwrap().order();
            assert_eq!(order(Kind::A), factorial(n));
            assert_eq!(order(Kind::B), (1 << n) * factorial(n));
            assert_eq!(order(Kind::C), (1 << n) * factorial(n));
            assert_eq!(order(Kind::BC), (1 << n) * factorial(n));
            let d = if n == 1 { 1 } else { (1 << (n - 1)) * factorial(n) };
            assert_eq!(order(Kind::D), d);
        }
        let a1 = standard_system(Kind::A, 2, 0, 2).unwrap().weyl_group().unwrap();
        assert_eq!(a1.order(), 2);
        assert_eq!(a1.signs, vec![1, -1]);
        let cd = RootSystem::parse_label("C1+D2", None).unwrap();
        assert_eq!(cd.rank(), 3);
        assert_eq!(cd.weyl_group().unwrap().order(), 8);
    }

    #[test]
    fn sign_is_a_homomorphism_and_matches_inversions() {
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D, Kind::BC] {
            for n in 1..=3 {
                let s = standard_system(kind, n, 0, n).unwrap();
                let wg = s.weyl_group().unwrap();
                let els = wg.group.elements();
                for (x, sx) in wg.iter() {
                    assert_eq!(sx, s.sign_by_inversions(x));
                    for (y, sy) in wg.iter() {
                        let k = wg.group.position(&x.compose(y)).unwrap();
                        assert_eq!(wg.signs[k], sx * sy);
                        assert!(k < els.len());
                    }
                }
            }
        }
    }

    #[test]
    fn label_parsing() {
        let s = RootSystem::parse_label("A2", None).unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.roots().len(), 6);
        let s = RootSystem::parse_label("D2@1", Some(3)).unwrap();
        assert_eq!(s, standard_system(Kind::D, 2, 1, 3).unwrap());
        assert!(RootSystem::parse_label("E6", None).is_err());
        assert!(RootSystem::parse_label("C0", None).is_err());
    }

    #[test]
    fn dominance() {
        let a2 = RootSystem::parse_label("A2", None).unwrap();
        assert!(a2.is_dominant_integral(&w([1, 0, -1])));
        assert!(!a2.is_dominant_integral(&w([0, 1, -1])));
        let c1 = RootSystem::parse_label("C1", None).unwrap();
        assert!(c1.is_dominant_integral(&w([1])));
        assert!(!c1.is_dominant_integral(&w([-1])));
    }
}
