//! The group algebra `Q[Λ]` and the characters built from root systems:
//! alternating sums `A_{Φ,λ}`, averages `F_{Φ,λ,W}`, orbit characters
//! `χ*_{λ,W}` and Weyl products.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{SignedPermutation, Weight, WeylSubgroup};
use crate::rational::{self, Q};
use crate::rootsys::RootSystem;

/// Keys of a group algebra: an abelian group written additively.
pub trait GroupKey: Ord + Clone {
    fn plus(&self, other: &Self) -> Self;
}

impl GroupKey for Weight {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

/// Finite sparse sums `Σ c_k [k]` with rational coefficients; zero terms are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebra<K: GroupKey> {
    terms: BTreeMap<K, Q>,
}

/// An element of `Q[Z^n]`.
pub type CharacterElement = GroupAlgebra<Weight>;

impl<K: GroupKey> Default for GroupAlgebra<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: GroupKey> GroupAlgebra<K> {
    pub fn zero() -> Self {
        GroupAlgebra {
            terms: BTreeMap::new(),
        }
    }

    /// `c·[k]`.
    pub fn term(k: K, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    /// `[k]`.
    pub fn basis(k: K) -> Self {
        Self::term(k, Q::one())
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, k: &K) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<K, Q> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients (the value of the augmentation map).
    pub fn augmentation(&self) -> Q {
        self.terms.values().fold(Q::zero(), |a, b| a + b)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        GroupAlgebra {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Convolution `[λ]·[μ] = [λ+μ]`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.plus(b), ca * cb);
            }
        }
        out
    }

    /// Push forward along a map on keys (coefficients of colliding keys add).
    pub fn map_keys(&self, mut f: impl FnMut(&K) -> K) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn retain(&self, mut keep: impl FnMut(&K, &Q) -> bool) -> Self {
        GroupAlgebra {
            terms: self
                .terms
                .iter()
                .filter(|(k, c)| keep(k, c))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: GroupKey> FromIterator<(K, Q)> for GroupAlgebra<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: GroupKey + fmt::Debug> fmt::Debug for GroupAlgebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}[{k:?}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord<K> {
    weight: K,
    coeff: String,
}

/// Serialized as a list of `{weight, coeff: "p/q"}` in term order.
impl<K: GroupKey + Serialize> Serialize for GroupAlgebra<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&TermRecord {
                weight: k,
                coeff: rational::format(c),
            })?;
        }
        seq.end()
    }
}

impl<'de, K: GroupKey + Deserialize<'de>> Deserialize<'de> for GroupAlgebra<K> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs: Vec<TermRecord<K>> = Vec::deserialize(d)?;
        recs.into_iter()
            .map(|r| {
                rational::parse(&r.coeff)
                    .map(|c| (r.weight, c))
                    .map_err(serde::de::Error::custom)
            })
            .collect()
    }
}

impl CharacterElement {
    /// `[0] ∈ Q[Z^rank]`.
    pub fn one(rank: usize) -> Self {
        Self::basis(Weight::zero(rank))
    }

    pub fn act(&self, w: &SignedPermutation) -> Self {
        self.map_keys(|k| w.apply(k))
    }

    /// `(1/|W|) Σ_{γ ∈ W} γ·u`.
    pub fn average(&self, group: &WeylSubgroup) -> Self {
        let mut out = Self::zero();
        for g in group.elements() {
            for (k, c) in &self.terms {
                out.add_term(g.apply(k), c.clone());
            }
        }
        out.scale(&rational::frac(1, group.order() as i64))
    }

    pub fn is_invariant(&self, group: &WeylSubgroup) -> bool {
        group.generators().iter().all(|g| &self.act(g) == self)
    }
}

/// `A_{Φ,λ} = Σ_{w ∈ W_Φ} sgn(w) [λ + δ − wδ]`.
pub fn alternating_sum(phi: &RootSystem, lambda: &Weight) -> Result<CharacterElement> {
    phi.check_dominant_integral(lambda)?;
    let two_delta = phi.two_delta();
    let wg = phi.weyl_group()?;
    let mut out = CharacterElement::zero();
    for (w, sgn) in wg.iter() {
        let diff = (&two_delta - &w.apply(&two_delta))
            .div_exact(2)
            .expect("δ − wδ lies in the root lattice");
        out.add_term(lambda + &diff, rational::q(sgn));
    }
    Ok(out)
}

fn check_contains_reflections(phi: &RootSystem, group: &WeylSubgroup) -> Result<()> {
    if group.rank() != phi.rank() {
        return Err(Error::RankMismatch {
            expected: phi.rank(),
            got: group.rank(),
        });
    }
    for a in phi.positive() {
        if !group.contains(&SignedPermutation::reflection(a)?) {
            return Err(Error::MissingReflection(a.coords().to_vec()));
        }
    }
    Ok(())
}

/// `F_{Φ,λ,W} = (1/|W|) Σ_{γ ∈ W} γ(A_{Φ,λ})`, for `W_Φ ⊆ W`.
pub fn averaged_character(phi: &RootSystem, lambda: &Weight, group: &WeylSubgroup) -> Result<CharacterElement> {
    check_contains_reflections(phi, group)?;
    Ok(alternating_sum(phi, lambda)?.average(group))
}

/// `χ*_{λ,W} = (1/|W|) Σ_{γ ∈ W} [γλ]`.
pub fn orbit_character(lambda: &Weight, group: &WeylSubgroup) -> Result<CharacterElement> {
    lambda.check_rank(group.rank())?;
    Ok(CharacterElement::basis(lambda.clone()).average(group))
}

/// `F_Φ = (1/|W_Φ|) Π_{α ∈ Φ} (1 − [α])`.
pub fn weyl_product(phi: &RootSystem) -> Result<CharacterElement> {
    let order = phi.weyl_group()?.order();
    let one = CharacterElement::one(phi.rank());
    let mut prod = one.clone();
    for a in phi.roots() {
        let factor = one.sub(&CharacterElement::basis(a.clone()));
        prod = prod.mul(&factor);
    }
    Ok(prod.scale(&rational::frac(1, order as i64)))
}

/// Exact coefficientwise equality.
pub fn char_equal(u: &CharacterElement, v: &CharacterElement) -> bool {
    u == v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    fn ch(terms: &[(Weight, Q)]) -> CharacterElement {
        terms.iter().cloned().collect()
    }

    fn sys(label: &str) -> RootSystem {
        RootSystem::parse_label(label, None).unwrap()
    }

    #[test]
    fn alternating_sum_examples() {
        let empty = RootSystem::empty(2);
        assert_eq!(alternating_sum(&empty, &w([3, 1])).unwrap(), CharacterElement::basis(w([3, 1])));
        let a1 = sys("A1");
        assert_eq!(
            alternating_sum(&a1, &w([0, 0])).unwrap(),
            ch(&[(w([0, 0]), q(1)), (w([1, -1]), q(-1))])
        );
        let c1 = sys("C1");
        assert_eq!(
            alternating_sum(&c1, &w([1])).unwrap(),
            ch(&[(w([1]), q(1)), (w([3]), q(-1))])
        );
        assert!(matches!(alternating_sum(&c1, &w([-1])), Err(Error::NotDominant { .. })));
    }

    #[test]
    fn averaged_character_examples() {
        let triv = WeylSubgroup::hyperoctahedral(2);
        assert_eq!(
            averaged_character(&RootSystem::empty(2), &w([0, 0]), &triv).unwrap(),
            CharacterElement::one(2)
        );
        let a1 = sys("A1");
        let wa1 = a1.weyl_group().unwrap().group;
        assert_eq!(
            averaged_character(&a1, &w([0, 0]), &wa1).unwrap(),
            ch(&[(w([0, 0]), q(1)), (w([1, -1]), frac(-1, 2)), (w([-1, 1]), frac(-1, 2))])
        );
        assert!(matches!(
            averaged_character(&a1, &w([0, 0]), &WeylSubgroup::trivial(2)),
            Err(Error::MissingReflection(_))
        ));
    }

    #[test]
    fn orbit_character_examples() {
        let w2 = WeylSubgroup::hyperoctahedral(2);
        assert_eq!(orbit_character(&w([0, 0]), &w2).unwrap(), CharacterElement::one(2));
        let w1 = WeylSubgroup::hyperoctahedral(1);
        assert_eq!(
            orbit_character(&w([1]), &w1).unwrap(),
            ch(&[(w([1]), frac(1, 2)), (w([-1]), frac(1, 2))])
        );
        let quarter = frac(1, 4);
        assert_eq!(
            orbit_character(&w([1, 1]), &w2).unwrap(),
            ch(&[
                (w([1, 1]), quarter.clone()),
                (w([1, -1]), quarter.clone()),
                (w([-1, 1]), quarter.clone()),
                (w([-1, -1]), quarter),
            ])
        );
    }

    #[test]
    fn weyl_product_examples() {
        assert_eq!(weyl_product(&RootSystem::empty(1)).unwrap(), CharacterElement::one(1));
        assert_eq!(
            weyl_product(&sys("A1")).unwrap(),
            ch(&[(w([0, 0]), q(1)), (w([1, -1]), frac(-1, 2)), (w([-1, 1]), frac(-1, 2))])
        );
        assert_eq!(
            weyl_product(&sys("C1")).unwrap(),
            ch(&[(w([0]), q(1)), (w([2]), frac(-1, 2)), (w([-2]), frac(-1, 2))])
        );
    }

    #[test]
    fn theorem_instance_in_rank_three() {
        let g = WeylSubgroup::hyperoctahedral(3);
        let a2 = sys("A2");
        let cd = sys("C1+D2");
        let lhs = averaged_character(&a2, &w([1, 0, -1]), &g).unwrap();
        let rhs = averaged_character(&cd, &w([1, 1, 0]), &g).unwrap();
        assert!(char_equal(&lhs, &rhs));
        let lhs0 = averaged_character(&a2, &w([0, 0, 0]), &g).unwrap();
        let rhs0 = averaged_character(&cd, &w([0, 0, 0]), &g).unwrap();
        assert!(char_equal(&lhs0, &rhs0));
        // without the full average they differ
        let wa = a2.weyl_group().unwrap().group;
        let wcd = cd.weyl_group().unwrap().group;
        assert!(!char_equal(
            &averaged_character(&a2, &w([0, 0, 0]), &wa).unwrap(),
            &averaged_character(&cd, &w([0, 0, 0]), &wcd).unwrap()
        ));
    }

    #[test]
    fn averaging_is_idempotent_and_invariant() {
        let g = WeylSubgroup::hyperoctahedral(2);
        for label in ["A1", "C2", "B2", "D2", "C1+C1"] {
            let phi = sys(label);
            let wphi = phi.weyl_group().unwrap().group;
            let lambda = phi.positive()[0].clone();
            let lambda = if phi.is_dominant_integral(&lambda) {
                lambda
            } else {
                Weight::zero(2)
            };
            let small = averaged_character(&phi, &lambda, &wphi).unwrap();
            assert!(small.is_invariant(&wphi));
            let big = averaged_character(&phi, &lambda, &g).unwrap();
            assert!(big.is_invariant(&g));
            assert_eq!(small.average(&g), big, "{label}");
        }
    }

    #[test]
    fn json_is_sorted_and_roundtrips() {
        let c = ch(&[(w([1, -1]), frac(-1, 2)), (w([0, 0]), q(1))]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"[{"weight":[0,0],"coeff":"1"},{"weight":[1,-1],"coeff":"-1/2"}]"#);
        let back: CharacterElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
