//! Generalized tori `S` with `S/S⁰` cyclic of order `M`, their characters
//! `X*(S) ≅ Z^r ⊕ Z/M`, and affine root systems on them.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::charalg::{GroupAlgebra, GroupKey};
use crate::error::{Error, Result};
use crate::lattice::{SignedPermutation, Weight, WeylSubgroup};
use crate::rootsys::{is_positive, RootSystem};

/// `S = S⁰ × Z/M` with `S⁰` of rank `r`; the inner product on `Z^r` is the standard one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralizedTorus {
    pub rank: usize,
    pub order: i64,
}

impl GeneralizedTorus {
    pub fn new(rank: usize, order: i64) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidAffine(format!("component group order {order} < 1")));
        }
        Ok(GeneralizedTorus { rank, order })
    }

    pub fn connected(rank: usize) -> Self {
        GeneralizedTorus { rank, order: 1 }
    }

    pub fn weight(&self, finite: Weight, torsion: i64) -> AffineWeight {
        debug_assert_eq!(finite.rank(), self.rank);
        AffineWeight::new(finite, torsion, self.order)
    }

    /// `β₀`: trivial on `S⁰`, `e^{2πi/M}` on the generator.
    pub fn beta0(&self) -> AffineWeight {
        self.weight(Weight::zero(self.rank), 1)
    }
}

/// A character of `S`: finite part in `Z^r` (its restriction to `S⁰`) and torsion in `Z/M`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeight {
    finite: Weight,
    torsion: i64,
    order: i64,
}

impl AffineWeight {
    pub fn new(finite: Weight, torsion: i64, order: i64) -> Self {
        AffineWeight {
            finite,
            torsion: torsion.rem_euclid(order),
            order,
        }
    }

    pub fn finite(&self) -> &Weight {
        &self.finite
    }

    /// Representative in `0..M`.
    pub fn torsion(&self) -> i64 {
        self.torsion
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.finite.is_zero() && self.torsion == 0
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.finite.scale(k), self.torsion * k, self.order)
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Self::new(&self.finite + &other.finite, self.torsion + other.torsion, self.order)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `⟨λ|_{S⁰}, α̌⟩ = 2(λ, α)/(α, α)` when integral.
    pub fn coroot_pairing(&self, alpha: &Weight) -> Option<i64> {
        let num = 2 * self.finite.dot(alpha);
        let den = alpha.norm2();
        (den != 0 && num % den == 0).then(|| num / den)
    }
}

impl GroupKey for AffineWeight {
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+{}b", self.finite, self.torsion)
    }
}

impl fmt::Debug for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Elements of `Q[X*(S)]`.
pub type AffineCharacter = GroupAlgebra<AffineWeight>;

/// An automorphism of `X*(S)` fixing the component of the generator:
/// `(x, t) ↦ (P x, t + f·x)` with `P` a signed permutation and `f ∈ (Z/M)^r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineAut {
    linear: SignedPermutation,
    shift: Vec<i64>,
    order: i64,
}

impl AffineAut {
    pub fn identity(rank: usize, order: i64) -> Self {
        AffineAut {
            linear: SignedPermutation::identity(rank),
            shift: vec![0; rank],
            order,
        }
    }

    pub fn new(linear: SignedPermutation, shift: Vec<i64>, order: i64) -> Result<Self> {
        if shift.len() != linear.rank() {
            return Err(Error::RankMismatch {
                expected: linear.rank(),
                got: shift.len(),
            });
        }
        let shift = shift.into_iter().map(|s| s.rem_euclid(order)).collect();
        Ok(AffineAut { linear, shift, order })
    }

    /// `s_α(λ) = λ − ⟨λ|_{S⁰}, α̌⟩ α`.
    pub fn reflection(alpha: &AffineWeight) -> Result<Self> {
        let a = alpha.finite();
        let linear = SignedPermutation::reflection(a)?;
        let a2 = a.norm2();
        let shift = a.coords().iter().map(|&c| -(2 * c / a2) * alpha.torsion()).collect();
        Self::new(linear, shift, alpha.order())
    }

    pub fn linear(&self) -> &SignedPermutation {
        &self.linear
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn apply(&self, w: &AffineWeight) -> AffineWeight {
        let t: i64 = self.shift.iter().zip(w.finite().coords()).map(|(f, x)| f * x).sum();
        AffineWeight::new(self.linear.apply(w.finite()), w.torsion() + t, self.order)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineAut) -> AffineAut {
        let n = self.linear.rank();
        let mut shift = other.shift.clone();
        for (j, s) in shift.iter_mut().enumerate() {
            let image = other.linear.perm()[j];
            let sign = other.linear.signs()[image] as i64;
            *s = (*s + sign * self.shift[image]).rem_euclid(self.order);
        }
        debug_assert_eq!(shift.len(), n);
        AffineAut {
            linear: self.linear.compose(&other.linear),
            shift,
            order: self.order,
        }
    }

    /// `ε(w) = det` of the action on `X*(S) ⊗ Q`.
    pub fn sign(&self) -> i64 {
        self.linear.determinant()
    }

    pub fn act(&self, c: &AffineCharacter) -> AffineCharacter {
        c.map_keys(|k| self.apply(k))
    }
}

/// A finite group of [`AffineAut`]s materialized by closure; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct AffineGroup {
    rank: usize,
    order: i64,
    elements: Vec<AffineAut>,
    index: HashMap<AffineAut, usize>,
}

impl AffineGroup {
    pub fn generated(rank: usize, order: i64, generators: &[AffineAut]) -> Result<Self> {
        for g in generators {
            if g.linear.rank() != rank || g.order != order {
                return Err(Error::InvalidAffine("generator on a different torus".into()));
            }
        }
        let id = AffineAut::identity(rank, order);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in generators {
                let next = g.compose(&elements[k]);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(AffineGroup {
            rank,
            order,
            elements,
            index,
        })
    }

    /// All `(P, f)` with `P` in the hyperoctahedral group and `f ∈ (Z/M)^r`,
    /// of order `2^r r! M^r`.
    pub fn full(rank: usize, order: i64) -> Self {
        let mut gens: Vec<AffineAut> = WeylSubgroup::hyperoctahedral(rank)
            .generators()
            .iter()
            .map(|p| AffineAut::new(p.clone(), vec![0; rank], order).expect("ranks agree"))
            .collect();
        for j in 0..rank {
            let mut f = vec![0; rank];
            f[j] = 1;
            gens.push(AffineAut::new(SignedPermutation::identity(rank), f, order).expect("ranks agree"));
        }
        Self::generated(rank, order, &gens).expect("consistent generators")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn elements(&self) -> &[AffineAut] {
        &self.elements
    }

    pub fn contains(&self, g: &AffineAut) -> bool {
        self.index.contains_key(g)
    }
}

/// Multiplicity data over one reduced restricted root `α′`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    pub root: Weight,
    /// `|R_{1,α′}|`
    pub m1: usize,
    /// `|R_{2,α′}|`
    pub m2: usize,
    /// `m1 + 2 m2`
    pub m: usize,
}

/// Outcome of [`AffineRootSystem::validate`]: violations tagged with the axiom number.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AffineValidation {
    pub violations: Vec<(u8, String)>,
}

impl AffineValidation {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_axiom(&self) -> Option<u8> {
        self.violations.iter().map(|v| v.0).min()
    }
}

/// A finite set of characters of a generalized torus, meant to satisfy the
/// affine root system axioms (checked by [`validate`](Self::validate)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRootSystem {
    torus: GeneralizedTorus,
    roots: BTreeSet<AffineWeight>,
    label: String,
}

impl AffineRootSystem {
    pub fn new(torus: GeneralizedTorus, roots: impl IntoIterator<Item = AffineWeight>, label: &str) -> Result<Self> {
        let roots: BTreeSet<AffineWeight> = roots.into_iter().collect();
        for r in &roots {
            if r.rank() != torus.rank || r.order() != torus.order {
                return Err(Error::InvalidAffine(format!("{r} does not live on the torus")));
            }
        }
        Ok(AffineRootSystem {
            torus,
            roots,
            label: label.to_string(),
        })
    }

    pub fn empty(torus: GeneralizedTorus) -> Self {
        AffineRootSystem {
            torus,
            roots: BTreeSet::new(),
            label: "empty".into(),
        }
    }

    pub fn torus(&self) -> GeneralizedTorus {
        self.torus
    }

    pub fn roots(&self) -> &BTreeSet<AffineWeight> {
        &self.roots
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn contains(&self, a: &AffineWeight) -> bool {
        self.roots.contains(a)
    }

    pub fn without(&self, a: &AffineWeight) -> Self {
        let mut out = self.clone();
        out.roots.remove(a);
        out.label = format!("{} minus {a}", self.label);
        out
    }

    /// `R′`: restrictions to `S⁰`.
    pub fn restricted(&self) -> BTreeSet<Weight> {
        self.roots.iter().map(|r| r.finite().clone()).collect()
    }

    pub fn restricted_system(&self) -> Result<RootSystem> {
        RootSystem::from_roots(self.torus.rank, self.restricted(), &format!("{}'", self.label))
    }

    /// `{β ∈ R : β|_{S⁰} = α′}`, ordered by torsion.
    pub fn fiber(&self, alpha: &Weight) -> Vec<AffineWeight> {
        self.roots.iter().filter(|r| r.finite() == alpha).cloned().collect()
    }

    /// Reduced restricted roots: `½α′ ∉ R′`.
    pub fn reduced_restricted(&self) -> Vec<Weight> {
        let rp = self.restricted();
        rp.iter()
            .filter(|a| a.div_exact(2).is_none_or(|h| !rp.contains(&h)))
            .cloned()
            .collect()
    }

    pub fn multiplicities(&self) -> Vec<Multiplicity> {
        self.reduced_restricted()
            .into_iter()
            .map(|a| {
                let m1 = self.fiber(&a).len();
                let m2 = self.fiber(&a.scale(2)).len();
                Multiplicity {
                    root: a,
                    m1,
                    m2,
                    m: m1 + 2 * m2,
                }
            })
            .collect()
    }

    /// `m_{α′}` for a reduced restricted root.
    pub fn multiplicity(&self, alpha: &Weight) -> Option<usize> {
        self.multiplicities().into_iter().find(|m| &m.root == alpha).map(|m| m.m)
    }

    /// Simple roots of the reduced part of `R′` for the lexicographic positive system
    /// (for a `BC` factor these are the simple roots of `B`).
    pub fn simple_restricted(&self) -> Vec<Weight> {
        let pos: Vec<Weight> = self.reduced_restricted().into_iter().filter(is_positive).collect();
        let set: BTreeSet<Weight> = pos.iter().cloned().collect();
        pos.iter()
            .filter(|&a| !pos.iter().any(|b| set.contains(&(a - b))))
            .cloned()
            .collect()
    }

    /// `W_R`, generated by all `s_α`.
    pub fn weyl_group(&self) -> Result<AffineGroup> {
        let gens: Vec<AffineAut> = self.roots.iter().map(AffineAut::reflection).collect::<Result<_>>()?;
        AffineGroup::generated(self.torus.rank, self.torus.order, &gens)
    }

    /// Check axioms (1)–(5); the first violation of each kind is reported.
    pub fn validate(&self) -> AffineValidation {
        let mut v = AffineValidation::default();
        let order = self.torus.order;
        let restricted = self.restricted();

        for a in &self.roots {
            let f = a.finite();
            let a2 = f.norm2();
            if a2 == 0 || f.coords().iter().any(|&c| (2 * c) % a2 != 0) {
                v.violations.push((1, format!("{a} restricts outside the strongly integral system")));
                return v;
            }
        }
        'closure: for a in &self.roots {
            let s = match AffineAut::reflection(a) {
                Ok(s) => s,
                Err(e) => {
                    v.violations.push((2, format!("no lattice reflection for {a}: {e}")));
                    break;
                }
            };
            for b in &self.roots {
                let img = s.apply(b);
                if !self.roots.contains(&img) {
                    v.violations.push((2, format!("s_{a}({b}) = {img} is not a root")));
                    break 'closure;
                }
            }
        }
        if let Some(a) = self.roots.iter().find(|a| self.roots.contains(&a.scale(2))) {
            v.violations.push((3, format!("both {a} and its double are roots")));
        }

        let torsions = |w: &Weight| -> BTreeSet<i64> { self.fiber(w).iter().map(|r| r.torsion()).collect() };
        // subgroup of Z/M of order n, shifted by `base`; `odd` keeps odd multiples of M/n only
        let coset = |base: i64, n: usize, odd: bool| -> Option<BTreeSet<i64>> {
            let n = n as i64;
            (n > 0 && order % n == 0).then(|| {
                (0..n)
                    .filter(|j| !odd || j % 2 == 1)
                    .map(|j| (base + j * (order / n)).rem_euclid(order))
                    .collect()
            })
        };
        for a in &self.roots {
            let f = a.finite();
            let doubled = f.scale(2);
            let t1 = torsions(f);
            if !restricted.contains(&doubled) {
                if coset(a.torsion(), t1.len(), false).as_ref() != Some(&t1) {
                    v.violations.push((
                        4,
                        format!("fiber over ({f}) has torsions {t1:?}, not a coset of a cyclic subgroup"),
                    ));
                    break;
                }
            } else {
                let t2 = torsions(&doubled);
                let n1 = t1.len();
                let ok = n1 % 2 == 0
                    && coset(a.torsion(), n1, false).as_ref() == Some(&t1)
                    && coset(2 * a.torsion(), n1, true).as_ref() == Some(&t2);
                if !ok {
                    v.violations.push((
                        5,
                        format!("fibers over ({f}) and its double have torsions {t1:?} and {t2:?}"),
                    ));
                    break;
                }
            }
        }
        v
    }

    /// `m_{1,α′} | M` for every reduced `α′`.
    pub fn fiber_divisibility(&self) -> bool {
        self.multiplicities().iter().all(|m| self.torus.order % m.m1 as i64 == 0)
    }

    /// Roots grouped by restriction, handy for reports.
    pub fn fibers(&self) -> BTreeMap<Weight, Vec<i64>> {
        let mut out: BTreeMap<Weight, Vec<i64>> = BTreeMap::new();
        for r in &self.roots {
            out.entry(r.finite().clone()).or_default().push(r.torsion());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aw(f: &[i64], t: i64, m: i64) -> AffineWeight {
        AffineWeight::new(Weight::from(f), t, m)
    }

    #[test]
    fn reflections_are_involutions_that_negate_the_root() {
        let a = aw(&[1, 1], 1, 4);
        let s = AffineAut::reflection(&a).unwrap();
        assert_eq!(s.apply(&a), a.neg());
        assert!(s.compose(&s) == AffineAut::identity(2, 4));
        assert_eq!(s.sign(), -1);
        let fixed = aw(&[1, -1], 3, 4);
        assert_eq!(s.apply(&fixed), fixed);
    }

    #[test]
    fn composition_matches_sequential_application() {
        let m = 3;
        let g = AffineGroup::full(2, m);
        assert_eq!(g.len(), 8 * 9);
        let samples = [aw(&[1, 0], 0, m), aw(&[2, -1], 1, m), aw(&[0, 3], 2, m)];
        for x in g.elements().iter().step_by(5) {
            for y in g.elements().iter().step_by(7) {
                let xy = x.compose(y);
                for s in &samples {
                    assert_eq!(xy.apply(s), x.apply(&y.apply(s)));
                }
            }
        }
    }

    #[test]
    fn axiom_failures_are_attributed() {
        let t = GeneralizedTorus::new(1, 2).unwrap();
        let good = AffineRootSystem::new(
            t,
            [aw(&[1], 0, 2), aw(&[1], 1, 2), aw(&[-1], 0, 2), aw(&[-1], 1, 2)],
            "2A1",
        )
        .unwrap();
        assert!(good.validate().ok());
        assert_eq!(good.multiplicity(&Weight::from([1])), Some(2));

        let doubled = AffineRootSystem::new(t, [aw(&[1], 0, 2), aw(&[-1], 0, 2), aw(&[2], 0, 2), aw(&[-2], 0, 2)], "x")
            .unwrap();
        assert_eq!(doubled.validate().first_axiom(), Some(3));

        let t3 = GeneralizedTorus::new(1, 3).unwrap();
        let lopsided = AffineRootSystem::new(t3, [aw(&[1], 0, 3), aw(&[-1], 0, 3), aw(&[1], 1, 3), aw(&[-1], 2, 3)], "y")
            .unwrap();
        assert!(!lopsided.validate().ok());

        let t2 = GeneralizedTorus::connected(2);
        let bad = AffineRootSystem::new(t2, [aw(&[1, 1], 0, 1), aw(&[-1, -1], 0, 1), aw(&[1, 0], 0, 1), aw(&[-1, 0], 0, 1)], "z")
            .unwrap();
        assert_eq!(bad.validate().first_axiom(), Some(2));
    }
}
