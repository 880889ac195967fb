//! `2δ_R`, the alternating character `A_R` and its averages `F_{R,W}`.
//!
//! `δ_R` itself need not be a character of `S`, but every `δ_R − wδ_R` is. These
//! differences are produced along reflection words, `δ − s_α wδ = (δ − wδ) +
//! ⟨wδ, α̌⟩α`, so only the finite part of `δ_R` (a half-integral vector) is ever needed.

use std::collections::HashMap;
use std::collections::VecDeque;

use super::system::{AffineAut, AffineCharacter, AffineGroup, AffineRootSystem, AffineWeight};
use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::rational;
use crate::rootsys::is_positive;

/// A choice of one root in each fiber `R_{1,α′}`: the fiber element at
/// position `index mod |fiber|`, fibers being sorted by torsion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Lifting {
    pub index: usize,
}

impl Lifting {
    pub fn lift(&self, r: &AffineRootSystem, alpha: &Weight) -> Result<AffineWeight> {
        let fiber = r.fiber(alpha);
        if fiber.is_empty() {
            return Err(Error::InvalidAffine(format!("no root restricts to ({alpha})")));
        }
        Ok(fiber[self.index % fiber.len()].clone())
    }
}

/// `2δ_R = Σ m_{α′} α` over positive reduced `α′`, with `α ∈ R_{1,α′}` chosen by `lifting`.
pub fn two_delta(r: &AffineRootSystem, lifting: Lifting) -> Result<AffineWeight> {
    let t = r.torus();
    let mut acc = AffineWeight::new(Weight::zero(t.rank), 0, t.order);
    for m in r.multiplicities() {
        if is_positive(&m.root) {
            acc = acc.add(&lifting.lift(r, &m.root)?.scale(m.m as i64));
        }
    }
    Ok(acc)
}

/// The group generated by `gens`, each element paired with `δ − wδ`.
fn orbit_of_delta(r: &AffineRootSystem, gens: &[AffineWeight], lifting: Lifting) -> Result<Vec<(AffineAut, AffineWeight)>> {
    let t = r.torus();
    let two_delta_fin = two_delta(r, lifting)?.finite().clone();
    let refl: Vec<AffineAut> = gens.iter().map(AffineAut::reflection).collect::<Result<_>>()?;
    let id = AffineAut::identity(t.rank, t.order);
    let zero = AffineWeight::new(Weight::zero(t.rank), 0, t.order);
    let mut out = vec![(id.clone(), zero)];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for (a, s) in gens.iter().zip(&refl) {
            let (w, d) = &out[k];
            // ⟨δ − d, α̌⟩ = (2δ − 2d, α)/(α, α)
            let x = &two_delta_fin - &d.finite().scale(2);
            let num = x.dot(a.finite());
            let den = a.finite().norm2();
            if num % den != 0 {
                return Err(Error::InvalidAffine(format!("⟨wδ, α̌⟩ is not integral for {a}")));
            }
            let next_d = d.add(&a.scale(num / den));
            let next_w = s.compose(w);
            match index.get(&next_w) {
                Some(&j) => {
                    if out[j].1 != next_d {
                        return Err(Error::InvalidAffine(format!(
                            "δ − wδ is not well defined: {} versus {next_d}",
                            out[j].1
                        )));
                    }
                }
                None => {
                    index.insert(next_w.clone(), out.len());
                    queue.push_back(out.len());
                    out.push((next_w, next_d));
                }
            }
        }
    }
    Ok(out)
}

/// Liftings of the simple roots of `R′` and the group `W_{R_{s₀}}` they generate.
pub fn small_weyl_group(r: &AffineRootSystem, lifting: Lifting) -> Result<Vec<(AffineAut, AffineWeight)>> {
    let gens: Vec<AffineWeight> = r
        .simple_restricted()
        .iter()
        .map(|a| lifting.lift(r, a))
        .collect::<Result<_>>()?;
    orbit_of_delta(r, &gens, lifting)
}

/// `|W_{R′}|`.
pub fn restricted_weyl_order(r: &AffineRootSystem) -> Result<usize> {
    Ok(r.restricted_system()?.weyl_group()?.order())
}

/// `A_R = (1/|W_{R′}|) Σ_{w ∈ W_{R_{s₀}}} ε(w)[δ_R − wδ_R]`.
pub fn a_r(r: &AffineRootSystem, lifting: Lifting) -> Result<AffineCharacter> {
    let elems = small_weyl_group(r, lifting)?;
    let n = restricted_weyl_order(r)?;
    if elems.len() != n {
        return Err(Error::InvalidAffine(format!(
            "W_(R_s0) has order {} but W_(R') has order {n}",
            elems.len()
        )));
    }
    Ok(alternating(&elems, n))
}

/// `A_R` via the full group: `(1/|W_R|) Σ_{w ∈ W_R} ε(w)[δ_R − wδ_R]`.
pub fn a_r_full(r: &AffineRootSystem) -> Result<AffineCharacter> {
    let gens: Vec<AffineWeight> = r.roots().iter().cloned().collect();
    let elems = orbit_of_delta(r, &gens, Lifting::default())?;
    let n = elems.len();
    Ok(alternating(&elems, n))
}

fn alternating(elems: &[(AffineAut, AffineWeight)], denom: usize) -> AffineCharacter {
    let mut out = AffineCharacter::zero();
    let c = rational::frac(1, denom as i64);
    for (w, d) in elems {
        let s = if w.sign() > 0 { c.clone() } else { -c.clone() };
        out.add_term(d.clone(), s);
    }
    out
}

/// `F_{R,W} = (1/|W|) Σ_{γ ∈ W} γ·A_R`; `W` must contain every `s_α`.
pub fn averaged_f(r: &AffineRootSystem, w: &AffineGroup) -> Result<AffineCharacter> {
    for a in r.roots() {
        if !w.contains(&AffineAut::reflection(a)?) {
            return Err(Error::MissingReflection(a.finite().coords().to_vec()));
        }
    }
    let a = a_r(r, Lifting::default())?;
    let mut out = AffineCharacter::zero();
    for g in w.elements() {
        out = out.add(&g.act(&a));
    }
    Ok(out.scale(&rational::frac(1, w.len() as i64)))
}

/// `Σ_{τ ∈ W_{R_{s₀}}} τ·A_R`, the character form of the density.
pub fn density_character(r: &AffineRootSystem) -> Result<AffineCharacter> {
    let a = a_r(r, Lifting::default())?;
    let mut out = AffineCharacter::zero();
    for (tau, _) in small_weyl_group(r, Lifting::default())? {
        out = out.add(&tau.act(&a));
    }
    Ok(out)
}

/// `(1/|W_{R′}|) Π_{β ∈ R} (1 − [β])` as an element of `Q[X*(S)]`.
pub fn density_product(r: &AffineRootSystem) -> Result<AffineCharacter> {
    let t = r.torus();
    let zero = AffineWeight::new(Weight::zero(t.rank), 0, t.order);
    let mut acc = AffineCharacter::basis(zero.clone());
    for b in r.roots() {
        let mut f = AffineCharacter::basis(zero.clone());
        f.add_term(b.clone(), -rational::one());
        acc = acc.mul(&f);
    }
    Ok(acc.scale(&rational::frac(1, restricted_weyl_order(r)? as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::catalog::CatalogEntry;
    use crate::affine::system::GeneralizedTorus;
    use crate::rational::frac;

    fn aw(f: &[i64], t: i64, m: i64) -> AffineWeight {
        AffineWeight::new(Weight::from(f), t, m)
    }

    #[test]
    fn connected_a1() {
        let r = CatalogEntry::diagonal("A1", 1).build().unwrap();
        assert_eq!(two_delta(&r, Lifting::default()).unwrap(), aw(&[1, -1], 0, 1));
        let a = a_r(&r, Lifting::default()).unwrap();
        let expected: AffineCharacter = [(aw(&[0, 0], 0, 1), frac(1, 2)), (aw(&[1, -1], 0, 1), frac(-1, 2))]
            .into_iter()
            .collect();
        assert_eq!(a, expected);
    }

    #[test]
    fn doubled_a1() {
        let r = CatalogEntry::diagonal("A1", 2).build().unwrap();
        let td = two_delta(&r, Lifting::default()).unwrap();
        assert_eq!(td, aw(&[2, -2], 0, 2));
        // the other lift gives the same 2δ: m_{α′} = 2 kills the torsion
        assert_eq!(two_delta(&r, Lifting { index: 1 }).unwrap(), td);
        let a = a_r(&r, Lifting::default()).unwrap();
        let expected: AffineCharacter = [(aw(&[0, 0], 0, 2), frac(1, 2)), (aw(&[2, -2], 0, 2), frac(-1, 2))]
            .into_iter()
            .collect();
        assert_eq!(a, expected);
    }

    #[test]
    fn empty_system() {
        let r = AffineRootSystem::empty(GeneralizedTorus::new(2, 3).unwrap());
        let a = a_r(&r, Lifting::default()).unwrap();
        assert_eq!(a, AffineCharacter::basis(aw(&[0, 0], 0, 3)));
        let f = averaged_f(&r, &AffineGroup::full(2, 3)).unwrap();
        assert_eq!(f, a);
    }

    #[test]
    fn lifting_independence_and_full_group_form() {
        for e in CatalogEntry::standard_entries() {
            let r = e.build().unwrap();
            let a0 = a_r(&r, Lifting { index: 0 }).unwrap();
            let a1 = a_r(&r, Lifting { index: 1 }).unwrap();
            assert_eq!(a0, a1, "{e}");
            assert_eq!(a_r_full(&r).unwrap(), a0, "{e}");
        }
    }

    #[test]
    fn averaged_f_is_invariant_and_checks_containment() {
        let r = CatalogEntry::diagonal("A1", 2).build().unwrap();
        let full = AffineGroup::full(2, 2);
        let f = averaged_f(&r, &full).unwrap();
        for g in full.elements() {
            assert_eq!(g.act(&f), f);
        }
        assert_eq!(f.augmentation(), rational::zero());
        let trivial = AffineGroup::generated(2, 2, &[]).unwrap();
        assert!(averaged_f(&r, &trivial).is_err());
        // pinned exact value
        let mut keys: Vec<String> = f.terms().map(|(k, c)| format!("{k}:{c}")).collect();
        keys.sort();
        assert_eq!(f.len(), 5, "{keys:?}");
    }
}
