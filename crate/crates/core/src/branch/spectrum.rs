//! Casimir eigenvalues, irreducibles below a cutoff, and Laplace spectra of
//! homogeneous vector bundles `G ×_H V_τ`.

use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::branching::{Brancher, Embedding, IrrepLabel};
use super::group::GroupDesc;
use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::rational::{self, Q};

/// The Casimir scalar `(λ̃, λ̃) + (λ, 2δ)` of an irreducible.
pub fn casimir_eigenvalue(rho: &IrrepLabel) -> Q {
    rho.casimir()
}

/// All canonical highest weights of `G` with Casimir at most `cutoff`, sorted by
/// `(Casimir, weight)`.
///
/// Search runs outward from the trivial weight by adding monoid generators;
/// the Casimir strictly increases along every such step, so pruning at the
/// cutoff loses nothing.
pub fn irreps_below(g: &GroupDesc, cutoff: &Q) -> Result<Vec<(Weight, Q)>> {
    if !cutoff.is_positive() {
        return Err(Error::NonPositiveCutoff);
    }
    let gens = g.monoid_generators()?;
    let zero = Weight::zero(g.width());
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut heap = BinaryHeap::from([std::cmp::Reverse((rational::zero(), zero))]);
    let mut out = Vec::new();
    while let Some(std::cmp::Reverse((c, hw))) = heap.pop() {
        if &c > cutoff {
            continue;
        }
        for gen in &gens {
            let next = g.canonical_hw(&(&hw + gen))?;
            if seen.insert(next.clone()) {
                let cn = g.casimir(&next)?;
                if &cn <= cutoff {
                    heap.push(std::cmp::Reverse((cn, next)));
                }
            }
        }
        out.push((hw, c));
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// Sorted `(eigenvalue, multiplicity)` pairs up to a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub cutoff: Q,
    pub entries: Vec<(Q, u64)>,
}

pub const SPECTRUM_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct SpectrumDoc {
    schema_version: u32,
    cutoff: String,
    entries: Vec<(String, u64)>,
}

impl Spectrum {
    pub fn from_pairs(cutoff: Q, pairs: impl IntoIterator<Item = (Q, u64)>) -> Self {
        let mut merged: BTreeMap<Q, u64> = BTreeMap::new();
        for (e, m) in pairs {
            if m > 0 {
                *merged.entry(e).or_insert(0) += m;
            }
        }
        Spectrum {
            cutoff,
            entries: merged.into_iter().collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = SpectrumDoc {
            schema_version: SPECTRUM_SCHEMA_VERSION,
            cutoff: rational::format(&self.cutoff),
            entries: self.entries.iter().map(|(e, m)| (rational::format(e), *m)).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SpectrumDoc = serde_json::from_str(text)?;
        let cutoff = rational::parse(&doc.cutoff)?;
        let mut entries = Vec::with_capacity(doc.entries.len());
        for (e, m) in doc.entries {
            entries.push((rational::parse(&e)?, m));
        }
        Ok(Spectrum { cutoff, entries })
    }
}

/// `L²(G/H, E_τ) = ⊕_ρ Hom_H(τ, ρ|_H) ⊗ ρ`: eigenvalue `c(ρ)` with multiplicity
/// `dim ρ · dim Hom_H(τ, ρ|_H)`.
pub fn bundle_spectrum(brancher: &Brancher<'_>, emb: &Embedding, tau: &IrrepLabel, cutoff: &Q) -> Result<Spectrum> {
    let datum = brancher.tau_dimension_datum(emb, tau, cutoff)?;
    let pairs = datum.into_iter().map(|(rho, m)| {
        let mult = (rho.dimension() * m) as u64;
        (rho.casimir(), mult)
    });
    Ok(Spectrum::from_pairs(cutoff.clone(), pairs.collect::<Vec<_>>()))
}

/// Exact equality of spectra with equal cutoffs.
pub fn spectra_equal(a: &Spectrum, b: &Spectrum) -> Result<bool> {
    if a.cutoff != b.cutoff {
        return Err(Error::CutoffMismatch(
            rational::format(&a.cutoff),
            rational::format(&b.cutoff),
        ));
    }
    Ok(a.entries == b.entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::cache::WeightCache;
    use crate::rational::q;

    #[test]
    fn sphere_spectrum() {
        let cache = WeightCache::in_memory();
        let b = Brancher::new(&cache);
        let g: GroupDesc = "SU(2)".parse().unwrap();
        let emb = Embedding::maximal_torus(&g).unwrap();
        let tau = IrrepLabel::trivial(emb.h.clone());
        let s = bundle_spectrum(&b, &emb, &tau, &q(30)).unwrap();
        // oracle: spin l contains the zero torus weight exactly once for integral l
        let expected: Vec<(Q, u64)> = (0..)
            .map(|l: i64| (q(2 * l * (l + 1)), (2 * l + 1) as u64))
            .take_while(|(e, _)| e <= &q(30))
            .collect();
        assert_eq!(s.entries, expected);
        assert_eq!(s.entries.len(), 4);
    }

    #[test]
    fn homogeneous_space_of_itself_is_a_point() {
        let cache = WeightCache::in_memory();
        let b = Brancher::new(&cache);
        for g in ["SU(3)", "Sp(2)", "SO(6)"] {
            let g: GroupDesc = g.parse().unwrap();
            let emb = Embedding::identity(&g);
            let s = bundle_spectrum(&b, &emb, &IrrepLabel::trivial(g.clone()), &q(12)).unwrap();
            assert_eq!(s.entries, vec![(q(0), 1)]);
        }
    }

    #[test]
    fn enumeration_is_complete_against_a_box_search() {
        for (g, bound) in [("SU(3)", 6i64), ("Sp(2)", 5), ("SO(6)", 5)] {
            let g: GroupDesc = g.parse().unwrap();
            let cutoff = q(14);
            let found: BTreeSet<Weight> = irreps_below(&g, &cutoff).unwrap().into_iter().map(|(w, _)| w).collect();
            let n = g.width();
            let mut boxed = BTreeSet::new();
            let side = (2 * bound + 1) as usize;
            for code in 0..side.pow(n as u32) {
                let mut c = code;
                let v: Vec<i64> = (0..n)
                    .map(|_| {
                        let x = (c % side) as i64 - bound;
                        c /= side;
                        x
                    })
                    .collect();
                if let Ok(hw) = g.canonical_hw(&Weight::new(v)) {
                    if g.casimir(&hw).unwrap() <= cutoff {
                        boxed.insert(hw);
                    }
                }
            }
            assert_eq!(found, boxed, "{g}");
        }
    }

    #[test]
    fn cutoff_validation_and_comparison() {
        let g: GroupDesc = "SU(2)".parse().unwrap();
        assert!(matches!(irreps_below(&g, &q(0)), Err(Error::NonPositiveCutoff)));
        let s = Spectrum::from_pairs(q(30), [(q(0), 1), (q(4), 3)]);
        assert!(spectra_equal(&s, &s).unwrap());
        let shifted = Spectrum::from_pairs(q(30), [(q(4), 3)]);
        assert!(!spectra_equal(&s, &shifted).unwrap());
        let other = Spectrum::from_pairs(q(40), [(q(0), 1)]);
        assert!(spectra_equal(&s, &other).is_err());
        assert_eq!(Spectrum::from_json(&s.to_json()).unwrap(), s);
    }
}
