//! Weight multiplicities of irreducible representations by Freudenthal's recursion.
//!
//! With `ρ` the half sum of positive roots, the recursion reads
//! `m(μ)·[(λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)] = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα)(μ+kα, α)`;
//! the bracket equals `(λ,λ) − (μ,μ) + (λ−μ, 2ρ)`, so everything is integral.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use super::cache::{DominantMultiplicities, WeightCache};
use super::group::{GroupDesc, Simple};
use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::rational;

/// Dominant weights `μ ≤ λ`, reached from `λ` by subtracting positive roots.
pub fn dominant_weights(s: Simple, hw: &Weight) -> Vec<Weight> {
    let roots = s.positive_roots();
    let mut seen = HashSet::from([hw.clone()]);
    let mut queue = VecDeque::from([hw.clone()]);
    while let Some(mu) = queue.pop_front() {
        for a in &roots {
            let nu = s.dominant_rep(&(&mu - a));
            if !seen.contains(&nu) && s.dominates(hw, &nu) {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    seen.into_iter().collect()
}

/// Multiplicities of the dominant weights of the irreducible with highest weight `hw`,
/// ordered by `(μ, 2ρ)` descending, then lexicographically descending.
pub fn dominant_multiplicities(s: Simple, hw: &Weight) -> Result<DominantMultiplicities> {
    if !s.is_dominant(hw) {
        return Err(Error::NotDominant {
            weight: hw.coords().to_vec(),
            what: s.key(),
        });
    }
    if let Simple::Torus(_) = s {
        return Ok(vec![(hw.clone(), 1)]);
    }
    let roots = s.positive_roots();
    let two_rho = s.two_delta();
    let mut order = dominant_weights(s, hw);
    order.sort_by(|a, b| b.dot(&two_rho).cmp(&a.dot(&two_rho)).then_with(|| b.cmp(a)));

    let mut mult: HashMap<Weight, i64> = HashMap::with_capacity(order.len());
    let hw2 = hw.norm2();
    for mu in &order {
        if mu == hw {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut rhs = 0i64;
        for a in &roots {
            let mut nu = mu + a;
            loop {
                let m = mult.get(&s.dominant_rep(&nu)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                rhs += m * nu.dot(a);
                nu = &nu + a;
            }
        }
        rhs *= 2;
        let denom = hw2 - mu.norm2() + (hw - mu).dot(&two_rho);
        if denom <= 0 || rhs % denom != 0 {
            return Err(Error::DimensionCheck(format!(
                "Freudenthal step at {mu:?} for {} {hw:?} is not integral",
                s.key()
            )));
        }
        mult.insert(mu.clone(), rhs / denom);
    }
    Ok(order
        .into_iter()
        .map(|mu| {
            let m = mult[&mu];
            (mu, m)
        })
        .filter(|(_, m)| *m != 0)
        .collect())
}

/// Expand dominant multiplicities to the full character and check the Weyl dimension formula.
pub fn expand_orbits(s: Simple, hw: &Weight, dom: &DominantMultiplicities) -> Result<BTreeMap<Weight, i64>> {
    let mut out = BTreeMap::new();
    for (mu, m) in dom {
        for v in s.orbit(mu) {
            out.insert(v, *m);
        }
    }
    let total: i64 = out.values().sum();
    let expected = s.weyl_dimension(hw);
    if rational::q(total) != expected {
        return Err(Error::DimensionCheck(format!(
            "{} {hw:?}: weights sum to {total}, Weyl dimension is {expected}",
            s.key()
        )));
    }
    Ok(out)
}

/// The full character of the irreducible of `group` with highest weight `hw`
/// (already canonical), as integer multiplicities on concatenated coordinates.
pub fn character(group: &GroupDesc, hw: &Weight, cache: &WeightCache) -> Result<BTreeMap<Weight, i64>> {
    let parts = group.split(hw)?;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::from([(Weight::zero(0), 1)]);
    for (f, p) in group.factors().iter().zip(parts) {
        let s = f.simple();
        let dom = cache.get_or_compute(&s.key(), &p, || dominant_multiplicities(s, &p))?;
        let block = expand_orbits(s, &p, &dom)?;
        let mut next = BTreeMap::new();
        for (a, ma) in &acc {
            for (b, mb) in &block {
                *next.entry(a.concat(b)).or_insert(0) += ma * mb;
            }
        }
        acc = next;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::group::Factor;

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    fn chr(g: &str, hw: Weight) -> BTreeMap<Weight, i64> {
        let g: GroupDesc = g.parse().unwrap();
        let hw = g.canonical_hw(&hw).unwrap();
        character(&g, &hw, &WeightCache::in_memory()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(chr("SU(2)", w([1, 0])), BTreeMap::from([(w([1, 0]), 1), (w([0, 1]), 1)]));
        let adj = chr("SU(3)", w([2, 1, 0]));
        assert_eq!(adj.values().sum::<i64>(), 8);
        assert_eq!(adj[&w([1, 1, 1])], 2);
        assert_eq!(chr("Sp(1)", w([1])), BTreeMap::from([(w([1]), 1), (w([-1]), 1)]));
    }

    /// Tensor-power oracle: `V^{⊗2} = S²V ⊕ Λ²V` for the standard representation.
    #[test]
    fn symmetric_square_of_standard() {
        for n in 2..=5usize {
            let g = format!("U({n})");
            let std_ = chr(&g, Weight::unit(n, 0));
            let mut sym = BTreeMap::new();
            let keys: Vec<_> = std_.keys().cloned().collect();
            for i in 0..keys.len() {
                for j in i..keys.len() {
                    *sym.entry(&keys[i] + &keys[j]).or_insert(0) += 1;
                }
            }
            assert_eq!(chr(&g, Weight::unit(n, 0).scale(2)), sym);
        }
    }

    /// Brute force: `SO(4) ≅ (SU(2)×SU(2))/±1`, so `(a,b)` has the weights of
    /// `V_{a+b} ⊗ V_{a−b}` in the coordinates `(x+y)/2, (x−y)/2`.
    #[test]
    fn so4_from_two_su2() {
        for (a, b) in [(1, 0), (1, 1), (2, 0), (2, 1), (2, -2), (3, 1)] {
            let got = chr("SO(4)", w([a, b]));
            let mut expected = BTreeMap::new();
            let (p, q) = (a + b, a - b);
            for x in (-p..=p).step_by(2) {
                for y in (-q..=q).step_by(2) {
                    *expected.entry(w([(x + y) / 2, (x - y) / 2])).or_insert(0) += 1;
                }
            }
            assert_eq!(got, expected, "({a},{b})");
        }
    }

    #[test]
    fn characters_are_weyl_invariant_and_match_dimension() {
        let cases: [(&str, Weight); 5] = [
            ("SU(4)", w([2, 1, 0, 0])),
            ("Sp(2)", w([2, 1])),
            ("SO(6)", w([1, 1, -1])),
            ("SO(8)", w([1, 1, 0, 0])),
            ("Sp(1)xSO(4)", w([1, 1, 0])),
        ];
        for (g, hw) in cases {
            let group: GroupDesc = g.parse().unwrap();
            let ch = chr(g, hw.clone());
            assert_eq!(rational::q(ch.values().sum()), group.weyl_dimension(&hw).unwrap());
            if let [Factor::Symplectic(_) | Factor::SpecialUnitary(_) | Factor::EvenOrthogonal(_)] = group.factors() {
                let s = group.factors()[0].simple();
                for (mu, m) in &ch {
                    assert_eq!(ch[&s.dominant_rep(mu)], *m);
                }
            }
        }
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(dominant_multiplicities(Simple::C(2), &w([0, 1])).is_err());
    }
}
