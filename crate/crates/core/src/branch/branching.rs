//! Restriction of irreducible characters along a torus map and decomposition
//! into irreducibles of the subgroup by peeling off highest weights.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use super::cache::WeightCache;
use super::freudenthal::character;
use super::group::{Factor, GroupDesc};
use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::rational::{self, Q};

/// An irreducible representation: a group and a canonical dominant highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IrrepLabel {
    pub group: GroupDesc,
    pub highest_weight: Weight,
}

impl IrrepLabel {
    pub fn new(group: GroupDesc, hw: &Weight) -> Result<Self> {
        let highest_weight = group.canonical_hw(hw)?;
        Ok(IrrepLabel { group, highest_weight })
    }

    pub fn trivial(group: GroupDesc) -> Self {
        let hw = Weight::zero(group.width());
        IrrepLabel {
            group,
            highest_weight: hw,
        }
    }

    pub fn dimension(&self) -> i64 {
        rational::to_i64(&self.group.weyl_dimension(&self.highest_weight).expect("rank checked"))
            .expect("Weyl dimension is a positive integer")
    }

    pub fn casimir(&self) -> Q {
        self.group.casimir(&self.highest_weight).expect("rank checked")
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.group, self.highest_weight)
    }
}

/// A closed subgroup `H ⊂ G` sharing a torus, given by the integer matrix that
/// restricts `G`-weights to `H`-weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub name: String,
    pub g: GroupDesc,
    pub h: GroupDesc,
    /// One row per `H` coordinate, one column per `G` coordinate.
    matrix: Vec<Vec<i64>>,
}

impl Embedding {
    pub fn new(name: &str, g: GroupDesc, h: GroupDesc, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != h.width() || matrix.iter().any(|r| r.len() != g.width()) {
            return Err(Error::RankMismatch {
                expected: h.width() * g.width(),
                got: matrix.iter().map(Vec::len).sum(),
            });
        }
        Ok(Embedding {
            name: name.to_string(),
            g,
            h,
            matrix,
        })
    }

    pub fn restrict(&self, w: &Weight) -> Weight {
        Weight::new(self.matrix.iter().map(|row| row.iter().zip(w.coords()).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `SU(4n+2) ⊃ T`, `(m_1, ..., m_{4n+2}) ↦ (m_i − m_{2n+1+i})_{i ≤ 2n+1}`.
    fn theorem_matrix(n: usize) -> Vec<Vec<i64>> {
        let r = 2 * n + 1;
        (0..r)
            .map(|i| {
                let mut row = vec![0; 2 * r];
                row[i] = 1;
                row[r + i] = -1;
                row
            })
            .collect()
    }

    /// `U(2n+1) ⊂ SU(4n+2)` as `A ↦ diag(A, Ā)`.
    pub fn theorem_h1(n: usize) -> Self {
        let g = GroupDesc::new(vec![Factor::SpecialUnitary(4 * n + 2)]);
        let h = GroupDesc::new(vec![Factor::Unitary(2 * n + 1)]);
        Self::new("H1", g, h, Self::theorem_matrix(n)).expect("shapes agree")
    }

    /// `Sp(n) × SO(2n+2) ⊂ SU(2n) × SU(2n+2) ⊂ SU(4n+2)`, with `C_n` on the first
    /// `n` torus coordinates and `D_{n+1}` on the remaining ones.
    pub fn theorem_h2(n: usize) -> Self {
        let g = GroupDesc::new(vec![Factor::SpecialUnitary(4 * n + 2)]);
        let mut factors = Vec::new();
        if n > 0 {
            factors.push(Factor::Symplectic(n));
        }
        factors.push(Factor::EvenOrthogonal(n + 1));
        Self::new("H2", g, GroupDesc::new(factors), Self::theorem_matrix(n)).expect("shapes agree")
    }

    /// The maximal torus of a single classical factor.
    pub fn maximal_torus(g: &GroupDesc) -> Result<Self> {
        let [f] = g.factors() else {
            return Err(Error::Unsupported("maximal torus of a product group".into()));
        };
        let (r, matrix) = match *f {
            Factor::SpecialUnitary(n) => (
                n - 1,
                (0..n - 1)
                    .map(|i| {
                        let mut row = vec![0; n];
                        row[i] = 1;
                        row[n - 1] = -1;
                        row
                    })
                    .collect(),
            ),
            other => {
                let w = other.width();
                (w, (0..w).map(|i| Weight::unit(w, i).into_coords()).collect())
            }
        };
        Self::new("torus", g.clone(), GroupDesc::new(vec![Factor::Torus(r)]), matrix)
    }

    pub fn identity(g: &GroupDesc) -> Self {
        let w = g.width();
        let matrix = (0..w).map(|i| Weight::unit(w, i).into_coords()).collect();
        Self::new("G", g.clone(), g.clone(), matrix).expect("square")
    }

    /// Named subgroups: `H1`, `H2` (for `SU(4n+2)`), `torus`, `G`.
    pub fn named(g: &GroupDesc, name: &str) -> Result<Self> {
        let theorem_n = match g.factors() {
            [Factor::SpecialUnitary(m)] if m % 4 == 2 => Some((m - 2) / 4),
            _ => None,
        };
        match (name, theorem_n) {
            ("H1", Some(n)) => Ok(Self::theorem_h1(n)),
            ("H2", Some(n)) => Ok(Self::theorem_h2(n)),
            ("H1" | "H2", None) => Err(Error::Unsupported(format!("{name} is defined only inside SU(4n+2), not {g}"))),
            ("torus" | "T", _) => Self::maximal_torus(g),
            ("G", _) => Ok(Self::identity(g)),
            _ => Err(Error::GroupSyntax(name.to_string())),
        }
    }
}

/// The decomposition of `ρ|_H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub rho: IrrepLabel,
    pub dim_rho: i64,
    /// `(H highest weight, multiplicity)`, sorted by weight.
    pub parts: Vec<(Weight, i64)>,
}

impl Decomposition {
    pub fn multiplicity(&self, tau: &Weight) -> i64 {
        self.parts.iter().find(|(w, _)| w == tau).map_or(0, |(_, m)| *m)
    }
}

type IntChar = BTreeMap<Weight, i64>;

/// Branching engine with memoized characters.
pub struct Brancher<'a> {
    cache: &'a WeightCache,
    h_chars: Mutex<HashMap<(GroupDesc, Weight), Arc<IntChar>>>,
}

impl<'a> Brancher<'a> {
    pub fn new(cache: &'a WeightCache) -> Self {
        Brancher {
            cache,
            h_chars: Mutex::new(HashMap::new()),
        }
    }

    pub fn cache(&self) -> &WeightCache {
        self.cache
    }

    /// Full character of an irreducible as integer multiplicities.
    pub fn character(&self, group: &GroupDesc, hw: &Weight) -> Result<Arc<IntChar>> {
        let key = (group.clone(), hw.clone());
        if let Some(c) = self.h_chars.lock().expect("lock").get(&key) {
            return Ok(c.clone());
        }
        let c = Arc::new(character(group, hw, self.cache)?);
        self.h_chars.lock().expect("lock").insert(key, c.clone());
        Ok(c)
    }

    /// Decompose `ρ|_H`. Every peeled coefficient and every intermediate
    /// coefficient must stay a nonnegative integer, and `Σ mult·dim = dim ρ`.
    pub fn branch(&self, emb: &Embedding, rho: &IrrepLabel) -> Result<Decomposition> {
        if rho.group != emb.g {
            return Err(Error::Unsupported(format!("{rho} is not a representation of {}", emb.g)));
        }
        let chi = self.character(&rho.group, &rho.highest_weight)?;
        let mut rest: IntChar = BTreeMap::new();
        for (w, m) in chi.iter() {
            *rest.entry(emb.restrict(w)).or_insert(0) += m;
        }
        rest.retain(|_, m| *m != 0);
        let two_delta = emb.h.two_delta();
        let mut parts: BTreeMap<Weight, i64> = BTreeMap::new();
        while !rest.is_empty() {
            let (top, &c) = rest
                .iter()
                .max_by(|(a, _), (b, _)| a.dot(&two_delta).cmp(&b.dot(&two_delta)).then_with(|| a.cmp(b)))
                .expect("nonempty");
            let top = top.clone();
            if c < 0 {
                return Err(Error::NegativeBranching {
                    weight: top.into_coords(),
                    coeff: c,
                });
            }
            if !emb.h.is_dominant(&top) {
                return Err(Error::DimensionCheck(format!("peeled weight {top:?} is not dominant for {}", emb.h)));
            }
            let chi_h = self.character(&emb.h, &top)?;
            for (w, m) in chi_h.iter() {
                let e = rest.entry(w.clone()).or_insert(0);
                *e -= c * m;
                if *e < 0 {
                    return Err(Error::NegativeBranching {
                        weight: w.coords().to_vec(),
                        coeff: *e,
                    });
                }
                if *e == 0 {
                    rest.remove(w);
                }
            }
            *parts.entry(emb.h.canonical_hw(&top)?).or_insert(0) += c;
        }
        let dim_rho = rho.dimension();
        let total: i64 = parts
            .iter()
            .map(|(w, m)| m * IrrepLabel::new(emb.h.clone(), w).map(|l| l.dimension()).unwrap_or(0))
            .sum();
        if total != dim_rho {
            return Err(Error::DimensionCheck(format!(
                "branching {rho} to {}: Σ mult·dim = {total}, dim = {dim_rho}",
                emb.h
            )));
        }
        Ok(Decomposition {
            rho: rho.clone(),
            dim_rho,
            parts: parts.into_iter().collect(),
        })
    }

    /// `dim Hom_H(τ, ρ|_H)`.
    pub fn branch_multiplicity(&self, emb: &Embedding, tau: &IrrepLabel, rho: &IrrepLabel) -> Result<i64> {
        if tau.group != emb.h {
            return Err(Error::Unsupported(format!("{tau} is not a representation of {}", emb.h)));
        }
        Ok(self.branch(emb, rho)?.multiplicity(&tau.highest_weight))
    }

    /// Decompositions of every `ρ` with Casimir at most `cutoff`, in enumeration order.
    pub fn decompositions(&self, emb: &Embedding, cutoff: &Q) -> Result<Vec<Decomposition>> {
        let irreps = super::spectrum::irreps_below(&emb.g, cutoff)?;
        irreps
            .par_iter()
            .map(|(hw, _)| self.branch(emb, &IrrepLabel::new(emb.g.clone(), hw)?))
            .collect()
    }

    /// `ρ ↦ dim Hom_H(τ, ρ|_H)` on all `ρ` with Casimir at most `cutoff`.
    pub fn tau_dimension_datum(&self, emb: &Embedding, tau: &IrrepLabel, cutoff: &Q) -> Result<Vec<(IrrepLabel, i64)>> {
        if tau.group != emb.h {
            return Err(Error::Unsupported(format!("{tau} is not a representation of {}", emb.h)));
        }
        Ok(self
            .decompositions(emb, cutoff)?
            .into_iter()
            .map(|d| {
                let m = d.multiplicity(&tau.highest_weight);
                (d.rho, m)
            })
            .collect())
    }
}

/// The subgroup representations attached to an admissible `λ ∈ Z^{2n+1}`:
/// `τ_λ` of `U(2n+1)` and `τ_{λ′}` of `Sp(n) × SO(2n+2)` with
/// `λ′ = (a_1, ..., a_n) ⊕ (a_1, ..., a_{n+1})`.
pub fn theorem_setup(n: usize, lambda: &Weight) -> Result<(Embedding, IrrepLabel, Embedding, IrrepLabel)> {
    let a = lambda.coords();
    let r = 2 * n + 1;
    let inadmissible = |why: &str| Error::Inadmissible {
        weight: a.to_vec(),
        reason: why.to_string(),
    };
    if a.len() != r {
        return Err(inadmissible("expected 2n+1 coordinates"));
    }
    if !a.windows(2).all(|p| p[0] >= p[1]) {
        return Err(inadmissible("coordinates must be non-increasing"));
    }
    if (0..n).any(|i| a[i] + a[r - 1 - i] != 0) {
        return Err(inadmissible("a_i + a_{2n+2-i} must vanish"));
    }
    let h1 = Embedding::theorem_h1(n);
    let h2 = Embedding::theorem_h2(n);
    let tau = IrrepLabel::new(h1.h.clone(), lambda)?;
    let prime = Weight::new([&a[..n], &a[..n + 1]].concat());
    let tau_prime = IrrepLabel::new(h2.h.clone(), &prime)?;
    Ok((h1, tau, h2, tau_prime))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    fn su6(hw: Weight) -> IrrepLabel {
        IrrepLabel::new("SU(6)".parse().unwrap(), &hw).unwrap()
    }

    #[test]
    fn branching_examples() {
        let cache = WeightCache::in_memory();
        let b = Brancher::new(&cache);
        let (h1, tau, h2, tau_p) = theorem_setup(1, &w([1, 0, -1])).unwrap();
        assert_eq!(tau_p.highest_weight, w([1, 1, 0]));
        let triv_h1 = IrrepLabel::trivial(h1.h.clone());
        let triv = su6(Weight::zero(6));
        assert_eq!(b.branch_multiplicity(&h1, &triv_h1, &triv).unwrap(), 1);
        let standard = su6(Weight::unit(6, 0));
        assert_eq!(b.branch_multiplicity(&h2, &tau_p, &standard).unwrap(), 0);
        let adjoint = su6(w([2, 1, 1, 1, 1, 0]));
        assert_eq!(b.branch_multiplicity(&h1, &tau, &adjoint).unwrap(), 2);
        assert_eq!(b.branch_multiplicity(&h2, &tau_p, &adjoint).unwrap(), 2);
    }

    /// `C^6|_{H_2} = C^2 ⊕ C^4` and `C^6|_{H_1} = C^3 ⊕ (C^3)^*`.
    #[test]
    fn standard_representation_by_hand() {
        let cache = WeightCache::in_memory();
        let b = Brancher::new(&cache);
        let std6 = su6(Weight::unit(6, 0));
        let d2 = b.branch(&Embedding::theorem_h2(1), &std6).unwrap();
        assert_eq!(d2.parts, vec![(w([0, 1, 0]), 1), (w([1, 0, 0]), 1)]);
        let d1 = b.branch(&Embedding::theorem_h1(1), &std6).unwrap();
        assert_eq!(d1.parts, vec![(w([0, 0, -1]), 1), (w([1, 0, 0]), 1)]);
    }

    /// Adjoint of `SU(6)` restricted to `U(3)`: `ad = C^6 ⊗ (C^6)^* − 1` with
    /// `C^6 = V ⊕ V^*`, so `ad = 2(V⊗V^*) + V⊗V + V^*⊗V^* − 1`.
    #[test]
    fn adjoint_by_tensor_decomposition() {
        let cache = WeightCache::in_memory();
        let b = Brancher::new(&cache);
        let d = b.branch(&Embedding::theorem_h1(1), &su6(w([2, 1, 1, 1, 1, 0]))).unwrap();
        // V⊗V* = [1,0,-1] + [0,0,0]; V⊗V = [2,0,0] + [1,1,0]; duals likewise
        let expected = vec![
            (w([0, -1, -1]), 1),
            (w([0, 0, -2]), 1),
            (w([0, 0, 0]), 1),
            (w([1, 0, -1]), 2),
            (w([1, 1, 0]), 1),
            (w([2, 0, 0]), 1),
        ];
        assert_eq!(d.parts, expected);
    }

    #[test]
    fn inadmissible_rejected() {
        assert!(matches!(
            theorem_setup(1, &w([2, 0, -1])),
            Err(Error::Inadmissible { .. })
        ));
        assert!(theorem_setup(1, &w([0, 0, 0])).is_ok());
    }

    #[test]
    fn named_subgroups() {
        let g: GroupDesc = "SU(6)".parse().unwrap();
        assert_eq!(Embedding::named(&g, "H2").unwrap().h.to_string(), "Sp(1)xSO(4)");
        assert!(Embedding::named(&"SU(3)".parse().unwrap(), "H1").is_err());
        let t = Embedding::named(&"SU(2)".parse().unwrap(), "torus").unwrap();
        assert_eq!(t.restrict(&w([3, 1])), w([2]));
    }
}
