//! Weight lattices `Z^n`, the hyperoctahedral group `{±1}^n ⋊ S_n` and its
//! finite subgroups, materialized as explicit element lists.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer vector in `Z^n`, coefficients of `e_1, ..., e_n`.
///
/// Ordering is lexicographic on coordinates; sparse characters rely on it
/// for byte-stable serialization.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The basis vector `e_{i+1}` (zero-based index `i`).
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Standard inner product `Σ λ_i μ_i`.
    pub fn dot(&self, other: &Weight) -> i64 {
        debug_assert_eq!(self.rank(), other.rank());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> i64 {
        self.dot(self)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Exact division of every coordinate; `None` if some coordinate is not divisible.
    pub fn div_exact(&self, k: i64) -> Option<Weight> {
        let mut out = Vec::with_capacity(self.rank());
        for &c in &self.0 {
            if c % k != 0 {
                return None;
            }
            out.push(c / k);
        }
        Some(Weight(out))
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: self.rank(),
            });
        }
        Ok(())
    }

    /// Concatenate coordinates (the isomorphism `Z^m ⊕ Z^n → Z^{m+n}`).
    pub fn concat(&self, other: &Weight) -> Weight {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Weight(v)
    }

    /// Pad with zeros up to `rank` (the injection `Z^m → Z^n`).
    pub fn pad(&self, rank: usize) -> Weight {
        let mut v = self.0.clone();
        v.resize(rank.max(self.rank()), 0);
        Weight(v)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl From<&[i64]> for Weight {
    fn from(v: &[i64]) -> Self {
        Weight(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses the comma-separated form `1,0,-1`. The empty string is the rank-0 weight.
impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::WeightSyntax(s.to_string()))
    }
}

/// An element of `W_{BC_n} = {±1}^n ⋊ S_n`.
///
/// `e_j ↦ signs[perm[j]] · e_{perm[j]}`, so `(w·λ)_i = signs_i · λ_{perm⁻¹(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    signs: Vec<i8>,
    perm: Vec<usize>,
}

impl SignedPermutation {
    pub fn identity(rank: usize) -> Self {
        SignedPermutation {
            signs: vec![1; rank],
            perm: (0..rank).collect(),
        }
    }

    /// Build from explicit data; `perm[j]` is the image position of `e_j`.
    pub fn new(signs: Vec<i8>, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::SizeMismatch(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::SizeMismatch(format!("signs {signs:?} not in ±1")));
        }
        Ok(SignedPermutation { signs, perm })
    }

    pub fn transposition(rank: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(rank);
        w.perm.swap(i, j);
        w
    }

    pub fn sign_flip(rank: usize, i: usize) -> Self {
        let mut w = Self::identity(rank);
        w.signs[i] = -1;
        w
    }

    /// The orthogonal reflection `β ↦ β − (2(β,α)/(α,α))·α`, provided it maps
    /// `Z^n` onto itself. Integral orthogonal maps of `Z^n` are exactly the
    /// signed permutations.
    pub fn reflection(alpha: &Weight) -> Result<Self> {
        let n = alpha.rank();
        let a2 = alpha.norm2();
        if a2 == 0 {
            return Err(Error::NonLatticeReflection(alpha.coords().to_vec()));
        }
        let mut signs = vec![1i8; n];
        let mut perm = vec![0usize; n];
        for j in 0..n {
            let num = 2 * alpha.coords()[j];
            if num % a2 != 0 {
                return Err(Error::NonLatticeReflection(alpha.coords().to_vec()));
            }
            let k = num / a2;
            let mut image = vec![0i64; n];
            image[j] = 1;
            for (i, c) in image.iter_mut().enumerate() {
                *c -= k * alpha.coords()[i];
            }
            let nz: Vec<usize> = (0..n).filter(|&i| image[i] != 0).collect();
            if nz.len() != 1 || image[nz[0]].abs() != 1 {
                return Err(Error::NonLatticeReflection(alpha.coords().to_vec()));
            }
            perm[j] = nz[0];
            signs[nz[0]] = image[nz[0]] as i8;
        }
        SignedPermutation::new(signs, perm)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        debug_assert_eq!(w.rank(), self.rank());
        let mut out = vec![0i64; self.rank()];
        for (j, &c) in w.coords().iter().enumerate() {
            let i = self.perm[j];
            out[i] = self.signs[i] as i64 * c;
        }
        Weight(out)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            let mid = other.perm[j];
            let fin = self.perm[mid];
            perm[j] = fin;
            signs[fin] = self.signs[fin] * other.signs[mid];
        }
        SignedPermutation { signs, perm }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            let i = self.perm[j];
            perm[i] = j;
            signs[j] = self.signs[i];
        }
        SignedPermutation { signs, perm }
    }

    /// Parity of the underlying permutation, as ±1.
    pub fn permutation_sign(&self) -> i64 {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut sign = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Determinant of the matrix, `permutation_sign · Π signs`.
    pub fn determinant(&self) -> i64 {
        self.permutation_sign() * self.signs.iter().map(|&s| s as i64).product::<i64>()
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

/// A finite subgroup of `W_{BC_n}`, given by generators and materialized by closure.
#[derive(Clone, Debug)]
pub struct WeylSubgroup {
    rank: usize,
    generators: Vec<SignedPermutation>,
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, usize>,
}

impl WeylSubgroup {
    /// Closure of `generators` under composition. Element 0 is the identity.
    pub fn generated(rank: usize, generators: Vec<SignedPermutation>) -> Result<Self> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: g.rank(),
                });
            }
        }
        let id = SignedPermutation::identity(rank);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&elements[k]);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(WeylSubgroup {
            rank,
            generators,
            elements,
            index,
        })
    }

    /// The full hyperoctahedral group `W_n = W_{BC_n}`, of order `2^n n!`.
    pub fn hyperoctahedral(rank: usize) -> Self {
        let mut gens: Vec<SignedPermutation> = (0..rank.saturating_sub(1))
            .map(|i| SignedPermutation::transposition(rank, i, i + 1))
            .collect();
        if rank > 0 {
            gens.push(SignedPermutation::sign_flip(rank, rank - 1));
        }
        Self::generated(rank, gens).expect("ranks agree")
    }

    /// The trivial group.
    pub fn trivial(rank: usize) -> Self {
        Self::generated(rank, Vec::new()).expect("ranks agree")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        self.index.contains_key(w)
    }

    pub fn position(&self, w: &SignedPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn is_subgroup_of(&self, other: &WeylSubgroup) -> bool {
        self.rank == other.rank && self.generators.iter().all(|g| other.contains(g))
    }

    /// `{w·λ : w ∈ W}`.
    pub fn orbit(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        lambda.check_rank(self.rank)?;
        Ok(self.elements.iter().map(|w| w.apply(lambda)).collect())
    }
}

/// The dominant representative of the `W_{BC_n}`-orbit of `λ`: absolute values
/// sorted in descending order.
pub fn dominant_representative(lambda: &Weight) -> Weight {
    let mut v: Vec<i64> = lambda.coords().iter().map(|c| c.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Weight(v)
}
