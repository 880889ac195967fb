//! The encoding of `W_n`-invariant characters as polynomials, the determinant
//! matrices of the five families, and the factorization identities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matrix::SymbolicMatrix;
use super::polynomial::{Monomial, Polynomial};
use crate::charalg::{alternating_sum, CharacterElement};
use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::rational;
use crate::rootsys::{standard_system, Kind, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    BPrime,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::B, Family::BPrime, Family::C, Family::D];

    /// The root system whose alternating sum the family encodes (`B′` shares `B_n`).
    pub fn root_system(self, n: usize) -> Result<RootSystem> {
        if n == 0 {
            return Ok(RootSystem::empty(0));
        }
        let kind = match self {
            Family::A => Kind::A,
            Family::B | Family::BPrime => Kind::B,
            Family::C => Kind::C,
            Family::D => Kind::D,
        };
        standard_system(kind, n, 0, n)
    }

    /// Dominance condition on `λ = (a_1, ..., a_n)`.
    pub fn check_dominant(self, lambda: &Weight) -> Result<()> {
        let a = lambda.coords();
        let descending = a.windows(2).all(|w| w[0] >= w[1]);
        let ok = match self {
            Family::A => descending,
            Family::B | Family::BPrime | Family::C => descending && a.last().is_none_or(|&x| x >= 0),
            Family::D => {
                let n = a.len();
                n <= 1 || (a[..n - 1].windows(2).all(|w| w[0] >= w[1]) && a[n - 2] >= a[n - 1].abs())
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotDominant {
                weight: a.to_vec(),
                what: format!("family {self}"),
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "a",
            Family::B => "b",
            Family::BPrime => "b'",
            Family::C => "c",
            Family::D => "d",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Family::A),
            "b" | "B" => Ok(Family::B),
            "b'" | "B'" | "bprime" => Ok(Family::BPrime),
            "c" | "C" => Ok(Family::C),
            "d" | "D" => Ok(Family::D),
            _ => Err(Error::Unsupported(format!("unknown family `{s}`"))),
        }
    }
}

fn x(k: i64) -> Polynomial {
    Polynomial::var(k.unsigned_abs() as u32)
}

/// The `n × n` matrix of the family at `λ`, with `x_0` kept as a variable.
///
/// Entries (1-based `i, j`): `A: x_{|a_j+i−j|}`, `B/B′: x_{|a_j+i−j|} ∓ x_{|a_j+2n+1−i−j|}`,
/// `C: x_{|a_j+i−j|} − x_{|a_j+2n+2−i−j|}`, `D: x_{|a_j+i−j|} + x_{|a_j+2n−i−j|}`.
pub fn build_det_matrix(family: Family, n: usize, lambda: &Weight) -> Result<SymbolicMatrix> {
    if lambda.rank() != n {
        return Err(Error::SizeMismatch(format!(
            "weight {lambda:?} has {} coordinates, matrix size is {n}",
            lambda.rank()
        )));
    }
    let a = lambda.coords();
    let n_ = n as i64;
    Ok(SymbolicMatrix::from_fn(n, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let aj = a[j0];
        let base = x(aj + i - j);
        match family {
            Family::A => base,
            Family::B => base.sub(&x(aj + 2 * n_ + 1 - i - j)),
            Family::BPrime => base.add(&x(aj + 2 * n_ + 1 - i - j)),
            Family::C => base.sub(&x(aj + 2 * n_ + 2 - i - j)),
            Family::D => base.add(&x(aj + 2 * n_ - i - j)),
        }
    }))
}

/// The family polynomial before `x_0 = 1`: `det` of the matrix, halved for `D`.
pub fn family_poly_homogeneous(family: Family, lambda: &Weight) -> Result<Polynomial> {
    family.check_dominant(lambda)?;
    let n = lambda.rank();
    let det = build_det_matrix(family, n, lambda)?.determinant();
    Ok(match family {
        Family::D if n > 0 => det.scale(&rational::frac(1, 2)),
        _ => det,
    })
}

/// `a_n(λ)`, `b_n(λ)`, `b′_n(λ)`, `c_n(λ)` or `d_n(λ)`; the empty weight gives 1.
pub fn family_poly(family: Family, lambda: &Weight) -> Result<Polynomial> {
    Ok(family_poly_homogeneous(family, lambda)?.eliminate_x0())
}

/// `[v] ↦ Π x_{|v_i|}`, keeping `x_0`; this is `E ∘ j_n` on `Q[Z^n]`.
pub fn encode_homogeneous(u: &CharacterElement) -> Polynomial {
    let mut out = Polynomial::zero();
    for (v, c) in u.terms() {
        let idx = v.coords().iter().map(|k| k.unsigned_abs() as u32).collect();
        out.add_term(Monomial::from_indices(idx), c.clone());
    }
    out
}

/// `E ∘ j_n`, with `x_0 = 1`.
pub fn encode(u: &CharacterElement) -> Polynomial {
    encode_homogeneous(u).eliminate_x0()
}

/// The family polynomial from its Weyl-sum definition `E(j_n(A_{Φ,λ}))`.
///
/// `b′` is `(−1)^{a_1+...+a_n} σ(b)`: pulling the signs `(−1)^i` out of the rows
/// and `(−1)^{a_j−j}` out of the columns of `σ(B_n(λ))` leaves `B′_n(λ)`. For `d` the sum runs over all of `W_n` with the
/// character that is trivial on sign changes, halved; this equals the
/// `W_{D_n}` sum after `j_n`, and is computed that way as an independent route.
pub fn weyl_sum_poly(family: Family, lambda: &Weight) -> Result<Polynomial> {
    family.check_dominant(lambda)?;
    let n = lambda.rank();
    match family {
        Family::BPrime => {
            let b = weyl_sum_poly(Family::B, lambda)?.sigma();
            Ok(if weight_parity(lambda) == 1 { b.neg() } else { b })
        }
        Family::D if n > 0 => {
            let phi = family.root_system(n)?;
            let two_delta = phi.two_delta();
            let full = crate::lattice::WeylSubgroup::hyperoctahedral(n);
            let mut sum = CharacterElement::zero();
            for w in full.elements() {
                let diff = (&two_delta - &w.apply(&two_delta)).div_exact(2).expect("integral");
                sum.add_term(lambda + &diff, rational::q(w.permutation_sign()));
            }
            Ok(encode(&sum).scale(&rational::frac(1, 2)))
        }
        _ => Ok(encode(&alternating_sum(&family.root_system(n)?, lambda)?)),
    }
}

/// `(a_1 + ... + a_n) mod 2`.
pub fn weight_parity(lambda: &Weight) -> i64 {
    lambda.coords().iter().sum::<i64>().rem_euclid(2)
}

/// Compare the determinant expansion against the Weyl-sum definition.
pub fn verify_det_equals_weylsum(family: Family, lambda: &Weight) -> Result<bool> {
    let det = family_poly(family, lambda)?;
    let sum = weyl_sum_poly(family, lambda)?;
    let plain = if family == Family::D {
        encode(&alternating_sum(&family.root_system(lambda.rank())?, lambda)?)
    } else {
        sum.clone()
    };
    Ok(det == sum && det == plain)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// `(λ_1, λ_2)` for an admissible `λ`.
///
/// Odd length `2m+1`: descending with `a_i + a_{2m+2−i} = 0`; `λ_1 = (a_1..a_m)`, `λ_2 = (a_1..a_{m+1})`.
/// Even length `2m`: descending with `a_i + a_{2m+1−i} = 0`; `λ_1 = λ_2 = (a_1..a_m)`.
pub fn split_admissible(parity: Parity, lambda: &Weight) -> Result<(Weight, Weight)> {
    let a = lambda.coords();
    let len = a.len();
    let inadmissible = |reason: &str| Error::Inadmissible {
        weight: a.to_vec(),
        reason: reason.to_string(),
    };
    let m = match parity {
        Parity::Odd if len % 2 == 1 => len / 2,
        Parity::Even if len.is_multiple_of(2) && len > 0 => len / 2,
        _ => return Err(inadmissible("length does not match parity")),
    };
    if !a.windows(2).all(|w| w[0] >= w[1]) {
        return Err(inadmissible("coordinates must be non-increasing"));
    }
    if (0..m).any(|i| a[i] + a[len - 1 - i] != 0) {
        return Err(inadmissible("a_i + a_{n+1-i} must vanish"));
    }
    let l1 = Weight::from(&a[..m]);
    let l2 = match parity {
        Parity::Odd => Weight::from(&a[..m + 1]),
        Parity::Even => l1.clone(),
    };
    Ok((l1, l2))
}

/// Both sides of the factorization identity for an admissible `λ`.
pub fn factorization_sides(parity: Parity, lambda: &Weight) -> Result<(Polynomial, Polynomial)> {
    let (l1, l2) = split_admissible(parity, lambda)?;
    let lhs = family_poly(Family::A, lambda)?;
    let rhs = match parity {
        Parity::Odd => family_poly(Family::C, &l1)?.mul(&family_poly(Family::D, &l2)?),
        Parity::Even => family_poly(Family::B, &l1)?.mul(&family_poly(Family::BPrime, &l2)?),
    };
    Ok((lhs, rhs))
}

/// `a_{2m+1}(λ) = c_m(λ_1) d_{m+1}(λ_2)` or `a_{2m}(λ) = b_m(λ_1) b′_m(λ_2)`.
pub fn verify_factorization(parity: Parity, lambda: &Weight) -> Result<bool> {
    let (lhs, rhs) = factorization_sides(parity, lambda)?;
    Ok(lhs == rhs)
}

/// All admissible weights of length `2m+1` (odd) or `2m` (even) with `|a_i| ≤ max_coeff`.
pub fn admissible_weights(parity: Parity, m: usize, max_coeff: i64) -> Vec<Weight> {
    if m == 0 {
        return match parity {
            Parity::Odd => (-max_coeff..=max_coeff).rev().map(|a| Weight::from([a])).collect(),
            Parity::Even => Vec::new(),
        };
    }
    // the head a_1 ≥ ... ≥ a_m is forced nonnegative by the antisymmetry
    let mut heads: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..m {
        heads = heads
            .into_iter()
            .flat_map(|h| {
                let top = h.last().copied().unwrap_or(max_coeff);
                (0..=top).rev().map(move |v| {
                    let mut h2 = h.clone();
                    h2.push(v);
                    h2
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for h in heads {
        let tail: Vec<i64> = h.iter().rev().map(|v| -v).collect();
        match parity {
            Parity::Even => out.push(Weight::new([h.clone(), tail].concat())),
            Parity::Odd => {
                let am = h[m - 1];
                for mid in (-am..=am).rev() {
                    out.push(Weight::new([h.clone(), vec![mid], tail.clone()].concat()));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::orbit_character;
    use crate::lattice::WeylSubgroup;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn matrix_examples() {
        let m = build_det_matrix(Family::A, 1, &w([2])).unwrap();
        assert_eq!(m.get(0, 0), &p("x2"));
        let m = build_det_matrix(Family::B, 1, &w([0])).unwrap();
        assert_eq!(m.get(0, 0), &p("x0 - x1"));
        let m = build_det_matrix(Family::D, 2, &w([0, 0])).unwrap();
        assert_eq!(
            m.rows(),
            vec![vec![p("x0 + x2"), p("2*x1")], vec![p("2*x1"), p("2*x0")]]
        );
        assert!(matches!(
            build_det_matrix(Family::A, 2, &w([0])),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn family_examples() {
        assert_eq!(
            family_poly(Family::A, &w([0, 0, 0])).unwrap(),
            p("1 - 2*x1^2 + 2*x1^2*x2 - x2^2")
        );
        assert_eq!(family_poly(Family::C, &w([0])).unwrap(), p("1 - x2"));
        for k in 0..4 {
            assert_eq!(family_poly(Family::D, &w([k])).unwrap(), Polynomial::var(k as u32).eliminate_x0());
        }
        assert!(family_poly(Family::B, &w([0, 1])).is_err());
        assert!(family_poly(Family::D, &w([1, -1])).is_ok());
        assert!(family_poly(Family::D, &w([0, 1])).is_err());
    }

    #[test]
    fn three_by_three_by_hand() {
        // independent expansion of det A_3(0,0,0) via the rule of Sarrus
        let m = build_det_matrix(Family::A, 3, &w([0, 0, 0])).unwrap();
        let e = |i, j| m.get(i, j).clone();
        let sarrus = e(0, 0)
            .mul(&e(1, 1))
            .mul(&e(2, 2))
            .add(&e(0, 1).mul(&e(1, 2)).mul(&e(2, 0)))
            .add(&e(0, 2).mul(&e(1, 0)).mul(&e(2, 1)))
            .sub(&e(0, 2).mul(&e(1, 1)).mul(&e(2, 0)))
            .sub(&e(0, 0).mul(&e(1, 2)).mul(&e(2, 1)))
            .sub(&e(0, 1).mul(&e(1, 0)).mul(&e(2, 2)));
        assert_eq!(sarrus.eliminate_x0(), p("1 - 2*x1^2 + 2*x1^2*x2 - x2^2"));
    }

    #[test]
    fn encode_examples() {
        let w2 = WeylSubgroup::hyperoctahedral(2);
        assert_eq!(encode(&orbit_character(&w([2, 1]), &w2).unwrap()), p("x2*x1"));
        assert_eq!(encode(&CharacterElement::one(3)), Polynomial::one());
        assert_eq!(encode(&CharacterElement::basis(w([3, -1]))), p("x3*x1"));
    }

    #[test]
    fn det_vs_weyl_sum_examples() {
        assert!(verify_det_equals_weylsum(Family::A, &w([0, 0, 0])).unwrap());
        assert!(verify_det_equals_weylsum(Family::C, &w([1])).unwrap());
        assert_eq!(family_poly(Family::C, &w([1])).unwrap(), p("x1 - x3"));
        assert!(verify_det_equals_weylsum(Family::D, &w([1, 1])).unwrap());
    }

    #[test]
    fn factorization_examples() {
        assert!(verify_factorization(Parity::Odd, &w([0, 0, 0])).unwrap());
        let (_, rhs) = factorization_sides(Parity::Odd, &w([0, 0, 0])).unwrap();
        assert_eq!(rhs, p("1 - x2").mul(&p("1 + x2 - 2*x1^2")));
        assert!(verify_factorization(Parity::Even, &w([1, -1])).unwrap());
        assert_eq!(family_poly(Family::A, &w([1, -1])).unwrap(), p("x1^2 - x2^2"));
        assert!(verify_factorization(Parity::Odd, &w([1, 0, -1])).unwrap());
        assert!(matches!(
            verify_factorization(Parity::Odd, &w([2, 0, -1])),
            Err(Error::Inadmissible { .. })
        ));
    }

    #[test]
    fn admissible_enumeration_counts() {
        // odd m = 1, |a| ≤ 1: (0,0,0), (1,1,-1), (1,0,-1), (1,-1,-1)
        assert_eq!(admissible_weights(Parity::Odd, 1, 1).len(), 4);
        // even m = 2, |a| ≤ 2: descending pairs in [0,2]
        assert_eq!(admissible_weights(Parity::Even, 2, 2).len(), 6);
        for lam in admissible_weights(Parity::Odd, 2, 2) {
            assert!(split_admissible(Parity::Odd, &lam).is_ok());
        }
    }

    #[test]
    fn sigma_maps_b_to_b_prime_up_to_sign() {
        for lam in [w([0]), w([2]), w([1, 1]), w([1, 0]), w([2, 2, 1])] {
            let b = family_poly(Family::B, &lam).unwrap();
            let bp = family_poly(Family::BPrime, &lam).unwrap();
            if weight_parity(&lam) == 0 {
                assert_eq!(b.sigma(), bp);
            } else {
                assert_eq!(b.sigma(), bp.neg());
            }
        }
        // b_1((1)) = x1 − x2 while det B′_1((1)) = x1 + x2
        assert_eq!(family_poly(Family::B, &w([1])).unwrap(), p("x1 - x2"));
        assert_eq!(family_poly(Family::BPrime, &w([1])).unwrap(), p("x1 + x2"));
    }
}
